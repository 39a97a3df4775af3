SUZUKI_MST3_VERSION = '1.0'
