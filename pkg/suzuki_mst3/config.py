"""
Configuration object source file

A run configuration file is an INI file with a [main] section, e.g.

    [main]
    n = 7
    l = 4
    types = 4,4,8;4,8,4;8,4,4;4,4,8
    seed = 42
    log_level = INFO

Every key is optional; command-line flags override whatever the file sets.
"""

import sys
import configparser

from .errors import EXIT_USAGE

MAIN_SECTION = "main"
MAIN_KEYS = ("n", "l", "types", "seed", "log_level")


def oops(arg_text):
    r""" Terminate with an error message """
    print("\n***** Oops, {} *****\n".format(arg_text), file=sys.stderr)
    sys.exit(EXIT_USAGE)


def get_config_string(arg_config, arg_section, arg_key, default=None):
    """
    get one STRING configuration parameter by key, or ``default`` when it is absent
    """
    try:
        parm_value = arg_config[arg_section][arg_key].strip()
    except KeyError:
        return default
    except Exception as err:
        oops("get_config_string: config file section {} key {}, reason: {}"
             .format(arg_section, arg_key, repr(err)))
    if not parm_value:
        oops("Empty value in config file section {} key {}".format(arg_section, arg_key))
    return parm_value


def get_config_int(arg_config, arg_section, arg_key, default=None):
    """
    get one INTEGER configuration parameter by key, or ``default`` when it is absent
    """
    text = get_config_string(arg_config, arg_section, arg_key)
    if text is None:
        return default
    try:
        parm_value = int(text)
    except ValueError as err:
        oops("get_config_int: config file section {} key {}, reason: {}"
             .format(arg_section, arg_key, repr(err)))
    return parm_value


class ConfigObject:
    """
    The [main] section of a run configuration file; absent keys are None.
    """

    def __init__(self, arg_config_path):
        config = configparser.ConfigParser()
        try:
            loaded = config.read(arg_config_path)
        except configparser.Error as err:
            oops("get_config: Trouble loading config file {}, reason: {}"
                 .format(arg_config_path, repr(err)))
        if not loaded:
            oops("Config file {} not found".format(arg_config_path))
        if not config.has_section(MAIN_SECTION):
            oops("Config file {} has no [{}] section".format(arg_config_path, MAIN_SECTION))
        unknown = set(config[MAIN_SECTION]) - set(MAIN_KEYS)
        if unknown:
            oops("Unknown key(s) in config file section {}: {}"
                 .format(MAIN_SECTION, ", ".join(sorted(unknown))))

        self.n = get_config_int(config, MAIN_SECTION, "n")
        self.l = get_config_int(config, MAIN_SECTION, "l")
        self.types = get_config_string(config, MAIN_SECTION, "types")
        self.seed = get_config_int(config, MAIN_SECTION, "seed")
        self.log_level = get_config_string(config, MAIN_SECTION, "log_level")

    def as_dict(self):
        return {key: getattr(self, key) for key in MAIN_KEYS}
