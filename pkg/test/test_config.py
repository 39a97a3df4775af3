r""" Test the run configuration reader """

import configparser

import pytest

from datafiles import CFG_FILE, TEMPDIR
import suzuki_mst3.config as cfg


def test_sample_config():
    config = cfg.ConfigObject(CFG_FILE)
    assert config.n == 4
    assert config.l == 4
    assert config.types == "4,4;4,4;4,4;4,4"
    assert config.seed == 42
    assert config.log_level == "info"


def test_config_lookups():
    config = configparser.ConfigParser()
    config.read(CFG_FILE)
    assert cfg.get_config_string(config, "StrangeSection", "n") is None
    assert cfg.get_config_string(config, "main", "RaspberryPi4", default="x") == "x"
    assert cfg.get_config_int(config, "main", "RaspberryPi4", default=7) == 7
    with pytest.raises(SystemExit):
        cfg.get_config_int(config, "main", "types")


def write_cfg(name, text):
    path = TEMPDIR + name
    with open(path, "w") as fh:
        fh.write(text)
    return path


def test_bad_config_files():
    with pytest.raises(SystemExit):
        cfg.ConfigObject(TEMPDIR + "no_such.cfg")
    with pytest.raises(SystemExit):
        cfg.ConfigObject(write_cfg("nomain.cfg", "[other]\nn = 4\n"))
    with pytest.raises(SystemExit):
        cfg.ConfigObject(write_cfg("unknown.cfg", "[main]\nn = 4\nwidth = 3\n"))
    with pytest.raises(SystemExit):
        cfg.ConfigObject(write_cfg("empty.cfg", "[main]\nseed =\n"))
    with pytest.raises(SystemExit):
        cfg.ConfigObject(write_cfg("broken.cfg", "n = 4\n"))


def test_partial_config():
    config = cfg.ConfigObject(write_cfg("partial.cfg", "[main]\nseed = 9\n"))
    assert config.as_dict() == {"n": None, "l": None, "types": None, "seed": 9, "log_level": None}
