r"""
Main program: suzuki_mst3 <keygen|encrypt|decrypt|attack|paper-example> [options]

Exit statuses
    0  success
    2  usage, configuration or domain error
    3  malformed key, ciphertext or message file
    4  integrity failure (wrong key, tampered ciphertext)
    5  attack refused by the size guard
    6  a worked-example check failed

Every randomized subcommand needs ``--seed``; the seed feeds numpy's PCG64 generator
(``numpy.random.default_rng``), so equal seeds give byte-identical output files.
"""

import logging
import platform
import sys
import time
from argparse import ArgumentParser
from dataclasses import dataclass

import numpy as np

from .config import ConfigObject
from .errors import (EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, Mst3Error, ParseError,
                     UsageError)
from .field import HEX_DIGITS
from .group import GroupElement, seeded_stream
from .keyfile import (read_ciphertext, read_private_key, read_public_key, write_ciphertext,
                      write_private_key, write_public_key)
from .legacy import (COMPONENTS, LegacyParams, attack_exhaustive, attack_sequential_legacy, attack_statistics,
                     check_exhaustive_guard, check_sequential_guard, improved_instance, legacy_instance,
                     sequential_isolation_count)
from .mst3 import SchemeParams, decrypt, encrypt, keygen
from .version import SUZUKI_MST3_VERSION
from .worked_example import run_worked_example

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

VERSION_ANNOUNCEMENTS = "suzuki_mst3 version {}, numpy version {}, python version {}" \
                        .format(SUZUKI_MST3_VERSION, np.__version__, platform.python_version())

SUBCOMMANDS = ("keygen", "encrypt", "decrypt", "attack", "paper-example")
SEEDED = ("keygen", "encrypt", "attack")
MODES = ("sequential-legacy", "sequential-improved", "exhaustive")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
DEFAULT_N = 7
DEFAULT_L = 4
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass
class RunConfig:
    r""" Everything one subcommand needs, after flags and the optional config file are merged. """
    subcommand: str
    n: int = DEFAULT_N
    l: int = DEFAULT_L
    types: str = None
    seed: int = None
    pub: str = None
    priv: str = None
    in_path: str = None
    out: str = None
    mode: str = "sequential-legacy"
    component: str = "y23"
    runs: int = 1
    processes: int = 1
    log_level: str = DEFAULT_LOG_LEVEL

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError("unknown subcommand {!r}".format(self.subcommand))
        if self.subcommand in SEEDED and self.seed is None:
            raise UsageError("{} needs --seed".format(self.subcommand))
        if self.seed is not None and not 0 <= self.seed < 2 ** 64:
            raise UsageError("--seed must be an unsigned 64-bit integer, got {}".format(self.seed))
        if self.log_level.upper() not in LOG_LEVELS:
            raise UsageError("--log-level must be one of {}".format(", ".join(LOG_LEVELS)))
        if self.n < 2 or self.l < 2:
            raise UsageError("--n and --l must be at least 2, got n={} l={}".format(self.n, self.l))
        if self.runs < 1 or self.processes < 1:
            raise UsageError("--runs and --processes must be positive")
        required = {"keygen": ("pub", "priv"), "encrypt": ("pub", "in_path", "out"),
                    "decrypt": ("pub", "priv", "in_path")}
        for name in required.get(self.subcommand, ()):
            if getattr(self, name) is None:
                raise UsageError("{} needs --{}".format(self.subcommand, "in" if name == "in_path" else name))
        return self


def message_encode(text, params):
    r"""
    Hex block -> GroupElement.  The hex is read as one integer whose bits [0, n) are
    coordinate 1, bits [n, 2n) coordinate 2, and so on; exactly ceil(l*n/4) digits.
    """
    text = text.strip().lower()
    width, total = (params.order_bits + 3) // 4, params.order_bits
    if len(text) != width:
        raise ParseError("message must have exactly {} hex digits, got {}".format(width, len(text)))
    for position, digit in enumerate(text):
        if digit not in HEX_DIGITS:
            raise ParseError("non-hex digit {!r} at position {}".format(digit, position))
    value = int(text, 16)
    if value >> total:
        raise ParseError("pad bit {} is set; only bits 0..{} may be non-zero"
                         .format(value.bit_length() - 1, total - 1))
    mask = params.spec.order - 1
    n = params.n
    return GroupElement(params, tuple((value >> (k * n)) & mask for k in range(params.l)))


def message_decode(x):
    params = x.params
    value = 0
    for k, v in enumerate(x.values):
        value |= v << (k * params.n)
    return "{:0{}x}".format(value, (params.order_bits + 3) // 4)


def cmd_keygen(config):
    logger.info(VERSION_ANNOUNCEMENTS)
    t1 = time.time()
    params = SchemeParams.build(config.n, config.l, config.types)
    pk, sk = keygen(params, seeded_stream(config.seed))
    write_public_key(config.pub, pk)
    write_private_key(config.priv, sk)
    logger.info("suzuki_mst3 cmd_keygen: {} completed in {:0.1f}s".format(params.group, time.time() - t1))
    return EXIT_OK


def cmd_encrypt(config):
    pk = read_public_key(config.pub)
    with open(config.in_path, "r") as fh:
        x = message_encode(fh.read(), pk.params.group)
    write_ciphertext(config.out, encrypt(pk, x, seeded_stream(config.seed)))
    return EXIT_OK


def cmd_decrypt(config):
    pk = read_public_key(config.pub)
    sk = read_private_key(config.priv)
    ct = read_ciphertext(config.in_path, pk.params)
    text = message_decode(decrypt(pk, sk, ct))
    if config.out is None:
        print(text)
    else:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK


def cmd_paper_example(config):
    results = run_worked_example()
    for result in results:
        for line in result.lines():
            print(line)
    failed = [r.name for r in results if not r.passed]
    if failed:
        print("{} of {} checks failed: {}".format(len(failed), len(results), "; ".join(failed)))
        return EXIT_CHECK_FAILED
    print("all {} checks passed".format(len(results)))
    return EXIT_OK


def _run_attack(config, rng):
    if config.mode == "sequential-legacy":
        pk, _, _, R, ct = legacy_instance(LegacyParams.build(config.n, config.l, config.types), rng)
        return R, attack_sequential_legacy(pk, ct)
    pk, _, x, R, ct = improved_instance(SchemeParams.build(config.n, config.l, config.types), rng)
    if config.mode == "sequential-improved":
        return R, sequential_isolation_count(pk, ct, x)
    return R, attack_exhaustive(pk, ct, config.component, x=x, processes=config.processes)


def cmd_attack(config):
    if config.mode not in MODES:
        raise UsageError("--mode must be one of {}".format(", ".join(MODES)))
    if config.component not in COMPONENTS:
        raise UsageError("--component must be one of {}".format(", ".join(COMPONENTS)))
    q = 1 << config.n
    if config.mode == "exhaustive":
        check_exhaustive_guard(q, config.l)
    else:
        check_sequential_guard(q, config.l)
    rng = seeded_stream(config.seed)
    reports = []
    for run in range(config.runs):
        R, report = _run_attack(config, rng)
        reports.append(report)
        if config.runs > 1:
            print("run {}".format(run + 1))
        for line in report.lines():
            print(line)
        print("true R: {}".format(R))
    if config.runs > 1:
        for key, value in attack_statistics(reports).items():
            print("{}: {}".format(key, value))
    return EXIT_OK


COMMANDS = {
    "keygen": cmd_keygen,
    "encrypt": cmd_encrypt,
    "decrypt": cmd_decrypt,
    "attack": cmd_attack,
    "paper-example": cmd_paper_example,
}


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None,
                        help="INI file whose [main] section supplies n, l, types, seed, log_level")
    common.add_argument("--log-level", dest="log_level", type=str, default=None, choices=LOG_LEVELS,
                        help="Logging level (default {})".format(DEFAULT_LOG_LEVEL))

    scheme = ArgumentParser(add_help=False)
    scheme.add_argument("--n", type=int, default=None, help="Field degree (default {})".format(DEFAULT_N))
    scheme.add_argument("--l", type=int, default=None, help="Group coordinates (default {})".format(DEFAULT_L))
    scheme.add_argument("--types", type=str, default=None,
                        help="Per-coordinate signature types, e.g. '4,4,8;8,4,4;4,8,4;4,4,8'")

    seeded = ArgumentParser(add_help=False)
    seeded.add_argument("--seed", type=int, default=None, help="Unsigned 64-bit seed")

    parser = ArgumentParser(prog="suzuki_mst3",
                            description="suzuki_mst3 - MST3 public-key encryption over generalized Suzuki 2-groups.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("keygen", parents=[common, scheme, seeded], help="Generate a key pair")
    p.add_argument("--pub", type=str, help="Public key file to write")
    p.add_argument("--priv", type=str, help="Private key file to write")

    p = sub.add_parser("encrypt", parents=[common, seeded], help="Encrypt one hex message block")
    p.add_argument("--pub", type=str, help="Public key file")
    p.add_argument("--in", dest="in_path", type=str, help="File holding the message hex")
    p.add_argument("--out", type=str, help="Ciphertext file to write")

    p = sub.add_parser("decrypt", parents=[common], help="Decrypt a ciphertext file")
    p.add_argument("--pub", type=str, help="Public key file")
    p.add_argument("--priv", type=str, help="Private key file")
    p.add_argument("--in", dest="in_path", type=str, help="Ciphertext file")
    p.add_argument("--out", type=str, default=None, help="Message file to write (default: standard output)")

    p = sub.add_parser("attack", parents=[common, scheme, seeded], help="Run a brute-force attack demonstration")
    p.add_argument("--mode", type=str, default="sequential-legacy", choices=MODES)
    p.add_argument("--component", type=str, default="y23", choices=COMPONENTS,
                   help="Ciphertext component matched by --mode exhaustive")
    p.add_argument("--runs", type=int, default=1, help="Number of seeded instances")
    p.add_argument("--processes", type=int, default=1, help="Worker processes for --mode exhaustive")

    sub.add_parser("paper-example", parents=[common], help="Check the worked n=7, l=4 example")
    return parser


def make_run_config(args):
    r""" Merge parsed flags over the optional config file over the defaults. """
    values = {key: value for key, value in vars(args).items() if value is not None and key != "config"}
    if args.config is not None:
        for key, value in ConfigObject(args.config).as_dict().items():
            if value is not None and key not in values:
                values[key] = value
    if "log_level" in values:
        values["log_level"] = values["log_level"].upper()
    return RunConfig(**values).validate()


def main(args=None):
    r"""
    This is the entry point to the suzuki_mst3 executable.

    Parameters
    ----------
    args : list of str or None
        Command-line arguments; sys.argv[1:] when None.

    Returns
    -------
    int
        Exit status.
    """
    parser = build_parser()
    if args is None:
        args = parser.parse_args()
    else:
        args = parser.parse_args(args)

    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    try:
        config = make_run_config(args)
        logger.setLevel(config.log_level)
        logger.debug("suzuki_mst3 main: {}".format(config))
        return COMMANDS[config.subcommand](config)
    except Mst3Error as err:
        print("suzuki_mst3 {}: {}".format(args.subcommand, err), file=sys.stderr)
        return err.exit_status
    except OSError as err:
        print("suzuki_mst3 {}: {}".format(args.subcommand, err), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
