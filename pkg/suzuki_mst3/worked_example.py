r"""
The worked n = 7, l = 4 example: four staircase signatures given as bit strings
(character i = coefficient of x^i) and the values read out during its decryption.

Only XOR and mixed-radix arithmetic is involved, so every check is independent of
the field polynomial and of any random choice.  The α^k form printed next to each
factorized value uses the default n = 7 modulus.
"""

import logging
import time
from dataclasses import dataclass, field

from .errors import Mst3Error
from .field import FieldElement, FieldSpec, power_form
from .logsig import (LogSignature, SignatureType, check_staircase, format_segments, ls_evaluate,
                     ls_factorize, mixed_radix_decompose)
from .mst3 import apply_permutation

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

N = 7

SIGNATURES = (
    ("4,4,8", (
        ("0000000", "1000000", "0100000", "1100000"),
        ("0100000", "1010000", "1101000", "0011000"),
        ("1011000", "1011100", "0011010", "1110110", "0011001", "0111101", "1111011", "0111111"),
    )),
    ("8,4,4", (
        ("0000000", "1000000", "0100000", "1100000", "0010000", "1010000", "0110000", "1110000"),
        ("1100000", "0111000", "0100100", "0101100"),
        ("0010100", "0010010", "1001001", "0110011"),
    )),
    ("4,8,4", (
        ("0000000", "1000000", "0100000", "1100000"),
        ("1100000", "1010000", "1001000", "0011000", "1100100", "1010100", "0101100", "1011100"),
        ("0000100", "0011010", "0111101", "1001111"),
    )),
    ("4,4,8", (
        ("0000000", "1000000", "0100000", "1100000"),
        ("0000000", "0110000", "1101000", "0011000"),
        ("1101000", "1011100", "0101010", "0111110", "0110001", "1110101", "0011011", "0001111"),
    )),
)

# (R_k, β_k(R_k) as read out of D*, block indices of R_k)
READOUTS = (
    (20, "0001100", (0, 1, 1)),
    (21, "1100000", (5, 2, 0)),
    (107, "1100111", (3, 2, 3)),
    (108, "0000011", (0, 3, 6)),
)

PERMUTATION = (3, 1, 2, 4)
PERMUTED = (107, 20, 21, 108)


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: list = field(default_factory=list)

    def lines(self):
        out = ["{} {}".format("PASS" if self.passed else "FAIL", self.name)]
        out.extend("    " + d for d in self.details)
        return out


def build_signatures(table, spec):
    r""" LogSignatures β_1..β_4 from the bit-string fixture. """
    return tuple(
        LogSignature(k + 1, SignatureType.from_string(type_text),
                     tuple(tuple(FieldElement.from_bitstring(row, spec) for row in block) for block in blocks))
        for k, (type_text, blocks) in enumerate(table))


def factorization_trace(ls, v):
    r"""
    R with β(R) = v plus one line per block in the bit-segment notation, e.g.

        00|01|100 - 10|11|100 = 10|10|000   row 1 from B3 -> (*,*,1)
    """
    steps = []
    R = ls_factorize(ls, v, trace=steps)
    known = ["*"] * ls.sig_type.s
    lines = []
    for step in steps:
        known[step.block - 1] = str(step.row)
        lines.append("{} - {} = {}   row {} from B{} -> ({})".format(
            format_segments(step.residual_before, ls.sig_type), format_segments(step.row_value, ls.sig_type),
            format_segments(step.residual_after, ls.sig_type), step.row, step.block, ",".join(known)))
    return R, lines


def _tameness(betas):
    results = []
    for ls in betas:
        name = "beta{} ({}) is a staircase signature".format(ls.coordinate, ls.sig_type)
        try:
            check_staircase(ls)
        except Mst3Error as err:
            results.append(CheckResult(name, False, [str(err)]))
        else:
            results.append(CheckResult(name, True))
    return results


def _decompositions(betas):
    results = []
    for ls, (R, _, expected) in zip(betas, READOUTS):
        found = mixed_radix_decompose(R, ls.sig_type)
        results.append(CheckResult("{} over type ({}) -> {}".format(R, ls.sig_type, expected),
                                   found == expected, ["got {}".format(found)]))
    return results


def _factorizations(betas, spec):
    results = []
    for ls, (R, bits, _) in zip(betas, READOUTS):
        name = "beta{}^-1({}) = {}".format(ls.coordinate, bits, R)
        v = FieldElement.from_bitstring(bits, spec)
        try:
            found, lines = factorization_trace(ls, v)
            evaluated = ls_evaluate(ls, R)
        except Mst3Error as err:
            results.append(CheckResult(name, False, [str(err)]))
            continue
        if evaluated != v:
            lines.append("beta{}({}) = {}".format(ls.coordinate, R, evaluated.to_bitstring()))
        else:
            lines.append("{} = {}".format(bits, power_form(v)))
        results.append(CheckResult(name, found == R and evaluated == v, lines))
    return results


def _permutation():
    pi = tuple(p - 1 for p in PERMUTATION)
    R = tuple(r for r, _, _ in READOUTS)
    found = apply_permutation(pi, R)
    return CheckResult("p = {} maps {} -> {}".format(PERMUTATION, R, PERMUTED), found == PERMUTED,
                       ["got {}".format(found)])


def run_worked_example(table=SIGNATURES):
    r"""
    Run every check against ``table`` (the embedded fixture by default).

    Returns
    -------
    list of CheckResult
    """
    t1 = time.time()
    spec = FieldSpec.default(N)
    betas = build_signatures(table, spec)
    results = _tameness(betas) + _decompositions(betas) + _factorizations(betas, spec) + [_permutation()]
    logger.debug("suzuki_mst3 run_worked_example: {}/{} checks passed, completed in {:0.1f}s"
                 .format(sum(r.passed for r in results), len(results), time.time() - t1))
    return results
