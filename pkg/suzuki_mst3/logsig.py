r"""
Logarithmic signatures and random covers.

A signature of type (r_1, ..., r_s), r_i = 2^k_i, splits the n bits of a field element
into contiguous segments; segment i occupies bits [k_1 + ... + k_{i-1}, k_1 + ... + k_i).
Staircase (tame) signatures have block i rows that vanish on segments i+1..s and run
through every pattern of segment i, so a value factors block by block from s down to 1.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError, IntegrityError, ParseError, UsageError
from .field import FieldElement, parse_element
from .group import format_group_element, g_product, g_random, parse_group_element

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

BLOCK_SEPARATOR = "--"


@dataclass(frozen=True)
class SignatureType:
    r""" Block sizes (r_1, ..., r_s), each a power of two >= 2. """
    radices: tuple

    def __post_init__(self):
        if not self.radices:
            raise ConfigurationError("signature type needs at least one block")
        for r in self.radices:
            if not isinstance(r, int) or r < 2 or r & (r - 1):
                raise ConfigurationError("block size {} is not a power of two >= 2".format(r))

    @classmethod
    def from_segment_bits(cls, bits):
        return cls(tuple(1 << k for k in bits))

    @classmethod
    def from_string(cls, text):
        r""" '4,4,8' -> SignatureType((4, 4, 8)) """
        try:
            radices = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ConfigurationError("bad signature type {!r}".format(text)) from None
        return cls(radices)

    @property
    def segment_bits(self):
        return tuple(r.bit_length() - 1 for r in self.radices)

    @property
    def s(self):
        return len(self.radices)

    @property
    def size(self):
        r""" r_1 * ... * r_s """
        return 1 << sum(self.segment_bits)

    def segment_bounds(self):
        r""" [(lo_1, hi_1), ..., (lo_s, hi_s)] bit ranges of the segments. """
        bounds, lo = [], 0
        for k in self.segment_bits:
            bounds.append((lo, lo + k))
            lo += k
        return bounds

    def check_degree(self, n):
        if sum(self.segment_bits) != n:
            raise ConfigurationError("type {} covers {} bits, the field has {}"
                                     .format(self, sum(self.segment_bits), n))

    def __str__(self):
        return ",".join(str(r) for r in self.radices)


def default_signature_type(n, rotation=0):
    r"""
    Two-bit segments, the last one taking an odd leftover bit, rotated by ``rotation``
    so that different coordinates get different types: n=7 -> (4,4,8), (4,8,4), ...
    """
    bits = [2] * (n // 2)
    bits[-1] += n % 2
    rotation %= len(bits)
    return SignatureType.from_segment_bits(bits[rotation:] + bits[:rotation])


def parse_types(text):
    r""" Per-coordinate types separated by semicolons: '4,4,8;8,4,4'. """
    return tuple(SignatureType.from_string(part.strip()) for part in text.split(";") if part.strip())


def mixed_radix_decompose(R, sig_type):
    r""" Little-endian mixed radix: j_1 = R mod r_1, j_2 = (R // r_1) mod r_2, ... """
    if not 0 <= R < sig_type.size:
        raise DomainError("index {} outside [0, {})".format(R, sig_type.size))
    return tuple(int(j) for j in np.unravel_index(R, sig_type.radices, order='F'))


def mixed_radix_compose(indices, sig_type):
    if len(indices) != sig_type.s:
        raise DomainError("index tuple {} does not match type {}".format(indices, sig_type))
    for j, r in zip(indices, sig_type.radices):
        if not 0 <= j < r:
            raise DomainError("block index {} outside [0, {})".format(j, r))
    return int(np.ravel_multi_index(tuple(indices), sig_type.radices, order='F'))


@dataclass(frozen=True)
class LogSignature:
    r"""
    β_k: ``blocks[i][j]`` is the field value of row j in block i+1.  The signature
    lives in group coordinate ``coordinate`` (from 1) once embedded.
    """
    coordinate: int
    sig_type: SignatureType
    blocks: tuple

    def __post_init__(self):
        if tuple(len(b) for b in self.blocks) != self.sig_type.radices:
            raise ConfigurationError("block sizes {} do not match type {}"
                                     .format([len(b) for b in self.blocks], self.sig_type))

    @property
    def spec(self):
        return self.blocks[0][0].spec


@dataclass(frozen=True)
class Cover:
    r""" α_k or γ_k: ``blocks[i][j]`` is a GroupElement. """
    sig_type: SignatureType
    blocks: tuple

    def __post_init__(self):
        if tuple(len(b) for b in self.blocks) != self.sig_type.radices:
            raise ConfigurationError("block sizes {} do not match type {}"
                                     .format([len(b) for b in self.blocks], self.sig_type))

    @property
    def params(self):
        return self.blocks[0][0].params


@dataclass(frozen=True)
class FactorStep:
    r""" One block of a factorization trace. """
    block: int
    row: int
    row_value: FieldElement
    residual_before: FieldElement
    residual_after: FieldElement


def check_staircase(ls):
    r""" Raise IntegrityError naming the first block/row that breaks staircase tameness. """
    ls.sig_type.check_degree(ls.spec.n)
    for i, (lo, hi) in enumerate(ls.sig_type.segment_bounds()):
        seen = set()
        for j, row in enumerate(ls.blocks[i]):
            if row.bits >> hi:
                raise IntegrityError("block {} row {}: non-zero bits above segment {}"
                                     .format(i + 1, j, i + 1))
            segment = (row.bits >> lo) & ((1 << (hi - lo)) - 1)
            if segment in seen:
                raise IntegrityError("block {} row {}: segment {} pattern repeats"
                                     .format(i + 1, j, i + 1))
            seen.add(segment)


def is_tame(ls):
    try:
        check_staircase(ls)
    except IntegrityError:
        return False
    return True


def check_cover(cover):
    r""" Every coordinate of every entry must be non-zero. """
    for i, block in enumerate(cover.blocks):
        for j, entry in enumerate(block):
            if not all(entry.values):
                raise IntegrityError("cover block {} row {} has a zero coordinate".format(i + 1, j))


def gen_tame_signature(rng, spec, sig_type, coordinate, randomize_segments=False, random_prefix=True):
    r"""
    Random staircase signature.

    Row j of block i carries j (little-endian, or a random bijection of j when
    ``randomize_segments``) in segment i, zeros above, and uniform bits below.
    """
    sig_type.check_degree(spec.n)
    blocks = []
    for lo, hi in sig_type.segment_bounds():
        size = 1 << (hi - lo)
        patterns = rng.permutation(size) if randomize_segments else np.arange(size)
        rows = []
        for j in range(size):
            prefix = int(rng.integers(0, 1 << lo)) if (random_prefix and lo) else 0
            rows.append(FieldElement(prefix | (int(patterns[j]) << lo), spec))
        blocks.append(tuple(rows))
    ls = LogSignature(coordinate, sig_type, tuple(blocks))
    logger.debug("suzuki_mst3 gen_tame_signature: coordinate={} type={}".format(coordinate, sig_type))
    return ls


def ls_evaluate(ls, R):
    if not 0 <= R < ls.spec.order:
        raise DomainError("index {} outside [0, {})".format(R, ls.spec.order))
    bits = 0
    for block, j in zip(ls.blocks, mixed_radix_decompose(R, ls.sig_type)):
        bits ^= block[j].bits
    return FieldElement(bits, ls.spec)


def ls_factorize(ls, v, trace=None):
    r"""
    Index R with ls_evaluate(ls, R) == v.  Blocks are peeled from s down to 1 by
    matching the residual's segment bits.  When ``trace`` is a list, one FactorStep
    per block is appended to it.
    """
    if v.spec != ls.spec:
        raise UsageError("value from {} factorized against a signature over {}".format(v.spec, ls.spec))
    bounds = ls.sig_type.segment_bounds()
    indices = [0] * ls.sig_type.s
    residual = v.bits
    for i in reversed(range(ls.sig_type.s)):
        lo, hi = bounds[i]
        mask = (1 << (hi - lo)) - 1
        wanted = (residual >> lo) & mask
        for j, row in enumerate(ls.blocks[i]):
            if (row.bits >> lo) & mask == wanted:
                break
        else:
            raise IntegrityError("value not factorizable: no row of block {} matches".format(i + 1))
        indices[i] = j
        before, residual = residual, residual ^ row.bits
        if trace is not None:
            trace.append(FactorStep(i + 1, j, row, FieldElement(before, ls.spec),
                                    FieldElement(residual, ls.spec)))
    if residual:
        raise IntegrityError("value not factorizable: residual {:x} after block 1".format(residual))
    return mixed_radix_compose(indices, ls.sig_type)


def format_segments(v, sig_type):
    r""" Bit string of v split at segment boundaries, e.g. '00|01|100'. """
    text = v.to_bitstring()
    return "|".join(text[lo:hi] for lo, hi in sig_type.segment_bounds())


def gen_random_cover(rng, params, sig_type):
    blocks = tuple(tuple(g_random(rng, params, full_support=True) for _ in range(r))
                   for r in sig_type.radices)
    return Cover(sig_type, blocks)


def cover_evaluate(cover, R):
    r""" block_1[j_1] * block_2[j_2] * ... * block_s[j_s] """
    indices = mixed_radix_decompose(R, cover.sig_type)
    return g_product((block[j] for block, j in zip(cover.blocks, indices)), cover.params)


def _format_blocks(sig_type, blocks, fmt):
    lines = ["type={}".format(sig_type)]
    for i, block in enumerate(blocks):
        if i:
            lines.append(BLOCK_SEPARATOR)
        lines.extend(fmt(row) for row in block)
    return lines


def _parse_blocks(lines, first_line, parse_row):
    r""" Returns (SignatureType, blocks) from serialized lines; ``first_line`` numbers lines[0]. """
    if not lines or not lines[0].startswith("type="):
        raise ParseError("expected a 'type=' header", first_line)
    try:
        sig_type = SignatureType.from_string(lines[0][len("type="):])
    except ConfigurationError as err:
        raise ParseError(str(err), first_line) from None
    blocks, current = [], []
    for offset, text in enumerate(lines[1:], start=1):
        if text.strip() == BLOCK_SEPARATOR:
            blocks.append(tuple(current))
            current = []
        else:
            current.append(parse_row(text, first_line + offset))
    blocks.append(tuple(current))
    if tuple(len(b) for b in blocks) != sig_type.radices:
        raise ParseError("block sizes {} do not match type {}".format([len(b) for b in blocks], sig_type),
                         first_line)
    return sig_type, tuple(blocks)


def format_signature(ls):
    return _format_blocks(ls.sig_type, ls.blocks, str)


def parse_signature(lines, spec, coordinate, first_line=1):
    sig_type, blocks = _parse_blocks(lines, first_line, lambda text, no: parse_element(text, spec, no))
    return LogSignature(coordinate, sig_type, blocks)


def format_cover(cover):
    return _format_blocks(cover.sig_type, cover.blocks, format_group_element)


def parse_cover(lines, params, first_line=1):
    sig_type, blocks = _parse_blocks(lines, first_line, lambda text, no: parse_group_element(text, params, no))
    return Cover(sig_type, blocks)

