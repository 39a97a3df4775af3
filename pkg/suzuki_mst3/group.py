r""" The generalized Suzuki 2-group A_l(n, θ) with θ the Frobenius map x -> x^2

An element S(a_1, ..., a_l) multiplies as

    c_1 = a_1 + b_1
    c_m = a_m + b_m + sum_{j=1}^{m-1} θ^j(a_{m-j}) b_j      (m >= 2)

Every S(0, ..., 0, c) is central.  For some (n, l) the centre is larger: S(0, 1, c) is
central in A_3(2, θ) and S(0, 0, 1, c) in A_4(3, θ).
"""

import logging
import re
from dataclasses import dataclass
from functools import reduce
from itertools import product

import numpy as np

from .errors import ConfigurationError, DomainError, GuardRefusal, ParseError, UsageError
from .field import FieldElement, FieldSpec, parse_element

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

ELEMENT_PATTERN = re.compile(r"^S\((.*)\)$")
CENTRE_GUARD_BITS = 12


def seeded_stream(seed):
    r"""
    The random stream behind every randomized operation: numpy's PCG64 seeded with ``seed``.

    Equal seeds give equal keys, ciphertexts and attack instances within one installation.
    """
    if seed is None or not 0 <= int(seed) < 2 ** 64:
        raise UsageError("seed must be an unsigned 64-bit integer, got {!r}".format(seed))
    return np.random.default_rng(int(seed))


@dataclass(frozen=True)
class GroupParams:
    r""" A_l(n, θ) over the field ``spec``; the group has order 2^(n*l). """
    spec: FieldSpec
    l: int

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 2:
            raise ConfigurationError("group needs l >= 2 coordinates, got {}".format(self.l))

    @classmethod
    def default(cls, n, l):
        return cls(FieldSpec.default(n), l)

    @property
    def n(self):
        return self.spec.n

    @property
    def order_bits(self):
        return self.spec.n * self.l

    def __str__(self):
        return "{} l={}".format(self.spec, self.l)


@dataclass(frozen=True)
class GroupElement:
    r"""
    S(a_1, ..., a_l).  ``values`` holds the raw coefficient vectors; ``coords`` wraps
    them as FieldElements.  Equality is coordinate-wise.
    """
    params: GroupParams
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.params.l:
            raise UsageError("group element needs {} coordinates, got {}"
                             .format(self.params.l, len(self.values)))
        q = self.params.spec.order
        if not all(0 <= v < q for v in self.values):
            raise DomainError("coordinate outside GF(2^{}): {}".format(self.params.n, self.values))

    @classmethod
    def from_coords(cls, params, coords):
        for c in coords:
            if c.spec != params.spec:
                raise UsageError("coordinate from {} in a group over {}".format(c.spec, params.spec))
        return cls(params, tuple(c.bits for c in coords))

    @property
    def coords(self):
        spec = self.params.spec
        return tuple(FieldElement(v, spec) for v in self.values)

    def coord(self, k):
        r""" Coordinate k, counted from 1 as in S(a_1, ..., a_l). """
        return FieldElement(self.values[k - 1], self.params.spec)

    def is_identity(self):
        return not any(self.values)

    def __mul__(self, other):
        return g_mul(self, other)

    def __str__(self):
        return format_group_element(self)


def _product(spec, a, b):
    mul, frob = spec.mul, spec.frobenius
    out = []
    for i in range(len(a)):
        c = a[i] ^ b[i]
        for j in range(1, i + 1):
            if b[j - 1]:
                c ^= mul(frob(a[i - j], j), b[j - 1])
        out.append(c)
    return tuple(out)


def _inverse(spec, a):
    # Solve S(a) S(x) = e coordinate by coordinate.
    mul, frob = spec.mul, spec.frobenius
    x = []
    for i in range(len(a)):
        c = a[i]
        for j in range(1, i + 1):
            if x[j - 1]:
                c ^= mul(frob(a[i - j], j), x[j - 1])
        x.append(c)
    return tuple(x)


def _check_same_group(a, b):
    if a.params != b.params:
        raise UsageError("group elements from different groups: {} and {}".format(a.params, b.params))


def g_mul(a, b):
    _check_same_group(a, b)
    return GroupElement(a.params, _product(a.params.spec, a.values, b.values))


def g_inv(a):
    return GroupElement(a.params, _inverse(a.params.spec, a.values))


def g_identity(params):
    return GroupElement(params, (0,) * params.l)


def g_is_central(a):
    r""" True for S(0, ..., 0, c).  See g_centre for the full centre of small groups. """
    return not any(a.values[:-1])


def g_product(elements, params):
    r""" Ordered product of ``elements``; the empty product is the identity. """
    return reduce(g_mul, elements, g_identity(params))


def g_pow(a, e):
    if e < 0:
        a, e = g_inv(a), -e
    result = g_identity(a.params)
    while e:
        if e & 1:
            result = g_mul(result, a)
        a = g_mul(a, a)
        e >>= 1
    return result


def g_order(a):
    r""" Order of a (a power of two, the group being a 2-group). """
    order = 1
    while not a.is_identity():
        a = g_mul(a, a)
        order <<= 1
        assert order <= 1 << a.params.order_bits
    return order


def g_commutator(a, b):
    r""" [a, b] = a^-1 b^-1 a b """
    return g_product((g_inv(a), g_inv(b), a, b), a.params)


def g_centre(params):
    r"""
    Every central element of a small group, found by enumeration.

    Whether a commutes with b is additive in b, so it is enough to test a against
    embed(k, x^i) for every coordinate k and bit i.

    Raises
    ------
    GuardRefusal
        The group has more than 2^12 elements.
    """
    if params.order_bits > CENTRE_GUARD_BITS:
        raise GuardRefusal("centre enumeration over 2^{} elements exceeds 2^{}"
                           .format(params.order_bits, CENTRE_GUARD_BITS))
    basis = [embed(params, k, 1 << i) for k in range(1, params.l + 1) for i in range(params.n)]
    centre = []
    for values in product(range(params.spec.order), repeat=params.l):
        a = GroupElement(params, values)
        if all(g_commutator(a, b).is_identity() for b in basis):
            centre.append(a)
    logger.debug("suzuki_mst3 g_centre: {} has {} central elements".format(params, len(centre)))
    return tuple(centre)


def g_closed_form_inverse_l4(a):
    r"""
    The printed closed-form inverse for l = 4:

        S(a1, a2 + a1^3, a3 + a2^2 a1 + a1^4 a2', a4 + a3^2 a1 + a2^4 a2' + a1^8 a3')
    """
    if a.params.l != 4:
        raise UsageError("closed-form inverse is only defined for l=4")
    a1, a2, a3, a4 = a.coords
    spec = a.params.spec

    def theta(v, j):
        return FieldElement(spec.frobenius(v.bits, j), spec)

    a2p = a2 + theta(a1, 1) * a1
    a3p = a3 + theta(a2, 1) * a1 + theta(a1, 2) * a2p
    a4p = a4 + theta(a3, 1) * a1 + theta(a2, 2) * a2p + theta(a1, 3) * a3p
    return GroupElement.from_coords(a.params, (a1, a2p, a3p, a4p))


def embed(params, k, value):
    r""" The element whose coordinate k (from 1) is ``value`` and whose other coordinates are zero. """
    if not 1 <= k <= params.l:
        raise DomainError("coordinate {} outside 1..{}".format(k, params.l))
    bits = value.bits if isinstance(value, FieldElement) else int(value)
    values = [0] * params.l
    values[k - 1] = bits
    return GroupElement(params, tuple(values))


def g_random(rng, params, full_support=False):
    r""" Uniform element; with ``full_support`` every coordinate is non-zero. """
    low = 1 if full_support else 0
    values = rng.integers(low, params.spec.order, size=params.l)
    return GroupElement(params, tuple(int(v) for v in values))


def format_group_element(a):
    width = a.params.spec.hex_width
    return "S({})".format(",".join("{:0{}x}".format(v, width) for v in a.values))


def parse_group_element(text, params, line=None):
    match = ELEMENT_PATTERN.match(text.strip())
    if not match:
        raise ParseError("group element {!r} is not of the form S(...)".format(text.strip()), line)
    parts = match.group(1).split(",")
    if len(parts) != params.l:
        raise ParseError("group element needs {} coordinates, got {}".format(params.l, len(parts)), line)
    return GroupElement(params, tuple(parse_element(p, params.spec, line).bits for p in parts))
