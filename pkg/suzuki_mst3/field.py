r""" Arithmetic in GF(2^n), polynomial basis, with the Frobenius powers used by the group law

Bit i of an element's coefficient vector is the coefficient of x^i.  Products are
served from exp/log tables built once per field with the shift-and-add reference
multiplier ``clmul_mod``.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConfigurationError, DomainError, ParseError, UsageError

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

# Primitive polynomials, bit i = coefficient of x^i.
DEFAULT_MODULI = {
    2: 0x7,       # x^2 + x + 1
    3: 0xB,       # x^3 + x + 1
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x43,      # x^6 + x + 1
    7: 0x83,      # x^7 + x + 1
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x409,    # x^10 + x^3 + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x1053,   # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,   # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,   # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,   # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}

MAX_DEGREE = 16
HEX_DIGITS = frozenset("0123456789abcdef")


def poly_mod(a, b):
    r""" Remainder of a modulo b, both polynomials over GF(2) packed into ints. """
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def clmul_mod(a, b, n, modulus):
    r"""
    Shift-and-add product of a and b, reduced modulo ``modulus`` after every shift.

    This is the reference multiplier; the table-driven ``FieldSpec.mul`` is built from it.
    """
    top = 1 << n
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return result


@lru_cache(maxsize=None)
def is_irreducible(modulus):
    r""" Exhaustive divisor test: no polynomial of degree 1..deg/2 divides ``modulus``. """
    degree = modulus.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(modulus, divisor) == 0:
            return False
    return True


@lru_cache(maxsize=None)
def _field_tables(n, modulus):
    r"""
    Build (generator, exp, log) for GF(2^n) / modulus.

    exp has length 2(q-1) so that exp[log a + log b] needs no reduction.
    """
    order = (1 << n) - 1
    for generator in range(2, 1 << n):
        powers = [1]
        value = 1
        for _ in range(order - 1):
            value = clmul_mod(value, generator, n, modulus)
            if value == 1:
                break
            powers.append(value)
        if len(powers) == order:
            break
    else:
        raise ConfigurationError("no generator found for modulus {:x}".format(modulus))
    log = [0] * (order + 1)
    for k, value in enumerate(powers):
        log[value] = k
    logger.debug("suzuki_mst3 _field_tables: n={} poly={:x} generator={:x}"
                 .format(n, modulus, generator))
    return generator, powers + powers, log


@dataclass(frozen=True)
class FieldSpec:
    r"""
    GF(2^n) given by an irreducible modulus of exact degree n.

    Parameters
    ----------
    n : int
        Extension degree, 2 <= n <= 16.
    modulus : int
        (n+1)-bit coefficient vector of the modulus, bit n set.
    """
    n: int
    modulus: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ConfigurationError("field degree must be an integer >= 2, got {}".format(self.n))
        if self.n > MAX_DEGREE:
            raise ConfigurationError("field degree {} exceeds the supported maximum {}"
                                     .format(self.n, MAX_DEGREE))
        if self.modulus.bit_length() - 1 != self.n:
            raise ConfigurationError("modulus {:x} does not have degree {}".format(self.modulus, self.n))
        if not is_irreducible(self.modulus):
            raise ConfigurationError("modulus {:x} is reducible over GF(2)".format(self.modulus))

    @classmethod
    def default(cls, n):
        r""" The field of degree n over the documented primitive polynomial. """
        try:
            return cls(n, DEFAULT_MODULI[n])
        except KeyError:
            raise ConfigurationError("no default modulus for n={} (supported: {}..{})"
                                     .format(n, min(DEFAULT_MODULI), max(DEFAULT_MODULI))) from None

    @property
    def order(self):
        r""" q = 2^n """
        return 1 << self.n

    @property
    def hex_width(self):
        return (self.n + 3) // 4

    @property
    def generator(self):
        return _field_tables(self.n, self.modulus)[0]

    def __str__(self):
        return "n={} poly={:x}".format(self.n, self.modulus)

    # Raw-int arithmetic; callers guarantee 0 <= a, b < q.

    def mul(self, a, b):
        if not a or not b:
            return 0
        _, exp, log = _field_tables(self.n, self.modulus)
        return exp[log[a] + log[b]]

    def inv(self, a):
        if not a:
            raise DomainError("zero has no inverse")
        _, exp, log = _field_tables(self.n, self.modulus)
        return exp[(self.order - 1 - log[a]) % (self.order - 1)]

    def frobenius(self, a, j):
        r""" a^(2^j) """
        if not a:
            return 0
        _, exp, log = _field_tables(self.n, self.modulus)
        return exp[(log[a] << (j % self.n)) % (self.order - 1)]

    def element(self, bits):
        return FieldElement(bits, self)

    def zero(self):
        return FieldElement(0, self)

    def one(self):
        return FieldElement(1, self)


def parse_field_spec(text):
    r""" Inverse of ``str(FieldSpec)``: ``n=<int> poly=<hex>``. """
    try:
        fields = dict(part.split("=", 1) for part in text.split())
        n, modulus = int(fields["n"]), int(fields["poly"], 16)
    except (KeyError, ValueError):
        raise ParseError("bad field spec {!r}".format(text)) from None
    return FieldSpec(n, modulus)


@dataclass(frozen=True)
class FieldElement:
    r""" An element of GF(2^n): coefficient vector ``bits`` and the field it lives in. """
    bits: int
    spec: FieldSpec

    def __post_init__(self):
        if not 0 <= self.bits < self.spec.order:
            raise DomainError("{} is not an element of GF(2^{})".format(self.bits, self.spec.n))

    @classmethod
    def from_bitstring(cls, text, spec):
        r""" Character i is the coefficient of x^i, e.g. "0001100" = x^3 + x^4. """
        if len(text) != spec.n or set(text) - {"0", "1"}:
            raise ParseError("bad {}-bit string {!r}".format(spec.n, text))
        return cls(sum(1 << i for i, c in enumerate(text) if c == "1"), spec)

    def to_bitstring(self):
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.spec.n))

    def __add__(self, other):
        return ff_add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        return ff_mul(self, other)

    def __bool__(self):
        return self.bits != 0

    def __int__(self):
        return self.bits

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return "FieldElement({}, {})".format(format_element(self), self.spec)


def _check_same_field(a, b):
    if a.spec != b.spec:
        raise UsageError("field elements from different fields: {} and {}".format(a.spec, b.spec))


def ff_add(a, b):
    _check_same_field(a, b)
    return FieldElement(a.bits ^ b.bits, a.spec)


def ff_mul(a, b):
    _check_same_field(a, b)
    return FieldElement(a.spec.mul(a.bits, b.bits), a.spec)


def ff_sqr(a):
    return FieldElement(a.spec.frobenius(a.bits, 1), a.spec)


def ff_inv(a):
    return FieldElement(a.spec.inv(a.bits), a.spec)


def ff_pow(a, e):
    r""" a^e for integer e; negative exponents go through the inverse. """
    if e < 0:
        a, e = ff_inv(a), -e
    if e == 0:
        return a.spec.one()
    if not a:
        return a
    spec = a.spec
    _, exp, log = _field_tables(spec.n, spec.modulus)
    return FieldElement(exp[log[a.bits] * e % (spec.order - 1)], spec)


def frobenius_pow(a, j):
    r""" θ^j(a) = a^(2^j); j = 0 is the identity. """
    if j < 0:
        raise DomainError("Frobenius exponent must be non-negative, got {}".format(j))
    return FieldElement(a.spec.frobenius(a.bits, j), a.spec)


def discrete_log(a):
    r""" k with a = g^k for the field generator g (x itself when the modulus is primitive). """
    if not a:
        raise DomainError("zero has no discrete logarithm")
    return _field_tables(a.spec.n, a.spec.modulus)[2][a.bits]


def power_form(a):
    r""" Pretty-print a as a power of the field generator, e.g. 'α^34'. """
    if not a:
        return "0"
    return "α^{}".format(discrete_log(a))


def format_element(a):
    return "{:0{}x}".format(a.bits, a.spec.hex_width)


def parse_element(text, spec, line=None):
    r""" Lowercase (or uppercase) hex of exactly ceil(n/4) digits. """
    text = text.strip()
    if len(text) != spec.hex_width:
        raise ParseError("field element {!r} must have {} hex digits".format(text, spec.hex_width), line)
    if set(text.lower()) - HEX_DIGITS:
        raise ParseError("field element {!r} is not hexadecimal".format(text), line)
    bits = int(text, 16)
    if bits >= spec.order:
        raise ParseError("field element {!r} exceeds {} bits".format(text, spec.n), line)
    return FieldElement(bits, spec)


def random_element(rng, spec, nonzero=False):
    r""" Uniform element (uniform non-zero element when ``nonzero``) drawn from a numpy Generator. """
    return FieldElement(int(rng.integers(1 if nonzero else 0, spec.order)), spec)
