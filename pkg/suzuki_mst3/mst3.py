r"""
The full-group MST3 scheme over A_l(n, θ).

Key generation
    β_k   tame signature living in coordinate k            (private)
    α_k   random full-support cover of the same type         (public)
    t     one flat chain t_0(1), ..., t_s(1)(1) = t_0(2), ..., t_s(l)(l)   (private)
    γ_k   entry (i, j) = t_{i-1(k)}^-1 · α_k[i][j] · embed_k(β_k[i][j]) · t_{i(k)}   (public)
    π     permutation of the l indices, R'_i = R_{π_i}       (public)

Encryption of x with fresh R = (R_1, ..., R_l)
    y1 = α_1(R'_1) ··· α_l(R'_l) · x,   y2 = γ_1(R_1) ··· γ_l(R_l),   y3 = α_1(R_1) ··· α_l(R_l)

Decryption peels R_1, ..., R_l one at a time out of (y2, y3), then strips α'(R') from y1.
"""

import logging
import time
from dataclasses import dataclass

from .errors import ConfigurationError, DomainError, IntegrityError, UsageError
from .group import GroupParams, embed, g_inv, g_mul, g_product, g_random
from .logsig import (Cover, cover_evaluate, default_signature_type, gen_random_cover,
                     gen_tame_signature, ls_factorize, parse_types)

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class SchemeParams:
    r""" The group and one signature type per coordinate k = 1..l. """
    group: GroupParams
    types: tuple

    def __post_init__(self):
        if len(self.types) != self.group.l:
            raise ConfigurationError("need {} signature types, got {}".format(self.group.l, len(self.types)))
        for sig_type in self.types:
            sig_type.check_degree(self.group.n)

    @classmethod
    def build(cls, n, l, types=None):
        r"""
        Parameters from the command-line style description.

        types : str or None
            Per-coordinate types '4,4,8;8,4,4;...'; None picks ``default_signature_type``
            rotated by the coordinate index.
        """
        group = GroupParams.default(n, l)
        if types:
            parsed = parse_types(types)
        else:
            parsed = tuple(default_signature_type(n, k) for k in range(l))
        return cls(group, parsed)

    @property
    def l(self):
        return self.group.l

    @property
    def n(self):
        return self.group.n

    @property
    def q(self):
        return self.group.spec.order

    def chain_length(self):
        return 1 + sum(t.s for t in self.types)


def check_permutation(pi, l):
    if sorted(pi) != list(range(l)):
        raise ConfigurationError("{} is not a permutation of {} indices".format(pi, l))


def apply_permutation(pi, R):
    r""" R'_i = R_{π_i}; ``pi`` is 0-based. """
    return tuple(R[p] for p in pi)


@dataclass(frozen=True)
class PublicKey:
    params: SchemeParams
    alpha: tuple
    gamma: tuple
    pi: tuple

    def __post_init__(self):
        l = self.params.l
        if len(self.alpha) != l or len(self.gamma) != l:
            raise ConfigurationError("public key needs {} α and γ covers".format(l))
        for k in range(l):
            if not self.alpha[k].sig_type == self.gamma[k].sig_type == self.params.types[k]:
                raise ConfigurationError("cover types of coordinate {} disagree".format(k + 1))
        check_permutation(self.pi, l)


@dataclass(frozen=True)
class PrivateKey:
    params: SchemeParams
    beta: tuple
    tchain: tuple
    pi: tuple

    def __post_init__(self):
        if len(self.beta) != self.params.l:
            raise ConfigurationError("private key needs {} signatures".format(self.params.l))
        if len(self.tchain) != self.params.chain_length():
            raise ConfigurationError("t-chain needs {} elements, got {}"
                                     .format(self.params.chain_length(), len(self.tchain)))
        check_permutation(self.pi, self.params.l)

    def t(self, k, i):
        r""" t_{i(k)}, k from 1; t_{s(k)(k)} and t_{0(k+1)} are the same element. """
        offset = sum(t.s for t in self.params.types[:k - 1])
        return self.tchain[offset + i]


@dataclass(frozen=True)
class Ciphertext:
    y1: object
    y2: object
    y3: object

    @property
    def bit_length(self):
        return 3 * self.y1.params.order_bits


@dataclass(frozen=True)
class Readout:
    r""" Decryption round k: the peeled D*, its coordinate k and the recovered R_k. """
    k: int
    d_star: object
    value: object
    R: int


def keygen(params, rng, pi=None):
    r"""
    Generate (PublicKey, PrivateKey).

    Parameters
    ----------
    params : SchemeParams
    rng : numpy.random.Generator
        Consumed exclusively for the duration of the call.
    pi : tuple or None
        Fixed 0-based permutation; drawn uniformly from ``rng`` when None.
    """
    t1 = time.time()
    group, spec, l = params.group, params.group.spec, params.l
    beta = tuple(gen_tame_signature(rng, spec, params.types[k], k + 1) for k in range(l))
    alpha = tuple(gen_random_cover(rng, group, params.types[k]) for k in range(l))
    tchain = tuple(g_random(rng, group, full_support=True) for _ in range(params.chain_length()))
    if pi is None:
        pi = tuple(int(p) for p in rng.permutation(l))
    check_permutation(pi, l)

    gamma, offset = [], 0
    for k in range(l):
        blocks = []
        for i, block in enumerate(alpha[k].blocks):
            t_left_inv, t_right = g_inv(tchain[offset + i]), tchain[offset + i + 1]
            blocks.append(tuple(
                g_product((t_left_inv, entry, embed(group, k + 1, beta[k].blocks[i][j]), t_right), group)
                for j, entry in enumerate(block)))
        gamma.append(Cover(params.types[k], tuple(blocks)))
        offset += params.types[k].s

    public = PublicKey(params, alpha, tuple(gamma), pi)
    private = PrivateKey(params, beta, tchain, pi)
    logger.debug("suzuki_mst3 keygen: {} types={} completed in {:0.1f}s"
                 .format(group, ";".join(str(t) for t in params.types), time.time() - t1))
    return public, private


def cover_product(covers, R):
    r""" covers[0](R_1) · covers[1](R_2) ··· """
    return g_product((cover_evaluate(c, r) for c, r in zip(covers, R)), covers[0].params)


def draw_keys(params, rng):
    r""" Fresh R = (R_1, ..., R_l), each uniform in [0, q). """
    return tuple(int(r) for r in rng.integers(0, params.q, size=params.l))


def encrypt_with(pk, x, R):
    r""" Encryption with caller-supplied randomness R. """
    params = pk.params
    if x.params != params.group:
        raise UsageError("message from {} encrypted under a key for {}".format(x.params, params.group))
    if len(R) != params.l or not all(0 <= r < params.q for r in R):
        raise DomainError("R={} must hold {} indices in [0, {})".format(R, params.l, params.q))
    y1 = g_mul(cover_product(pk.alpha, apply_permutation(pk.pi, R)), x)
    y2 = cover_product(pk.gamma, R)
    y3 = cover_product(pk.alpha, R)
    return Ciphertext(y1, y2, y3)


def encrypt(pk, x, rng):
    return encrypt_with(pk, x, draw_keys(pk.params, rng))


def decrypt(pk, sk, ct, readouts=None):
    r"""
    Recover x from (y1, y2, y3).

    Round k conjugates the peeled y2 by t_0(k) on the left and the last chain element
    on the right, multiplies by the peeled y3^-1 and reads β_k(R_k) from coordinate k.
    When ``readouts`` is a list, one Readout per round is appended to it.

    Raises
    ------
    IntegrityError
        A non-zero coordinate below k in a round's D*, a failed factorization, or a
        non-identity residual after the last round, or a private key whose π differs
        from the public key's.
    UsageError
        Keys or ciphertext built for different parameters.
    """
    params = pk.params
    if sk.params != params:
        raise UsageError("private key parameters differ from the public key's ({})".format(params.group))
    if tuple(sk.pi) != tuple(pk.pi):
        raise IntegrityError("public and private key do not belong together")
    for y in (ct.y1, ct.y2, ct.y3):
        if y.params != params.group:
            raise UsageError("ciphertext from {} decrypted under {}".format(y.params, params.group))

    t_last_inv = g_inv(sk.tchain[-1])
    y2, y3 = ct.y2, ct.y3
    R = []
    for k in range(1, params.l + 1):
        d = g_product((sk.t(k, 0), y2, t_last_inv), params.group)
        d_star = g_mul(d, g_inv(y3))
        if any(d_star.values[:k - 1]):
            raise IntegrityError("round {}: D* has a non-zero coordinate below {}".format(k, k))
        value = d_star.coord(k)
        r_k = ls_factorize(sk.beta[k - 1], value)
        if readouts is not None:
            readouts.append(Readout(k, d_star, value, r_k))
        y2 = g_mul(g_inv(cover_evaluate(pk.gamma[k - 1], r_k)), y2)
        y3 = g_mul(g_inv(cover_evaluate(pk.alpha[k - 1], r_k)), y3)
        R.append(r_k)
    if not (y2.is_identity() and y3.is_identity()):
        raise IntegrityError("ciphertext residual is not the identity after {} rounds".format(params.l))
    logger.debug("suzuki_mst3 decrypt: recovered R={}".format(tuple(R)))
    return g_mul(g_inv(cover_product(pk.alpha, apply_permutation(pk.pi, R))), ct.y1)
