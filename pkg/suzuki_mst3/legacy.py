r"""
The centre-restricted MST3 scheme over A_l(n, θ) (l even, h = l/2) and the
brute-force attacks used to compare it with the full-group scheme.

Legacy keys: β_k lives in coordinate h+k; α_k entries are supported on coordinates
k and h+k; γ_k entry (i, j) = t_{i-1(k)}^-1 · f(α_k[i][j]) · embed_{h+k}(β_k[i][j]) · t_{i(k)}
with f(S(a_1, ..., a_l)) = S(0, ..., 0, a_1, ..., a_h).  Messages are supported on
coordinates h+1..l and the ciphertext is (y1, y2) = (α'(R) · x, γ'(R)).

Coordinate k of α_k(R_k) reaches y1 without cross terms once α_1..α_{k-1} are peeled,
which is what lets ``attack_sequential_legacy`` find R one index at a time.
"""

import itertools
import logging
import multiprocessing
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DomainError, GuardRefusal, IntegrityError, UsageError
from .group import GroupElement, GroupParams, embed, g_identity, g_inv, g_mul, g_product, g_random
from .logsig import (Cover, cover_evaluate, default_signature_type, gen_tame_signature,
                     ls_factorize, parse_types)
from .mst3 import apply_permutation, cover_product, draw_keys, encrypt_with, keygen

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

EXHAUSTIVE_GUARD_BITS = 20
SEQUENTIAL_GUARD_BITS = 16
COMPONENTS = ("y1", "y2", "y3", "y23")


@dataclass(frozen=True)
class LegacyParams:
    r""" Group with even l and one signature type per k = 1..l/2. """
    group: GroupParams
    types: tuple

    def __post_init__(self):
        if self.group.l % 2:
            raise ConfigurationError("the legacy scheme needs an even l, got {}".format(self.group.l))
        if len(self.types) != self.h:
            raise ConfigurationError("need {} signature types, got {}".format(self.h, len(self.types)))
        for sig_type in self.types:
            sig_type.check_degree(self.group.n)

    @classmethod
    def build(cls, n, l, types=None):
        group = GroupParams.default(n, l)
        if types:
            parsed = parse_types(types)
        else:
            parsed = tuple(default_signature_type(n, k) for k in range(l // 2))
        return cls(group, parsed)

    @property
    def h(self):
        return self.group.l // 2

    @property
    def q(self):
        return self.group.spec.order

    def chain_length(self):
        return 1 + sum(t.s for t in self.types)


@dataclass(frozen=True)
class LegacyPublicKey:
    params: LegacyParams
    alpha: tuple
    gamma: tuple


@dataclass(frozen=True)
class LegacyPrivateKey:
    params: LegacyParams
    beta: tuple
    tchain: tuple

    def t(self, k, i):
        offset = sum(t.s for t in self.params.types[:k - 1])
        return self.tchain[offset + i]


@dataclass(frozen=True)
class LegacyCiphertext:
    y1: GroupElement
    y2: GroupElement


@dataclass
class AttackReport:
    r"""
    Outcome of a brute-force run.

    trials
        Candidate evaluations (one cover evaluation plus comparison each) along the
        scan that reached the reported key.
    evaluations
        Every distinct candidate evaluation performed, abandoned branches included.
    matches
        Candidates that passed the attack's consistency test.
    candidates
        Every full key consistent with the target (exhaustive mode); ``recovered_R``
        is set only when the outcome is unambiguous.
    """
    recovered_R: tuple = None
    trials: int = 0
    matches: int = 0
    evaluations: int = 0
    candidates: tuple = ()
    elapsed: float = 0.0
    mode: str = ""
    notes: list = field(default_factory=list)

    def lines(self):
        out = ["mode: {}".format(self.mode),
               "recovered R: {}".format(self.recovered_R if self.recovered_R is not None else "ambiguous"),
               "trials: {}".format(self.trials),
               "evaluations: {}".format(self.evaluations),
               "matches: {}".format(self.matches)]
        if len(self.candidates) > 1:
            out.append("candidates: {}".format(" ".join(str(c) for c in self.candidates)))
        out.append("elapsed: {:0.3f}s".format(self.elapsed))
        out.extend(self.notes)
        return out


def f_compress(a):
    r""" f(S(a_1, ..., a_l)) = S(0, ..., 0, a_1, ..., a_{l/2}) """
    l = a.params.l
    if l % 2:
        raise ConfigurationError("f needs an even l, got {}".format(l))
    return GroupElement(a.params, (0,) * (l // 2) + a.values[:l // 2])


def gen_legacy_cover(rng, group, sig_type, k):
    r""" Cover for α_k: entries non-zero exactly on coordinates k and l/2 + k. """
    h, q = group.l // 2, group.spec.order
    blocks = []
    for r in sig_type.radices:
        rows = []
        for _ in range(r):
            values = [0] * group.l
            values[k - 1], values[h + k - 1] = (int(v) for v in rng.integers(1, q, size=2))
            rows.append(GroupElement(group, tuple(values)))
        blocks.append(tuple(rows))
    return Cover(sig_type, tuple(blocks))


def legacy_keygen(params, rng):
    r""" Returns (LegacyPublicKey, LegacyPrivateKey). """
    group, spec, h = params.group, params.group.spec, params.h
    beta = tuple(gen_tame_signature(rng, spec, params.types[k], h + k + 1) for k in range(h))
    alpha = tuple(gen_legacy_cover(rng, group, params.types[k], k + 1) for k in range(h))
    tchain = tuple(g_random(rng, group, full_support=True) for _ in range(params.chain_length()))

    gamma, offset = [], 0
    for k in range(h):
        blocks = []
        for i, block in enumerate(alpha[k].blocks):
            t_left_inv, t_right = g_inv(tchain[offset + i]), tchain[offset + i + 1]
            blocks.append(tuple(
                g_product((t_left_inv, f_compress(entry), embed(group, h + k + 1, beta[k].blocks[i][j]),
                           t_right), group)
                for j, entry in enumerate(block)))
        gamma.append(Cover(params.types[k], tuple(blocks)))
        offset += params.types[k].s
    return LegacyPublicKey(params, alpha, tuple(gamma)), LegacyPrivateKey(params, beta, tchain)


def legacy_encrypt_with(pk, x, R):
    params = pk.params
    if x.params != params.group:
        raise UsageError("message from {} encrypted under a key for {}".format(x.params, params.group))
    if any(x.values[:params.h]):
        raise DomainError("legacy messages must vanish on coordinates 1..{}".format(params.h))
    if len(R) != params.h or not all(0 <= r < params.q for r in R):
        raise DomainError("R={} must hold {} indices in [0, {})".format(R, params.h, params.q))
    return LegacyCiphertext(g_mul(cover_product(pk.alpha, R), x), cover_product(pk.gamma, R))


def legacy_encrypt(pk, x, rng):
    R = tuple(int(r) for r in rng.integers(0, pk.params.q, size=pk.params.h))
    return legacy_encrypt_with(pk, x, R)


def legacy_decrypt(pk, sk, ct):
    params = pk.params
    h = params.h
    t_last_inv = g_inv(sk.tchain[-1])
    y1, y2 = ct.y1, ct.y2
    for k in range(1, h + 1):
        d = g_product((sk.t(k, 0), y2, t_last_inv), params.group)
        d_star = g_mul(d, f_compress(y1))
        if any(d_star.values[:h + k - 1]):
            raise IntegrityError("round {}: D* has a non-zero coordinate below {}".format(k, h + k))
        r_k = ls_factorize(sk.beta[k - 1], d_star.coord(h + k))
        y1 = g_mul(g_inv(cover_evaluate(pk.alpha[k - 1], r_k)), y1)
        y2 = g_mul(g_inv(cover_evaluate(pk.gamma[k - 1], r_k)), y2)
    if not y2.is_identity() or any(y1.values[:h]):
        raise IntegrityError("ciphertext residual is inconsistent after {} rounds".format(h))
    return y1


def random_legacy_message(rng, group):
    h = group.l // 2
    values = rng.integers(0, group.spec.order, size=group.l - h)
    return GroupElement(group, (0,) * h + tuple(int(v) for v in values))


def legacy_instance(params, rng):
    r""" (pk, sk, x, R, ct) for a random key and message. """
    pk, sk = legacy_keygen(params, rng)
    x = random_legacy_message(rng, params.group)
    R = tuple(int(r) for r in rng.integers(0, params.q, size=params.h))
    return pk, sk, x, R, legacy_encrypt_with(pk, x, R)


def improved_instance(params, rng):
    r""" (pk, sk, x, R, ct) for the full-group scheme. """
    pk, sk = keygen(params, rng)
    x = g_random(rng, params.group)
    R = draw_keys(params, rng)
    return pk, sk, x, R, encrypt_with(pk, x, R)


def check_sequential_guard(q, l):
    if q * l > 1 << SEQUENTIAL_GUARD_BITS:
        raise GuardRefusal("sequential search over q*l = {} candidates exceeds 2^{}"
                           .format(q * l, SEQUENTIAL_GUARD_BITS))


def check_exhaustive_guard(q, l):
    if q ** l > 1 << EXHAUSTIVE_GUARD_BITS:
        raise GuardRefusal("exhaustive search over q^l = 2^{} keys exceeds 2^{}"
                           .format((q.bit_length() - 1) * l, EXHAUSTIVE_GUARD_BITS))


class _SequentialSearch:
    r"""
    Depth-first peeling of y1.  Level k scans candidates 0, 1, ... for R_k and keeps
    those whose cover value agrees with the peeled y1 on coordinate k; a full key is
    accepted only if it reproduces y2.  Cover values are memoised per (k, candidate),
    so the work never exceeds h*q evaluations.
    """

    def __init__(self, pk, ct):
        self.pk = pk
        self.ct = ct
        self.cache = [dict() for _ in range(pk.params.h)]
        self.matches = 0
        self.reached = [0] * pk.params.h

    def value(self, k, candidate):
        cached = self.cache[k]
        if candidate not in cached:
            cached[candidate] = cover_evaluate(self.pk.alpha[k], candidate)
        return cached[candidate]

    def run(self, k, y1, chosen):
        if k == self.pk.params.h:
            return cover_product(self.pk.gamma, chosen) == self.ct.y2
        target = y1.values[k]
        for candidate in range(self.pk.params.q):
            a = self.value(k, candidate)
            if a.values[k] != target:
                continue
            self.matches += 1
            if self.run(k + 1, g_mul(g_inv(a), y1), chosen + (candidate,)):
                self.reached[k] = candidate + 1
                return True
        return False

    @property
    def evaluations(self):
        return sum(len(c) for c in self.cache)


def attack_sequential_legacy(pk, ct):
    r"""
    Recover R from a legacy ciphertext with public data only.

    Raises
    ------
    GuardRefusal
        q*l above 2^16.
    IntegrityError
        No key reproduces the ciphertext.
    """
    params = pk.params
    check_sequential_guard(params.q, params.group.l)
    t1 = time.time()
    search = _SequentialSearch(pk, ct)
    if not search.run(0, ct.y1, ()):
        raise IntegrityError("no candidate key reproduces the ciphertext")
    # On success the scan of level k ended at the true R_k.
    recovered = tuple(r - 1 for r in search.reached)
    report = AttackReport(recovered_R=recovered, trials=sum(search.reached), matches=search.matches,
                          evaluations=search.evaluations, candidates=(recovered,),
                          elapsed=time.time() - t1, mode="sequential-legacy")
    logger.debug("suzuki_mst3 attack_sequential_legacy: R={} trials={} evaluations={}"
                 .format(recovered, report.trials, report.evaluations))
    return report


def sequential_isolation_count(pk, ct, x):
    r"""
    The legacy first-coordinate test applied to the full-group scheme with a known
    plaintext: count the candidates c for the first cover index such that
    coord_1(y1 x^-1) - coord_1(α_1(c)) is reachable as coord_1 of a product of the
    remaining covers.  In the legacy scheme the remaining covers vanish on coordinate
    1 and the test singles out few candidates; here most candidates survive.
    """
    params = pk.params
    q = params.q
    check_sequential_guard(q, params.l)
    t1 = time.time()
    target = g_mul(ct.y1, g_inv(x)).values[0]
    reachable = {0}
    evaluations = 0
    for cover in pk.alpha[1:]:
        if len(reachable) == q:
            break
        image = {cover_evaluate(cover, r).values[0] for r in range(q)}
        evaluations += q
        reachable = {s ^ v for s in reachable for v in image}
    candidates = tuple(c for c in range(q) if target ^ cover_evaluate(pk.alpha[0], c).values[0] in reachable)
    evaluations += q
    return AttackReport(recovered_R=candidates if len(candidates) == 1 else None, trials=q,
                        matches=len(candidates), evaluations=evaluations,
                        candidates=tuple((c,) for c in candidates), elapsed=time.time() - t1,
                        mode="sequential-improved")


def _component_target(pk, ct, component, x):
    if component == "y1":
        if x is None:
            raise UsageError("the y1 attack needs the known plaintext")
        return g_mul(ct.y1, g_inv(x))
    if component == "y2":
        return ct.y2
    if component == "y3":
        return ct.y3
    return (ct.y2, ct.y3)


def _cover_tables(pk, component):
    q = pk.params.q
    need_alpha = component in ("y1", "y3", "y23")
    need_gamma = component in ("y2", "y23")
    alpha = [[cover_evaluate(c, r) for r in range(q)] for c in pk.alpha] if need_alpha else None
    gamma = [[cover_evaluate(c, r) for r in range(q)] for c in pk.gamma] if need_gamma else None
    return alpha, gamma


def _scan(pk, component, target, alpha, gamma, first_values):
    r""" Enumerate every R whose first index lies in ``first_values``. """
    params = pk.params
    identity = g_identity(params.group)

    def product(table, R):
        out = identity
        for k, r in enumerate(R):
            out = g_mul(out, table[k][r])
        return out

    trials, found = 0, []
    for first in first_values:
        for rest in itertools.product(range(params.q), repeat=params.l - 1):
            R = (first,) + rest
            trials += 1
            if component == "y1":
                hit = product(alpha, apply_permutation(pk.pi, R)) == target
            elif component == "y2":
                hit = product(gamma, R) == target
            elif component == "y3":
                hit = product(alpha, R) == target
            else:
                hit = product(alpha, R) == target[1] and product(gamma, R) == target[0]
            if hit:
                found.append(R)
    return trials, found


def attack_exhaustive(pk, ct, component, x=None, processes=1):
    r"""
    Enumerate all q^l keys R and keep those reproducing ``component``.

    Parameters
    ----------
    component : str
        'y1' (needs the known plaintext ``x``), 'y2', 'y3', or 'y23' for y2 and y3 jointly.
    processes : int
        Split the range of R_1 over a multiprocessing pool when > 1.

    Raises
    ------
    GuardRefusal
        q^l above 2^20.
    """
    if component not in COMPONENTS:
        raise UsageError("component must be one of {}, got {!r}".format(", ".join(COMPONENTS), component))
    params = pk.params
    check_exhaustive_guard(params.q, params.l)
    t1 = time.time()
    target = _component_target(pk, ct, component, x)
    alpha, gamma = _cover_tables(pk, component)
    firsts = list(range(params.q))
    if processes > 1:
        slices = [firsts[i::processes] for i in range(processes)]
        with multiprocessing.Pool(processes) as pool:
            parts = pool.starmap(_scan, [(pk, component, target, alpha, gamma, s) for s in slices])
    else:
        parts = [_scan(pk, component, target, alpha, gamma, firsts)]
    trials = sum(p[0] for p in parts)
    candidates = tuple(sorted(R for p in parts for R in p[1]))
    if not candidates:
        raise IntegrityError("no key reproduces component {}".format(component))
    report = AttackReport(recovered_R=candidates[0] if len(candidates) == 1 else None, trials=trials,
                          matches=len(candidates), evaluations=trials, candidates=candidates,
                          elapsed=time.time() - t1, mode="exhaustive-{}".format(component))
    if len(candidates) > 1:
        report.notes.append("{} keys reproduce {}; not resolved".format(len(candidates), component))
    logger.debug("suzuki_mst3 attack_exhaustive: component={} trials={} matches={} completed in {:0.1f}s"
                 .format(component, trials, len(candidates), report.elapsed))
    return report


def attack_statistics(reports):
    r""" Mean/min/max trials and the ambiguity rate over a list of AttackReports. """
    trials = np.array([r.trials for r in reports], dtype=float)
    matches = np.array([r.matches for r in reports])
    return {
        "runs": len(reports),
        "mean_trials": float(np.mean(trials)),
        "min_trials": int(np.min(trials)),
        "max_trials": int(np.max(trials)),
        "ambiguous_fraction": float(np.mean(matches > 1)),
    }
