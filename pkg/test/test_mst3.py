r""" Tests for key generation, encryption and decryption of the full-group scheme """

import numpy as np
import pytest

from suzuki_mst3.errors import ConfigurationError, DomainError, IntegrityError, UsageError
from suzuki_mst3.group import GroupElement, embed, g_inv, g_mul, g_product, g_random
from suzuki_mst3.logsig import check_cover, cover_evaluate, is_tame, ls_evaluate, mixed_radix_decompose
from suzuki_mst3.mst3 import (Ciphertext, SchemeParams, apply_permutation, cover_product, decrypt, draw_keys,
                              encrypt, encrypt_with, keygen)


def round_trips(n, l, keys, messages, seed):
    params = SchemeParams.build(n, l)
    rng = np.random.default_rng(seed)
    for _ in range(keys):
        pk, sk = keygen(params, rng)
        for _ in range(messages):
            x = g_random(rng, params.group)
            assert decrypt(pk, sk, encrypt(pk, x, rng)) == x


def test_round_trip_7_4():
    round_trips(7, 4, 100, 10, 42)


def test_round_trip_4_4():
    round_trips(4, 4, 100, 10, 1)


def test_round_trip_10_4():
    round_trips(10, 4, 100, 10, 2)


def test_round_trip_8_6():
    round_trips(8, 6, 100, 10, 3)


def test_round_trip_2_2():
    round_trips(2, 2, 100, 10, 9)


def test_round_trip_other_sizes():
    round_trips(5, 2, 20, 5, 4)
    round_trips(6, 3, 20, 5, 5)


def test_explicit_types():
    params = SchemeParams.build(7, 4, "4,4,8;8,4,4;4,8,4;4,4,8")
    assert [str(t) for t in params.types] == ["4,4,8", "8,4,4", "4,8,4", "4,4,8"]
    rng = np.random.default_rng(8)
    pk, sk = keygen(params, rng, pi=(2, 0, 1, 3))
    assert pk.pi == (2, 0, 1, 3)
    x = g_random(rng, params.group)
    assert decrypt(pk, sk, encrypt(pk, x, rng)) == x
    with pytest.raises(ConfigurationError):
        SchemeParams.build(7, 4, "4,4,8;8,4,4")
    with pytest.raises(ConfigurationError):
        SchemeParams.build(7, 2, "4,4,8;4,4,4")
    with pytest.raises(ConfigurationError):
        keygen(params, rng, pi=(0, 0, 1, 2))


def test_key_structure():
    params = SchemeParams.build(7, 4)
    pk, sk = keygen(params, np.random.default_rng(12))
    assert len(sk.tchain) == 1 + sum(t.s for t in params.types)
    assert sk.t(2, 0) == sk.tchain[params.types[0].s]
    for k in range(params.l):
        assert is_tame(sk.beta[k])
        assert sk.beta[k].coordinate == k + 1
        check_cover(pk.alpha[k])
    for t in sk.tchain:
        assert all(t.values)


def test_gamma_entries_unwrap_to_alpha_and_beta():
    params = SchemeParams.build(7, 4)
    pk, sk = keygen(params, np.random.default_rng(20))
    group = params.group
    for k in range(1, params.l + 1):
        alpha, gamma, beta = pk.alpha[k - 1], pk.gamma[k - 1], sk.beta[k - 1]
        for i, block in enumerate(gamma.blocks):
            for j, entry in enumerate(block):
                unwrapped = g_product((sk.t(k, i), entry, g_inv(sk.t(k, i + 1))), group)
                assert unwrapped == g_mul(alpha.blocks[i][j], embed(group, k, beta.blocks[i][j]))


def test_gamma_products_telescope():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(21)
    pk, sk = keygen(params, rng)
    group = params.group
    for k in range(1, params.l + 1):
        sig_type = params.types[k - 1]
        alpha, beta = pk.alpha[k - 1], sk.beta[k - 1]
        for R in rng.integers(0, params.q, size=20):
            indices = mixed_radix_decompose(int(R), sig_type)
            middle = [g_mul(alpha.blocks[i][j], embed(group, k, beta.blocks[i][j])) for i, j in enumerate(indices)]
            expected = g_product([g_inv(sk.t(k, 0))] + middle + [sk.t(k, sig_type.s)], group)
            assert cover_evaluate(pk.gamma[k - 1], int(R)) == expected


def test_first_coordinate_of_y1():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(22)
    pk, _ = keygen(params, rng)
    for _ in range(100):
        x = g_random(rng, params.group)
        R = draw_keys(params, rng)
        expected = x.values[0]
        for cover, r in zip(pk.alpha, apply_permutation(pk.pi, R)):
            expected ^= cover_evaluate(cover, r).values[0]
        assert encrypt_with(pk, x, R).y1.values[0] == expected


def test_keys_are_coupled():
    params = SchemeParams.build(4, 4)
    rng = np.random.default_rng(23)
    trials, coupled = 200, 0
    for trial in range(trials):
        if trial % 20 == 0:
            pk, _ = keygen(params, rng)
        x = g_random(rng, params.group)
        R = draw_keys(params, rng)
        k = int(rng.integers(0, params.l))
        changed = list(R)
        changed[k] = (R[k] + int(rng.integers(1, params.q))) % params.q
        a, b = encrypt_with(pk, x, R), encrypt_with(pk, x, tuple(changed))
        coupled += a.y2 != b.y2 and a.y3 != b.y3
    assert coupled >= 198


def test_decryption_readouts():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(13)
    for _ in range(100):
        pk, sk = keygen(params, rng)
        for _ in range(10):
            x = g_random(rng, params.group)
            R = draw_keys(params, rng)
            readouts = []
            assert decrypt(pk, sk, encrypt_with(pk, x, R), readouts=readouts) == x
            assert [r.k for r in readouts] == [1, 2, 3, 4]
            for readout in readouts:
                k = readout.k
                assert not any(readout.d_star.values[:k - 1])
                assert readout.value == ls_evaluate(sk.beta[k - 1], R[k - 1])
                assert readout.R == R[k - 1]


def test_ciphertext_components():
    params = SchemeParams.build(4, 3)
    rng = np.random.default_rng(14)
    pk, _ = keygen(params, rng)
    x = g_random(rng, params.group)
    R = (3, 9, 15)
    ct = encrypt_with(pk, x, R)
    assert ct.y1 == g_mul(cover_product(pk.alpha, apply_permutation(pk.pi, R)), x)
    assert ct.y2 == cover_product(pk.gamma, R)
    assert ct.y3 == cover_product(pk.alpha, R)
    assert ct.bit_length == 3 * 3 * 4


def test_seeded_keygen_is_deterministic():
    params = SchemeParams.build(7, 4)
    assert keygen(params, np.random.default_rng(99)) == keygen(params, np.random.default_rng(99))
    assert keygen(params, np.random.default_rng(99)) != keygen(params, np.random.default_rng(100))


def test_tampering_is_detected():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(15)
    pk, sk = keygen(params, rng)
    detected = 0
    for _ in range(100):
        x = g_random(rng, params.group)
        ct = encrypt(pk, x, rng)
        k = int(rng.integers(1, params.l + 1))
        delta = embed(params.group, k, int(rng.integers(1, params.q)))
        tampered = Ciphertext(ct.y1, GroupElement(params.group, tuple(
            a ^ b for a, b in zip(ct.y2.values, delta.values))), ct.y3)
        try:
            decrypt(pk, sk, tampered)
        except IntegrityError:
            detected += 1
    assert detected >= 99


def test_central_tamper_of_y2():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(16)
    pk, sk = keygen(params, rng)
    ct = encrypt(pk, g_random(rng, params.group), rng)
    z = embed(params.group, params.l, 1)
    with pytest.raises(IntegrityError):
        decrypt(pk, sk, Ciphertext(ct.y1, g_mul(ct.y2, z), ct.y3))


def test_wrong_private_key():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(17)
    pk, _ = keygen(params, rng)
    _, other = keygen(params, rng, pi=pk.pi)
    for _ in range(20):
        ct = encrypt(pk, g_random(rng, params.group), rng)
        with pytest.raises(IntegrityError):
            decrypt(pk, other, ct)


def test_private_key_with_another_permutation():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(19)
    pk, _ = keygen(params, rng)
    _, other = keygen(params, rng, pi=pk.pi[1:] + pk.pi[:1])
    ct = encrypt(pk, g_random(rng, params.group), rng)
    with pytest.raises(IntegrityError, match="do not belong together"):
        decrypt(pk, other, ct)


def test_argument_errors():
    params = SchemeParams.build(4, 4)
    rng = np.random.default_rng(18)
    pk, _ = keygen(params, rng)
    x = g_random(rng, params.group)
    with pytest.raises(DomainError):
        encrypt_with(pk, x, (0, 0, 0, 16))
    with pytest.raises(DomainError):
        encrypt_with(pk, x, (0, 0, 0))
    with pytest.raises(UsageError):
        encrypt(pk, g_random(rng, SchemeParams.build(5, 4).group), rng)
    small = SchemeParams.build(4, 3)
    _, sk3 = keygen(small, rng)
    with pytest.raises(UsageError):
        decrypt(pk, sk3, encrypt(pk, x, rng))
