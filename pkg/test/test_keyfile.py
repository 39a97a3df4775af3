r""" Tests for key and ciphertext files """

import numpy as np
import pytest

from datafiles import TEMPDIR
from suzuki_mst3.errors import ParseError
from suzuki_mst3.group import g_random
from suzuki_mst3.keyfile import (Header, format_ciphertext, format_private_key, format_public_key,
                                 parse_ciphertext, parse_private_key, parse_public_key, read_ciphertext,
                                 read_private_key, read_public_key, write_ciphertext, write_private_key,
                                 write_public_key)
from suzuki_mst3.mst3 import SchemeParams, decrypt, encrypt, keygen


def test_rewrite_is_byte_identical():
    params = SchemeParams.build(7, 4)
    rng = np.random.default_rng(31)
    for _ in range(100):
        pk, sk = keygen(params, rng)
        ct = encrypt(pk, g_random(rng, params.group), rng)
        pub_text, priv_text, ct_text = format_public_key(pk), format_private_key(sk), format_ciphertext(ct)
        assert format_public_key(parse_public_key(pub_text)) == pub_text
        assert format_private_key(parse_private_key(priv_text)) == priv_text
        assert format_ciphertext(parse_ciphertext(ct_text, params)) == ct_text


def test_files_on_disk():
    params = SchemeParams.build(5, 3, "4,8;8,4;4,8")
    rng = np.random.default_rng(32)
    pk, sk = keygen(params, rng)
    x = g_random(rng, params.group)
    write_public_key(TEMPDIR + "kf.pub", pk)
    write_private_key(TEMPDIR + "kf.priv", sk)
    write_ciphertext(TEMPDIR + "kf.ct", encrypt(pk, x, rng))
    pk2, sk2 = read_public_key(TEMPDIR + "kf.pub"), read_private_key(TEMPDIR + "kf.priv")
    assert (pk2, sk2) == (pk, sk)
    assert decrypt(pk2, sk2, read_ciphertext(TEMPDIR + "kf.ct", pk2.params)) == x


def test_public_key_layout():
    params = SchemeParams.build(7, 4)
    pk, _ = keygen(params, np.random.default_rng(33), pi=(2, 0, 1, 3))
    lines = format_public_key(pk).splitlines()
    assert lines[:5] == ["SUZUKI-MST3 PUBLIC v1", "n=7", "l=4", "poly=83", "pi=3,1,2,4"]
    assert lines[5] == "type[1]={}".format(params.types[0])
    assert lines[9] == "[alpha 1]"
    assert "[gamma 4]" in lines


def test_parse_errors_name_the_line():
    params = SchemeParams.build(4, 4)
    rng = np.random.default_rng(34)
    pk, sk = keygen(params, rng)
    lines = format_public_key(pk).splitlines()
    row = next(i for i, line in enumerate(lines) if line.startswith("S("))
    lines[row] = "S(z,0,0,0)"
    with pytest.raises(ParseError) as err:
        parse_public_key("\n".join(lines) + "\n")
    assert err.value.line == row + 1

    with pytest.raises(ParseError) as err:
        parse_public_key(format_private_key(sk))
    assert err.value.line == 1

    text = format_private_key(sk).replace("pi=", "pi=9,")
    with pytest.raises(ParseError, match="pi"):
        parse_private_key(text)

    text = format_public_key(pk).replace("[gamma 2]", "[delta 2]")
    with pytest.raises(ParseError, match="unknown section"):
        parse_public_key(text)

    text = format_public_key(pk).replace("type[2]=4,4", "type[2]=2,8")
    with pytest.raises(ParseError):
        parse_public_key(text)


def test_alpha_entries_need_full_support():
    params = SchemeParams.build(4, 4)
    pk, _ = keygen(params, np.random.default_rng(36))
    lines = format_public_key(pk).splitlines()
    row = lines.index("[alpha 2]") + 2
    lines[row] = "S(0," + lines[row].split(",", 1)[1]
    with pytest.raises(ParseError, match=r"\[alpha 2\] cover block 1 row 0"):
        parse_public_key("\n".join(lines) + "\n")


def test_private_key_sections():
    params = SchemeParams.build(4, 4)
    _, sk = keygen(params, np.random.default_rng(35))
    text = format_private_key(sk)
    assert "[beta 4]" in text and "[tchain]" in text
    short = text.rstrip("\n").rsplit("\n", 1)[0] + "\n"
    with pytest.raises(ParseError, match="tchain"):
        parse_private_key(short)
    with pytest.raises(ParseError, match="beta 3"):
        parse_private_key(text.replace("[beta 3]", "[beta 5]"))


def test_ciphertext_errors():
    params = SchemeParams.build(4, 4)
    with pytest.raises(ParseError, match="y3"):
        parse_ciphertext("y1=S(0,0,0,0)\ny2=S(0,0,0,0)\n", params)
    with pytest.raises(ParseError, match="line 2"):
        parse_ciphertext("y1=S(0,0,0,0)\ny9=S(0,0,0,0)\n", params)
    with pytest.raises(ParseError, match="duplicate"):
        parse_ciphertext("y1=S(0,0,0,0)\ny1=S(0,0,0,0)\n", params)


def test_header():
    header = Header()
    header.record("n", "7", 2)
    assert header.n == "7"
    assert header.lines["n"] == 2
    assert header.missing is None
    with pytest.raises(ParseError, match="line 3"):
        header.record("n", "8", 3)
    with pytest.raises(ParseError):
        header.require("poly")
    header.record("l", "four", 4)
    with pytest.raises(ParseError, match="line 4"):
        header.require_int("l")
