r"""
Line-oriented text files for keys and ciphertexts.

Key file::

    SUZUKI-MST3 PUBLIC v1
    n=7
    l=4
    poly=83
    pi=3,1,2,4
    type[1]=4,4,8
    ...
    [alpha 1]
    type=4,4,8
    S(..,..,..,..)
    --
    ...
    [gamma 1]
    ...

A private key carries ``[beta k]`` sections (one field element per row) and a single
``[tchain]`` section instead.  Ciphertext files hold ``y1=S(...)``, ``y2=`` and ``y3=``.
Everything is written with a trailing newline; files written by this module read back
into equal objects and write out byte-identically.
"""

import logging
import re

from .errors import ConfigurationError, IntegrityError, ParseError
from .field import FieldSpec
from .group import GroupParams, format_group_element, parse_group_element
from .logsig import SignatureType, check_cover, format_cover, format_signature, parse_cover, parse_signature
from .mst3 import Ciphertext, PrivateKey, PublicKey, SchemeParams

LOGGER_NAME = 'suzuki_mst3'
logger = logging.getLogger(LOGGER_NAME)

MAGIC = "SUZUKI-MST3"
FORMAT_VERSION = "v1"
PUBLIC, PRIVATE = "PUBLIC", "PRIVATE"
SECTION_PATTERN = re.compile(r"^\[(alpha|gamma|beta) (\d+)\]$|^\[(tchain)\]$")
TYPE_KEY_PATTERN = re.compile(r"^type\[(\d+)\]$")


class Header(dict):
    r"""
    The ``key=value`` lines of a key file.  Entries are reachable as attributes,
    h.n == h['n'], and remember the line they came from.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.__dict__["lines"] = {}

    def __getattr__(self, attr):
        return self.get(attr)

    def __setattr__(self, key, value):
        self[key] = value

    def record(self, key, value, line):
        if key in self:
            raise ParseError("duplicate header key {!r}".format(key), line)
        self[key] = value
        self.lines[key] = line

    def require(self, key):
        if key not in self:
            raise ParseError("missing header key {!r}".format(key))
        return self[key]

    def require_int(self, key, base=10):
        try:
            return int(self.require(key), base)
        except ValueError:
            raise ParseError("header key {!r} is not an integer".format(key), self.lines[key]) from None


def _header_lines(kind, params, pi):
    spec = params.group.spec
    lines = ["{} {} {}".format(MAGIC, kind, FORMAT_VERSION),
             "n={}".format(spec.n),
             "l={}".format(params.l),
             "poly={:x}".format(spec.modulus),
             "pi={}".format(",".join(str(p + 1) for p in pi))]
    lines.extend("type[{}]={}".format(k + 1, t) for k, t in enumerate(params.types))
    return lines


def format_public_key(pk):
    lines = _header_lines(PUBLIC, pk.params, pk.pi)
    for name, covers in (("alpha", pk.alpha), ("gamma", pk.gamma)):
        for k, cover in enumerate(covers):
            lines.append("[{} {}]".format(name, k + 1))
            lines.extend(format_cover(cover))
    return "\n".join(lines) + "\n"


def format_private_key(sk):
    lines = _header_lines(PRIVATE, sk.params, sk.pi)
    for k, ls in enumerate(sk.beta):
        lines.append("[beta {}]".format(k + 1))
        lines.extend(format_signature(ls))
    lines.append("[tchain]")
    lines.extend(format_group_element(t) for t in sk.tchain)
    return "\n".join(lines) + "\n"


def format_ciphertext(ct):
    return "".join("{}={}\n".format(name, format_group_element(y))
                   for name, y in (("y1", ct.y1), ("y2", ct.y2), ("y3", ct.y3)))


def _split(text, kind):
    r""" (Header, {section: (first line number, lines)}) """
    lines = text.splitlines()
    if not lines or lines[0].strip() != "{} {} {}".format(MAGIC, kind, FORMAT_VERSION):
        raise ParseError("expected '{} {} {}'".format(MAGIC, kind, FORMAT_VERSION), 1)
    header, sections, current = Header(), {}, None
    for number, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("["):
            match = SECTION_PATTERN.match(line)
            if not match:
                raise ParseError("unknown section {!r}".format(line), number)
            current = (match.group(1), int(match.group(2))) if match.group(1) else (match.group(3), 0)
            if current in sections:
                raise ParseError("duplicate section {!r}".format(line), number)
            sections[current] = (number + 1, [])
        elif current is None:
            if "=" not in line:
                raise ParseError("expected key=value, got {!r}".format(line), number)
            key, value = line.split("=", 1)
            header.record(key.strip(), value.strip(), number)
        else:
            sections[current][1].append(line)
    return header, sections


def _params_from_header(header):
    n, l = header.require_int("n"), header.require_int("l")
    modulus = header.require_int("poly", 16)
    types = {}
    for key, value in header.items():
        match = TYPE_KEY_PATTERN.match(key)
        if match:
            types[int(match.group(1))] = (value, header.lines[key])
    if sorted(types) != list(range(1, l + 1)):
        raise ParseError("need type[1]..type[{}] header lines".format(l))
    try:
        parsed = []
        for k in range(1, l + 1):
            value, line = types[k]
            try:
                parsed.append(SignatureType.from_string(value))
            except ConfigurationError as err:
                raise ParseError(str(err), line) from None
        params = SchemeParams(GroupParams(FieldSpec(n, modulus), l), tuple(parsed))
    except ConfigurationError as err:
        raise ParseError(str(err)) from None
    try:
        pi = tuple(int(p) - 1 for p in header.require("pi").split(","))
    except ValueError:
        raise ParseError("pi is not a comma-separated index list", header.lines["pi"]) from None
    if sorted(pi) != list(range(l)):
        raise ParseError("pi is not a permutation of 1..{}".format(l), header.lines["pi"])
    return params, pi


def _section(sections, name, k=0):
    try:
        return sections[(name, k)]
    except KeyError:
        raise ParseError("missing section [{}]".format("{} {}".format(name, k) if k else name)) from None


def _check_type(found, params, k, first_line):
    if found.sig_type != params.types[k - 1]:
        raise ParseError("section type {} differs from type[{}]={}".format(found.sig_type, k, params.types[k - 1]),
                         first_line)


def parse_public_key(text):
    header, sections = _split(text, PUBLIC)
    params, pi = _params_from_header(header)
    covers = {}
    for name in ("alpha", "gamma"):
        covers[name] = []
        for k in range(1, params.l + 1):
            first, lines = _section(sections, name, k)
            cover = parse_cover(lines, params.group, first)
            _check_type(cover, params, k, first)
            if name == "alpha":
                try:
                    check_cover(cover)
                except IntegrityError as err:
                    raise ParseError("[alpha {}] {}".format(k, err), first) from None
            covers[name].append(cover)
    return PublicKey(params, tuple(covers["alpha"]), tuple(covers["gamma"]), pi)


def parse_private_key(text):
    header, sections = _split(text, PRIVATE)
    params, pi = _params_from_header(header)
    beta = []
    for k in range(1, params.l + 1):
        first, lines = _section(sections, "beta", k)
        ls = parse_signature(lines, params.group.spec, k, first)
        _check_type(ls, params, k, first)
        beta.append(ls)
    first, lines = _section(sections, "tchain")
    if len(lines) != params.chain_length():
        raise ParseError("[tchain] needs {} elements, got {}".format(params.chain_length(), len(lines)), first)
    tchain = tuple(parse_group_element(text, params.group, first + i) for i, text in enumerate(lines))
    return PrivateKey(params, tuple(beta), tchain, pi)


def parse_ciphertext(text, params):
    r""" Parse a ciphertext file against the group of the key it was made with. """
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep or key not in ("y1", "y2", "y3"):
            raise ParseError("expected y1=, y2= or y3=, got {!r}".format(line), number)
        if key in values:
            raise ParseError("duplicate {}".format(key), number)
        values[key] = parse_group_element(value, params.group, number)
    missing = [k for k in ("y1", "y2", "y3") if k not in values]
    if missing:
        raise ParseError("ciphertext is missing {}".format(", ".join(missing)))
    return Ciphertext(values["y1"], values["y2"], values["y3"])


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)
    logger.debug("suzuki_mst3 keyfile: wrote {}".format(path))


def _read(path):
    with open(path, "r") as fh:
        return fh.read()


def write_public_key(path, pk):
    _write(path, format_public_key(pk))


def write_private_key(path, sk):
    _write(path, format_private_key(sk))


def write_ciphertext(path, ct):
    _write(path, format_ciphertext(ct))


def read_public_key(path):
    return parse_public_key(_read(path))


def read_private_key(path):
    return parse_private_key(_read(path))


def read_ciphertext(path, params):
    return parse_ciphertext(_read(path), params)
