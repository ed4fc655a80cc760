"""JSON file formats for keys and ciphertexts (format version 1).

Integers whose magnitude exceeds 2^53 - 1 are written as decimal strings;
readers accept either form.  Vectors are ordered by coefficient index.
"""

from __future__ import annotations

import json

from .errors import ParseError, PhiCyclicError
from .ntru import Ciphertext, keypair_from_private, params_validate

VERSION = 1
SAFE_INT = 2**53 - 1


def _num(x):
    return str(x) if abs(x) > SAFE_INT else x


def _vec_out(v):
    return [_num(int(x)) for x in v]


def _int_in(x, what):
    if isinstance(x, bool):
        raise ParseError(f"{what}: expected an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x, 10)
        except ValueError:
            pass
    raise ParseError(f"{what}: expected an integer, got {x!r}")


def _vec_in(v, what):
    if not isinstance(v, list):
        raise ParseError(f"{what}: expected an array")
    return [_int_in(x, what) for x in v]


def dumps(doc):
    return json.dumps(doc, indent=2) + "\n"


def _params_doc(params):
    return {
        "n": params.n, "q": _num(params.q), "p": _num(params.p),
        "d_f": params.d_f, "a": _vec_out(params.a),
    }


def public_key_doc(keypair):
    return {
        "version": VERSION,
        "kind": "ntru-public-key",
        "params": _params_doc(keypair.params),
        "public": {"h": _vec_out(keypair.h)},
    }


def private_key_doc(keypair):
    doc = public_key_doc(keypair)
    doc["kind"] = "ntru-private-key"
    doc["private"] = {"f": _vec_out(keypair.f), "g": _vec_out(keypair.g)}
    return doc


def ciphertext_doc(ct):
    return {"version": VERSION, "kind": "ntru-ciphertext", "n": ct.n, "q": _num(ct.q), "c": _vec_out(ct.c)}


def _load(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("version") != VERSION:
        raise ParseError(f"unsupported format version {doc.get('version')!r}")
    return doc


def _params_in(doc):
    try:
        p = doc["params"]
        return params_validate(
            _int_in(p["n"], "n"), _int_in(p["q"], "q"), _int_in(p["p"], "p"),
            _int_in(p["d_f"], "d_f"), _vec_in(p["a"], "a"),
        )
    except KeyError as e:
        raise ParseError(f"missing field {e}") from None


def read_key(text):
    """Parse a key file; returns (params, h, keypair-or-None)."""
    doc = _load(text)
    kind = doc.get("kind")
    if kind not in ("ntru-public-key", "ntru-private-key"):
        raise ParseError(f"not a key file (kind = {kind!r})")
    params = _params_in(doc)
    try:
        h = _vec_in(doc["public"]["h"], "h")
    except (KeyError, TypeError):
        raise ParseError("missing public.h") from None
    if len(h) != params.n or any(not 0 <= x < params.q for x in h):
        raise ParseError("h must have n entries in [0, q)")
    if kind == "ntru-public-key":
        if "private" in doc:
            raise ParseError("public key file carries a private block")
        return params, h, None
    try:
        f = _vec_in(doc["private"]["f"], "f")
        g = _vec_in(doc["private"]["g"], "g")
    except (KeyError, TypeError):
        raise ParseError("missing private.f / private.g") from None
    try:
        kp = keypair_from_private(params, f, g)
    except PhiCyclicError as e:
        raise ParseError(f"inconsistent private key: {e}") from None
    if list(kp.h) != h:
        raise ParseError("stored h does not match the private key")
    return params, h, kp


def read_ciphertext(text):
    doc = _load(text)
    if doc.get("kind") != "ntru-ciphertext":
        raise ParseError(f"not a ciphertext file (kind = {doc.get('kind')!r})")
    try:
        n, q = _int_in(doc["n"], "n"), _int_in(doc["q"], "q")
        c = _vec_in(doc["c"], "c")
    except KeyError as e:
        raise ParseError(f"missing field {e}") from None
    if len(c) != n or any(not 0 <= x < q for x in c):
        raise ParseError("c must have n entries in [0, q)")
    return Ciphertext(tuple(c), n, q)
