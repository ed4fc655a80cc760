"""Command-line interface.

    phicyclic code analyze --q 3 --a 1,0
    phicyclic ntru keygen --n 11 --q 127 --p 3 --df 4 --seed 7 --out-priv k.json --out-pub k.pub.json
    phicyclic ntru encrypt --pub k.pub.json --m '[...]' --seed 9 --out ct.json
    phicyclic ntru decrypt --priv k.json --ct ct.json
    phicyclic lattice check --key k.json --vector '[...]'
    phicyclic idealmat --a 1,0 --f 1,3 --q 29

Results go to stdout as JSON; diagnostics go to stderr.  Exit status is 0
exactly when the operation succeeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .errors import ParseError, PhiCyclicError, TooLarge
from .field import field_from_order
from .idealmat import ideal_matrix, idealmat_det, idealmat_inverse_mod, int_phi_context
from .ntru import decrypt_detail, encrypt, is_plain, keygen, params_validate, sample_plain
from .phicode import enumerate_codes, min_distance, phi_context_make
from .qlattice import build_lattice, lat_member, public_lattice
from .rng import SeededStream


class CliError(Exception):
    pass


def parse_vector(text):
    """Accept '1,0,2' or a JSON array."""
    text = text.strip()
    try:
        if text.startswith("["):
            v = json.loads(text)
        else:
            v = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise ParseError(f"cannot parse vector {text!r}: {e}") from None
    if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, (int, str)) for x in v):
        raise ParseError(f"cannot parse vector {text!r}")
    return [int(x) for x in v]


def parse_seed(text):
    try:
        s = int(text, 10)
    except ValueError:
        raise ParseError(f"seed must be a decimal integer, got {text!r}") from None
    if not 0 <= s < 2**64:
        raise ParseError("seed must be an unsigned 64-bit integer")
    return s


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(doc):
    sys.stdout.write(serialize.dumps(doc))


def _poly_text(F, p):
    terms = []
    for i in range(p.degree, -1, -1):
        c = F.index(p.coeffs[i])
        if c == 0:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        terms.append(mono if (c == 1 and i > 0) else f"{c}{mono}")
    return " + ".join(terms) or "0"


def cmd_code_analyze(args):
    F = field_from_order(args.q)
    a = parse_vector(args.a)
    if any(not 0 <= x < F.order for x in a):
        raise CliError(f"a entries must be element indices in [0, {F.order})")
    if a and a[0] == 0:
        raise CliError("a_0 must be nonzero")
    ctx = phi_context_make(F, [F.from_index(x) for x in a])
    codes = enumerate_codes(ctx, bound=args.bound)
    rows = []
    for code in codes:
        try:
            dist = min_distance(code, bound=args.bound) if code.k else None
        except TooLarge:
            dist = None
        rows.append({
            "g": _poly_text(F, code.g),
            "g_coeffs": [F.index(c) for c in code.g.coeffs],
            "k": code.k,
            "parity_source": code.parity_source,
            "min_distance": dist,
        })
    _emit({
        "field_order": F.order,
        "phi": _poly_text(F, ctx.phi),
        "count": len(codes),
        "divisors": [r["g"] for r in rows],
        "codes": rows,
    })


def cmd_ntru_keygen(args):
    a = parse_vector(args.a) if args.a else [1] + [0] * (args.n - 1)
    params = params_validate(args.n, args.q, args.p, args.df, a)
    kp = keygen(params, SeededStream(parse_seed(args.seed)))
    _write(args.out_priv, serialize.dumps(serialize.private_key_doc(kp)))
    _write(args.out_pub, serialize.dumps(serialize.public_key_doc(kp)))


def cmd_ntru_encrypt(args):
    params, h, _ = serialize.read_key(_read(args.pub))
    m = parse_vector(args.m)
    if args.r is not None:
        r = parse_vector(args.r)
    elif args.seed is not None:
        r = sample_plain(params, SeededStream(parse_seed(args.seed)))
    else:
        raise CliError("give --r or --seed")
    ct = encrypt(h, params, m, r)
    _write(args.out, serialize.dumps(serialize.ciphertext_doc(ct)))


def cmd_ntru_decrypt(args):
    params, _, kp = serialize.read_key(_read(args.priv))
    if kp is None:
        raise CliError("decryption needs a private key file")
    ct = serialize.read_ciphertext(_read(args.ct))
    if (ct.n, ct.q) != (params.n, params.q):
        raise CliError("ciphertext parameters do not match the key")
    m, centred = decrypt_detail(kp, ct)
    ok = is_plain(params, m)
    if not ok:
        print("warning: decrypted vector has the wrong support counts; "
              "wrong key or corrupted ciphertext", file=sys.stderr)
    _emit({
        "m": list(m),
        "shape_ok": ok,
        "margin": {"centered": list(centred), "max_abs": max(abs(x) for x in centred), "bound": params.q / 2},
    })


def cmd_lattice_check(args):
    params, h, kp = serialize.read_key(_read(args.key))
    if kp is not None:
        lat = build_lattice(params.ctx, list(kp.f), list(kp.g), params.q)
    else:
        lat = public_lattice(params.ctx, h, params.q)
    y = parse_vector(args.vector)
    _emit({"member": lat_member(lat, y)})


def cmd_idealmat(args):
    ctx = int_phi_context(parse_vector(args.a))
    M = ideal_matrix(ctx, parse_vector(args.f))
    out = {"matrix": [[serialize._num(x) for x in row] for row in M.M],
           "det": serialize._num(idealmat_det(ctx, list(M.f)))}
    if args.q is not None:
        try:
            K = idealmat_inverse_mod(ctx, list(M.f), args.q)
        except PhiCyclicError:
            out["invertible_mod_q"], out["inverse_mod_q"] = False, None
        else:
            out["invertible_mod_q"], out["inverse_mod_q"] = True, K
    _emit(out)


def build_parser():
    ap = argparse.ArgumentParser(prog="phicyclic", description="phi-cyclic codes, ideal matrices and generalized NTRU")
    sub = ap.add_subparsers(dest="group", required=True)

    code = sub.add_parser("code").add_subparsers(dest="action", required=True)
    an = code.add_parser("analyze", help="list every phi-cyclic code for a given a-vector")
    an.add_argument("--q", type=int, required=True, help="field order (prime power)")
    an.add_argument("--a", required=True, help="a_0,...,a_{n-1} as element indices")
    an.add_argument("--bound", type=int, default=10**6, help="exhaustive-search bound")
    an.set_defaults(func=cmd_code_analyze)

    ntru = sub.add_parser("ntru").add_subparsers(dest="action", required=True)
    kg = ntru.add_parser("keygen")
    kg.add_argument("--n", type=int, required=True)
    kg.add_argument("--q", type=int, required=True)
    kg.add_argument("--p", type=int, required=True)
    kg.add_argument("--df", type=int, required=True)
    kg.add_argument("--a", help="a-vector; default 1,0,...,0 (phi = x^n - 1)")
    kg.add_argument("--seed", required=True)
    kg.add_argument("--out-priv", required=True)
    kg.add_argument("--out-pub", required=True)
    kg.set_defaults(func=cmd_ntru_keygen)

    en = ntru.add_parser("encrypt")
    en.add_argument("--pub", required=True)
    en.add_argument("--m", required=True)
    en.add_argument("--r")
    en.add_argument("--seed")
    en.add_argument("--out", default="-")
    en.set_defaults(func=cmd_ntru_encrypt)

    de = ntru.add_parser("decrypt")
    de.add_argument("--priv", required=True)
    de.add_argument("--ct", required=True)
    de.set_defaults(func=cmd_ntru_decrypt)

    lat = sub.add_parser("lattice").add_subparsers(dest="action", required=True)
    ch = lat.add_parser("check")
    ch.add_argument("--key", required=True)
    ch.add_argument("--vector", required=True)
    ch.set_defaults(func=cmd_lattice_check)

    im = sub.add_parser("idealmat")
    im.add_argument("--a", required=True)
    im.add_argument("--f", required=True)
    im.add_argument("--q", type=int)
    im.set_defaults(func=cmd_idealmat)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CliError, PhiCyclicError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
