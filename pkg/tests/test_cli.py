import json
import subprocess
import sys

import pytest

from phicyclic import serialize
from phicyclic.cli import main
from phicyclic.errors import ParseError
from phicyclic.ntru import encrypt, keygen, params_validate, sample_plain
from phicyclic.oracles import det_oracle
from phicyclic.rng import SeededStream


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_code_analyze(capsys):
    code, out, _ = run(capsys, "code", "analyze", "--q", "3", "--a", "1,0")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 4
    assert doc["divisors"] == ["1", "x + 1", "x + 2", "x^2 + 2"]
    code, out, _ = run(capsys, "code", "analyze", "--q", "2", "--a", "1,0,0")
    assert json.loads(out)["count"] == 4
    code, out, err = run(capsys, "code", "analyze", "--q", "2", "--a", "0,1")
    assert code != 0 and out == "" and "a_0 must be nonzero" in err


def test_code_analyze_extension_field(capsys):
    code, out, _ = run(capsys, "code", "analyze", "--q", "4", "--a", "1,0,0")
    assert code == 0 and json.loads(out)["count"] == 8


def test_worked_example_end_to_end(tmp_path, capsys):
    priv, pub, ct = tmp_path / "k.json", tmp_path / "k.pub.json", tmp_path / "ct.json"
    code, _, _ = run(capsys, "ntru", "keygen", "--n", "2", "--q", "29", "--p", "3", "--df", "0",
                     "--a", "1,0", "--seed", "0", "--out-priv", str(priv), "--out-pub", str(pub))
    assert code == 0
    assert json.loads(pub.read_text())["public"]["h"] == [25, 12]
    assert "private" not in json.loads(pub.read_text())
    assert json.loads(priv.read_text())["private"] == {"f": [1, 3], "g": [3, 0]}
    code, _, _ = run(capsys, "ntru", "encrypt", "--pub", str(pub), "--m", "[1,0]", "--r", "[0,1]", "--out", str(ct))
    assert code == 0 and json.loads(ct.read_text())["c"] == [13, 25]
    code, out, err = run(capsys, "ntru", "decrypt", "--priv", str(priv), "--ct", str(ct))
    doc = json.loads(out)
    assert code == 0 and err == ""
    assert doc["m"] == [1, 0] and doc["shape_ok"]
    assert doc["margin"] == {"centered": [1, 6], "max_abs": 6, "bound": 14.5}

    code, out, _ = run(capsys, "lattice", "check", "--key", str(priv), "--vector", "1,3,3,0")
    assert code == 0 and json.loads(out) == {"member": True}
    code, out, _ = run(capsys, "lattice", "check", "--key", str(pub), "--vector", "[1,0,0,0]")
    assert json.loads(out) == {"member": False}

    code, _, err = run(capsys, "ntru", "encrypt", "--pub", str(pub), "--m", "[1,1]", "--r", "[0,1]")
    assert code != 0 and "m has" in err


def test_wrong_key_is_flagged(tmp_path, capsys):
    params = params_validate(11, 127, 3, 4, [1] + [0] * 10)
    k1, k2 = keygen(params, SeededStream(1)), keygen(params, SeededStream(2))
    rng = SeededStream(3)
    ct = encrypt(k1.h, params, sample_plain(params, rng), sample_plain(params, rng))
    (tmp_path / "k2.json").write_text(serialize.dumps(serialize.private_key_doc(k2)))
    (tmp_path / "ct.json").write_text(serialize.dumps(serialize.ciphertext_doc(ct)))
    code, out, err = run(capsys, "ntru", "decrypt", "--priv", str(tmp_path / "k2.json"), "--ct", str(tmp_path / "ct.json"))
    assert code == 0
    assert json.loads(out)["shape_ok"] is False and "warning" in err


def test_keygen_rejects_bad_params(tmp_path, capsys):
    code, _, err = run(capsys, "ntru", "keygen", "--n", "11", "--q", "128", "--p", "2", "--df", "4",
                       "--seed", "1", "--out-priv", str(tmp_path / "a"), "--out-pub", str(tmp_path / "b"))
    assert code != 0 and "gcd" in err
    assert not (tmp_path / "a").exists()


def test_idealmat(capsys):
    code, out, _ = run(capsys, "idealmat", "--a", "1,0", "--f", "1,3", "--q", "29")
    doc = json.loads(out)
    assert doc["matrix"] == [[1, 3], [3, 1]]
    assert doc["det"] == det_oracle(doc["matrix"]) == -8
    assert doc["invertible_mod_q"] is True and doc["inverse_mod_q"] == [[18, 4], [4, 18]]
    code, out, _ = run(capsys, "idealmat", "--a", "1,0", "--f", "1,0")
    assert json.loads(out) == {"matrix": [[1, 0], [0, 1]], "det": 1}
    code, out, _ = run(capsys, "idealmat", "--a", "1,0", "--f", "1,1", "--q", "5")
    assert json.loads(out)["invertible_mod_q"] is False


def test_big_integers_are_strings(capsys):
    code, out, _ = run(capsys, "idealmat", "--a", "1,0,0", "--f", "100000,300000,700000")
    det = json.loads(out)["det"]
    assert isinstance(det, str) and int(det) == det_oracle([[100000, 700000, 300000],
                                                            [300000, 100000, 700000],
                                                            [700000, 300000, 100000]])


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "ntru", "decrypt", "--priv", str(bad), "--ct", str(bad))
    assert code == 1 and "invalid JSON" in err
    bad.write_text(json.dumps({"version": 2, "kind": "ntru-ciphertext"}))
    with pytest.raises(ParseError):
        serialize.read_ciphertext(bad.read_text())
    with pytest.raises(ParseError):
        serialize.read_ciphertext(json.dumps({"version": 1, "kind": "ntru-ciphertext", "n": 2, "q": 29, "c": [1, 29]}))
    code, _, err = run(capsys, "idealmat", "--a", "1,0", "--f", "1,x")
    assert code == 1 and "cannot parse" in err
    code, _, err = run(capsys, "lattice", "check", "--key", str(tmp_path / "missing"), "--vector", "1")
    assert code == 1 and "cannot read" in err


def test_tampered_private_key_rejected(tiny_params):
    kp = keygen(tiny_params, SeededStream(0))
    doc = serialize.private_key_doc(kp)
    doc["public"]["h"] = [24, 12]
    with pytest.raises(ParseError):
        serialize.read_key(serialize.dumps(doc))


def test_serialization_round_trip_100_keys():
    params_sets = [params_validate(11, 127, 3, d, a) for d in (1, 4)
                   for a in ([1] + [0] * 10, [1, 1] + [0] * 9, [3] + [0] * 9 + [1])]
    for i in range(100):
        params = params_sets[i % len(params_sets)]
        kp = keygen(params, SeededStream(i))
        text = serialize.dumps(serialize.private_key_doc(kp))
        p2, h2, kp2 = serialize.read_key(text)
        assert (p2, h2, kp2.f, kp2.g) == (params, list(kp.h), kp.f, kp.g)
        assert serialize.dumps(serialize.private_key_doc(kp2)) == text
        pub = serialize.dumps(serialize.public_key_doc(kp))
        assert serialize.read_key(pub)[2] is None
        rng = SeededStream(1000 + i)
        ct = encrypt(kp.h, params, sample_plain(params, rng), sample_plain(params, rng))
        ctext = serialize.dumps(serialize.ciphertext_doc(ct))
        assert serialize.read_ciphertext(ctext) == ct


def test_subprocess_determinism(tmp_path):
    outs = []
    for run_id in ("a", "b"):
        d = tmp_path / run_id
        d.mkdir()
        base = [sys.executable, "-m", "phicyclic"]
        subprocess.run(base + ["ntru", "keygen", "--n", "11", "--q", "127", "--p", "3", "--df", "4",
                               "--seed", "42", "--out-priv", str(d / "k"), "--out-pub", str(d / "p")], check=True)
        m = json.dumps(sample_plain(params_validate(11, 127, 3, 4, [1] + [0] * 10), SeededStream(5)))
        subprocess.run(base + ["ntru", "encrypt", "--pub", str(d / "p"), "--m", m, "--seed", "9",
                               "--out", str(d / "c")], check=True)
        outs.append([(d / name).read_bytes() for name in ("k", "p", "c")])
    assert outs[0] == outs[1]
    proc = subprocess.run([sys.executable, "-m", "phicyclic", "code", "analyze", "--q", "2", "--a", "0,1"],
                          capture_output=True, text=True)
    assert proc.returncode != 0 and proc.stdout == ""
