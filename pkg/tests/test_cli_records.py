import json

import pytest

from apcubes.cli import main
from apcubes.cubic import Certificate, CertificateKind
from apcubes.enumeration.vector import CoefficientVector
from apcubes.certificates import is_valid, revalidate, InvalidCertificate
from apcubes.records import decode, encode, read_log, revalidate_log, strip_timestamps


def test_encode_roundtrip():
    data = {"a": 10**40, "b": [1, -2, (3, 4)], "c": None, "d": "x"}
    assert decode(encode(data)) == {"a": 10**40, "b": [1, -2, [3, 4]], "c": None, "d": "x"}
    assert encode(10**40) == str(10**40)


def test_enumerate_writes_log_and_manifest(tmp_path, capsys):
    out = tmp_path / "e.jsonl"
    assert main(["enumerate", "--k", "5", "--i", "1", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "(6,1,9,4)" in text and "survivors (3)" in text
    recs = list(read_log(out))
    assert recs[0]["type"] == "header"
    assert sum(r["type"] == "elimination" for r in recs) == 21
    assert sum(r["type"] == "survivor" for r in recs) == 3
    manifest = json.loads((tmp_path / "e.jsonl.manifest.json").read_text())
    assert manifest["node_convention"] and manifest["totals"]["5,1"]["complete_vectors"] == "24"
    assert revalidate_log(out).ok


def test_rerun_is_identical_up_to_timestamps(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["enumerate", "--k", "6", "--i", "1", "--filters", "rank-zero,three-ones,bennett,sieve"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b), "--threads", "2"]) == 0
    la = strip_timestamps(a.read_text().splitlines())
    lb = strip_timestamps(b.read_text().splitlines())
    # header differs only through the file name of the manifest
    assert la[1:] == lb[1:]


def test_env_out_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("APCUBES_OUT_DIR", str(tmp_path))
    assert main(["enumerate", "--k", "5", "--i", "2", "--certificates", "none"]) == 0
    assert (tmp_path / "enumerate_k5_i2.jsonl").exists()


def test_tampered_log_fails_revalidation(tmp_path, capsys):
    out = tmp_path / "e.jsonl"
    main(["enumerate", "--k", "5", "--i", "3", "--out", str(out)])
    lines = out.read_text().splitlines()
    rec = json.loads(lines[1])
    rec["witness"]["D"] = "2"
    lines[1] = json.dumps(rec)
    out.write_text("\n".join(lines) + "\n")
    assert main(["revalidate", str(out)]) == 1
    assert "1 failures" in capsys.readouterr().out


def test_verify_theorem_small(tmp_path, capsys):
    out = tmp_path / "t.jsonl"
    assert main(["verify-theorem", "--ks", "5-7", "--out", str(out)]) == 0
    assert "8/8 solutions reproduced" in capsys.readouterr().out
    assert revalidate_log(out).ok


def test_usage_errors(capsys):
    assert main(["enumerate", "--k", "4", "--i", "1"]) == 2
    assert main(["enumerate", "--k", "5", "--i", "1", "--filters", "magic"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_identities_and_search(capsys):
    assert main(["identities"]) == 0
    assert main(["search", "--pair-cubics", "--height", "200"]) == 0
    assert "+-(1,2,1,-1) only" in capsys.readouterr().out
    assert main(["search", "--corollary", "--height", "30"]) == 0
    assert main(["search", "--k", "5", "--i", "1", "--n-min", "-50", "--n-max", "50", "--d-max", "5"]) == 0
    assert main(["report", "--ks", "5"]) == 0


def test_certificate_revalidation():
    v = CoefficientVector(5, 1, (1, 4, 1, 2))
    good = Certificate(CertificateKind.RANK_ZERO_LIST, {"triple": [0, 2, 3], "form": [-1, 12, -2], "D": 3})
    assert is_valid(v, good)
    bad = Certificate(CertificateKind.RANK_ZERO_LIST, {"triple": [0, 2, 4], "form": [-1, 12, -2], "D": 3})
    assert not is_valid(v, bad)
    with pytest.raises(InvalidCertificate):
        revalidate(CoefficientVector(5, 1, (1, 2, 1, 4)), Certificate(CertificateKind.MODULAR_SIEVE, {"modulus": 8}))
    untrusted = Certificate(CertificateKind.PAIR_OF_CUBICS, {"solutions": []})
    assert not is_valid(CoefficientVector(7, 3, (10, 3, 4, 18, 25, 4)), untrusted)
