import json

import pytest

from boundarylink import catalog, cli, seifert


@pytest.fixture
def paths(tmp_path):
    out = {}
    for name in ("hopf", "whitehead", "borromean", "unlink2", "beta",
                 "trefoil-matrix", "wh-double-matrix"):
        p = tmp_path / f"{name}.json"
        p.write_text(catalog.raw_payload(name))
        out[name] = str(p)
    out["tmp"] = tmp_path
    return out


def test_validate_ok(paths, capsys):
    assert cli.main(["validate", paths["wh-double-matrix"]]) == 0
    assert "valid" in capsys.readouterr().out


def test_validate_invalid_matrix(tmp_path, capsys):
    bad = seifert.SeifertMatrix(1, (2,), ((0, 2), (0, 0)))
    p = tmp_path / "bad.json"
    p.write_text(bad.to_json())
    assert cli.main(["validate", str(p)]) == 2
    assert "violation" in capsys.readouterr().out


def test_validate_bad_json_is_usage_error(tmp_path, capsys):
    p = tmp_path / "garbage.json"
    p.write_text("{nope")
    assert cli.main(["validate", str(p)]) == 64


def test_missing_file_is_usage_error(tmp_path):
    assert cli.main(["validate", str(tmp_path / "absent.json")]) == 64


def test_unknown_subcommand_is_usage_error():
    assert cli.main(["frobnicate"]) == 64


def test_reduce_found_writes_moves(paths, capsys):
    out = str(paths["tmp"] / "moves.json")
    assert cli.main(["reduce", paths["wh-double-matrix"], "--out", out]) == 0
    moves = json.loads((paths["tmp"] / "moves.json").read_text())
    assert all(mv["move"] == "reduce" for mv in moves)


def test_reduce_exhausted(paths):
    assert cli.main(["reduce", paths["trefoil-matrix"]]) == 2


def test_reduce_budget_inconclusive(paths):
    assert cli.main(["reduce", paths["wh-double-matrix"], "--budget", "1"]) == 1


def test_goodbasis(paths, capsys):
    assert cli.main(["goodbasis", paths["wh-double-matrix"]]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ordering"] == [0, 1]
    assert cli.main(["goodbasis", paths["trefoil-matrix"]]) == 2


def test_replay_and_normalize(paths, capsys):
    out = str(paths["tmp"] / "red.json")
    assert cli.main(["reduce", paths["wh-double-matrix"], "--out", out]) == 0
    capsys.readouterr()
    assert cli.main(["replay", paths["wh-double-matrix"], out]) == 0
    assert "replayed" in capsys.readouterr().out
    norm = str(paths["tmp"] / "norm.json")
    assert cli.main(["normalize", paths["wh-double-matrix"], out,
                     "--out", norm]) == 0


def test_replay_mismatched_moves_fails(paths, capsys):
    out = str(paths["tmp"] / "red.json")
    assert cli.main(["reduce", paths["wh-double-matrix"], "--out", out]) == 0
    capsys.readouterr()
    # the trefoil matrix does not carry the reduction pattern
    assert cli.main(["replay", paths["trefoil-matrix"], out]) == 2
    assert "replay failed" in capsys.readouterr().out


def test_mu(paths, capsys):
    assert cli.main(["mu", paths["hopf"], "--index", "12"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"index": [1, 2], "value": 1, "indeterminacy": 0}
    assert cli.main(["mu", paths["whitehead"], "--index", "1,1,2,2",
                     "--depth", "4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(doc["value"]) == 1


def test_mu_bad_index_usage(paths):
    assert cli.main(["mu", paths["hopf"], "--index", "xy"]) == 64
    assert cli.main(["mu", paths["hopf"], "--index", "13"]) == 64


def test_ht(paths):
    assert cli.main(["ht", paths["whitehead"]]) == 0
    assert cli.main(["ht", paths["hopf"]]) == 2


def test_htplus(paths, capsys):
    assert cli.main(["htplus", paths["whitehead"], "--sublink", "1,2"]) == 0
    assert cli.main(["htplus", paths["hopf"], "--sublink", "1,2"]) == 2


def test_lbeta_certifies(paths, capsys):
    outdir = paths["tmp"] / "bundle"
    assert cli.main(["lbeta", paths["beta"], "--outdir", str(outdir)]) == 0
    cert = json.loads((outdir / "certificate.json").read_text())
    assert cert["verdict"] == "certified-freely-slice"
    assert (outdir / "matrix.json").exists()
    for name in ("a1", "a2", "b1", "b2"):
        assert (outdir / f"{name}.json").exists()


def test_certify_inconclusive_without_derived(paths, capsys):
    assert cli.main(["certify", paths["wh-double-matrix"]]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "inconclusive"


def test_certify_full_bundle(paths, capsys):
    outdir = paths["tmp"] / "bundle"
    assert cli.main(["lbeta", paths["beta"], "--outdir", str(outdir)]) == 0
    capsys.readouterr()
    derived = [f"{n}={outdir}/{n}.json" for n in ("a1", "a2", "b1", "b2")]
    cert_path = str(paths["tmp"] / "cert.json")
    assert cli.main(["certify", str(outdir / "matrix.json"),
                     "--derived", *derived, "--out", cert_path]) == 0
    doc = json.loads((paths["tmp"] / "cert.json").read_text())
    assert doc["verdict"] == "certified-freely-slice"


def test_catalog_list_and_export(paths, capsys):
    assert cli.main(["catalog", "list"]) == 0
    names = [line.split()[0] for line in capsys.readouterr().out.splitlines()]
    assert "whitehead" in names and "beta" in names
    out = str(paths["tmp"] / "export.json")
    assert cli.main(["catalog", "export", "hopf", "--out", out]) == 0
    assert json.loads((paths["tmp"] / "export.json").read_text())
    assert cli.main(["catalog", "export", "no-such-entry"]) == 64
    assert cli.main(["catalog", "export"]) == 64
