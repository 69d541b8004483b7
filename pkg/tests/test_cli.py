from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from trimin.canon import is_isomorphic
from trimin.cli import main
from trimin.extremal import build_h_star
from trimin.graph import complete_multipartite
from trimin.graph6 import decode, encode


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_profile_json(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["profile", "--n", "6", "--e", "10"])
    assert code == 0
    assert json.loads(out) == {"n": 6, "e": 10, "k": 3, "a_star": [3, 2, 1], "m_star": 1,
                               "h_star": 3}


def test_profile_all_e_csv(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["profile", "--n", "5", "--all-e", "--format", "csv"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,e,k,a_star,m_star,h_star"
    assert len(lines) == 1 + 11
    assert lines[-2] == "5,9,4,2 1 1 1,0,7"
    code, out, _ = run(capsys, monkeypatch, ["profile", "--n", "4", "--all-e"])
    assert len(json.loads(out)) == 7


def test_construct_and_families(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["construct", "--n", "6", "--e", "10"])
    assert code == 0 and is_isomorphic(decode(out.strip()), build_h_star(6, 10))
    code, out, _ = run(capsys, monkeypatch, ["families", "--n", "6", "--e", "10", "--family", "h1star"])
    assert code == 0 and out.split() == ["EFzg"]


def test_member(capsys, monkeypatch):
    k5e = "D^{"
    code, out, _ = run(capsys, monkeypatch, ["member", "--family", "h2", "--e", "9"], k5e + "\n")
    doc = json.loads(out)
    assert code == 0 and doc["member"] is True
    assert sorted(len(p) for p in doc["witness"]) == [1, 1, 1, 2]
    code, out, err = run(capsys, monkeypatch, ["member", "--family", "h2", "--e", "8"], k5e + "\n")
    assert code == 1 and out == "" and "expected 8" in err


def test_curves(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["curves", "--lo", "0", "--hi", "1", "--steps", "3", "--format", "csv"])
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[2].split(",")[:2] == ["0.5", "0"]
    code, out, _ = run(capsys, monkeypatch, ["curves", "--steps", "5", "--format", "json"])
    assert len(json.loads(out)) == 5


def test_oracle_and_resume(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, monkeypatch, ["oracle", "--n", "5", "--e", "9"])
    assert code == 0 and out == '{"n":5,"e":9,"g3":7,"extremal":["D^{"]}\n'
    resume = tmp_path / "done.txt"
    code, out, err = run(capsys, monkeypatch, ["oracle", "--n", "4", "--resume", str(resume)])
    assert code == 0 and len(out.splitlines()) == 7
    assert resume.read_text().splitlines()[-1] == "4,6"
    code, out, err = run(capsys, monkeypatch, ["oracle", "--n", "4", "--resume", str(resume)])
    assert out == "" and err.count("skipping") == 7


def test_verify(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["verify", "--suite", "conjecture", "--n-max", "7"])
    assert code == 0 and out.strip() == "PASS 7/7 orders"
    assert "evidence" in err
    code, out, _ = run(capsys, monkeypatch,
                       ["verify", "--suite", "identities", "--n-max", "4", "--samples", "50"])
    assert code == 0 and out.startswith("PASS")


def test_analyze(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["analyze", "--k", "2", "--exact"], "C~\n")
    doc = json.loads(out)
    assert code == 0 and doc["cut_edges"] == 4 and doc["bad"] == 2


def test_symmetrise(capsys, monkeypatch, tmp_path):
    part = tmp_path / "parts.json"
    part.write_text("[[0, 1, 2], [3, 4, 5]]")
    # K_{3,3} plus the edge 01 on vertices 0..5
    g, _ = complete_multipartite([3, 3])
    g = g.add_edge(0, 1)
    code, out, _ = run(capsys, monkeypatch, ["symmetrise", "--partition", str(part)], encode(g) + "\n")
    assert code == 0 and is_isomorphic(decode(out.strip()), build_h_star(6, 10))
    part.write_text("{}")
    code, out, err = run(capsys, monkeypatch, ["symmetrise", "--partition", str(part)], encode(g) + "\n")
    assert code == 1 and "list of vertex lists" in err


def test_domain_and_usage_errors(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["profile", "--n", "4", "--e", "9"])
    assert code == 1 and out == "" and "outside" in err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["profile", "--n", "4", "--bogus"])
    assert exc.value.code == 2


def test_entry_point_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "trimin.cli", "curves", "--steps", "11"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"lambda,")
    cmd = [sys.executable, "-m", "trimin.cli", "analyze", "--k", "3", "--seed", "4"]
    runs = [subprocess.run(cmd, input=b"G~~~~{\n", capture_output=True, check=True).stdout
            for _ in range(2)]
    assert runs[0] == runs[1]
