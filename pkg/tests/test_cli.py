import json
import re
import subprocess
import sys

import pytest

from linftykan.cli import main, run
from linftykan.cli.corpus import build_corpus, bundled_corpus, dump_json, write_corpus

NUMBER = re.compile(r"(?<![A-Za-z_\-])\d")
TAG = re.compile(r"\[(exact|quadrature\(order=\d+\))\]")

COMMANDS = [
    "linf check str-su2", "linf check jacobi-counterexample", "linf mc su2", "linf homology str-su2",
    "linf nilpotent h3", "intl validate h3-mc-example", "homot les --algebra str-su2 --up-to 3",
    "homot tvf --algebra str-su2 --n 2", "homot tvf --algebra end-1-sqrt2 --n 2",
    "simpset kan k-z2-1", "simpset kan delta-1", "simpset pi k-z2-1 --n 1",
    "simpset nerve2 two-group-z2-twisted --N 3", "simpset collapse horn-2-1",
    "simpset collapse boundary-2", "string period --map degree1", "string period --map constant",
    "string cocycle tetra-degree1", "string calibrate --order 12", "corpus check",
]


def out_of(capsys, argv):
    status = main(argv)
    return status, capsys.readouterr().out


def test_spec_examples(capsys):
    status, out = out_of(capsys, ["linf", "check", "str-su2"])
    assert status == 0 and "δ²=0: PASS" in out
    status, out = out_of(capsys, ["homot", "tvf", "--algebra", "end-1-sqrt2", "--n", "2"])
    assert status == 1 and "image not discrete" in out
    status, _ = run(["linf", "check"])
    assert status == 2


@pytest.mark.parametrize("cmd", COMMANDS)
def test_provenance_tags(cmd):
    status, rep = run(cmd.split())
    assert status in (0, 1) and rep is not None
    for line in rep.lines:
        if line.lstrip().startswith("{"):
            continue  # an emitted document, not a report line
        if NUMBER.search(line):
            assert TAG.search(line), line


def test_verdict_exit_codes():
    assert run("linf check jacobi-counterexample".split())[0] == 1
    assert run("simpset kan delta-1".split())[0] == 1
    assert run("simpset kan k-z2-1".split())[0] == 0
    assert run("simpset collapse boundary-2".split())[0] == 1
    assert run("linf nilpotent su2".split())[0] == 1


def test_malformed_inputs(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["linf", "check", str(bad)])[0] == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"schema": 7, "dims": {}}))
    assert run(["linf", "check", str(wrong)])[0] == 2
    assert run(["linf", "check", str(tmp_path / "missing.json")])[0] == 2
    assert run(["linf", "check", "k-z2-1"])[0] == 2
    assert run(["--field", "R", "linf", "check", "str-su2"])[0] == 2
    assert run(["--field", "Q", "linf", "check", "end-1-sqrt2"])[0] == 2
    assert run(["--field", "Q(sqrt2)", "linf", "check", "end-1-sqrt2"])[0] == 0
    assert run(["nonsense"])[0] == 2


def test_bundled_corpus_contents():
    docs = bundled_corpus()
    for name in ("abelian", "contractible", "su2", "h3", "str-su2", "end-1-sqrt2", "k-z2-1",
                 "two-group-z2-twisted", "horn-2-1", "boundary-2"):
        assert name in docs
    assert docs["horn-2-1"]["collapse"] is not None and docs["boundary-2"]["collapse"] is None
    assert all(d.get("schema") == 1 for d in docs.values())


def test_round_trip_bit_exact():
    docs = bundled_corpus()
    fresh = build_corpus()
    from linftykan.linf import LInftyAlgebra
    for name, doc in docs.items():
        assert json.loads(dump_json(doc)) == doc
        assert json.loads(dump_json(fresh[name])) == doc
        if "dims" in doc:
            again = LInftyAlgebra.from_json(doc).to_json()
            again["name"] = doc["name"]
            assert dump_json(again) == dump_json(doc)


def test_corpus_dir_override(tmp_path, monkeypatch, capsys):
    write_corpus(tmp_path)
    (tmp_path / "su2.json").unlink()
    monkeypatch.setenv("LINFTYKAN_CORPUS_DIR", str(tmp_path))
    assert "su2" not in bundled_corpus()
    assert run(["linf", "check", "su2"])[0] == 2
    assert run(["linf", "check", "str-su2"])[0] == 0
    status, out = out_of(capsys, ["corpus", "list"])
    assert status == 0 and "su2:" not in out.replace("str-su2:", "")


def test_json_output_and_determinism(capsys):
    outs = []
    for _ in range(2):
        status, out = out_of(capsys, ["--seed", "7", "--format", "json", "intl", "random",
                                      "--algebra", "h3", "--m", "2"])
        assert status == 0
        outs.append(out)
    assert outs[0] == outs[1]
    doc = json.loads(outs[0])
    assert doc["status"] == 0 and doc["document"]["m"] == 2
    _, other = out_of(capsys, ["--seed", "8", "--format", "json", "intl", "random",
                               "--algebra", "h3", "--m", "2"])
    assert other != outs[0]


def test_fill_horn_files(tmp_path, capsys):
    status, out = out_of(capsys, ["--seed", "3", "--format", "json", "intl", "random",
                                  "--algebra", "h3", "--m", "2", "--horn", "1"])
    horn = tmp_path / "horn.json"
    horn.write_text(json.dumps(json.loads(out)["document"]))
    filled = tmp_path / "filled.json"
    status, rep = run(["intl", "fill-horn", str(horn), "--output", str(filled)])
    assert status == 0
    assert run(["intl", "validate", str(filled)])[0] == 0


def test_string_tolerance():
    status, rep = run(["--tolerance", "1e-12", "string", "cocycle", "tetra-degree1", "--order", "8"])
    assert status == 1
    status, rep = run(["string", "cocycle", "tetra-degree1"])
    assert status == 0


def test_entry_point_subprocess():
    res = subprocess.run([sys.executable, "-m", "linftykan", "linf", "check", "str-su2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout
