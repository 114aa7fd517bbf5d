import json

import pytest

from roughlogic.cli import run
from roughlogic.derivations import dnd
from roughlogic.proofcheck import tree_to_json


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize(capsys):
    assert call(capsys, "normalize", "DD") == (0, "~D\n", "")


def test_translate(capsys):
    assert call(capsys, "translate", "--dir", "t", "D P")[1] == "~[]P\n"
    assert call(capsys, "translate", "--dir", "s", "[]P")[1] == "~D P\n"


def test_parse_canonical(capsys, tmp_path):
    sig = tmp_path / "sig.json"
    sig.write_text(json.dumps({"relations": {"P": 1, "Q": 0}}))
    code, out, _ = call(capsys, "parse", "(~P(x)) & (D Q)", "--sig", str(sig))
    assert (code, out) == (0, "~P(x) & D Q\n")


def test_parse_error_exit_code(capsys):
    code, _, err = call(capsys, "parse", "P &")
    assert code == 2 and "error" in err


def test_prop_countermodel(capsys, tmp_path):
    witness = tmp_path / "w.json"
    code, out, _ = call(
        capsys, "consequence", "--mode", "prop", "--premise", "P -> Q", "D Q -> D P",
        "--witness", str(witness),
    )
    assert code == 1
    assert out.startswith("countermodel v(P)=1, v(Q)=1/2")
    # the witness file re-verifies with eval
    assert call(capsys, "eval", "--model", str(witness), "P -> Q")[1] == "1/2\n"
    assert call(capsys, "eval", "--model", str(witness), "D Q -> D P")[1] == "0\n"


def test_prop_valid(capsys):
    assert call(capsys, "consequence", "--premise", "D a", "--premise", "D D a", "false")[:2] == (
        0,
        "valid\n",
    )


def test_bounded_and_transfer(capsys, tmp_path):
    k = tmp_path / "k.json"
    code, out, _ = call(
        capsys, "consequence", "--mode", "bounded", "--semantics", "kripke",
        "--max-universe", "1", "P(x) | ~P(x)", "--witness", str(k),
    )
    assert code == 1 and "node 1" in out
    assert call(capsys, "force", "--model", str(k), "--node", "1", "P(x) | ~P(x)")[1] == "false\n"
    assert call(capsys, "force", "--model", str(k), "--node", "half", "P(x)")[1] == "true\n"
    r = tmp_path / "r.json"
    assert call(capsys, "transfer", "--dir", "to-rough", str(k), str(r))[0] == 0
    assert call(capsys, "eval", "--model", str(r), "P(x) | ~P(x)")[1] == "1/2\n"
    back = tmp_path / "k2.json"
    assert call(capsys, "transfer", "--dir", "to-kripke", str(r), str(back))[0] == 0
    assert call(capsys, "force", "--model", str(back), "--node", "1", "P(x)")[1] == "false\n"


def test_bounded_valid(capsys):
    code, out, _ = call(capsys, "consequence", "--mode", "bounded", "~P(x) | ~~P(x)")
    assert (code, out) == (0, "valid-up-to-bound(2)\n")


def test_guard(capsys, monkeypatch):
    monkeypatch.setenv("ROUGHLOGIC_SEARCH_GUARD", "5")
    code, _, err = call(capsys, "consequence", "--mode", "bounded", "P(x) | ~P(x)")
    assert code == 2 and "guard" in err


def test_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        w = tmp_path / f"w{i}.json"
        outs.append(call(capsys, "consequence", "--mode", "bounded", "P(x) | ~P(x)", "--witness", str(w))[1])
    assert (tmp_path / "w0.json").read_text() == (tmp_path / "w1.json").read_text()
    assert outs[0].replace("w0", "w1") == outs[1]


def test_check_proof(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps(tree_to_json(dnd().tree)))
    code, out, _ = call(capsys, "check-proof", str(p), "--system", "d")
    assert (code, out) == (0, "accepted: ~~D p |- D p\n")
    code, out, _ = call(capsys, "check-proof", str(p), "--system", "box")
    assert code == 1 and out.startswith("rejected")


def test_force_needs_kripke(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"universe": ["a"], "blocks": [["a"]], "relations": {}}))
    assert call(capsys, "force", "--model", str(m), "--node", "1", "false")[0] == 2


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        run(["frobnicate"])
    assert info.value.code == 2


def test_suite_subset(capsys):
    code, out, _ = call(capsys, "suite", "--only", "1", "--only", "4")
    assert code == 0 and "2/2 criteria passed" in out
