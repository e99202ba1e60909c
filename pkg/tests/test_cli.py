import io
import json

import pytest

from futs import fixture_path, parse_model, serialize_model
from futs.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


C1 = fixture_path("c1.ctmc")


def test_equiv():
    assert run("equiv", C1, "s1", "s2")[:2] == (0, "bisimilar\n")
    assert run("equiv", C1, "s0", "u")[:2] == (1, "not-bisimilar\n")


def test_check(tmp_path):
    rel = tmp_path / "all-one-block.rel"
    rel.write_text("{s0 s1 s2 u}\n")
    code, out, _ = run("check", C1, "--relation", rel)
    assert code == 1
    assert out == (
        "not-a-bisimulation\n"
        "witness: s0 u component 1 label delta class {s0 s1 s2 u}: 2 != 0\n"
    )
    rel.write_text("{s1 s2}\n")
    assert run("check", C1, "--relation", rel)[:2] == (0, "bisimulation\n")


def test_minimize():
    code, out, _ = run("minimize", C1)
    assert code == 0
    partition, quotient = out.split("\n\n", 1)
    assert partition == "{s0}\n{s1 s2}\n{u}"
    q = parse_model(quotient)
    assert q.kind == "ctmc"
    assert q.model.rates == (("s0", 2, "s1"), ("s1", 2, "u"))


def test_oracle_and_cap():
    assert run("oracle", C1) == (0, "{s0}\n{s1 s2}\n{u}\n", "")
    code, out, err = run("--max-brute", 3, "oracle", C1)
    assert code == 2 and out == "" and "4 states" in err


def test_crosscheck_fixtures():
    for name in ("c1.ctmc", "l1.lts", "i1.imc", "p1.pa", "m1.ma"):
        code, out, _ = run("crosscheck", fixture_path(name))
        assert code == 0
        assert out.endswith("agree\n")


def test_parse_canonical():
    code, out, _ = run("parse", C1)
    assert code == 0
    assert out == serialize_model(parse_model(C1.read_text()))


def test_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.lts"
    bad.write_text("kind lts\nstates p\nactions a\ntrans p -a q\n")
    code, out, err = run("parse", bad)
    assert (code, out) == (2, "")
    assert err.startswith(f"{bad}:4:7: ")
    assert run("parse", tmp_path / "missing.lts")[0] == 2
    assert run("equiv", C1, "s0", "nope")[0] == 2
    assert run("frobnicate")[0] == 2
    code, _, err = run("parse", fixture_path("invalid/leaky.dtmc"))
    assert code == 2 and "NotStochastic" in err


def test_json_and_quiet():
    code, out, _ = run("--json", "minimize", C1)
    data = json.loads(out)
    assert data["partition"] == [["s0"], ["s1", "s2"], ["u"]]
    assert run("equiv", C1, "s0", "u", "--quiet") == (1, "", "")
    data = json.loads(run("crosscheck", C1, "--json")[1])
    assert data["agree"] is True


@pytest.mark.parametrize("kind", ["lts", "ctmc", "dtmc", "imc", "pa", "ma", "futs"])
def test_gen(kind, tmp_path):
    code, out, _ = run("gen", kind, "--seed", 7, "--states", 4)
    assert code == 0
    assert run("gen", kind, "--seed", 7, "--states", 4)[1] == out
    path = tmp_path / f"g.{kind}"
    path.write_text(out)
    assert run("crosscheck", path)[0] == 0
