import json

import pytest

import nsalg


def test_scalar_arithmetic():
    x = nsalg.Scalar("l") + nsalg.Scalar("1/2")
    y = nsalg.Scalar("2")
    assert str(x * y) == "2*l + 1"
    assert (x - x).is_zero()
    assert x / x == nsalg.Scalar("1")
    with pytest.raises(nsalg.NsalgError):
        nsalg.Scalar("1/0")


def test_brackets():
    L, G, C = (lambda n: nsalg.Generator("L", n)), (lambda r: nsalg.Generator("G", r)), nsalg.Generator("C")
    assert nsalg.bracket(L("2"), L("-2")) == "-4*L(0) + 1/2*C"
    assert nsalg.bracket(G("1/2"), G("-1/2")) == "-2*L(0)"
    assert nsalg.bracket(G("3/2"), G("-3/2"), "k") == "-2*L(0)"
    assert nsalg.bracket(L("0"), C) == "0"
    assert G("1/2").parity == 1


def test_module_actions():
    m = nsalg.Module("gamma(l,b)")
    assert m.act(nsalg.Generator("G", "1/2"), 0, 1) == "-1 * t^1"
    corrected = m.axiom_residual(nsalg.Generator("G", "1/2"), nsalg.Generator("G", "-1/2"), 0)
    assert corrected == "0"
    printed = nsalg.Module("gamma(l,b)", convention="paper-printed")
    residual = printed.axiom_residual(nsalg.Generator("G", "1/2"), nsalg.Generator("G", "-1/2"), 0)
    assert residual == "(4*l + 4*b) * t^0"


def test_simplicity_and_iso():
    assert nsalg.simplicity(nsalg.Module("gamma(1/3,1/4)"))["verdict"] == "simple"
    v = nsalg.simplicity(nsalg.Module("gamma(0,1/2)"))
    assert v["verdict"] == "reducible"
    assert (-1, 1) not in v["certificate"]
    t = nsalg.find_intertwiner(nsalg.Module("gamma(1/3,1/2)"), nsalg.Module("gamma(4/3,0)"))
    assert t is not None and t["parity"] == 1
    assert nsalg.find_intertwiner(nsalg.Module("gamma(1/3,0)"), nsalg.Module("gamma(1/3,1/4)")) is None


def test_annihilator():
    r = nsalg.minimal_annihilator(nsalg.Module("gamma(1/3,1/4)"))
    assert r["m"] == 3
    assert r["minimality_witness"] is not None
    assert r["gl_status"] == "pass"


def test_jacobi_and_cli():
    assert all(r["status"] == "pass" for r in nsalg.verify_jacobi(2))
    code, out, _ = nsalg.run_cli(["verify", "--suite", "jacobi", "--range", "2", "--format", "json"])
    assert code == 0
    assert json.loads(out)["meta"]["failed"] == 0
    assert nsalg.run_cli(["bogus"])[0] == 2
