import os

import pytest

import strattr

SPECS = os.environ.get(
    "STRATTR_SPECS", os.path.join(os.path.dirname(__file__), "..", "..", "specs")
)


def spec(name):
    return strattr.Spec.load(os.path.join(SPECS, name))


def test_window():
    assert spec("char-fib.json").window(-4, 5) == (-4, "0010100100")
    assert spec("step.json").window(-2, 1) == (-2, "0011")


def test_round_trip():
    text = '{"type":"char-sturmian","head":"","tail":"01","variant":"lower"}'
    x = strattr.Spec.parse(text)
    assert x.dumps() == text
    assert strattr.Spec.from_dict(x.to_dict()) == x


def test_parse_error_names_field():
    with pytest.raises(strattr.ParseError, match='missing field "tail"'):
        spec("bad.json")


def test_check_attractor():
    step = spec("step.json")
    r = strattr.check_attractor(step, {"kind": "interval", "lo": -1, "hi": 0}, 50)
    assert r["verdict"] == "covered-up-to-50"
    r = strattr.check_attractor(step, {"kind": "finite", "positions": [5]}, 2)
    assert r["verdict"] == "uncovered"
    assert r["witness"] == "0"


def test_classify():
    assert strattr.classify(spec("step.json"))["verdict"] == "BiEventuallyPeriodic"
    v = strattr.classify(spec("psi-fib.json"))
    assert v["verdict"] == "CharacteristicMorphicImage"
    assert v["span"] == 2
    assert strattr.classify(spec("generic-orbit.json"))["verdict"] == "NoFiniteAttractor"


def test_complexity_and_modular():
    assert strattr.complexity(spec("char-fib.json"), 5) == [2, 3, 4, 5, 6]
    assert strattr.occ_mod(spec("phi-fib.json"), "01", 2, 50)["residues"] == [0]
    r = strattr.modulo_recurrent(spec("phi-fib.json"), 2, 2)
    assert r["verdict"] == "fail"
    s = strattr.sparse_attractor(spec("char-fib.json"), 6)
    assert s["density_ok"] and s["coverage_ok"]


def test_symbolic_error():
    with pytest.raises(strattr.SymbolicError):
        spec("generic-orbit.json").window(0, 3)


def test_min_size():
    assert strattr.min_size("abab") == [0, 1]
