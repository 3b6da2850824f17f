from fractions import Fraction

import pytest

import padyn


def test_padic_arithmetic():
    x = padyn.Padic(Fraction(1, 2), 3, 8)
    y = padyn.Padic(6, 3, 8)
    assert x.valuation == 0
    assert y.valuation == 1
    assert (x * y) == padyn.Padic(3, 3, 8)
    assert (x + y).valuation == 0
    assert x.inverse() == padyn.Padic(2, 3, 8)
    assert padyn.same_side_of_zero(padyn.Padic(1, 5), padyn.Padic(6, 5))
    assert not padyn.same_side_of_zero(padyn.Padic(1, 5), padyn.Padic(2, 5))


def test_errors_carry_a_name():
    with pytest.raises(padyn.PadynError) as info:
        padyn.Padic(3, 3).inverse()
    assert info.value.args[0] == "NonUnitInverse"
    with pytest.raises(padyn.PadynError) as info:
        padyn.invariants([0, 0, 0, 0, 0])
    assert info.value.args[0] == "SingularCurve"


def test_curves():
    e = [0, -1, 1, 0, 0]
    inv = padyn.invariants(e)
    assert inv["delta"] == -11
    assert inv["j"] == Fraction(-4096, 11)
    red = padyn.tate_reduce(e, 11)
    assert red["kind"] == "multiplicative"
    assert red["f"] == 1
    f = padyn.l_coefficients([0, 0, 1, -1, 0], 5)
    assert f["level"] == 37
    assert f["a"] == [1, -2, -3, 2, -2]
    u = padyn.formal_expansion([1, -1, 1, -1, -14], 8)
    assert padyn.series_to_curve(u) == [1, -1, 1, -1, -14]


def test_tate_parameter_and_orbits():
    q = padyn.tate_parameter(Fraction(-4096, 11), 11)
    assert q["h"][:3] == [1, 744, 750420]
    assert q["valuation"] == 1
    orbit = padyn.iterate("x^3*(1 + x)", 3, 3, steps=2)
    assert orbit["valuations"] == [1, 3, 9]
    x, y = padyn.embed(padyn.Padic(0, 3, 8))
    assert (x, y) == (0.0, 0.0)


def test_recovery_and_cli():
    r = padyn.recover([1, 2, 3, 4])
    assert r["p_star"] == 7
    assert r["coefficients"] == [1, 2, 3, 4]
    out = padyn.cli("tate", "--curve", "[0,-1,1,0,0]", "--p", "11")
    assert out["kind"] == "multiplicative"
    with pytest.raises(padyn.PadynError):
        padyn.cli("qparam", "--j", "1728", "--p", "2")
    code, _, err = padyn.run([])
    assert code == 2
    assert "Usage" in err
