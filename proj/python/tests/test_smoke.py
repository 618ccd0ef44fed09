import pytest

import ostrowski as o


def test_quadratic_numbers():
    phi = o.QuadraticNumber.parse("(1+sqrt(5))/2")
    assert phi * phi == phi + o.QuadraticNumber(1)
    assert phi.floor() == 1
    assert str(o.QuadraticNumber.sqrt(8)) == "2*sqrt(2)"


def test_systems():
    assert o.System.from_spec("golden").cf() == "[1; (1)^ω]"
    assert o.System.from_spec("sqrt3").cf() == "[1; (1,2)^ω]"
    s2 = o.System.from_spec("sqrt2")
    assert [s2.q(k) for k in range(5)] == [1, 2, 5, 12, 29]


def test_integers_round_trip():
    for name in ("golden", "sqrt2", "sqrt3"):
        s = o.System.from_spec(name)
        for n in range(300):
            x = o.encode(n, s)
            assert int(x) == n
            assert o.validate(s, x.digits)


def test_big_integers():
    s = o.System.from_spec("golden")
    n = 10**40 + 7
    assert int(o.encode(n, s)) == n


def test_golden_words():
    s = o.System.from_spec("golden")
    assert o.encode(7, s).word() == "10100"
    x = o.OstrowskiInt.parse(s, "10100")
    y = o.OstrowskiInt.parse(s, "10")
    assert o.add(x, y).word() == "100000"
    assert o.add(x, y, engine="digit") == o.add(x, y)
    assert o.cmp(x, y) == 1
    assert int(o.succ(x)) == 8


def test_reals():
    s = o.System.from_spec("golden")
    one = o.QuadraticNumber(1)
    lo = one - s.alpha
    assert o.real_decode(o.real_encode(lo, s)) == lo
    assert o.real_decode(o.neg_beta_digits(3, s)) == -s.beta(3)
    value, m, digits = o.f_map(7, s)
    assert value == o.QuadraticNumber(7) * s.alpha - o.QuadraticNumber(m)
    assert o.real_decode(digits) == value


def test_errors():
    with pytest.raises(o.OstrowskiError):
        o.OstrowskiInt.parse(o.System.from_spec("golden"), "11")
    with pytest.raises(ValueError):
        o.QuadraticNumber.sqrt(2) + o.QuadraticNumber.sqrt(3)


def test_cli():
    status, out, _ = o.run_cli(["--system", "golden", "encode", "7"])
    assert status == 0
    assert out == "10100\n"
    status, _, err = o.run_cli(["bogus"])
    assert status == 2
    assert err
