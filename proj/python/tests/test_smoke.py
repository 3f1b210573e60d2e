from fractions import Fraction

import mpmath
import pytest

import thetaq


def test_singular_modulus_r1():
    k = thetaq.singular_modulus("1", 40)["k"]
    assert k.startswith("0.70710678118654752440084436210484903928")


def test_ellipk():
    assert thetaq.ellipk("1/2", 30).startswith("1.6857503548125960428712036578")


def test_A14_at_r1_is_eighth_root_of_two():
    a = thetaq.eval_A("1", "4", "1", 50)
    assert abs(float(a) ** 8 - 2) < 1e-12


def test_modulus_series_head():
    s = thetaq.series("m", 5)
    assert s["denom"] == 1 and s["hi"] == 5
    assert [t[1] for t in s["terms"]] == ["16", "-128", "704", "-3072"]


def test_mine_table4():
    rel = thetaq.mine("-2", "8", 12, "m2sq", 4, 60)
    terms = {(i, j): int(c) for i, j, c in rel["poly"]}
    assert terms == {(4, 1): -1, (2, 1): -64, (0, 2): 256, (0, 1): -512, (0, 0): 256}
    assert all(float(c["residual"]) < 1e-40 for c in rel["numeric_checks"])


def test_recognize():
    mpmath.mp.dps = 80
    value = mpmath.nstr(3 - 2 * mpmath.sqrt(2), 75)
    assert thetaq.recognize(value, 3, 30) == ["1", "-6", "1"]
    assert Fraction(thetaq.recognize_rational("0.5", 30)) == Fraction(1, 2)
    with pytest.raises(thetaq.NotFoundError):
        thetaq.recognize_rational("3.14159265358979323846264338327950288419716939937510", 50, "1000000")


def test_verify_entries():
    assert thetaq.verify("table4", rs=("1", "2"))["verdict"] == "pass"
    printed = thetaq.verify("eq15_as_printed", rs=("1",))
    assert printed["verdict"] == "fail"
    assert "eq45" in thetaq.catalog_ids()


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        thetaq.singular_modulus("-1", 30)
