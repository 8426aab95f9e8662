from fractions import Fraction

import pytest

from chromapleth.alphabet import Alphabet, Eps, Neg, Param, Prod, Sum, integer, parse_expr
from chromapleth.plethysm import expr_from_poly, expr_from_symfunc, pleth, pleth_p_on_expr
from chromapleth.poly import Poly
from chromapleth.symfunc import e, h, m, omega, p, partitions

import oracles

X = Alphabet("x")


def test_power_sum_rules():
    assert pleth_p_on_expr(2, Eps(X), 2) == oracles.power_sum(2, 2)
    assert pleth_p_on_expr(3, Eps(X), 2) == -oracles.power_sum(3, 2)
    q = Poly.var("q")
    assert pleth_p_on_expr(3, Prod(Param("q"), X), 2) == q ** 3 * oracles.power_sum(3, 2)
    assert pleth_p_on_expr(2, integer(3)) == 3
    assert pleth_p_on_expr(4, Neg(X), 1) == -Poly.var("x1", 4)


def test_p2_of_p3_is_p6():
    inner = expr_from_symfunc(p(3), 3)
    assert pleth(p(2), inner) == p(6).expand(3)
    assert pleth(p(2), p(3)) == p(6)


@pytest.mark.parametrize("f", [e(3), h(2, 1), p(2, 1) - m(3), e(4) * Fraction(1, 2)])
def test_identity_alphabet(f):
    assert pleth(f, X, 3) == f.expand(3)


@pytest.mark.parametrize("lam", [lam for d in range(1, 5) for lam in partitions(d)])
def test_omega_via_negated_epsilon(lam):
    """f[-x] = (-1)^n (omega f)[x] and (omega f)[x] = f[-eps x] for degree n."""
    f = h(*lam)
    n = lam.size()
    assert pleth(f, Neg(X), 3) == omega(f).expand(3) * (-1) ** n
    assert pleth(f, Neg(Eps(X)), 3) == omega(f).expand(3)


def test_sum_rule_and_its_failure_for_longer_partitions():
    x1 = parse_expr("x_1")
    lhs = pleth(p(1, 1), Sum(x1, x1))
    assert lhs == 4 * Poly.var("x1", 2)
    assert lhs != pleth(p(1, 1), x1) + pleth(p(1, 1), x1)


def test_monomial_expansion_alphabet():
    expr = expr_from_poly(oracles.elementary(2, 3))
    expected = Poly()
    for a, b in [("x1", "x2"), ("x1", "x3"), ("x2", "x3")]:
        expected = expected + Poly.var(a, 2) * Poly.var(b, 2)
    assert pleth(p(2), expr) == expected
    assert pleth(e(2), expr_from_poly(Poly.const(-2))) == 3


def test_plethysm_homogeneity():
    f = e(2, 1) + h(3)
    out = pleth(f, Sum(X, Alphabet("y")), 2)
    assert {sum(k for _, k in mono) for mono in out.terms} == {3}


def test_symfunc_composition():
    assert pleth(h(2), e(1)) == h(2)
    assert pleth(e(1), h(2)) == h(2)
    assert pleth(p(2), e(2)).expand(3) == pleth(p(2), expr_from_symfunc(e(2), 3))
