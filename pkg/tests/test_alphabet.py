import pytest

from chromapleth.alphabet import (
    Alphabet,
    Eps,
    Int,
    Neg,
    One,
    Param,
    Prod,
    SignedVar,
    Sum,
    Var,
    default_ordering,
    eps,
    evaluate,
    integer,
    ordered,
    ordering_from_spec,
    parse_expr,
    to_text,
    var_set,
)
from chromapleth.errors import (
    CapacityError,
    ExprParseError,
    UnboundedAlphabetError,
    UnknownAlphabetError,
)
from chromapleth.poly import Poly


def names(vs):
    return [str(v) for v in vs]


def test_sum_with_overlap_primes_the_duplicates():
    vs = var_set(Sum(Alphabet("x"), Alphabet("x", 3)), {"x": 5})
    assert sorted(names(vs)) == sorted(["x1", "x2", "x3", "x4", "x5", "x1'", "x2'", "x3'"])
    assert len(set(vs.keys())) == len(vs)


def test_sign_flag_versus_value_negation():
    neg = var_set(Neg(Alphabet("x", 2)))
    assert names(neg) == ["bar(x1)", "bar(x2)"]
    assert [v.sign for v in neg] == [-1, -1] and [v.parity for v in neg] == [0, 0]
    ep = var_set(Eps(Alphabet("x", 2)))
    assert names(ep) == ["-x1", "-x2"]
    assert [v.sign for v in ep] == [1, 1] and [v.parity for v in ep] == [1, 1]


def test_product_alphabet_of_pairwise_monomials():
    expr = parse_expr("x_1*x_2 + x_1*x_3 + x_2*x_3")
    vs = var_set(expr)
    assert names(vs) == ["x1*x2", "x1*x3", "x2*x3"]


def test_product_of_alphabets_multiplies_signs():
    vs = var_set(Prod(Neg(Alphabet("x", 2)), Neg(Alphabet("y", 1))))
    assert len(vs) == 2 and all(v.sign == 1 for v in vs)


def test_integer_is_distinguishable_ones():
    vs = var_set(integer(3))
    assert names(vs) == ["1", "1'", "1''"]
    assert len(var_set(Int(0))) == 0


def test_unbounded_alphabet_needs_bound():
    with pytest.raises(UnboundedAlphabetError):
        var_set(Alphabet("x"))
    assert len(var_set(Alphabet("x"), 4)) == 4


def test_product_capacity():
    with pytest.raises(CapacityError):
        var_set(Prod(Alphabet("x"), Alphabet("y")), {"x": 1000, "y": 1000})


def test_evaluate_examples():
    x1 = SignedVar((("x", 1, 0),))
    assert evaluate(x1.flipped_sign(), 3) == -Poly.var("x1", 3)
    assert evaluate(x1.negated(), 3) == -Poly.var("x1", 3)
    assert evaluate(x1.negated(), 2) == Poly.var("x1", 2)
    assert evaluate(SignedVar((("x", 2, 1),)), 2) == Poly.var("x2", 2)
    assert evaluate(SignedVar((("1", 0, 2),)), 5) == 1


def test_evaluate_is_multiplicative():
    z = SignedVar((("x", 1, 0),), -1, 1)
    w = SignedVar((("y", 2, 0),), -1, 0)
    for k in range(1, 5):
        assert evaluate(z.times(w), k) == evaluate(z, k) * evaluate(w, k)


def test_default_ordering_examples():
    vs = var_set(parse_expr("x_2 + x_1 + x_1"))
    assert [str(v) for v in ordered(vs, default_ordering(vs))] == ["x1", "x1'", "x2"]
    vs = var_set(Sum(Param("q"), One()))
    assert [str(v) for v in ordered(vs, default_ordering(vs))] == ["1", "q"]
    vs = var_set(Var("x", 4))
    assert default_ordering(vs) == (0,)


def test_ordering_specs():
    vs = var_set(Alphabet("x", 5))
    r1, r2 = ordering_from_spec(vs, "seed:1"), ordering_from_spec(vs, "seed:1")
    assert r1 == r2 and sorted(r1) == list(range(5))
    with pytest.raises(ValueError):
        ordering_from_spec(vs, [0, 0, 1, 2, 3])
    with pytest.raises(ValueError):
        ordering_from_spec(vs, "random")


@pytest.mark.parametrize(
    "text",
    ["x+y", "-x", "eps(x)", "q*x", "x*y", "2*x", "x-eps(y)", "-(x+y)*q", "x_3+x", "1", "-1", "3", "eps(eps(x))"],
)
def test_parse_print_round_trip(text):
    e = parse_expr(text)
    assert parse_expr(to_text(e)) == e


def test_parser_structure():
    assert parse_expr("x-y") == Sum(Alphabet("x"), Neg(Alphabet("y")))
    assert parse_expr("-x*y") == Prod(Neg(Alphabet("x")), Alphabet("y"))
    assert parse_expr("eps(x)") == eps(Alphabet("x"))
    assert parse_expr("x_2") == Var("x", 2)
    assert parse_expr("3") == Int(3)


def test_parser_errors_carry_positions():
    with pytest.raises(ExprParseError) as info:
        parse_expr("x+(y")
    assert info.value.position is not None
    with pytest.raises(ExprParseError):
        parse_expr("x + * y")
    with pytest.raises(UnknownAlphabetError):
        parse_expr("k+x")
