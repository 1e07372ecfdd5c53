import random
from fractions import Fraction

import sympy

from conftest import rand_fraction
from oracles import multipoly_to_sympy
from sarxid import MonomialOrder, MultiPoly

VARS = ("x", "y", "w")
SYMS = sympy.symbols("x y w")


def random_mpoly(rng, nterms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        exp = tuple(rng.randint(0, max_exp) for _ in VARS)
        terms[exp] = rand_fraction(rng)
    return MultiPoly(VARS, terms)


def test_ring_axioms_against_sympy(rng):
    for _ in range(40):
        f, g = random_mpoly(rng), random_mpoly(rng)
        assert multipoly_to_sympy(f + g, SYMS) == sympy.expand(
            multipoly_to_sympy(f, SYMS) + multipoly_to_sympy(g, SYMS)
        )
        assert multipoly_to_sympy(f * g, SYMS) == sympy.expand(
            multipoly_to_sympy(f, SYMS) * multipoly_to_sympy(g, SYMS)
        )
        assert multipoly_to_sympy(f - g, SYMS) == sympy.expand(
            multipoly_to_sympy(f, SYMS) - multipoly_to_sympy(g, SYMS)
        )


def test_power_matches_repeated_product(rng):
    for _ in range(10):
        f = random_mpoly(rng, nterms=3, max_exp=2)
        assert f**3 == f * f * f
        assert f**0 == MultiPoly.constant(VARS, 1)


def test_leading_monomial_agrees_with_sympy_orders(rng):
    for kind in ("lex", "grevlex"):
        order = getattr(MonomialOrder, kind)(len(VARS))
        for _ in range(30):
            f = random_mpoly(rng)
            if f.is_zero():
                continue
            poly = sympy.Poly(multipoly_to_sympy(f, SYMS), *SYMS)
            expected = poly.monoms(order=kind)[0]
            assert f.leading_monomial(order) == tuple(expected)


def test_elimination_order_ranks_dropped_variables_first():
    order = MonomialOrder.elimination(3, [1])
    # any monomial containing y beats any monomial without it
    assert order.key((0, 1, 0)) > order.key((5, 0, 7))
    assert order.eliminates([1])
    assert not order.eliminates([0])


def test_eval_substitute_consistency(rng):
    for _ in range(30):
        f = random_mpoly(rng)
        point = [rand_fraction(rng) for _ in VARS]
        partial = f.substitute({0: point[0], 1: point[1]})
        assert partial.eval(point) == f.eval(point)
        full = f.substitute(dict(enumerate(point)))
        assert full.constant_value() == f.eval(point)


def test_restrict_embed_roundtrip():
    f = MultiPoly(VARS, {(2, 0, 1): Fraction(3), (0, 0, 0): Fraction(-1)})
    small = f.restrict([0, 2])
    assert small.vars == ("x", "w")
    assert small.embed(VARS) == f


def test_json_terms_roundtrip(rng):
    for _ in range(20):
        f = random_mpoly(rng)
        assert MultiPoly.from_json_terms(VARS, f.to_json_terms()) == f


def test_as_unipoly_view():
    f = MultiPoly(VARS, {(0, 2, 0): Fraction(1), (0, 0, 0): Fraction(-4)})
    u = f.as_unipoly(1)
    assert u.coeffs == (Fraction(-4), Fraction(0), Fraction(1))
