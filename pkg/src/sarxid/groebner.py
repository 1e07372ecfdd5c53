"""Buchberger's algorithm, reduced Groebner bases, elimination ideals.

Deterministic by construction: pairs are selected by the normal strategy
(smallest lcm of leading monomials in the active order), ties broken by
generator index, and the reduced basis is returned sorted by leading
monomial, all elements monic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .multipoly import (
    MonomialOrder,
    MultiPoly,
    _mono_div,
    _mono_divides,
    _mono_lcm,
    _mono_mul,
)

_ZERO = Fraction(0)


def normal_form(f: MultiPoly, basis, order: MonomialOrder, scale_free=False) -> MultiPoly:
    """Remainder of f under multivariate division by `basis`.

    With scale_free=True the result is only defined up to a nonzero constant
    factor: intermediate values are rescaled to primitive integer form to
    keep coefficient growth in check.  Zero-ness and leading monomials are
    unaffected, which is all basis construction needs.
    """
    basis = [g for g in basis if not g.is_zero()]
    if not basis:
        return f
    key = order.key
    lead = [
        (g.leading_monomial(order), g.leading_coeff(order), g.terms) for g in basis
    ]
    # raw term dicts avoid per-step polynomial construction in the hot loop
    work = dict(f.terms)
    remainder = {}
    while work:
        lm = max(work, key=key)
        ratio = None
        for glm, glc, gterms in lead:
            if _mono_divides(glm, lm):
                shift = _mono_div(lm, glm)
                ratio = work[lm] / glc
                for e, c in gterms.items():
                    te = _mono_mul(e, shift)
                    nc = work.get(te, _ZERO) - ratio * c
                    if nc:
                        work[te] = nc
                    else:
                        work.pop(te, None)
                if scale_free and work:
                    scale = _scale_of(work.values())
                    if scale != 1:
                        for e in work:
                            work[e] *= scale
                        for e in remainder:
                            remainder[e] *= scale
                break
        if ratio is None:
            remainder[lm] = work.pop(lm)
    return MultiPoly(f.vars, remainder)


def _scale_of(values) -> Fraction:
    """Nonzero constant c scaling the values to integers with content 1."""
    den_lcm = 1
    num_gcd = 0
    for c in values:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        num_gcd = gcd(num_gcd, c.numerator)
    return Fraction(den_lcm, num_gcd)


def _content_scale(f: MultiPoly) -> Fraction:
    """Nonzero constant c such that c*f has integer coefficients with content 1."""
    return _scale_of(f.terms.values())


def _primitive(f: MultiPoly) -> MultiPoly:
    """Scale to integer coefficients with content 1 (sign of the values kept).

    Keeping coefficients small is what makes Buchberger tractable here; the
    generated ideal is unchanged under nonzero constant scaling.
    """
    if f.is_zero():
        return f
    return f * _content_scale(f)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = _mono_lcm(lf, lg)
    mf = MultiPoly(f.vars, {_mono_div(lcm, lf): 1 / f.leading_coeff(order)})
    mg = MultiPoly(g.vars, {_mono_div(lcm, lg): 1 / g.leading_coeff(order)})
    return mf * f - mg * g


def buchberger(generators, order: MonomialOrder):
    """The unique reduced Groebner basis of the generated ideal.

    The zero ideal yields an empty basis.
    """
    basis = []
    seen = set()
    for g in generators:
        if g.is_zero():
            continue
        g = _primitive(g)
        if g.leading_coeff(order) < 0:
            g = g * Fraction(-1)
        key = frozenset(g.terms.items())
        # generators equal up to scale are redundant and inflate pair counts
        if key in seen:
            continue
        seen.add(key)
        basis.append(g)
    if not basis:
        return []
    leads = [g.leading_monomial(order) for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def pair_rank(pair):
        i, j = pair
        return (order.key(_mono_lcm(leads[i], leads[j])), i, j)

    while pairs:
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        # product criterion: coprime leading monomials reduce to zero
        if _mono_lcm(li, lj) == _mono_mul(li, lj):
            continue
        s = normal_form(
            s_polynomial(basis[i], basis[j], order), basis, order, scale_free=True
        )
        if s.is_zero():
            continue
        s = _primitive(s)
        basis.append(s)
        leads.append(s.leading_monomial(order))
        k = len(basis) - 1
        pairs.update((idx, k) for idx in range(k))
    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    # drop elements whose leading monomial is divisible by another's
    leads = [g.leading_monomial(order) for g in basis]
    keep = []
    for i, g in enumerate(basis):
        li = leads[i]
        redundant = any(
            j != i
            and _mono_divides(leads[j], li)
            and (leads[j] != li or j < i)
            for j in range(len(basis))
        )
        if not redundant:
            keep.append(g)
    # fully interreduce and normalize monic
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            rest = keep[:i] + keep[i + 1 :]
            r = normal_form(keep[i], rest, order, scale_free=True)
            if r.is_zero():
                keep.pop(i)
                changed = True
                break
            r = _primitive(r)
            if r != _primitive(keep[i]):
                keep[i] = r
                changed = True
                break
    keep = [g.monic(order) for g in keep]
    keep.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return keep


class Ideal:
    """Polynomial ideal with a cached reduced Groebner basis."""

    __slots__ = ("generators", "order", "_basis")

    def __init__(self, generators, order: MonomialOrder):
        self.generators = list(generators)
        self.order = order
        self._basis = None

    @property
    def vars(self):
        return self.generators[0].vars if self.generators else ()

    def groebner_basis(self):
        if self._basis is None:
            self._basis = buchberger(self.generators, self.order)
        return self._basis

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self.groebner_basis(), self.order)

    def contains(self, f: MultiPoly) -> bool:
        return self.normal_form(f).is_zero()

    def is_zero_ideal(self):
        return not self.groebner_basis()

    def is_unit_ideal(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()


def elimination_ideal(ideal: Ideal, drop):
    """Groebner basis of I intersected with the subring omitting `drop`.

    The ideal's order must rank the dropped variables strictly above the
    kept ones; results are returned over the kept variables only.
    """
    drop = sorted(set(drop))
    nvars = len(ideal.order.perm)
    if not ideal.order.eliminates(drop):
        raise ValueError("order is not an elimination order for the requested split")
    keep = [i for i in range(nvars) if i not in drop]
    kept = [
        g.restrict(keep)
        for g in ideal.groebner_basis()
        if not any(g.involves(i) for i in drop)
    ]
    return kept


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Ideal generated by all pairwise products of generators."""
    if a.generators and b.generators and a.vars != b.vars:
        raise ValueError("ideals live in different rings")
    gens = [f * g for f in a.generators for g in b.generators]
    prod = Ideal(gens, a.order)
    prod.groebner_basis()
    return prod


def ideals_equal(gens_a, gens_b, order: MonomialOrder) -> bool:
    """Ideal equality by mutual normal-form reduction to zero."""
    ia = Ideal(list(gens_a), order)
    ib = Ideal(list(gens_b), order)
    return all(ia.contains(g) for g in gens_b) and all(
        ib.contains(g) for g in gens_a
    )
