"""Sparse multivariate polynomials over the rationals.

Terms are a dict mapping exponent tuples to nonzero Fractions.  Monomial
orders (lex, graded-reverse-lex, block elimination orders) are separate
objects so the same polynomial can be viewed under different orders.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import format_rational, parse_rational
from .unipoly import UniPoly

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MonomialOrder:
    """Total order on exponent tuples, compatible with multiplication.

    kind is one of "lex", "grevlex", "elim"; for "elim", the first `block`
    variables (after applying `perm`) dominate: any monomial involving them
    beats any monomial that does not.  Larger key = larger monomial.
    """

    __slots__ = ("kind", "nvars", "block", "perm")

    def __init__(self, kind, nvars, block=0, perm=None):
        if kind not in ("lex", "grevlex", "elim"):
            raise ValueError("unknown order kind %r" % kind)
        self.kind = kind
        self.nvars = nvars
        self.block = block
        self.perm = tuple(perm) if perm is not None else tuple(range(nvars))
        if sorted(self.perm) != list(range(nvars)):
            raise ValueError("perm must be a permutation of 0..nvars-1")
        if kind == "elim" and not (0 < block < nvars):
            raise ValueError("elimination block must split the variables")

    @classmethod
    def lex(cls, nvars, perm=None):
        return cls("lex", nvars, perm=perm)

    @classmethod
    def grevlex(cls, nvars, perm=None):
        return cls("grevlex", nvars, perm=perm)

    @classmethod
    def elimination(cls, nvars, drop):
        """Block order ranking the variables in `drop` strictly above the rest."""
        drop = sorted(set(drop))
        keep = [i for i in range(nvars) if i not in drop]
        if not drop or not keep:
            raise ValueError("elimination split must be proper")
        return cls("elim", nvars, block=len(drop), perm=tuple(drop + keep))

    def key(self, exp):
        e = tuple(exp[i] for i in self.perm)
        if self.kind == "lex":
            return e
        if self.kind == "grevlex":
            return _grevlex_key(e)
        return (_grevlex_key(e[: self.block]), _grevlex_key(e[self.block :]))

    def eliminates(self, drop):
        """True if this order ranks every variable in `drop` above the rest."""
        if self.kind != "elim":
            return False
        return set(self.perm[: self.block]) == set(drop)


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != len(self.vars):
                    raise ValueError("exponent length mismatch")
                clean[exp] = clean.get(exp, _ZERO) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def constant(cls, vars, c):
        c = Fraction(c)
        if c == 0:
            return cls(vars)
        return cls(vars, {tuple([0] * len(vars)): c})

    @classmethod
    def variable(cls, vars, index, power=1):
        exp = [0] * len(vars)
        exp[index] = power
        return cls(vars, {tuple(exp): _ONE})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(exp) == 0 for exp in self.terms)

    def constant_value(self):
        return self.terms.get(tuple([0] * len(self.vars)), _ZERO)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, index):
        if not self.terms:
            return -1
        return max(exp[index] for exp in self.terms)

    def involves(self, index):
        return any(exp[index] > 0 for exp in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check_ring(self, other):
        if self.vars != other.vars:
            raise ValueError("polynomials live in different rings")

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        self._check_ring(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, _ZERO) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})
        self._check_ring(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _mono_mul(ea, eb)
                out[e] = out.get(e, _ZERO) + ca * cb
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- leading data -------------------------------------------------

    def leading_monomial(self, order: MonomialOrder):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder):
        if not self.terms:
            return self
        lc = self.leading_coeff(order)
        return self * (1 / lc)

    def sorted_terms(self, order: MonomialOrder):
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    # -- evaluation / substitution ------------------------------------

    def eval(self, point):
        if len(point) != len(self.vars):
            raise ValueError(
                "point length %d != variable count %d" % (len(point), len(self.vars))
            )
        point = [Fraction(x) for x in point]
        acc = _ZERO
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(point, exp):
                if e:
                    term *= x**e
            acc += term
        return acc

    def substitute(self, assignment):
        """Partially evaluate: assignment maps variable index -> Fraction."""
        out = {}
        for exp, c in self.terms.items():
            coef = c
            new_exp = list(exp)
            for i, val in assignment.items():
                e = exp[i]
                if e:
                    coef *= Fraction(val) ** e
                new_exp[i] = 0
            key = tuple(new_exp)
            out[key] = out.get(key, _ZERO) + coef
        return MultiPoly(self.vars, out)

    def as_unipoly(self, index):
        """View as a univariate polynomial in variable `index`.

        All other variables must be absent.
        """
        coeffs = {}
        for exp, c in self.terms.items():
            if any(e > 0 for i, e in enumerate(exp) if i != index):
                raise ValueError("polynomial involves variables other than %r"
                                 % self.vars[index])
            coeffs[exp[index]] = c
        if not coeffs:
            return UniPoly.zero()
        top = max(coeffs)
        return UniPoly([coeffs.get(k, _ZERO) for k in range(top + 1)])

    def restrict(self, keep):
        """Project onto the subring of the variables listed in `keep`.

        Fails if any dropped variable occurs.
        """
        keep = list(keep)
        dropped = [i for i in range(len(self.vars)) if i not in keep]
        out = {}
        for exp, c in self.terms.items():
            if any(exp[i] > 0 for i in dropped):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(exp[i] for i in keep)] = c
        return MultiPoly([self.vars[i] for i in keep], out)

    def embed(self, vars):
        """Re-embed into a larger ring containing all current variables."""
        vars = tuple(vars)
        positions = [vars.index(v) for v in self.vars]
        out = {}
        for exp, c in self.terms.items():
            new_exp = [0] * len(vars)
            for pos, e in zip(positions, exp):
                new_exp[pos] = e
            out[tuple(new_exp)] = c
        return MultiPoly(vars, out)

    # -- serialization ------------------------------------------------

    def to_str(self, order: MonomialOrder | None = None):
        if not self.terms:
            return "0"
        if order is None:
            order = MonomialOrder.grevlex(len(self.vars))
        parts = []
        for exp, c in self.sorted_terms(order):
            factors = [format_rational(c)]
            for name, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json_terms(self):
        order = MonomialOrder.grevlex(len(self.vars))
        return {
            "terms": [
                {"c": format_rational(c), "e": list(exp)}
                for exp, c in self.sorted_terms(order)
            ]
        }

    @classmethod
    def from_json_terms(cls, vars, obj):
        terms = {}
        for t in obj.get("terms", []):
            exp = tuple(int(e) for e in t["e"])
            terms[exp] = terms.get(exp, _ZERO) + parse_rational(t["c"])
        return cls(vars, terms)

    def __repr__(self):
        return "MultiPoly(%s)" % self.to_str()
