"""Polynomial parametrizations of SISO switched ARX models.

A parametrization maps a rational parameter vector to a model by evaluating
one coefficient polynomial per mode coefficient.  The analyses here compute
the symbolic coprimality data of the family, carve out the parameter region
whose instances are strongly minimal (by eliminating the indeterminate z
from pairwise ideals and combining the results into one Groebner set), and
gather injectivity and genericity evidence.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .groebner import Ideal, buchberger, elimination_ideal, normal_form
from .linalg import RatMatrix
from .minimality import check_strong_minimality
from .multipoly import MonomialOrder, MultiPoly
from .sarx import SarxError, SarxModel

_ZERO = Fraction(0)


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class PolyParametrization:
    """Map from parameter space Q^d to SARX models, polynomial per coefficient.

    modes[q] is the flat row-major tuple of coefficient polynomials, one per
    entry of the mode's coefficient matrix.
    """

    vars: tuple
    ny: int
    nu: int
    p: int
    m: int
    modes: dict

    def __post_init__(self):
        if not (0 < self.nu <= self.ny):
            raise ParamError("need 0 < n_u <= n_y")
        if not self.modes:
            raise ParamError("mode set must be nonempty")
        width = self.p * (self.ny * self.p + self.nu * self.m)
        for q, polys in self.modes.items():
            if len(polys) != width:
                raise ParamError(
                    "mode %r has %d coefficient polynomials, expected %d"
                    % (q, len(polys), width)
                )
            for f in polys:
                if f.vars != self.vars:
                    raise ParamError("coefficient polynomial in a different ring")

    @property
    def dim(self):
        return len(self.vars)

    @property
    def labels(self):
        return sorted(self.modes)

    def is_siso(self):
        return self.p == 1 and self.m == 1

    def coeff_poly(self, q, i):
        """SISO coefficient polynomial for h_q^i, 1-based."""
        if not self.is_siso():
            raise ParamError("scalar coefficient access requires SISO")
        return self.modes[q][i - 1]

    def instantiate(self, theta) -> SarxModel:
        theta = [Fraction(x) for x in theta]
        if len(theta) != self.dim:
            raise ParamError(
                "parameter length %d != %d" % (len(theta), self.dim)
            )
        cols = self.ny * self.p + self.nu * self.m
        modes = {}
        for q in self.labels:
            polys = self.modes[q]
            modes[q] = RatMatrix(
                [
                    [polys[r * cols + c].eval(theta) for c in range(cols)]
                    for r in range(self.p)
                ]
            )
        return SarxModel(ny=self.ny, nu=self.nu, p=self.p, m=self.m, modes=modes)

    # -- serialization ------------------------------------------------

    def to_json_dict(self):
        return {
            "vars": list(self.vars),
            "ny": self.ny,
            "nu": self.nu,
            "p": self.p,
            "m": self.m,
            "modes": {
                q: [f.to_json_terms() for f in self.modes[q]] for q in self.labels
            },
        }

    @classmethod
    def from_json_dict(cls, obj):
        try:
            vars = tuple(str(v) for v in obj["vars"])
            modes = {
                str(q): tuple(MultiPoly.from_json_terms(vars, t) for t in polys)
                for q, polys in obj["modes"].items()
            }
            return cls(
                vars=vars,
                ny=int(obj["ny"]),
                nu=int(obj["nu"]),
                p=int(obj["p"]),
                m=int(obj["m"]),
                modes=modes,
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParamError):
                raise
            raise ParamError("malformed parametrization JSON: %s" % exc) from exc

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


@dataclass(frozen=True)
class SymbolicTheorem2Data:
    """Symbolic coprimality data in the ring of parameters plus z.

    Specializing the parameters reproduces the numeric Theorem2Data of the
    instantiated model field by field.  phi[(q, qh)] pairs with chi[q];
    phi_next is the one-step-advanced variant used for the elimination step
    of the region computation.
    """

    ring: tuple  # parameter names followed by "z"
    z_index: int
    labels: tuple
    chi: dict
    upsilon: dict
    numerator: dict
    phi: dict
    phi_next: dict


def symbolic_theorem2(par: PolyParametrization) -> SymbolicTheorem2Data:
    if not par.is_siso():
        raise ParamError("symbolic coprimality data requires SISO")
    ny, nu = par.ny, par.nu
    if "z" in par.vars:
        raise ParamError('parameter variable named "z" collides with the indeterminate')
    ring = par.vars + ("z",)
    zi = len(par.vars)
    z = MultiPoly.variable(ring, zi)

    def lift(q, i):
        return par.coeff_poly(q, i).embed(ring)

    labels = tuple(par.labels)
    chi = {}
    upsilon = {}
    numerator = {}
    d = {}
    for q in labels:
        h = [lift(q, j) for j in range(1, ny + nu + 1)]
        ups = MultiPoly.zero(ring)
        num = MultiPoly.zero(ring)
        for j in range(1, ny + 1):
            ups = ups + h[j - 1] * z ** (ny - j)
        for j in range(1, nu + 1):
            num = num + h[ny + j - 1] * z ** (nu - j)
        chi[q] = z**ny - ups
        upsilon[q] = ups
        numerator[q] = num
        seq = [[MultiPoly.constant(ring, 1)] + [MultiPoly.zero(ring)] * (ny - 1)]
        for _ in range(nu):
            prev = seq[-1]
            top = MultiPoly.zero(ring)
            for i in range(ny):
                top = top + h[i] * prev[i]
            seq.append([top] + prev[: ny - 1])
        d[q] = seq
    phi = {}
    phi_next = {}
    for qh in labels:
        for q in labels:
            diff = [lift(q, j) - lift(qh, j) for j in range(1, ny + 1)]
            psi = [MultiPoly.constant(ring, 1)]
            for j in range(nu):
                inner = MultiPoly.zero(ring)
                for i in range(ny):
                    inner = inner + diff[i] * d[q][j][i]
                psi.append(z * psi[-1] + inner)
            acc = MultiPoly.zero(ring)
            acc_next = MultiPoly.zero(ring)
            for j in range(1, nu + 1):
                hj = lift(q, ny + j)
                acc = acc + hj * psi[nu - j]
                acc_next = acc_next + hj * psi[nu - j + 1]
            phi[(qh, q)] = acc
            phi_next[(qh, q)] = acc_next
    return SymbolicTheorem2Data(
        ring=ring,
        z_index=zi,
        labels=labels,
        chi=chi,
        upsilon=upsilon,
        numerator=numerator,
        phi=phi,
        phi_next=phi_next,
    )


@dataclass(frozen=True)
class IdentifiableRegion:
    """Region {theta : some P in s does not vanish} of strongly minimal instances."""

    vars: tuple
    s: tuple  # final reduced Groebner set
    i_a_basis: tuple
    i_b_basis: tuple
    s_a: dict  # per ordered pair: eliminated generators (reachability side)
    s_b_raw: dict  # per ordered pair: eliminated generators (observability side)
    s_b: dict  # per ordered pair: scaled generators entering I_B

    def is_empty(self):
        return all(f.is_zero() for f in self.s)

    def to_json_dict(self):
        def fmt(polys):
            return [f.to_str() for f in polys]

        return {
            "S": fmt(self.s),
            "theta_hat": "exists P in S with P(theta) != 0",
            "intermediates": {
                "I_A": fmt(self.i_a_basis),
                "I_B": fmt(self.i_b_basis),
                "S_A": {"%s,%s" % k: fmt(v) for k, v in sorted(self.s_a.items())},
                "S_B_unscaled": {
                    "%s,%s" % k: fmt(v) for k, v in sorted(self.s_b_raw.items())
                },
                "S_B": {"%s,%s" % k: fmt(v) for k, v in sorted(self.s_b.items())},
            },
        }


def procedure1(par: PolyParametrization, include_diagonal=False) -> IdentifiableRegion:
    """Compute the strongly minimal sub-parametrization region.

    Per ordered pair of distinct modes, eliminate z from the reachability
    ideal (chi with the advanced phi) and from the observability ideal (chi
    with the other mode's upsilon, scaled by the leading-coefficient
    polynomial Q), then return the reduced Groebner basis of the product of
    the two combined ideals.
    """
    if not par.vars:
        raise ParamError("region computation needs at least one parameter")
    sym = symbolic_theorem2(par)
    d = len(par.vars)
    elim_order = MonomialOrder.elimination(d + 1, [sym.z_index])
    param_order = MonomialOrder.grevlex(d)

    def eliminate(f, g):
        ideal = Ideal([f, g], elim_order)
        return [poly for poly in elimination_ideal(ideal, [sym.z_index])]

    ny, nu = par.ny, par.nu
    s_a = {}
    s_b_raw = {}
    s_b = {}
    pairs = [
        (q, qh)
        for q in sym.labels
        for qh in sym.labels
        if include_diagonal or q != qh
    ]
    for q, qh in pairs:
        s_a[(q, qh)] = eliminate(sym.chi[q], sym.phi_next[(q, qh)])
        raw = eliminate(sym.chi[q], sym.upsilon[qh])
        s_b_raw[(q, qh)] = raw
        n_q_top = par.coeff_poly(q, ny + nu)
        scale = n_q_top * (
            par.coeff_poly(qh, ny) * n_q_top
            - par.coeff_poly(q, ny) * par.coeff_poly(qh, ny + nu)
        )
        s_b[(q, qh)] = [f * scale for f in raw]

    gens_a = [f for polys in s_a.values() for f in polys]
    gens_b = [f for polys in s_b.values() for f in polys]
    i_a = buchberger(gens_a, param_order)
    i_b = buchberger(gens_b, param_order)
    product = [f * g for f in i_a for g in i_b]
    s = buchberger(product, param_order)
    return IdentifiableRegion(
        vars=par.vars,
        s=tuple(s),
        i_a_basis=tuple(i_a),
        i_b_basis=tuple(i_b),
        s_a=s_a,
        s_b_raw=s_b_raw,
        s_b=s_b,
    )


def verify_region_membership(region: IdentifiableRegion, theta) -> bool:
    theta = [Fraction(x) for x in theta]
    if len(theta) != len(region.vars):
        raise ParamError(
            "parameter length %d != %d" % (len(theta), len(region.vars))
        )
    return any(f.eval(theta) != 0 for f in region.s)


@dataclass(frozen=True)
class InjectivityEvidence:
    """kind: "injective-affine", "collision", "no-collision-found", "assumed"."""

    kind: str
    collision: tuple | None = None  # (theta1, theta2) when kind == "collision"

    def is_affirmative(self):
        return self.kind in ("injective-affine", "assumed")

    def to_json_dict(self):
        out = {"kind": self.kind}
        if self.collision is not None:
            out["collision"] = [
                [str(x) for x in theta] for theta in self.collision
            ]
        return out


def _affine_linear_part(par: PolyParametrization):
    """Rows of linear coefficients if every coefficient poly is affine, else None."""
    rows = []
    for q in par.labels:
        for f in par.modes[q]:
            if f.total_degree() > 1:
                return None
            row = []
            for i in range(par.dim):
                exp = tuple(1 if j == i else 0 for j in range(par.dim))
                row.append(f.terms.get(exp, _ZERO))
            rows.append(row)
    return RatMatrix(rows) if rows else None


def injectivity_probe(par: PolyParametrization, trials=100, seed=0) -> InjectivityEvidence:
    """Exact proof for affine maps, randomized refutation otherwise.

    For an affine parametrization injectivity equals full column rank of the
    linear part; a rank defect yields an explicit collision.  For general
    polynomials the probe samples parameter pairs and sign flips; absence of
    a collision is inconclusive.
    """
    linear = _affine_linear_part(par)
    if linear is not None:
        if linear.rank() == par.dim:
            return InjectivityEvidence(kind="injective-affine")
        kern = linear.kernel_basis()[0]
        theta1 = tuple(_ZERO for _ in range(par.dim))
        theta2 = tuple(kern[i, 0] for i in range(par.dim))
        return InjectivityEvidence(kind="collision", collision=(theta1, theta2))
    rng = random.Random(seed)

    def sample():
        return tuple(
            Fraction(rng.randint(-10, 10), rng.randint(1, 3)) for _ in range(par.dim)
        )

    for _ in range(trials):
        theta1 = sample()
        for theta2 in (tuple(-x for x in theta1), sample()):
            if theta1 == theta2:
                continue
            if par.instantiate(theta1) == par.instantiate(theta2):
                return InjectivityEvidence(
                    kind="collision", collision=(theta1, theta2)
                )
    return InjectivityEvidence(kind="no-collision-found")


def genericity_witness(par: PolyParametrization, samples=20, seed=0):
    """First sampled theta whose instance is strongly minimal, or None.

    A single witness certifies generic strong minimality of the family.
    Returns (theta or None, attempts).
    """
    rng = random.Random(seed)
    for attempt in range(1, samples + 1):
        theta = tuple(
            Fraction(rng.randint(-10, 10), rng.randint(1, 3)) for _ in range(par.dim)
        )
        model = par.instantiate(theta)
        if check_strong_minimality(model, method="exact-rank").strong_minimal:
            return theta, attempt
    return None, samples


@dataclass(frozen=True)
class IdentifiabilityReport:
    identifiable: bool
    region_nonempty: bool
    injectivity: InjectivityEvidence
    missing: tuple

    def to_json_dict(self):
        return {
            "identifiable": self.identifiable,
            "region_nonempty": self.region_nonempty,
            "injectivity": self.injectivity.to_json_dict(),
            "missing_hypotheses": list(self.missing),
        }


def identifiability_verdict(
    par: PolyParametrization,
    region: IdentifiableRegion,
    injectivity: InjectivityEvidence,
) -> IdentifiabilityReport:
    """Identifiability of the family restricted to the computed region.

    The restriction is strongly minimal wherever some region polynomial is
    nonzero, so identifiability follows once injectivity is established.
    """
    if not par.is_siso():
        raise ParamError("identifiability verdicts require SISO")
    missing = []
    nonempty = not region.is_empty()
    if not nonempty:
        missing.append("region of strongly minimal instances is empty")
    if injectivity.kind == "collision":
        missing.append("parametrization is not injective")
    elif not injectivity.is_affirmative():
        missing.append("injectivity is unproven")
    return IdentifiabilityReport(
        identifiable=not missing,
        region_nonempty=nonempty,
        injectivity=injectivity,
        missing=tuple(missing),
    )
