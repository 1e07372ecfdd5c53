"""Strong minimality of SISO switched ARX models.

Two routes are offered.  The exact route embeds the model into its switched
state-space form and checks span-reachability and observability by rank.
The coprimality route evaluates a pair of sufficient conditions on
polynomials built from the mode coefficients: a characteristic polynomial
chi_q per mode, an observability polynomial upsilon_q per mode, and a
cross-mode family phi built through the psi recursion.  The coprimality
route is sound but not complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import RatMatrix
from .lss import associated_lss, is_minimal_lss
from .rationals import format_rational
from .sarx import SarxModel, SarxError, arx_is_minimal, equivalent_on_samples
from .unipoly import UniPoly, is_coprime

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Theorem2Data:
    """Polynomial data backing the sufficient strong-minimality conditions.

    chi[q]           monic z^ny - sum h_q^j z^(ny-j)
    upsilon[q]       sum_{j<=ny} h_q^j z^(ny-j)
    numerator[q]     sum_{j<=nu} h_q^(ny+j) z^(nu-j)
    d[q][j]          column vectors with d[q][j] = A_q^j e_1, j = 0..nu
    psi[(qh,q)][j]   monic degree-j polynomials with psi_j(A_qh) e_1 = A_q^j e_1
    phi[(qh,q)]      sum_j h_q^(ny+j) psi_(nu-j); phi(A_qh) e_1 = A_q^nu B
    phi_next[(qh,q)] sum_j h_q^(ny+j) psi_(nu-j+1); represents A_q^(nu+1) B
    """

    ny: int
    nu: int
    labels: tuple
    chi: dict
    upsilon: dict
    numerator: dict
    d: dict
    psi: dict
    phi: dict
    phi_next: dict


def theorem2_polynomials(model: SarxModel) -> Theorem2Data:
    if not model.is_siso():
        raise SarxError("coprimality conditions are defined for SISO models")
    ny, nu = model.ny, model.nu
    labels = tuple(model.labels)
    chi = {}
    upsilon = {}
    numerator = {}
    d = {}
    for q in labels:
        h = [model.coeff(q, j) for j in range(1, ny + nu + 1)]
        chi[q] = UniPoly.monomial(ny) - UniPoly(
            [h[ny - 1 - k] for k in range(ny)]
        )
        upsilon[q] = UniPoly([h[ny - 1 - k] for k in range(ny)])
        numerator[q] = UniPoly([h[ny + nu - 1 - k] for k in range(nu)])
        seq = [RatMatrix.column([1] + [0] * (ny - 1))]
        for _ in range(nu):
            prev = seq[-1]
            top = sum(
                (h[i] * prev[i, 0] for i in range(ny)), _ZERO
            )
            seq.append(
                RatMatrix.column([top] + [prev[i, 0] for i in range(ny - 1)])
            )
        d[q] = seq
    psi = {}
    phi = {}
    phi_next = {}
    for qh in labels:
        for q in labels:
            diff = [
                model.coeff(q, j) - model.coeff(qh, j) for j in range(1, ny + 1)
            ]
            seq = [UniPoly.one()]
            for j in range(nu):
                dj = d[q][j]
                inner = sum((diff[i] * dj[i, 0] for i in range(ny)), _ZERO)
                seq.append(seq[-1].shift(1) + UniPoly.constant(inner))
            psi[(qh, q)] = seq
            acc = UniPoly.zero()
            acc_next = UniPoly.zero()
            for j in range(1, nu + 1):
                hj = model.coeff(q, ny + j)
                acc = acc + hj * seq[nu - j]
                acc_next = acc_next + hj * seq[nu - j + 1]
            phi[(qh, q)] = acc
            phi_next[(qh, q)] = acc_next
    return Theorem2Data(
        ny=ny,
        nu=nu,
        labels=labels,
        chi=chi,
        upsilon=upsilon,
        numerator=numerator,
        d=d,
        psi=psi,
        phi=phi,
        phi_next=phi_next,
    )


def gamma_polynomials(model: SarxModel, q):
    """Polynomials gamma_1..gamma_nu with e_{ny+j}^T = e_ny^T chi_q(A_q) gamma_j(A_q).

    Defined by gamma_1 = z^(nu-1) / h^(ny+nu) and
    gamma_i = (z^(nu-i) - sum_{j<i} gamma_j h^(ny+nu-i+j)) / h^(ny+nu);
    requires the leading input coefficient h_q^(ny+nu) to be nonzero.
    """
    ny, nu = model.ny, model.nu
    top = model.coeff(q, ny + nu)
    if top == 0:
        raise SarxError("leading input coefficient of mode %r is zero" % (q,))
    gammas = []
    for i in range(1, nu + 1):
        acc = UniPoly.monomial(nu - i)
        for j in range(1, i):
            acc = acc - model.coeff(q, ny + nu - i + j) * gammas[j - 1]
        gammas.append((1 / top) * acc)
    return gammas


def ordered_pairs(labels, include_diagonal=False):
    return [
        (a, b)
        for a in labels
        for b in labels
        if include_diagonal or a != b
    ]


def check_condition_a(data: Theorem2Data, include_diagonal=False):
    """First ordered pair (q0, q1) with chi_q0 coprime to phi_(q0,q1), or None."""
    for q0, q1 in ordered_pairs(data.labels, include_diagonal):
        p = data.phi[(q0, q1)]
        if p.is_zero():
            continue
        if is_coprime(data.chi[q0], p):
            return (q0, q1)
    return None


def condition_b_scalar(model: SarxModel, q2, q3):
    """h_q3^ny - (h_q3^(ny+nu) / h_q2^(ny+nu)) h_q2^ny; needs the divisor nonzero."""
    ny, nu = model.ny, model.nu
    top2 = model.coeff(q2, ny + nu)
    if top2 == 0:
        raise SarxError("leading input coefficient of mode %r is zero" % (q2,))
    return model.coeff(q3, ny) - model.coeff(q3, ny + nu) * model.coeff(q2, ny) / top2


def check_condition_b(data: Theorem2Data, model: SarxModel):
    """First pair (q2, q3), q2 != q3, passing all three clauses, or None."""
    ny, nu = model.ny, model.nu
    for q2, q3 in ordered_pairs(data.labels, include_diagonal=False):
        if model.coeff(q2, ny + nu) == 0:
            continue
        ups = data.upsilon[q3]
        if ups.is_zero() or not is_coprime(ups, data.chi[q2]):
            continue
        if condition_b_scalar(model, q2, q3) != 0:
            return (q2, q3)
    return None


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of a strong-minimality check.

    strong_minimal is None when only the sufficient conditions were run and
    they failed (the conditions are not necessary, so nothing follows).
    """

    method: str
    strong_minimal: bool | None
    condition_a_witness: tuple | None = None
    condition_b_witness: tuple | None = None
    condition_b_value: Fraction | None = None
    sufficient_holds: bool | None = None
    reachable_dim: int | None = None
    unobservable_dim: int | None = None
    state_dim: int | None = None

    def to_json_dict(self):
        out = {
            "method": self.method,
            "strong_minimal": self.strong_minimal,
        }
        if self.sufficient_holds is not None:
            out["sufficient_conditions"] = {
                "hold": self.sufficient_holds,
                "A": {
                    "holds": self.condition_a_witness is not None,
                    "witness": list(self.condition_a_witness)
                    if self.condition_a_witness
                    else None,
                },
                "B": {
                    "holds": self.condition_b_witness is not None,
                    "witness": list(self.condition_b_witness)
                    if self.condition_b_witness
                    else None,
                    "scalar": format_rational(self.condition_b_value)
                    if self.condition_b_value is not None
                    else None,
                },
            }
        if self.reachable_dim is not None:
            out["certificates"] = {
                "reachable_dim": self.reachable_dim,
                "unobservable_dim": self.unobservable_dim,
                "state_dim": self.state_dim,
            }
        return out


def check_strong_minimality(
    model: SarxModel, method="exact-rank", include_diagonal_pairs=False
) -> MinimalityVerdict:
    if method not in ("exact-rank", "theorem2", "both"):
        raise ValueError("unknown method %r" % method)
    wa = wb = None
    value = None
    sufficient = None
    if method in ("theorem2", "both"):
        data = theorem2_polynomials(model)
        wa = check_condition_a(data, include_diagonal=include_diagonal_pairs)
        wb = check_condition_b(data, model)
        if wb is not None:
            value = condition_b_scalar(model, *wb)
        sufficient = wa is not None and wb is not None
    cert = None
    if method in ("exact-rank", "both"):
        cert = is_minimal_lss(associated_lss(model))
    if method == "theorem2":
        strong = True if sufficient else None
    else:
        strong = cert.minimal
        if sufficient and not strong:
            raise AssertionError(
                "sufficient conditions held on a non-minimal system; "
                "this contradicts their soundness"
            )
    return MinimalityVerdict(
        method=method,
        strong_minimal=strong,
        condition_a_witness=wa,
        condition_b_witness=wb,
        condition_b_value=value,
        sufficient_holds=sufficient,
        reachable_dim=cert.reachable_dim if cert else None,
        unobservable_dim=cert.unobservable_dim if cert else None,
        state_dim=cert.state_dim if cert else None,
    )


def sarx_minimality_sufficient(model: SarxModel):
    """One-sided minimality certificate for SISO models.

    Returns ("minimal-certified", reason) when some single-mode ARX is
    minimal or the model is strongly minimal; otherwise ("unknown", None).
    Plain minimality has no complete decision procedure here.
    """
    if not model.is_siso():
        raise SarxError("minimality certificates are defined for SISO models")
    for q in model.labels:
        if arx_is_minimal(model, q):
            return ("minimal-certified", "mode %s has a minimal ARX subsystem" % q)
    if check_strong_minimality(model, method="exact-rank").strong_minimal:
        return ("minimal-certified", "the associated switched state-space system is minimal")
    return ("unknown", None)


def check_type_consistency(a: SarxModel, b: SarxModel, seed=0) -> bool:
    """Diagnostic: two minimal, sample-equivalent models must share a type.

    Returns False only when both are certified minimal, agree on sampled
    traces, and still disagree on (n_y, n_u); that combination signals an
    internal inconsistency.
    """
    if (a.ny, a.nu) == (b.ny, b.nu):
        return True
    if sarx_minimality_sufficient(a)[0] != "minimal-certified":
        return True
    if sarx_minimality_sufficient(b)[0] != "minimal-certified":
        return True
    if not equivalent_on_samples(a, b, seed=seed):
        return True
    return False
