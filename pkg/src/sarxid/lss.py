"""Linear switched state-space systems and the companion embedding of SARX.

The embedding keeps the full regressor as state: the top block rows of each
A_q reproduce the output recursion, the remaining block rows shift old
outputs and inputs down, and B_q injects the fresh input.  The state at
time t therefore equals the regressor, so output traces match the switched
ARX model exactly.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import RatMatrix, Subspace, solve_affine
from .sarx import HybridWord, SarxModel, SarxError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LssError(ValueError):
    pass


@dataclass(frozen=True)
class LssMode:
    a: RatMatrix
    b: RatMatrix
    c: RatMatrix


@dataclass(frozen=True)
class Lss:
    n: int
    m: int
    p: int
    modes: dict  # label -> LssMode
    x0: RatMatrix  # n x 1

    def __post_init__(self):
        if not self.modes:
            raise LssError("mode set must be nonempty")
        if self.x0.shape != (self.n, 1):
            raise LssError("x0 must be an n x 1 column")
        for q, md in self.modes.items():
            if md.a.shape != (self.n, self.n):
                raise LssError("mode %r: A must be %d x %d" % (q, self.n, self.n))
            if md.b.shape != (self.n, self.m):
                raise LssError("mode %r: B must be %d x %d" % (q, self.n, self.m))
            if md.c.shape != (self.p, self.n):
                raise LssError("mode %r: C must be %d x %d" % (q, self.p, self.n))

    @property
    def labels(self):
        return sorted(self.modes)

    def to_json_dict(self):
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "modes": {
                q: {
                    "A": self.modes[q].a.to_strings(),
                    "B": self.modes[q].b.to_strings(),
                    "C": self.modes[q].c.to_strings(),
                }
                for q in self.labels
            },
            "x0": [row[0] for row in self.x0.to_strings()],
        }

    @classmethod
    def from_json_dict(cls, obj):
        try:
            modes = {
                str(q): LssMode(
                    a=RatMatrix.from_strings(md["A"]),
                    b=RatMatrix.from_strings(md["B"]),
                    c=RatMatrix.from_strings(md["C"]),
                )
                for q, md in obj["modes"].items()
            }
            x0 = RatMatrix.from_strings([[x] for x in obj["x0"]])
            return cls(
                n=int(obj["n"]), m=int(obj["m"]), p=int(obj["p"]), modes=modes, x0=x0
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, LssError):
                raise
            raise LssError("malformed LSS JSON: %s" % exc) from exc

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


def associated_lss(model: SarxModel) -> Lss:
    """Companion-style state-space embedding with the regressor as state."""
    ny, nu, p, m = model.ny, model.nu, model.p, model.m
    n = p * ny + m * nu
    modes = {}
    for q in model.labels:
        a = [[_ZERO] * n for _ in range(n)]
        h = model.modes[q]
        # top block: next state's newest output is h_q applied to the state
        for i in range(p):
            for j in range(n):
                a[i][j] = h[i, j]
        # output shift: block row i copies output block i-1
        for blk in range(1, ny):
            for i in range(p):
                a[blk * p + i][(blk - 1) * p + i] = _ONE
        # input shift: block row ny+blk copies input block blk-1
        for blk in range(1, nu):
            for i in range(m):
                a[ny * p + blk * m + i][ny * p + (blk - 1) * m + i] = _ONE
        b = [[_ZERO] * m for _ in range(n)]
        for i in range(m):
            b[ny * p + i][i] = _ONE
        modes[q] = LssMode(a=RatMatrix(a), b=RatMatrix(b), c=h)
    return Lss(n=n, m=m, p=p, modes=modes, x0=RatMatrix.zeros(n, 1))


def simulate_lss(sys: Lss, word: HybridWord):
    """Output trace y_t = C_{q_t} x_t with x_{t+1} = A_{q_t} x_t + B_{q_t} u_t."""
    x = sys.x0
    outputs = []
    for q, u in word:
        if q not in sys.modes:
            raise LssError("unknown mode label %r" % q)
        if len(u) != sys.m:
            raise LssError("input dimension %d != m=%d" % (len(u), sys.m))
        md = sys.modes[q]
        y = md.c @ x
        outputs.append(tuple(y[i, 0] for i in range(sys.p)))
        x = md.a @ x + md.b @ RatMatrix.column(u)
    return outputs


def reachable_span(sys: Lss) -> Subspace:
    """Smallest subspace containing x0 and all B columns, invariant under every A_q."""
    seeds = [] if sys.x0.is_zero() else [sys.x0]
    for q in sys.labels:
        b = sys.modes[q].b
        seeds.extend(b.column_matrix(j) for j in range(b.cols))
    space = Subspace(sys.n, seeds)
    while True:
        new = space.union(
            [
                (sys.modes[q].a @ v)
                for q in sys.labels
                for v in space.basis_columns()
            ]
        )
        if new.dim == space.dim:
            return space
        space = new


def unobservable_space(sys: Lss) -> Subspace:
    """Largest A_q-invariant subspace inside the joint kernel of the C_q.

    Computed dually: stack rows C_q, C_q A_r, ... until the row rank stops
    growing, then take the kernel of the stack.
    """
    base = RatMatrix.vstack([sys.modes[q].c for q in sys.labels])
    stack = base
    while True:
        grown = RatMatrix.vstack(
            [base] + [stack @ sys.modes[q].a for q in sys.labels]
        )
        if grown.rank() == stack.rank():
            return Subspace(sys.n, stack.kernel_basis())
        stack = grown


@dataclass(frozen=True)
class LssMinimalityCertificate:
    minimal: bool
    reachable_dim: int
    unobservable_dim: int
    state_dim: int

    def to_json_dict(self):
        return {
            "minimal": self.minimal,
            "reachable_dim": self.reachable_dim,
            "unobservable_dim": self.unobservable_dim,
            "state_dim": self.state_dim,
        }


def is_minimal_lss(sys: Lss) -> LssMinimalityCertificate:
    """Minimal iff span-reachable (full reachable span) and observable."""
    r = reachable_span(sys).dim
    u = unobservable_space(sys).dim
    return LssMinimalityCertificate(
        minimal=(r == sys.n and u == 0),
        reachable_dim=r,
        unobservable_dim=u,
        state_dim=sys.n,
    )


@dataclass(frozen=True)
class IsoSolution:
    """Solution set of the exact intertwining system between two systems.

    kind is one of "none", "unique-identity", "unique-other",
    "affine-family".  witness, when present, is an invertible solution;
    family_dim is the dimension of the affine solution set.
    """

    kind: str
    witness: RatMatrix | None
    family_dim: int

    def to_json_dict(self):
        out = {"kind": self.kind, "family_dim": self.family_dim}
        out["witness"] = self.witness.to_strings() if self.witness is not None else None
        return out


def find_isomorphisms(a: Lss, b: Lss, seed=0) -> IsoSolution:
    """Solve {S A_q = A'_q S, S B_q = B'_q, C'_q S = C_q, S x0 = x0'} for S.

    The unknown S is n x n.  A solution family is classified by sampling one
    generic point and certifying invertibility with an exact determinant.
    """
    if (a.n, a.m, a.p) != (b.n, b.m, b.p) or a.labels != b.labels:
        raise LssError("systems must share dimensions and mode labels")
    n = a.n

    def s_index(i, j):
        return i * n + j

    rows = []
    rhs = []

    def add_equation(coeffs, value):
        rows.append(coeffs)
        rhs.append(value)

    for q in a.labels:
        ma, mb = a.modes[q], b.modes[q]
        # S A_q - A'_q S = 0, entrywise
        for i in range(n):
            for j in range(n):
                coeffs = [_ZERO] * (n * n)
                for k in range(n):
                    coeffs[s_index(i, k)] += ma.a[k, j]
                    coeffs[s_index(k, j)] -= mb.a[i, k]
                add_equation(coeffs, _ZERO)
        # S B_q = B'_q
        for i in range(n):
            for j in range(a.m):
                coeffs = [_ZERO] * (n * n)
                for k in range(n):
                    coeffs[s_index(i, k)] = ma.b[k, j]
                add_equation(coeffs, mb.b[i, j])
        # C'_q S = C_q
        for i in range(a.p):
            for j in range(n):
                coeffs = [_ZERO] * (n * n)
                for k in range(n):
                    coeffs[s_index(k, j)] = mb.c[i, k]
                add_equation(coeffs, ma.c[i, j])
    # S x0 = x0'
    for i in range(n):
        coeffs = [_ZERO] * (n * n)
        for k in range(n):
            coeffs[s_index(i, k)] = a.x0[k, 0]
        add_equation(coeffs, b.x0[i, 0])

    solution = solve_affine(RatMatrix(rows), RatMatrix.column(rhs))
    if solution is None:
        return IsoSolution(kind="none", witness=None, family_dim=-1)
    particular, kernel = solution

    def unflatten(vec):
        return RatMatrix(
            [[vec[s_index(i, j), 0] for j in range(n)] for i in range(n)]
        )

    if not kernel:
        s = unflatten(particular)
        if s.determinant() == 0:
            return IsoSolution(kind="none", witness=None, family_dim=0)
        if s == RatMatrix.identity(n):
            return IsoSolution(kind="unique-identity", witness=s, family_dim=0)
        return IsoSolution(kind="unique-other", witness=s, family_dim=0)

    rng = random.Random(seed)
    witness = None
    for _ in range(20):
        vec = particular
        for kv in kernel:
            vec = vec + kv.scale(Fraction(rng.randint(-9, 9)))
        s = unflatten(vec)
        if s.determinant() != 0:
            witness = s
            break
    return IsoSolution(kind="affine-family", witness=witness, family_dim=len(kernel))
