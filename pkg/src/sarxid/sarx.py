"""Switched ARX models and their exact input-output simulation.

A model of type (n_y, n_u) holds one coefficient matrix h_q per discrete
mode; the output at time t is h_{q_t} applied to the regressor stacking the
last n_y outputs and n_u inputs, with everything before time 0 taken as
zero.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import RatMatrix
from .rationals import format_rational, parse_rational
from .unipoly import UniPoly, uni_gcd

_ZERO = Fraction(0)


class SarxError(ValueError):
    pass


@dataclass(frozen=True)
class SarxModel:
    ny: int
    nu: int
    p: int
    m: int
    modes: dict  # label -> RatMatrix, p x (ny*p + nu*m)

    def __post_init__(self):
        if not (0 < self.nu <= self.ny):
            raise SarxError("need 0 < n_u <= n_y, got (%d, %d)" % (self.ny, self.nu))
        if self.p < 1 or self.m < 1:
            raise SarxError("need positive input/output dimensions")
        if not self.modes:
            raise SarxError("mode set must be nonempty")
        width = self.ny * self.p + self.nu * self.m
        for q, h in self.modes.items():
            if h.shape != (self.p, width):
                raise SarxError(
                    "mode %r has shape %s, expected %s"
                    % (q, h.shape, (self.p, width))
                )

    @property
    def dim(self):
        return self.p * self.ny + self.nu * self.m

    @property
    def labels(self):
        return sorted(self.modes)

    def is_siso(self):
        return self.p == 1 and self.m == 1

    def coeff(self, q, i):
        """SISO scalar coefficient h_q^i, 1-based as in the recursions."""
        if not self.is_siso():
            raise SarxError("scalar coefficient access requires a SISO model")
        return self.modes[q][0, i - 1]

    def block(self, q, i):
        """Block h_q^i (p x p for i <= n_y, else p x m), 1-based."""
        h = self.modes[q]
        if i <= self.ny:
            start = (i - 1) * self.p
            width = self.p
        else:
            start = self.ny * self.p + (i - self.ny - 1) * self.m
            width = self.m
        return RatMatrix([[h[r, start + c] for c in range(width)] for r in range(self.p)])

    # -- serialization ------------------------------------------------

    def to_json_dict(self):
        return {
            "ny": self.ny,
            "nu": self.nu,
            "p": self.p,
            "m": self.m,
            "modes": {q: self.modes[q].to_strings() for q in self.labels},
        }

    @classmethod
    def from_json_dict(cls, obj):
        try:
            modes = {
                str(q): RatMatrix.from_strings(rows)
                for q, rows in obj["modes"].items()
            }
            return cls(
                ny=int(obj["ny"]),
                nu=int(obj["nu"]),
                p=int(obj["p"]),
                m=int(obj["m"]),
                modes=modes,
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SarxError):
                raise
            raise SarxError("malformed SARX JSON: %s" % exc) from exc

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


@dataclass(frozen=True)
class ArxMode:
    """SISO per-mode transfer data: numerator N_q and monic denominator chi_q."""

    numerator: UniPoly
    denominator: UniPoly


class HybridWord:
    """Finite sequence of (mode label, input vector) pairs, time-indexed from 0."""

    __slots__ = ("steps",)

    def __init__(self, steps):
        self.steps = [
            (str(q), tuple(Fraction(x) for x in u)) for q, u in steps
        ]
        if not self.steps:
            raise SarxError("hybrid word must be nonempty")

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_json_dict(self):
        return {
            "steps": [
                {"q": q, "u": [format_rational(x) for x in u]} for q, u in self.steps
            ]
        }

    @classmethod
    def from_json_dict(cls, obj):
        try:
            return cls(
                [(s["q"], [parse_rational(x) for x in s["u"]]) for s in obj["steps"]]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SarxError("malformed word JSON: %s" % exc) from exc

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


def regressor(model: SarxModel, outputs, inputs, t):
    """Regressor phi_t from output/input history, zero-padded before time 0."""
    entries = []
    for k in range(1, model.ny + 1):
        j = t - k
        y = outputs[j] if j >= 0 else (_ZERO,) * model.p
        entries.extend(y)
    for k in range(1, model.nu + 1):
        j = t - k
        u = inputs[j] if j >= 0 else (_ZERO,) * model.m
        entries.extend(u)
    return RatMatrix.column(entries)


def simulate_sarx(model: SarxModel, word: HybridWord):
    """Exact output trace y_0..y_t for the hybrid word."""
    outputs = []
    inputs = []
    for q, u in word:
        if q not in model.modes:
            raise SarxError("unknown mode label %r" % q)
        if len(u) != model.m:
            raise SarxError("input dimension %d != m=%d" % (len(u), model.m))
        phi = regressor(model, outputs, inputs, len(outputs))
        y = model.modes[q] @ phi
        outputs.append(tuple(y[i, 0] for i in range(model.p)))
        inputs.append(u)
    return outputs


def arx_transfer(model: SarxModel, q) -> ArxMode:
    """Per-mode transfer data (N_q, chi_q); no common-factor cancellation."""
    if not model.is_siso():
        raise SarxError("transfer functions are defined for SISO models only")
    chi = [-model.coeff(q, model.ny - k) for k in range(model.ny)] + [Fraction(1)]
    num = [model.coeff(q, model.ny + model.nu - k) for k in range(model.nu)]
    return ArxMode(numerator=UniPoly(num), denominator=UniPoly(chi))


def arx_is_minimal(model: SarxModel, q) -> bool:
    """Lone-mode ARX minimality: numerator and denominator coprime."""
    tf = arx_transfer(model, q)
    if tf.numerator.is_zero():
        return False
    return uni_gcd(tf.numerator, tf.denominator) == UniPoly.one()


def reduce_trailing_zero(model: SarxModel) -> SarxModel:
    """Drop the last input coefficient when it vanishes in every mode."""
    if not model.is_siso():
        raise SarxError("trailing-zero reduction implemented for SISO models")
    if model.nu < 2:
        raise SarxError("n_u must be at least 2 to reduce")
    last = model.ny + model.nu
    if any(model.coeff(q, last) != 0 for q in model.labels):
        raise SarxError("last coefficient is not zero in every mode")
    modes = {
        q: RatMatrix([[model.modes[q][0, j] for j in range(last - 1)]])
        for q in model.modes
    }
    return SarxModel(ny=model.ny, nu=model.nu - 1, p=1, m=1, modes=modes)


def random_word(labels, m, horizon, rng, lo=-3, hi=3):
    return HybridWord(
        [
            (rng.choice(labels), [Fraction(rng.randint(lo, hi)) for _ in range(m)])
            for _ in range(horizon)
        ]
    )


def equivalent_on_samples(a: SarxModel, b: SarxModel, trials=20, horizon=None, seed=0):
    """Randomized necessary test for equivalence: exact trace agreement.

    A `False` is a proof of inequivalence; `True` only says no sampled word
    separated the two models.
    """
    if a.p != b.p or a.m != b.m:
        raise SarxError("models have different input/output dimensions")
    labels = sorted(set(a.labels) | set(b.labels))
    if any(q not in a.modes or q not in b.modes for q in labels):
        raise SarxError("mode sets differ")
    if horizon is None:
        horizon = 2 * (max(a.ny, b.ny) + max(a.nu, b.nu)) + 2
    rng = random.Random(seed)
    for _ in range(trials):
        w = random_word(labels, a.m, horizon, rng)
        if simulate_sarx(a, w) != simulate_sarx(b, w):
            return False
    return True
