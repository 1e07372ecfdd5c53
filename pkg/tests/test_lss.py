import json
import random
from fractions import Fraction

import pytest

from conftest import fixture_path, random_lss, random_mimo_model, random_siso_model
from oracles import brute_force_reachable, brute_force_unobservable
from sarxid import (
    Lss,
    LssError,
    LssMode,
    RatMatrix,
    SarxModel,
    associated_lss,
    find_isomorphisms,
    is_minimal_lss,
    reachable_span,
    simulate_lss,
    simulate_sarx,
    unobservable_space,
)
from sarxid.sarx import random_word


def test_embedding_matrices_on_reference_model():
    m = SarxModel.load(fixture_path("example3.json"))
    sys = associated_lss(m)
    a1 = sys.modes["1"].a
    assert a1.to_lists() == [
        [8, -15, 1, -3],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 1, 0],
    ]
    assert sys.modes["1"].b.to_lists() == [[0], [0], [1], [0]]
    assert sys.modes["1"].c == m.modes["1"]
    assert sys.x0.is_zero()


def test_embedding_trace_equivalence(rng):
    for _ in range(20):
        m = random_siso_model(rng)
        sys = associated_lss(m)
        w = random_word(m.labels, 1, 15, rng)
        assert simulate_lss(sys, w) == simulate_sarx(m, w)
    for _ in range(10):
        m = random_mimo_model(rng)
        sys = associated_lss(m)
        w = random_word(m.labels, m.m, 15, rng)
        assert simulate_lss(sys, w) == simulate_sarx(m, w)


def test_embedding_state_is_regressor(rng):
    from sarxid.sarx import regressor

    m = random_mimo_model(rng)
    sys = associated_lss(m)
    w = random_word(m.labels, m.m, 8, rng)
    x = sys.x0
    outputs = []
    inputs = []
    for q, u in w:
        assert x == regressor(m, outputs, inputs, len(outputs))
        y = sys.modes[q].c @ x
        outputs.append(tuple(y[i, 0] for i in range(m.p)))
        inputs.append(u)
        x = sys.modes[q].a @ x + sys.modes[q].b @ RatMatrix.column(u)


def test_subspaces_match_brute_force(rng):
    for _ in range(25):
        sys = random_lss(rng, max_n=4, max_modes=3)
        assert reachable_span(sys) == brute_force_reachable(sys)
        assert unobservable_space(sys) == brute_force_unobservable(sys)


def test_minimality_certificate_dimensions(rng):
    sys = random_lss(rng, max_n=4)
    cert = is_minimal_lss(sys)
    assert cert.state_dim == sys.n
    assert cert.minimal == (cert.reachable_dim == sys.n and cert.unobservable_dim == 0)


def test_json_roundtrip(rng):
    sys = random_lss(rng)
    again = Lss.from_json_dict(json.loads(json.dumps(sys.to_json_dict())))
    assert again == sys


def test_self_isomorphism_identity_on_reference_model():
    sys = associated_lss(SarxModel.load(fixture_path("example3.json")))
    sol = find_isomorphisms(sys, sys)
    assert sol.kind == "unique-identity"
    assert sol.witness == RatMatrix.identity(sys.n)


def test_isomorphism_found_under_conjugation(rng):
    m = random_siso_model(rng, nonzero_top=True)
    sys = associated_lss(m)
    n = sys.n
    # random invertible T with T x0 = x0 = 0
    while True:
        t = RatMatrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if t.determinant() != 0:
            break
    ti_cols = []
    from sarxid import solve_affine

    for j in range(n):
        e = RatMatrix.column([1 if i == j else 0 for i in range(n)])
        ti_cols.append(solve_affine(t, e)[0])
    t_inv = RatMatrix.hstack(ti_cols)
    conj = Lss(
        n=n, m=1, p=1,
        modes={
            q: LssMode(
                a=t @ sys.modes[q].a @ t_inv,
                b=t @ sys.modes[q].b,
                c=sys.modes[q].c @ t_inv,
            )
            for q in sys.labels
        },
        x0=t @ sys.x0,
    )
    sol = find_isomorphisms(sys, conj)
    assert sol.kind in ("unique-other", "unique-identity", "affine-family")
    assert sol.witness is not None
    s = sol.witness
    for q in sys.labels:
        assert s @ sys.modes[q].a == conj.modes[q].a @ s
        assert s @ sys.modes[q].b == conj.modes[q].b
        assert conj.modes[q].c @ s == sys.modes[q].c


def test_no_isomorphism_between_inequivalent_systems():
    a = Lss(
        n=1, m=1, p=1,
        modes={"1": LssMode(a=RatMatrix([[1]]), b=RatMatrix([[1]]), c=RatMatrix([[1]]))},
        x0=RatMatrix.zeros(1, 1),
    )
    b = Lss(
        n=1, m=1, p=1,
        modes={"1": LssMode(a=RatMatrix([[2]]), b=RatMatrix([[1]]), c=RatMatrix([[1]]))},
        x0=RatMatrix.zeros(1, 1),
    )
    assert find_isomorphisms(a, b).kind == "none"


def test_zero_systems_affine_family():
    z = RatMatrix.zeros(2, 2)
    mode = LssMode(a=z, b=RatMatrix.zeros(2, 1), c=RatMatrix.zeros(1, 2))
    sys = Lss(n=2, m=1, p=1, modes={"1": mode}, x0=RatMatrix.zeros(2, 1))
    sol = find_isomorphisms(sys, sys)
    assert sol.kind == "affine-family"
    assert sol.family_dim == 4
    assert sol.witness is not None and sol.witness.determinant() != 0


def test_shape_mismatch_rejected(rng):
    a = random_lss(rng, max_n=2, max_modes=1)
    b = Lss(
        n=a.n + 1, m=a.m, p=a.p,
        modes={
            q: LssMode(
                a=RatMatrix.zeros(a.n + 1, a.n + 1),
                b=RatMatrix.zeros(a.n + 1, a.m),
                c=RatMatrix.zeros(a.p, a.n + 1),
            )
            for q in a.labels
        },
        x0=RatMatrix.zeros(a.n + 1, 1),
    )
    with pytest.raises(LssError):
        find_isomorphisms(a, b)
