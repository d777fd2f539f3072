"""Yamada evaluation: flat states, the subset-sum oracle, diagrams, moves."""

import itertools
import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from skein import fixtures
from skein.diagrams import FlatState, InvalidDiagramError, disjoint_union, mirror, parse_diagram
from skein.rings import (
    CIRCLE_FACTOR,
    D,
    D_INV,
    LOOP_FACTOR,
    ONE,
    ZERO,
    LaurentPoly,
    LocalizedElement,
)
from skein.yamada import flat_eval, flat_eval_oracle, yamada


def d_poly(coeffs, d_power=0):
    """Build sum(c * d^k) / d^d_power from {k: c}."""
    total = ZERO
    for k, c in coeffs.items():
        total = total + LocalizedElement.d_to_the(k - d_power).scale(c)
    return total


A8 = LocalizedElement(LaurentPoly.monomial(1, 8))
A8_INV = LocalizedElement(LaurentPoly.monomial(1, -8))


# -- flat states -------------------------------------------------------------


def test_flat_circle():
    assert flat_eval(FlatState.make(0, [], 1), memo={}) == CIRCLE_FACTOR


def test_flat_bouquets_closed_form():
    for m in range(1, 7):
        state = FlatState.make(1, [(0, 0)] * m)
        expect = LOOP_FACTOR ** (m - 1) * CIRCLE_FACTOR
        assert flat_eval(state, memo={}) == expect
        assert flat_eval_oracle(state) == expect


def test_flat_theta_value():
    state = FlatState.make(2, [(0, 1)] * 3)
    expect = d_poly({3: 1, 1: -3, -1: 2})  # d^3 - 3d + 2/d
    assert flat_eval(state, memo={}) == expect
    assert flat_eval_oracle(state) == expect


def test_flat_handcuff_vanishes():
    state = FlatState.make(2, [(0, 0), (1, 1), (0, 1)])
    assert flat_eval(state, memo={}) == ZERO
    assert flat_eval_oracle(state) == ZERO


def test_oracle_base_cases():
    assert flat_eval_oracle(FlatState.make(1, [])) == D
    assert flat_eval_oracle(FlatState.make(2, [(0, 1), (0, 1)])) == CIRCLE_FACTOR
    assert flat_eval_oracle(FlatState.make(0, [])) == ONE


def test_oracle_edge_limit():
    state = FlatState.make(2, [(0, 1)] * 17)
    with pytest.raises(InvalidDiagramError):
        flat_eval_oracle(state, max_edges=16)


def test_oracle_equivalence_exhaustive_small():
    # all labeled multigraphs on 4 vertices with <= 4 edges
    memo = {}
    slots = [(u, v) for u in range(4) for v in range(u, 4)]
    count = 0
    for k in range(5):
        for combo in itertools.combinations_with_replacement(slots, k):
            state = FlatState.make(4, combo)
            assert flat_eval(state, memo) == flat_eval_oracle(state)
            count += 1
    assert count == 1 + 10 + 55 + 220 + 715


def test_oracle_equivalence_random():
    rng = random.Random(2024)
    memo = {}
    for _ in range(200):
        n = rng.randint(1, 8)
        m = rng.randint(0, 10)
        edges = [tuple(sorted((rng.randrange(n), rng.randrange(n)))) for _ in range(m)]
        state = FlatState.make(n, edges, rng.randint(0, 2))
        assert flat_eval(state, memo) == flat_eval_oracle(state)


def test_confluence_random_edge_orders():
    rng = random.Random(5)
    graphs = [
        FlatState.make(2, [(0, 1)] * 3),
        FlatState.make(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        FlatState.make(3, [(0, 0), (0, 1), (1, 2), (2, 2), (0, 1), (1, 2)]),
    ]
    for state in graphs:
        reference = flat_eval(state, memo={})
        for _ in range(10):
            def picker(edges):
                choices = [i for i, (u, v) in enumerate(edges) if u != v]
                return rng.choice(choices)

            assert flat_eval(state, memo={}, edge_picker=picker) == reference


# -- diagrams ------------------------------------------------------------------


def test_yamada_circle_and_unions():
    assert yamada(fixtures.load_diagram("circle")) == CIRCLE_FACTOR
    assert yamada(fixtures.load_diagram("two_circles")) == CIRCLE_FACTOR**2


def test_yamada_kinks():
    assert yamada(fixtures.load_diagram("kink_pos")) == A8 * CIRCLE_FACTOR
    assert yamada(fixtures.load_diagram("kink_neg")) == A8_INV * CIRCLE_FACTOR


def test_yamada_rejects_ray_words():
    with pytest.raises(InvalidDiagramError):
        yamada(fixtures.load_diagram("annulus_core"))


def test_yamada_bouquet_diagrams():
    for m in range(1, 7):
        g = fixtures.bouquet(m)
        assert yamada(g) == LOOP_FACTOR ** (m - 1) * CIRCLE_FACTOR


def test_move_invariance():
    circle = yamada(fixtures.load_diagram("circle"))
    assert yamada(fixtures.load_diagram("r2_unknot")) == circle
    assert yamada(fixtures.load_diagram("r2_twostrand")) == circle**2
    assert yamada(fixtures.load_diagram("r3_a")) == yamada(fixtures.load_diagram("r3_b"))


def test_mirror_property_on_corpus():
    for name in ("circle", "theta", "handcuff", "k4", "kink_pos", "kink_neg",
                 "hopf", "r2_unknot", "r3_a", "petersen_diagram"):
        g = fixtures.load_diagram(name)
        assert yamada(mirror(g)) == yamada(g).invert_variable(), name


def test_multiplicativity_on_disjoint_unions():
    pairs = [("theta", "circle"), ("kink_pos", "theta"), ("handcuff", "k4")]
    for n1, n2 in pairs:
        g1, g2 = fixtures.load_diagram(n1), fixtures.load_diagram(n2)
        assert yamada(disjoint_union(g1, g2)) == yamada(g1) * yamada(g2)


def test_crossing_warn_threshold(monkeypatch):
    import importlib

    ym = importlib.import_module("skein.yamada")
    monkeypatch.setattr(ym, "EXPANSION_WARN_CROSSINGS", 2)
    g = parse_diagram("X 1 1 2 2\nX 3 3 4 4\nX 5 5 6 6")
    with pytest.warns(UserWarning):
        yamada(g, memo={})


def test_result_denominator_sanity_bound():
    # d_power of Y is bounded by #crossings + #edges of the underlying graph
    for name in ("circle", "theta", "handcuff", "k4", "kink_pos", "hopf",
                 "r3_a", "petersen_diagram"):
        g = fixtures.load_diagram(name)
        bound = len(g.crossings) + g.num_edges()
        assert yamada(g).d_power <= bound, name


def test_threaded_evaluation_is_consistent():
    # values are immutable and evaluation pure; concurrent calls must agree
    names = ["theta", "k4", "kink_pos", "hopf", "r3_a"] * 4
    expected = [yamada(fixtures.load_diagram(n), memo={}) for n in names]
    with ThreadPoolExecutor(max_workers=4) as pool:
        got = list(pool.map(lambda n: yamada(fixtures.load_diagram(n)), names))
    assert got == expected
