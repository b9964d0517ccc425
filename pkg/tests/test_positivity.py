from fractions import Fraction as F

import pytest

from rigidtriples.errors import OrderingViolation
from rigidtriples.families import (
    E8, Even, ExtraE8hat, Hypergeometric, Odd, TripleSpectrum, build, solve_trace,
)
from rigidtriples.positivity import (
    DEGEN, INDEF, NEG, POS, _spec_from_vector, cases_for, cell_interior_point, e8_reducible,
    epsilon_of, klyachko_face_sample, predicate, predicate_hg, sample_ordered_generic, scan,
    signature_of, sweep,
)
from rigidtriples.spectral import invariant_form

FAMILIES = [Hypergeometric(3), Even(2), Even(3), Odd(2), Odd(3), ExtraE8hat, E8]


def test_signature_trivia():
    assert signature_of([1, 1, 1]).verdict == POS
    assert signature_of([-2, -1]).verdict == NEG
    assert signature_of([1, 0, 2]).verdict == DEGEN
    v = signature_of([1, -1, 3])
    assert v.verdict == INDEF and v.witness == (1, 2)


def hg3(a2, b, c):
    a1 = sum(b) + sum(c) - 2 * a2
    return TripleSpectrum((a1, a2), b, c)


def test_hg_column_one():
    s = hg3(F(5, 2), (2, 1, 0), (3, 2, 1))
    v = predicate_hg(s)
    assert v.verdict == POS and v.matched_case == "column 1"
    assert s.a[0] > s.a[1]
    assert scan(Hypergeometric(3), s).verdict == POS


def test_hg_column_two():
    s = hg3(F(7, 2), (2, 1, 0), (3, 2, 1))
    v = predicate_hg(s)
    assert v.matched_case == "column 2" and s.a[0] < s.a[1]
    assert v.verdict == NEG == scan(Hypergeometric(3), s).verdict


def test_hg_one_violated_inequality():
    # only b2 + c2 > a2 fails
    s = hg3(F(7, 2), (3, 1, 0), (4, 2, 1))
    assert predicate_hg(s).verdict == INDEF
    assert scan(Hypergeometric(3), s).verdict == INDEF


def test_ordering_violation():
    with pytest.raises(OrderingViolation):
        predicate_hg(hg3(F(5, 2), (0, 1, 2), (3, 2, 1)))


@pytest.mark.parametrize("kind", FAMILIES, ids=str)
def test_cell_interiors_are_definite(kind):
    cells = cases_for(kind)
    if kind.tag == "e8":
        assert len(cells) == 5
    for case in cells:
        x = cell_interior_point(kind, case)
        assert x is not None, case.name
        s = _spec_from_vector(kind, x)
        pv = predicate(kind, s)
        assert pv.definite and pv.matched_case.startswith(case.name)
        sv = scan(kind, s)
        assert sv.verdict == pv.verdict
        assert (sv.verdict == POS) == (epsilon_of(kind, s) > 0)
        # implied orderings are consequences, checked not assumed
        assert all(f(s) > 0 for f in case.implied)


def test_even_first_cell_implies_b_order():
    case = cases_for(Even(2))[0]
    s = _spec_from_vector(Even(2), cell_interior_point(Even(2), case))
    b1, b2, b3 = s.b
    assert b1 > b3 > b2


def test_e8_degenerate_locus():
    s = sample_ordered_generic(E8, 0)
    assert not e8_reducible(s)
    # a2 = b2 + c5 is a root hyperplane; c1 absorbs the trace
    t = solve_trace(E8, [s.a[0], s.b[1] + s.c[4]], s.b, s.c, "c", 0)
    assert e8_reducible(t)
    assert predicate(E8, t).verdict == DEGEN == scan(E8, t).verdict


@pytest.mark.parametrize("kind", FAMILIES, ids=str)
def test_small_sweep(kind):
    r = sweep(kind, samples=60, seed=3, workers=1)
    assert r.ok, r.mismatches[:3]
    assert sum(r.counts.values()) == 60


def test_sweep_determinism():
    r1 = sweep(Odd(2), samples=30, seed=11, workers=1)
    r2 = sweep(Odd(2), samples=30, seed=11, workers=1)
    assert r1.to_json() == r2.to_json()


@pytest.mark.parametrize("kind", [Hypergeometric(3), Even(3), Odd(2), ExtraE8hat, E8], ids=str)
def test_face_samples(kind):
    pts = klyachko_face_sample(kind, 5, 5)
    assert pts == klyachko_face_sample(kind, 5, 5)
    for s in pts:
        assert all(v.denominator == 1 for v in s.a + s.b + s.c)
        assert predicate(kind, s).definite
        form = invariant_form(build(kind, s))
        assert all(g != 0 for g in form.gram)
