from fractions import Fraction

import pytest

from rigidtriples.errors import DegenerateSpectrum, TraceViolation, ZeroScale
from rigidtriples.families import (
    E8, Even, ExtraE8hat, FamilyKind, Hypergeometric, Odd, PQ, RigidTriple, TripleSpectrum, build,
    in_S_double_prime, normalize, sample_generic_spectrum, solve_trace, standard_normalization,
    validate_spectrum,
)
from rigidtriples.ratmat import char_poly, poly_from_roots

F = Fraction
ALL = [Hypergeometric(3), Even(2), Even(3), Odd(2), Odd(3), ExtraE8hat, E8]


def expanded_roots(values, mults):
    return [v for v, k in zip(values, mults) for _ in range(k)]


def test_kind_parse_and_shape():
    assert FamilyKind.parse("hg:3") == Hypergeometric(3)
    assert str(Odd(4)) == "odd:4" and Odd(4).n == 9
    assert ExtraE8hat.multiplicities == ((4, 2), (2, 2, 2), (1,) * 6)
    with pytest.raises(ValueError):
        FamilyKind("hg")
    with pytest.raises(ValueError):
        FamilyKind("e8", 3)


def test_hg_trace_example():
    spec = TripleSpectrum([3, 0], [1, 2], [-1, 1])
    assert validate_spectrum(Hypergeometric(2), spec) == spec
    with pytest.raises(TraceViolation):
        validate_spectrum(Hypergeometric(2), TripleSpectrum([1, 0], [1, 2], [-1, 1]))


def test_even_repeated_b():
    kind = Even(3)
    spec = solve_trace(kind, [5, 1], [2, 7, 7], [1, 2, 3, 4, 5, 6], "c", 0)
    with pytest.raises(DegenerateSpectrum):
        validate_spectrum(kind, spec)


def test_hg_entries_m5():
    kind = Hypergeometric(5)
    s = sample_generic_spectrum(kind, 3)
    t = build(kind, s)
    (a1, a2), b, c = s.a, s.b, s.c
    assert t.B[0, 1] == b[0] + c[4] - a2
    assert t.C[4, 0] == b[4] + c[0] - a2
    for i in range(5):
        assert t.B[i, i] == b[i] and t.C[i, i] == c[4 - i]


@pytest.mark.parametrize("kind", ALL, ids=str)
def test_char_poly_of_A(kind):
    for seed in range(2):
        s = sample_generic_spectrum(kind, seed)
        t = build(kind, s)
        ma, mb, mc = kind.multiplicities
        assert char_poly(t.A) == poly_from_roots(expanded_roots(s.a, ma))
        assert char_poly(t.B) == poly_from_roots(expanded_roots(s.b, mb))
        assert char_poly(t.C) == poly_from_roots(expanded_roots(s.c, mc))
        assert t.A == t.B + t.C


def test_even_m3_entries():
    kind = Even(3)
    s = sample_generic_spectrum(kind, 5)
    t = build(kind, s)
    pq = PQ(s)
    c = s.c
    assert t.B[0, 1] == -pq.q(2, 5) * pq.q(3, 5) / (c[3] - c[4])
    assert t.C[3, 0] == -(c[2] + s.b[2] - s.a[1])
    assert [t.B[i, i] for i in range(6)] == [s.b[0]] + [s.b[1]] * 2 + [s.b[2]] * 3
    assert [t.C[i, i] for i in range(6)] == list(reversed(c))


def test_odd_m3_entries():
    kind = Odd(3)
    s = sample_generic_spectrum(kind, 5)
    t = build(kind, s)
    pq = PQ(s)
    c = s.c
    assert t.B[0, 1] == pq.p(6, 2, 1) * pq.q(2, 6) * pq.q(3, 6) / ((c[3] - c[5]) * (c[4] - c[5]))
    assert t.C[1, 0] == -pq.q(1, 6)
    assert [t.C[i, i] for i in range(7)] == list(reversed(c))


def test_extra_entries():
    s = sample_generic_spectrum(ExtraE8hat, 2)
    t = build(ExtraE8hat, s)
    assert t.B[0, 3] == s.b[0] + s.c[5] - s.a[0]
    assert t.C[2, 1] == -(s.b[1] + s.c[3] - s.a[0])
    assert t.B[1, 0] == 0 and t.C[0, 1] == 0


def test_e8_entries():
    s = sample_generic_spectrum(E8, 2)
    t = build(E8, s)
    (a1, a2), (b1, b2, b3), c = s.a, s.b, s.c
    assert t.B[0, 3] == a1 + a2 - b1 - b3 - c[0] - c[4]
    assert t.C[5, 0] == -a2 + b1 + c[4]
    assert [t.C[i, i] for i in range(6)] == [c[4], c[4], c[3], c[2], c[1], c[0]]


def test_normalize_identity_and_inverse():
    kind = Odd(2)
    t = build(kind, sample_generic_spectrum(kind, 1))
    assert normalize(t, 1, 0, 0) == t
    k, th, ph = F(3, 2), F(-1, 3), F(5)
    there = normalize(t, k, th, ph)
    assert normalize(there, 1 / k, -th / k, -ph / k) == t
    with pytest.raises(ZeroScale):
        normalize(t, 0, 1, 1)


def test_hg_normalization():
    kind = Hypergeometric(4)
    t = build(kind, sample_generic_spectrum(kind, 2))
    a2 = t.spectrum.a[1]
    nt = normalize(t, 1, -a2, -a2 / 2)
    assert char_poly(nt.A) == poly_from_roots([t.spectrum.a[0] - a2] + [0] * 3)


def test_even_normalization():
    m = 3
    kind = Even(m)
    t = build(kind, sample_generic_spectrum(kind, 4))
    (a1, a2), (b1, b2, b3) = t.spectrum.a, t.spectrum.b
    k = 2 / (a1 - a2)
    theta = -(a1 + a2) / 2
    phi = -(b1 + (m - 1) * b2 + m * b3) / (2 * m)
    # the affine map acts after scaling
    nt = normalize(t, k, k * theta, k * phi)
    assert (k, k * theta, k * phi) == standard_normalization(t)
    assert nt.spectrum.a == (1, -1)
    assert nt.A.trace() == 0 and nt.B.trace() == 0 and nt.C.trace() == 0


def test_s_double_prime_boundaries():
    kind = Hypergeometric(3)
    s = sample_generic_spectrum(kind, 0)
    # force b1 + c1 - a2 = 0, keep the trace by moving a1
    b = list(s.b)
    b[0] = s.a[1] - s.c[0]
    spec = solve_trace(kind, s.a, b, s.c, "a", 0)
    assert not in_S_double_prime(kind, spec)

    kind = Even(3)
    s = sample_generic_spectrum(kind, 0)
    c = list(s.c)
    c[1] = s.a[1] - s.b[2]          # p32_2 = 0
    spec = solve_trace(kind, s.a, s.b, c, "b", 0)
    assert not in_S_double_prime(kind, spec)


def test_sampling_deterministic_and_generic():
    kind = Even(3)
    assert sample_generic_spectrum(kind, 11) == sample_generic_spectrum(kind, 11)
    for seed in range(1000):
        s = sample_generic_spectrum(kind, seed)
        validate_spectrum(kind, s)
        assert in_S_double_prime(kind, s)


def test_triple_json_round_trip():
    t = build(E8, sample_generic_spectrum(E8, 9))
    assert RigidTriple.from_json(t.to_json()) == t
