import random

import pytest

from rigidtriples.degeneration import (
    arrow_matrix, check_flag_representative, check_standard_form, det_arrow_formula, em_from_om,
    em_from_om_factor, even_Z, hgm_inside_em, hgm_sub_from_hgm, hyperplane_spectrum, om_from_em_factor,
    om_from_em_sub, z_basis,
)
from rigidtriples.errors import NotOnHyperplane
from rigidtriples.families import (
    PQ, Even, Hypergeometric, Odd, ExtraE8hat, E8, build, normalized, sample_generic_spectrum,
)
from rigidtriples.ratmat import det, mat_vec, rank
from rigidtriples.spectral import check_irreducible, invariant_form, verify_triple, verify_spectrum

from conftest import rand_rat


def test_om_sub_example_entry():
    for seed in range(3):
        s = hyperplane_spectrum(Even(3), "p32", 2, seed)
        d = om_from_em_sub(build(Even(3), s), 2)
        pq = PQ(s)
        expected = -pq.p(3, 3, 1) * pq.q(3, 4) * pq.q(3, 5) / (pq.p(3, 3, 2) * pq.dc(1, 3))
        assert d.raw.B[0, 3] == expected
        assert d.matches
        # C keeps every c except c_2
        assert verify_spectrum(d.raw.C, [(c, 1) for c in s.c[:1] + s.c[2:]])


@pytest.mark.parametrize("m", [3, 4])
def test_om_sub_all_i(m):
    for i in range(1, m + 1):
        d = om_from_em_sub(build(Even(m), hyperplane_spectrum(Even(m), "p32", i, 0)), i)
        assert d.matches and d.triple.kind == Odd(m - 1)


@pytest.mark.parametrize("m", [3, 4])
def test_om_factor_all_i(m):
    for i in range(1, m + 1):
        s = hyperplane_spectrum(Even(m), "p31", i, 1)
        em = build(Even(m), s)
        d = om_from_em_factor(em, i)
        assert d.matches
        # v_i is isotropic on p31_i = 0; v_i is the C-eigenvector in slot 2m+1-i
        assert invariant_form(em).gram[i - 1] == 0


@pytest.mark.parametrize("m", [2, 3])
def test_em_from_om_factor(m):
    for i in range(1, m + 1):
        d = em_from_om_factor(build(Odd(m), hyperplane_spectrum(Odd(m), "p31", i, 2)), i)
        assert d.matches and d.triple.kind == Even(m)


def test_off_hyperplane_raises():
    em = build(Even(3), sample_generic_spectrum(Even(3), 0))
    with pytest.raises(NotOnHyperplane):
        om_from_em_sub(em, 1)
    with pytest.raises(NotOnHyperplane):
        om_from_em_factor(em, 1)
    hg = build(Hypergeometric(3), sample_generic_spectrum(Hypergeometric(3), 0))
    with pytest.raises(NotOnHyperplane):
        hgm_sub_from_hgm(hg, 1)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_hgm_sub(m):
    for i in range(1, m + 1):
        s = hyperplane_spectrum(Hypergeometric(m), "hg", i, 3)
        hg = build(Hypergeometric(m), s)
        d = hgm_sub_from_hgm(hg, i)
        assert d.matches and d.kind_of_transform == "identity"
        assert not check_irreducible(hg)


def test_hgm_sub_base_case():
    s = hyperplane_spectrum(Hypergeometric(2), "hg", 1, 0)
    d = hgm_sub_from_hgm(build(Hypergeometric(2), s), 1)
    t = d.triple
    assert t.n == 1 and t.A[0, 0] == t.B[0, 0] + t.C[0, 0]


def test_em_from_om_round_trip():
    om = build(Odd(2), sample_generic_spectrum(Odd(2), 4))
    em = em_from_om(om)
    assert em.kind == Even(3)
    assert PQ(em.spectrum).p(3, 3, 2) == 0
    d = om_from_em_sub(em, 3)
    assert d.triple.B == om.B and d.triple.C == om.C


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("variant", ["V1+V2", "V1+V3"])
def test_hgm_inside_em(m, variant):
    s = sample_generic_spectrum(Even(m), 5)
    d = hgm_inside_em(build(Even(m), s), variant)
    t = d.triple
    assert d.matches
    assert all(verify_triple(t).values())
    assert check_irreducible(t)
    b1, b2, b3 = s.b
    if variant == "V1+V2":
        assert verify_spectrum(t.A, [(-b1, 1), (-b2, m - 1)])
    else:
        ev = t.spectrum.b
        assert -s.a[0] in ev and -s.a[1] in ev


def test_z_example_m3():
    t = build(Even(3), sample_generic_spectrum(Even(3), 6))
    Z = even_Z(t)
    pq = PQ(t.spectrum)
    assert Z[2, 1] == pq.q(2, 4) / pq.dc(4, 5)
    assert all(Z[k, k] == 1 for k in range(6))
    assert all(Z[r, s] == 0 for r in range(6) for s in range(r + 1, 6))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_flag_vectors_even(m):
    t = normalized(build(Even(m), sample_generic_spectrum(Even(m), 7)))
    zb = z_basis(t)
    a1 = [sum(x) for x in zip(zb.z_columns[0], zb.z_columns[1], zb.z_columns[2 * m - 1])]
    assert not any(mat_vec(t.A.shift(1), a1))
    assert check_flag_representative(t, zb)
    assert rank(t.A.shift(1)) == m
    for coords in zb.coordinates():
        assert set(coords) <= {0, 1}
    assert check_standard_form(t, zb)


@pytest.mark.parametrize("kind", [Odd(2), Odd(3), ExtraE8hat, E8], ids=str)
def test_flag_vectors_other(kind):
    t = build(kind, sample_generic_spectrum(kind, 8))
    zb = z_basis(t)
    assert check_flag_representative(t, zb)
    assert check_standard_form(t, zb)


def test_arrow_det():
    assert det_arrow_formula([2, 3, 5], [0, 0], [0, 0]) == 30
    assert det_arrow_formula([2, 3], [7], [11]) == 2 * 3 - 7 * 11
    rng = random.Random(1)
    for _ in range(5):
        al = [rand_rat(rng) for _ in range(5)]
        be = [rand_rat(rng) for _ in range(4)]
        ga = [rand_rat(rng) for _ in range(4)]
        assert det_arrow_formula(al, be, ga) == det(arrow_matrix(al, be, ga))
