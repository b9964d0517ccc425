"""The twelve acceptance criteria, one test each.

Each check returns (ok, detail) and records it in RESULTS; conftest prints a
PASS/FAIL line per criterion at the end of the run.  `python3 tests/test_acceptance.py`
runs them without pytest.
"""
import itertools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fixtures import printed  # noqa: E402
from rigidtriples import bz, degeneration as dg, fuchsian, identities, positivity  # noqa: E402
from rigidtriples.families import (  # noqa: E402
    E8, PQ, Even, ExtraE8hat, Hypergeometric, Odd, build, claimed_spectra, normalized,
    sample_generic_spectrum,
)
from rigidtriples.ratmat import RatMatrix, mat_mul, mat_vec  # noqa: E402
from rigidtriples.spectral import (  # noqa: E402
    algebra_dimension, check_form_uniqueness, check_irreducible, check_self_adjoint, invariant_form,
    verify_spectrum,
)

RESULTS = {}

SIZES = (2, 3, 4, 5, 6)


def record(key, ok, detail):
    RESULTS[key] = (bool(ok), detail)
    return bool(ok), detail


def _mat(rows):
    return RatMatrix([list(r) for r in rows])


# criterion 2 spectra, shared with 4, 5 and 11
_C2 = {}


def c2_triples():
    if not _C2:
        for tag in ("hg", "even", "odd"):
            kinds = [{"hg": Hypergeometric, "even": Even, "odd": Odd}[tag](SIZES[k % 5]) for k in range(20)]
            _C2[tag] = [build(kd, sample_generic_spectrum(kd, 100 + k)) for k, kd in enumerate(kinds)]
        for kd in (ExtraE8hat, E8):
            _C2[kd.tag] = [build(kd, sample_generic_spectrum(kd, 100 + k)) for k in range(20)]
    return _C2


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for seed in range(5):
        def spec(kind):
            s = sample_generic_spectrum(kind, 500 + seed)
            return build(kind, s), (list(s.a), list(s.b), list(s.c))

        t, abc = spec(Hypergeometric(5))
        B, C = printed.hg5(*abc)
        bad += [("hg5", seed)] * (t.B != _mat(B) or t.C != _mat(C))

        t, abc = spec(Even(3))
        B, C = printed.even3(*abc)
        bad += [("even3", seed)] * (t.B != _mat(B) or t.C != _mat(C))
        bad += [("even Z", seed)] * (dg.even_Z(t) != _mat(printed.even_z3(*abc)))

        t, abc = spec(Odd(3))
        B, C = printed.odd3(*abc)
        bad += [("odd3", seed)] * (t.B != _mat(B) or t.C != _mat(C))

        # q_ijk with the stray factor 2 removed; the printed reading breaks s(A)
        t, abc = spec(ExtraE8hat)
        q3 = PQ(t.spectrum).q3
        B, C = printed.extra(*abc, q3)
        bad += [("extra", seed)] * (t.B != _mat(B) or t.C != _mat(C))
        bad += [("extra Z", seed)] * (dg.extra_Z(t) != _mat(printed.extra_z(*abc, q3)))
        Bp, Cp = printed.extra(*abc, printed.extra_q_printed(abc[2]))
        cl = claimed_spectra(ExtraE8hat, t.spectrum)
        bad += [("extra printed q gives s(A)", seed)] * verify_spectrum(_mat(Bp) + _mat(Cp), cl["A"])

        # E8: every entry matches except the two erratum positions
        t, abc = spec(E8)
        B, C = printed.e8(*abc)
        fixes = printed.e8_errata(*abc)
        diff = {(name, r + 1, k + 1) for name, M, P in (("B", t.B, B), ("C", t.C, C))
                for r in range(6) for k in range(6) if M[r, k] != P[r][k]}
        bad += [("e8 diff outside errata", seed)] * (diff != set(fixes))
        for (name, r, k), v in fixes.items():
            (B if name == "B" else C)[r - 1][k - 1] = v
        bad += [("e8 with errata", seed)] * (t.B != _mat(B) or t.C != _mat(C))
        Bp, Cp = printed.e8(*abc)
        cl = claimed_spectra(E8, t.spectrum)
        bad += [("e8 as printed gives s(A)", seed)] * verify_spectrum(_mat(Bp) + _mat(Cp), cl["A"])
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    return record("C1", ok, f"7 displays x 5 spectra, E8 errata at B45/C51, extra q read without factor 2,"
                            f" {dt:.1f}s" + (f"; mismatches {bad[:4]}" if bad else ""))


def criterion_2():
    bad, times = [], {}
    for tag, ts in c2_triples().items():
        t0 = time.perf_counter()
        for t in ts:
            cl = claimed_spectra(t.kind, t.spectrum)
            if not all(verify_spectrum(getattr(t, x), cl[x]) for x in "ABC"):
                bad.append(str(t.kind))
        times[tag] = time.perf_counter() - t0
    slow = [k for k, v in times.items() if v >= 60]
    ok = not bad and not slow
    worst = max(times.values())
    return record("C2", ok, f"5 families x 20 S'' spectra, m <= 6, slowest family {worst:.1f}s"
                            + (f"; failed {bad[:4]}" if bad else ""))


def criterion_3():
    bad = 0
    for k in range(20):
        m = SIZES[k % 5]
        t = normalized(build(Even(m), sample_generic_spectrum(Even(m), 300 + k)))
        if t.spectrum.a != (1, -1) or mat_mul(t.A, t.A) != RatMatrix.identity(2 * m):
            bad += 1
    return record("C3", bad == 0, f"A^2 = Id on 20 normalized even triples, m = 2..6; failures {bad}")


def criterion_4():
    bad = []
    for ts in c2_triples().values():
        for t in ts:
            G = invariant_form(t, strict=True).G
            if not all(check_self_adjoint(getattr(t, x), G) for x in "ABC") or check_form_uniqueness(t) != 1:
                bad.append(str(t.kind))
    return record("C4", not bad, "self-adjoint A, B, C and a one-dimensional form space on all 100 spectra"
                                 + (f"; failed {bad[:4]}" if bad else ""))


def criterion_5():
    bad = []
    n_generic = 0
    for ts in c2_triples().values():
        for t in ts:
            n_generic += 1
            if not check_irreducible(t):
                bad.append(("generic", str(t.kind)))
    n_special = 0
    for kind, form in ((Even(3), "p32"), (Even(4), "p32"), (Even(3), "p31"), (Even(4), "p31"),
                       (Odd(2), "p31"), (Odd(3), "p31"),
                       (Hypergeometric(3), "hg"), (Hypergeometric(5), "hg")):
        for i in range(1, kind.m + 1):
            t = build(kind, dg.hyperplane_spectrum(kind, form, i, 0))
            n_special += 1
            dim = algebra_dimension([t.B, t.C], t.n)
            if check_irreducible(t) or dim >= t.n * t.n:
                bad.append((form, str(kind), i))
    return record("C5", not bad, f"irreducible on {n_generic} S'' spectra; algebra dimension < n^2 on"
                                 f" {n_special} hyperplane spectra (p32, p31, b_i + c_(m+1-i) - a2)"
                                 + (f"; failed {bad[:4]}" if bad else ""))


def criterion_6():
    bad, kinds_of_change = [], set()
    for k in range(10):
        m = (3, 4, 5)[k % 3]
        i = 1 + k % m
        em = build(Even(m), dg.hyperplane_spectrum(Even(m), "p32", i, k))
        runs = [("om-sub", dg.om_from_em_sub(em, i))]
        em = build(Even(m), dg.hyperplane_spectrum(Even(m), "p31", i, k))
        runs.append(("om-factor", dg.om_from_em_factor(em, i)))
        om = build(Odd(m), dg.hyperplane_spectrum(Odd(m), "p31", i, k))
        runs.append(("em-factor", dg.em_from_om_factor(om, i)))
        em = build(Even(m), sample_generic_spectrum(Even(m), 600 + k))
        runs.append(("hgm-inside-em V1+V2", dg.hgm_inside_em(em, "V1+V2")))
        runs.append(("hgm-inside-em V1+V3", dg.hgm_inside_em(em, "V1+V3")))
        hg = build(Hypergeometric(m + 1), dg.hyperplane_spectrum(Hypergeometric(m + 1), "hg", i, k))
        runs.append(("hgm-sub", dg.hgm_sub_from_hgm(hg, i)))
        for name, d in runs:
            kinds_of_change.add(d.kind_of_transform)
            if not d.matches:
                bad.append((name, m, i))
    return record("C6", not bad, "6 maps x 10 hyperplane spectra equal the direct constructor entrywise"
                                 f" after the basis change ({', '.join(sorted(kinds_of_change))})"
                                 + (f"; failed {bad[:4]}" if bad else ""))


SWEEP_KINDS = (Hypergeometric(3), Even(3), Odd(3), ExtraE8hat, E8)


def criterion_7(samples=10000):
    lines, ok = [], True
    for kind in SWEEP_KINDS:
        t0 = time.perf_counter()
        r = positivity.sweep(kind, samples=samples, seed=7)
        dt = time.perf_counter() - t0
        ok = ok and r.ok and dt < 300 and r.samples == samples
        definite = r.counts.get(positivity.POS, 0) + r.counts.get(positivity.NEG, 0)
        lines.append(f"{kind}: {len(r.mismatches)} mismatches, {len(r.epsilon_failures)} eps failures,"
                     f" {definite} definite, {dt:.0f}s")
    return record("C7", ok, f"{samples} samples per family; " + "; ".join(lines))


def _partitions(length, top):
    return [list(p) for p in itertools.combinations_with_replacement(range(top, -1, -1), length)]


def criterion_8():
    t0 = time.perf_counter()
    bad, cases = [], 0
    for r in (1, 2, 3):
        parts = _partitions(r + 1, 3)
        for lam, mu, nu in itertools.product(parts, repeat=3):
            if sum(nu) != sum(lam) + sum(mu):
                continue
            cases += 1
            if bz.count_fillings(bz.triangle_for(lam, mu, nu)) != bz.lr_oracle(lam, mu, nu):
                bad.append((lam, mu, nu))
    dt = time.perf_counter() - t0
    face_bad, e8_cells = [], set()
    for kind in SWEEP_KINDS:
        for s in positivity.klyachko_face_sample(kind, 1, 20):
            if kind.tag == "e8":
                e8_cells.add(positivity.predicate(kind, s).matched_case)
            if bz.count_fillings(bz.bz_of_spectrum(s, kind)) != 1:
                face_bad.append(str(kind))
    ok = not bad and not face_bad and len(e8_cells) == 5 and dt < 600
    return record("C8", ok, f"BZ = tableau count on {cases} weight triples (r <= 3, parts <= 3) in {dt:.0f}s;"
                            f" count 1 at 20 face points x 5 families, E8 cells hit {len(e8_cells)}/5"
                            + (f"; failed {(bad + face_bad)[:4]}" if bad or face_bad else ""))


def criterion_9():
    bad, n = [], 0
    for m in SIZES:
        for s in positivity.klyachko_face_sample(Hypergeometric(m), 9, 10):
            n += 1
            l, mm, nn = bz.gl_to_sl_weights(s, Hypergeometric(m))
            if any(nn[:-1]):
                l, mm, nn = l[::-1], mm[::-1], nn[::-1]
            x = bz.hg_strip_x(l, mm, nn[-1])
            lin = bz.strip_linear_solution(l, mm, nn[-1])[bz.strip_seed(len(l))]
            f = bz.hg_strip_solution(l, mm, nn[-1])
            if x != lin or f.x != x or bz.count_fillings(bz.hg_triangle(l, mm, nn[-1])) != 1:
                bad.append((m, l, mm, nn))
    return record("C9", not bad and n == 50, f"closed-form x = linear solve and one filling at {n} HG lattice"
                                             " points, m = 2..6" + (f"; failed {bad[:3]}" if bad else ""))


def criterion_10():
    t0 = time.perf_counter()
    reports = identities.check_all(100, 0)
    dt = time.perf_counter() - t0
    bad = [r.id for r in reports if not r.ok or not r.grid_covered or r.trials < 100]
    worst = min(min(r.distinct_values[s] - r.degree_bounds[s] for s in r.sizes) for r in reports)
    return record("C10", not bad and dt < 60, f"14 identities, >= 100 points each, every variable takes at least"
                                              f" degree + {worst} distinct values per size, {dt:.1f}s"
                                              + (f"; failed {bad}" if bad else ""))


def criterion_11():
    bad, n = [], 0
    for ts in c2_triples().values():
        for t in ts:
            for zs in ((0, 1, fuchsian.INFINITY), (-1, "1/2", 3)):
                s = fuchsian.assemble(t, *zs)
                text = s.dumps()
                back = fuchsian.loads(text)
                n += 1
                if not s.residue_sum().is_zero() or back != s or back.dumps() != text or not all(s.check().values()):
                    bad.append(str(t.kind))
    return record("C11", not bad, f"residues sum to 0 and JSON round-trips byte-for-byte on {n} systems"
                                  + (f"; failed {bad[:4]}" if bad else ""))


def criterion_12():
    bad, n = [], 0
    for m in (2, 3, 4, 5):
        for seed in range(5):
            t = normalized(build(Even(m), sample_generic_spectrum(Even(m), 700 + seed)))
            zb = dg.z_basis(t)
            shifted = t.A.shift(1)
            n += len(zb.a_vectors)
            if any(any(mat_vec(shifted, a)) for a in zb.a_vectors) or not dg.check_flag_representative(t, zb):
                bad.append((m, seed))
    return record("C12", not bad, f"(A + Id) a_k = 0 for {n} open-orbit vectors, normalized even m = 2..5"
                                  + (f"; failed {bad}" if bad else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"C{k}" for k in range(1, 13)])
def test_criterion(check):
    ok, detail = check()
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for k, check in enumerate(CRITERIA, 1):
        try:
            ok, detail = check()
        except Exception as e:  # report and keep going
            ok, detail = False, f"{type(e).__name__}: {e}"
        failed += not ok
        print(f"C{k} {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    sys.exit(1 if failed else 0)
