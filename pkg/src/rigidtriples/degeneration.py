"""Maps between families obtained by putting a spectrum on a special hyperplane,
the Z-matrix bases and the open-orbit flag vectors."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateSpectrum, FormulaPole, NotOnHyperplane, TraceViolation
from .families import (
    PQ, Even, Hypergeometric, Odd, RigidTriple, TripleSpectrum, _P,
    build, in_S_double_prime, random_rational, solve_trace, validate_spectrum,
)
from .ratmat import RatMatrix, det, inverse, kernel, mat_mul, mat_vec, rank
from .spectral import eigenvectors


@dataclass(frozen=True)
class Degeneration:
    """A restricted or induced triple next to the constructor it should reproduce.

    ``raw`` is the triple in the coordinates inherited from the source;
    ``triple`` is ``raw`` conjugated by ``transform`` (X M X^-1). ``kind_of_transform``
    is "identity", "diagonal" or "general".
    """
    raw: RigidTriple
    triple: RigidTriple
    direct: RigidTriple
    transform: RatMatrix
    kind_of_transform: str

    @property
    def matches(self):
        return (self.triple.B == self.direct.B and self.triple.C == self.direct.C
                and self.triple.A == self.direct.A)


def _sub_block(t: RigidTriple, keep, kind, spec, mats=None):
    B, C = mats if mats else (t.B, t.C)
    return RigidTriple(kind, spec, B.submatrix(keep, keep), C.submatrix(keep, keep),
                       (B + C).submatrix(keep, keep))


def _restrict(t: RigidTriple, p: int, kind, spec):
    """Restriction to span{e_k : k != p}; needs row p to vanish off the diagonal."""
    keep = [k for k in range(t.n) if k != p]
    for M in (t.B, t.C):
        if any(M[p, k] for k in keep):
            raise NotOnHyperplane(f"span of e_k, k != {p + 1}, is not invariant")
    return _sub_block(t, keep, kind, spec)


def _quotient(t: RigidTriple, p: int, kind, spec):
    """Induced maps on V / span(e_p); needs column p to vanish off the diagonal."""
    keep = [k for k in range(t.n) if k != p]
    for M in (t.B, t.C):
        if any(M[k, p] for k in keep):
            raise NotOnHyperplane(f"e_{p + 1} is not a common eigenvector")
    return _sub_block(t, keep, kind, spec)


def _conj(X: RatMatrix, t: RigidTriple):
    Xi = inverse(X)
    B = mat_mul(mat_mul(X, t.B), Xi)
    C = mat_mul(mat_mul(X, t.C), Xi)
    return RigidTriple(t.kind, t.spectrum, B, C, B + C)


def diagonal_conjugator(src, dst):
    """Invertible diagonal D with D M D^-1 = N for every pair, or None.

    ``src``/``dst`` are lists of matrices. Ratios are propagated along the
    nonzero off-diagonal pattern; the result is then checked exactly.
    """
    n = src[0].nrows
    d = [None] * n
    for M, N in zip(src, dst):
        for r in range(n):
            for s in range(n):
                if (M[r, s] == 0) != (N[r, s] == 0):
                    return None
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            u = stack.pop()
            for M, N in zip(src, dst):
                for v in range(n):
                    if v == u:
                        continue
                    # d_u M_uv / d_v = N_uv and d_v M_vu / d_u = N_vu
                    if M[u, v] and d[v] is None:
                        d[v] = d[u] * M[u, v] / N[u, v]
                        stack.append(v)
                    if M[v, u] and d[v] is None:
                        d[v] = d[u] * N[v, u] / M[v, u]
                        stack.append(v)
    D = RatMatrix.diag(d)
    Di = RatMatrix.diag([1 / x for x in d])
    if all(mat_mul(mat_mul(D, M), Di) == N for M, N in zip(src, dst)):
        return D
    return None


def intertwiners(src, dst):
    """Basis of {X : X M = N X for all pairs (M, N)}."""
    n = src[0].nrows
    rows = []
    for M, N in zip(src, dst):
        for r in range(n):
            for s in range(n):
                # (X M)_rs - (N X)_rs
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[r * n + k] += M[k, s]
                    row[k * n + s] -= N[r, k]
                if any(row):
                    rows.append(row)
    basis = kernel(RatMatrix(rows, n * n))
    return [RatMatrix([list(v[i * n:(i + 1) * n]) for i in range(n)], n) for v in basis]


def conjugator(src, dst, seed=0):
    """Invertible X with X M X^-1 = N for all pairs, or None.

    Tries a diagonal X first. Otherwise takes the intertwiner space; for an
    irreducible source it is one-dimensional, else a few deterministic random
    combinations are tried.
    """
    D = diagonal_conjugator(src, dst)
    if D is not None:
        return D, "diagonal"
    basis = intertwiners(src, dst)
    if not basis:
        return None, None
    rng = random.Random(seed)
    for attempt in range(8):
        if attempt == 0:
            X = basis[0]
        else:
            X = RatMatrix.zeros(basis[0].nrows, basis[0].ncols)
            for Y in basis:
                X = X + Y.scale(rng.randint(-50, 50))
        if det(X) != 0:
            return X, "general"
    return None, None


def _finish(raw: RigidTriple, direct: RigidTriple):
    if raw.B == direct.B and raw.C == direct.C:
        return Degeneration(raw, raw, direct, RatMatrix.identity(raw.n), "identity")
    X, how = conjugator([raw.B, raw.C], [direct.B, direct.C])
    if X is None:
        # no conjugacy: report the raw triple so the mismatch is visible
        return Degeneration(raw, raw, direct, RatMatrix.identity(raw.n), "none")
    return Degeneration(raw, _conj(X, raw), direct, X, how)


def _drop(seq, idx):
    return tuple(x for k, x in enumerate(seq) if k != idx)


def om_from_em_sub(em: RigidTriple, i: int) -> Degeneration:
    """OM_{m-1} as the submodule of EM_m on the hyperplane p32_i = 0.

    Restricts to the coordinates other than 2m+1-i; c_i is dropped and the
    remaining c's are renumbered in order.
    """
    m = em.n // 2
    if em.kind.tag != "even" or not 1 <= i <= m:
        raise ValueError("needs an even triple and 1 <= i <= m")
    s = em.spectrum
    if PQ(s).p(i, 3, 2) != 0:
        raise NotOnHyperplane(f"p32_{i} = {PQ(s).p(i, 3, 2)} is not zero")
    spec = TripleSpectrum(s.a, s.b, _drop(s.c, i - 1))
    raw = _restrict(em, 2 * m - i, Odd(m - 1), spec)
    return _finish(raw, build(Odd(m - 1), spec))


def om_from_em_factor(em: RigidTriple, i: int) -> Degeneration:
    """OM_{m-1} as the factor of EM_m by span(e_{2m+1-i}) when p31_i = 0.

    The quotient loses one a1, so in the odd labelling a1 and a2 trade places.
    """
    m = em.n // 2
    if em.kind.tag != "even" or not 1 <= i <= m:
        raise ValueError("needs an even triple and 1 <= i <= m")
    s = em.spectrum
    if PQ(s).p(i, 3, 1) != 0:
        raise NotOnHyperplane(f"p31_{i} = {PQ(s).p(i, 3, 1)} is not zero")
    spec = TripleSpectrum((s.a[1], s.a[0]), s.b, _drop(s.c, i - 1))
    raw = _quotient(em, 2 * m - i, Odd(m - 1), spec)
    return _finish(raw, build(Odd(m - 1), spec))


def em_from_om_factor(om: RigidTriple, i: int) -> Degeneration:
    """EM_m as the factor of OM_m by span(e_{2m+2-i}) when p31_i = 0 (1 <= i <= m).

    The quotient keeps m copies of b2 and m-1 of b3, so the even labelling
    swaps b2 and b3.
    """
    m = (om.n - 1) // 2
    if om.kind.tag != "odd" or not 1 <= i <= m:
        raise ValueError("needs an odd triple and 1 <= i <= m")
    s = om.spectrum
    if PQ(s).p(i, 3, 1) != 0:
        raise NotOnHyperplane(f"p31_{i} = {PQ(s).p(i, 3, 1)} is not zero")
    b1, b2, b3 = s.b
    spec = TripleSpectrum(s.a, (b1, b3, b2), _drop(s.c, i - 1))
    raw = _quotient(om, 2 * m + 1 - i, Even(m), spec)
    return _finish(raw, build(Even(m), spec))


def em_from_om(om: RigidTriple) -> RigidTriple:
    """Lift OM_m to EM_{m+1} with p32_{m+1} = 0 (inserting c_{m+1} = a2 - b3)."""
    m = (om.n - 1) // 2
    s = om.spectrum
    c = list(s.c[:m]) + [s.a[1] - s.b[2]] + list(s.c[m:])
    return build(Even(m + 1), TripleSpectrum(s.a, s.b, c))


def hgm_sub_from_hgm(hg: RigidTriple, i: int) -> Degeneration:
    """HGM_{m-1} inside HGM_m when b_i + c_{m+1-i} - a2 = 0: drop coordinate i."""
    m = hg.n
    if hg.kind.tag != "hg" or not 1 <= i <= m:
        raise ValueError("needs a hypergeometric triple and 1 <= i <= m")
    s = hg.spectrum
    val = s.b[i - 1] + s.c[m - i] - s.a[1]
    if val != 0:
        raise NotOnHyperplane(f"b_{i} + c_{m + 1 - i} - a2 = {val} is not zero")
    spec = TripleSpectrum(s.a, _drop(s.b, i - 1), _drop(s.c, m - i))
    if m == 2:
        kind = None
    else:
        kind = Hypergeometric(m - 1)
    raw = _restrict(hg, i - 1, kind, spec)
    if kind is None:
        # 1x1 base case: a scalar triple a = b + c
        return Degeneration(raw, raw, raw, RatMatrix.identity(1), "identity")
    return _finish(raw, build(kind, spec))


def hgm_inside_em(em: RigidTriple, variant: str = "V1+V2") -> Degeneration:
    """HGM_m (variant "V1+V2") or HGM_{m+1} ("V1+V3") inside EM_m.

    A' = P(-B)I, B' = P(-A)I, C' = PCI for the coordinate projection P
    onto V1 + V2 = span(e_1..e_m) or V1 + V3 = span(e_1, e_{m+1}..e_{2m}).
    """
    m = em.n // 2
    s = em.spectrum
    a1, a2 = s.a
    b1, b2, b3 = s.b
    c = s.c
    if variant in ("V1+V2", "V1⊕V2", "12"):
        keep = list(range(m))
        kind = Hypergeometric(m)
        spec = TripleSpectrum((-b1, -b2), [b3 + c[j] - a1 - a2 for j in range(m)], c[m:])
    elif variant in ("V1+V3", "V1⊕V3", "13"):
        keep = [0] + list(range(m, 2 * m))
        kind = Hypergeometric(m + 1)
        spec = TripleSpectrum((-b1, -b3), [-a1, -a2] + [b2 + c[m + j] - a1 - a2 for j in range(m - 1)],
                              list(c[:m]) + [c[2 * m - 1]])
    else:
        raise ValueError(f"unknown variant {variant!r}")
    Ap = (-em.B).submatrix(keep, keep)
    Bp = (-em.A).submatrix(keep, keep)
    Cp = em.C.submatrix(keep, keep)
    raw = RigidTriple(kind, spec, Bp, Cp, Ap)
    return _finish(raw, build(kind, spec))


def det_arrow_formula(alpha, beta, gamma):
    """Determinant of the arrow matrix with diagonal alpha, first row beta, first column gamma."""
    if len(beta) != len(alpha) - 1 or len(gamma) != len(alpha) - 1:
        raise ValueError("beta and gamma need len(alpha) - 1 entries")
    total = _P(alpha)
    for j, (bj, gj) in enumerate(zip(beta, gamma)):
        total -= bj * gj * _P(a for k, a in enumerate(alpha[1:], start=1) if k != 1 + j)
    return total


def arrow_matrix(alpha, beta, gamma):
    n = len(alpha)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = alpha[k]
    for j in range(n - 1):
        rows[0][j + 1] = beta[j]
        rows[j + 1][0] = gamma[j]
    return RatMatrix(rows, n)


# Z-matrices and open-orbit vectors

@dataclass(frozen=True)
class ZBasis:
    Z: RatMatrix
    z_columns: tuple
    a_vectors: tuple
    eigenvalue: Fraction

    def coordinates(self):
        """0/1 coordinates of each a-vector in the z-basis."""
        Zi = inverse(self.Z)
        return [mat_vec(Zi, a) for a in self.a_vectors]


def _zsum(zs, idx):
    n = len(zs[0])
    return tuple(sum((zs[k - 1][r] for k in idx), Fraction(0)) for r in range(n))


def even_Z(t: RigidTriple) -> RatMatrix:
    pq = PQ(t.spectrum)
    m = t.n // 2
    q, dc = pq.q, pq.dc
    rows = [[Fraction(int(r == s)) for s in range(2 * m)] for r in range(2 * m)]
    for i in range(1, m):
        for j in range(1, i):
            num = _P(q(k, 2 * m - i) for k in range(1 + j, i + 1))
            den = _P(dc(2 * m - i, k) for k in range(2 * m + 1 - i, 2 * m - j + 1))
            if den == 0:
                raise FormulaPole("Z entry has a vanishing denominator")
            rows[i][j] = num / den
    for i in range(1, m + 1):
        for j in range(1, i):
            num = _P(q(m + 1 - i, k) for k in range(m + j, m + i))
            den = _P(dc(m + 1 - i, k) for k in range(m + 2 - i, m + 2 - j))
            if den == 0:
                raise FormulaPole("Z entry has a vanishing denominator")
            rows[m + i - 1][m + j - 1] = num / den
    return RatMatrix(rows, 2 * m)


def extra_Z(t: RigidTriple) -> RatMatrix:
    pq = PQ(t.spectrum)
    q, dc = pq.q3, pq.dc
    rows = [[Fraction(int(r == s)) for s in range(6)] for r in range(6)]
    for (r, s, num, den) in ((1, 0, q(1, 4, 5), dc(5, 6)), (3, 2, q(2, 4, 5), dc(3, 4)),
                             (5, 4, q(2, 3, 6), dc(1, 2))):
        if den == 0:
            raise FormulaPole("Z entry has a vanishing denominator")
        rows[r][s] = num / den
    return RatMatrix(rows, 6)


def mwz_indices(kind):
    """1-based z-indices of the open-orbit vectors for the constructed orderings."""
    m = kind.m
    if kind.tag == "even":
        return [(1, k + 1, 2 * m + 1 - k) for k in range(1, m)] + [(1, m + 1)]
    if kind.tag == "odd":
        # the row whose first flag has dimension m; printed with "z+{k+1}"
        return [(1, k + 1, 2 * m + 2 - k) for k in range(1, m + 1)]
    if kind.tag == "extra":
        return [(1, 5), (2, 3), (2, 5, 6), (4, 5)]
    if kind.tag == "e8":
        return [(1, 4, 6), (2, 4, 5), (2, 3)]
    raise ValueError(f"no open-orbit list for {kind}")


def z_basis(t: RigidTriple) -> ZBasis:
    """Z-matrix, its columns and the open-orbit vectors a_k for t.

    The a_k span the eigenspace of A for a2 (even, odd) or a1 (extra, E8).
    Odd Z is the even Z of the lift to EM_{m+1} with coordinate m+2 removed.
    """
    tag = t.kind.tag
    if tag == "even":
        Z, lam = even_Z(t), t.spectrum.a[1]
    elif tag == "odd":
        m = (t.n - 1) // 2
        Zl = even_Z(em_from_om(t))
        keep = [k for k in range(2 * m + 2) if k != m + 1]
        Z, lam = Zl.submatrix(keep, keep), t.spectrum.a[1]
    elif tag == "extra":
        Z, lam = extra_Z(t), t.spectrum.a[0]
    elif tag == "e8":
        Z, lam = RatMatrix.identity(6), t.spectrum.a[0]
    else:
        raise ValueError("Z-basis is defined for even, odd, extra and e8 triples")
    zs = tuple(Z.col(k) for k in range(t.n))
    avecs = tuple(_zsum(zs, idx) for idx in mwz_indices(t.kind))
    return ZBasis(Z, zs, avecs, lam)


def check_flag_representative(t: RigidTriple, zb: ZBasis | None = None) -> bool:
    """(A - lambda) a_k = 0 for every open-orbit vector and the a_k are independent."""
    zb = zb or z_basis(t)
    shifted = t.A.shift(-zb.eigenvalue)
    if any(any(mat_vec(shifted, a)) for a in zb.a_vectors):
        return False
    return rank(RatMatrix([list(a) for a in zb.a_vectors], t.n)) == len(zb.a_vectors)


def _same_span(vecs, others, n):
    if not vecs:
        return True
    r1 = rank(RatMatrix([list(v) for v in vecs], n))
    r2 = rank(RatMatrix([list(v) for v in vecs] + [list(v) for v in others], n))
    return r1 == len(vecs) == r2 == len(others)


def check_standard_form(t: RigidTriple, zb: ZBasis | None = None) -> bool:
    """Spectral flags of B and C are in standard form for the z-basis.

    Each partial sum of B-eigenspaces (in the order b1, b2, b3) is spanned by
    the first z's; each partial sum of C-eigenspaces (v_1, v_2, ...) by the last.
    """
    zb = zb or z_basis(t)
    es = eigenvectors(t)
    n = t.n
    mb = t.kind.multiplicities[1]
    d = 0
    for k in mb:
        d += k
        if not _same_span(list(es.vectors_B.columns())[:d], zb.z_columns[:d], n):
            return False
    mc = t.kind.multiplicities[2]
    d = 0
    for k in mc:
        d += k
        if not _same_span(list(es.vectors_C.columns())[:d], zb.z_columns[n - d:], n):
            return False
    return True


# spectra on hyperplanes

def hyperplane_spectrum(kind, form: str, i: int, seed, bound: int = 10, retries: int = 2000):
    """A random rational spectrum of ``kind`` on one of the special hyperplanes.

    ``form`` is "p32" or "p31" (even or odd, 1 <= i <= m) or "hg"
    (b_i + c_{m+1-i} - a2 = 0). One eigenvalue is solved from the hyperplane
    equation and b1 (a1 for hg) from the trace condition. Rejects draws whose
    target triple would fall outside S''.
    """
    rng = random.Random(f"{kind}/{form}/{i}/{seed}")
    m = kind.m
    for _ in range(retries):
        if kind.tag == "hg":
            a = [random_rational(rng, bound) for _ in range(2)]
            b = [random_rational(rng, bound) for _ in range(m)]
            c = [random_rational(rng, bound) for _ in range(m)]
            b[i - 1] = a[1] - c[m - i]
            spec = solve_trace(kind, a, b, c, "a", 0)
        else:
            nc = kind.n
            a = [random_rational(rng, bound) for _ in range(2)]
            b = [random_rational(rng, bound) for _ in range(3)]
            c = [random_rational(rng, bound) for _ in range(nc)]
            target = a[1] if form == "p32" else a[0]
            b[2] = target - c[i - 1]
            spec = solve_trace(kind, a, b, c, "b", 0)
        try:
            validate_spectrum(kind, spec)
            build(kind, spec)  # rejects draws where an entry has a pole
        except (DegenerateSpectrum, TraceViolation, FormulaPole):
            continue
        if _target_generic(kind, form, i, spec):
            return spec
    raise RuntimeError(f"no hyperplane spectrum for {kind} {form}_{i}")


def _target_generic(kind, form, i, spec):
    s = spec
    try:
        if kind.tag == "hg":
            if kind.m == 2:
                return True
            m = kind.m
            red = TripleSpectrum(s.a, _drop(s.b, i - 1), _drop(s.c, m - i))
            return in_S_double_prime(Hypergeometric(m - 1), red)
        if kind.tag == "even":
            if kind.m == 2:
                return False
            red_c = _drop(s.c, i - 1)
            a = s.a if form == "p32" else (s.a[1], s.a[0])
            return in_S_double_prime(Odd(kind.m - 1), TripleSpectrum(a, s.b, red_c))
        if kind.tag == "odd":
            b1, b2, b3 = s.b
            return in_S_double_prime(Even(kind.m), TripleSpectrum(s.a, (b1, b3, b2), _drop(s.c, i - 1)))
    except (DegenerateSpectrum, FormulaPole, ZeroDivisionError):
        return False
    return True
