"""Eigenvectors, invariant forms and the exact certificates built on them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateForm, FormulaPole, NotNormalized
from .families import PQ, RigidTriple, _P, claimed_spectra
from .ratmat import RatMatrix, echelon, inverse, kernel, mat_mul, mat_vec, rank, rat


def _div(num, den):
    if den == 0:
        raise FormulaPole("vanishing denominator in an eigenvector or form formula")
    return num / den


@dataclass(frozen=True)
class EigenSystem:
    vectors_C: RatMatrix
    vectors_B: RatMatrix
    eigenvalues_C: tuple
    eigenvalues_B: tuple


@dataclass(frozen=True)
class InvariantForm:
    gram: tuple
    G: RatMatrix
    basis: RatMatrix
    hg_aux_s: tuple = field(default=())
    hg_aux_x: tuple = field(default=())

    @property
    def degenerate(self):
        return any(g == 0 for g in self.gram)

    def to_json(self):
        return {"gram": [str(g) for g in self.gram], "G": self.G.to_json()}


# closed-form eigenvectors

def _hg_vectors_B(t: RigidTriple):
    s = t.spectrum
    m = t.n
    a2, b, c = s.a[1], s.b, s.c

    def T(i, k):
        return b[i - 1] + c[k - 1] - a2

    cols = []
    for i in range(1, m + 1):
        v = [Fraction(0)] * m
        v[i - 1] = Fraction(1)
        for j in range(1, i):
            val = _div(T(j, m + 1 - j), b[i - 1] - b[j - 1])
            for k in range(1, i - j):
                val *= _div(T(i, m + 1 - j - k), b[i - 1] - b[j + k - 1])
            v[j - 1] = val
        cols.append(v)
    return cols


def _even_vectors_C(t: RigidTriple):
    pq = PQ(t.spectrum)
    m = t.n // 2
    n = 2 * m
    q, p, dc = pq.q, pq.p, pq.dc
    cols = []
    for i in range(1, m + 1):
        v = [Fraction(0)] * n
        v[2 * m - i] = Fraction(1)
        cols.append(v)
    for i in range(1, m):
        v = [Fraction(0)] * n
        v[m - i] = Fraction(1)
        for j in range(1, m + 1):
            num = p(m + 1 - j, 3, 2)
            num *= _P(q(m + 1 - j, k) for k in range(m + 1, m + j) if k != m + i)
            num *= _P(q(k, m + i) for k in range(m + 1 - i, m + 1) if k != m + 1 - j)
            den = dc(m + 1 - j, m + i)
            den *= _P(dc(m + 1 - j, k) for k in range(m + 2 - j, m + 1))
            den *= _P(dc(k, m + i) for k in range(m + 1, m + i))
            v[m + j - 1] = (-1) ** i * _div(num, den)
        cols.append(v)
    v = [Fraction(0)] * n
    v[0] = Fraction(1)
    for j in range(1, m):
        v[j] = _div(_P(q(k, 2 * m - j) for k in range(1, j + 1)),
                    _P(dc(2 * m - j, k) for k in range(2 * m + 1 - j, 2 * m + 1)))
    for j in range(1, m + 1):
        num = p(m + 1 - j, 3, 2)
        num *= _P(q(k, 2 * m) for k in range(1, m + 1) if k != m + 1 - j)
        num *= _P(q(m + 1 - j, k) for k in range(m + 1, m + j))
        den = dc(m + 1 - j, 2 * m)
        den *= _P(dc(k, 2 * m) for k in range(m + 1, 2 * m))
        den *= _P(dc(m + 1 - j, k) for k in range(m + 2 - j, m + 1))
        v[m + j - 1] = (-1) ** (m + 1) * _div(num, den)
    cols.append(v)
    return cols


def _even_vectors_B(t: RigidTriple):
    s = t.spectrum
    m = t.n // 2
    n = 2 * m
    a1, a2 = s.a
    b1, b2, b3 = s.b
    B = t.B
    cols = []
    e1 = [Fraction(0)] * n
    e1[0] = Fraction(1)
    cols.append(e1)
    for i in range(1, m):
        v = [Fraction(0)] * n
        v[0] = -_div(B[0, i], b1 - b2)
        v[i] = Fraction(1)
        cols.append(v)
    for i in range(1, m + 1):
        v = [Fraction(0)] * n
        v[0] = even_x_coefficient(t, i)
        for j in range(1, m):
            v[j] = -_div(B[j, m + i - 1], b2 - b3)
        v[m + i - 1] = Fraction(1)
        cols.append(v)
    return cols


def even_x_coefficient(t: RigidTriple, i: int):
    """First coordinate of the B-eigenvector w_{m+i}, from the closed formula.

    The factor b1 + b2 + c_{m+1-i} + c_{2m} is printed for the normalized
    triple (a1 + a2 = 0); we use its shift-invariant form with -a1 - a2.
    """
    s = t.spectrum
    pq = PQ(s)
    m = t.n // 2
    a1, a2 = s.a
    b1, b2, b3 = s.b
    c = s.c
    num = (-1) ** (m + 1 - i) * pq.p(m + 1 - i, 3, 1)
    num *= b1 + b2 + c[m - i] + c[2 * m - 1] - a1 - a2
    num *= _P(pq.q(m + 1 - i, k) for k in range(m + i, 2 * m))
    den = (b1 - b3) * (b2 - b3) * _P(pq.dc(k, m + 1 - i) for k in range(1, m - i + 1))
    return _div(num, den)


def _odd_vectors_C(t: RigidTriple):
    pq = PQ(t.spectrum)
    m = (t.n - 1) // 2
    n = 2 * m + 1
    q, p, dc = pq.q, pq.p, pq.dc
    cols = []
    for i in range(1, m + 1):
        v = [Fraction(0)] * n
        v[2 * m + 1 - i] = Fraction(1)
        cols.append(v)
    for i in range(1, m + 1):
        v = [Fraction(0)] * n
        v[m + 1 - i] = Fraction(1)
        for j in range(1, m + 1):
            num = p(m + i, 2, 1)
            num *= _P(q(m + 1 - j, k) for k in range(m + 1, m + j + 1) if k != m + i)
            num *= _P(q(k, m + i) for k in range(m + 2 - i, m + 1) if k != m + 1 - j)
            den = dc(m + 1 - j, m + i)
            den *= _P(dc(m + 1 - j, k) for k in range(m + 2 - j, m + 1))
            den *= _P(dc(k, m + i) for k in range(m + 1, m + i))
            v[m + j] = (-1) ** i * _div(num, den)
        cols.append(v)
    v = [Fraction(0)] * n
    v[0] = Fraction(1)
    for i in range(1, m + 1):
        v[i] = _div(_P(q(k, 2 * m + 1 - i) for k in range(1, i + 1)),
                    _P(dc(2 * m + 1 - i, k) for k in range(2 * m + 2 - i, 2 * m + 2)))
    for j in range(1, m + 1):
        num = p(2 * m + 1, 2, 1)
        num *= _P(q(k, 2 * m + 1) for k in range(1, m + 1) if k != m + 1 - j)
        num *= _P(q(m + 1 - j, k) for k in range(m + 1, m + j + 1))
        den = dc(m + 1 - j, 2 * m + 1)
        den *= _P(dc(k, 2 * m + 1) for k in range(m + 1, 2 * m + 1))
        den *= _P(dc(m + 1 - j, k) for k in range(m + 2 - j, m + 1))
        v[m + j] = (-1) ** m * _div(num, den)
    cols.append(v)
    return cols


def _extra_vectors_C(t: RigidTriple):
    pq = PQ(t.spectrum)
    p, q, dc = pq.pe, pq.q3, pq.dc
    d = _div
    return [
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, d(p(3, 2), dc(2, 3)), d(p(3, 1) * q(2, 3, 6), dc(1, 2) * dc(1, 3))],
        [0, 0, 1, 0, -d(p(3, 2) * q(2, 3, 5), dc(2, 4) * dc(3, 4)),
         -d(p(3, 1) * q(2, 4, 5) * q(2, 4, 6), dc(1, 2) * dc(1, 4) * dc(3, 4))],
        [0, 1, d(p(2, 4), dc(4, 5)), d(p(2, 3) * q(2, 4, 5), dc(3, 4) * dc(3, 5)),
         -d(p(2, 5) * p(3, 2) * q(2, 3, 4), dc(2, 5) * dc(3, 5) * dc(4, 5)),
         -d(p(2, 5) * p(3, 1) * q(2, 4, 5) * q(2, 5, 6), dc(1, 2) * dc(1, 5) * dc(3, 5) * dc(4, 5))],
        [1, 0, d(p(2, 4) * q(2, 3, 6), dc(4, 6) * dc(5, 6)),
         d(p(2, 3) * q(2, 3, 5) * q(2, 4, 6), dc(3, 4) * dc(3, 6) * dc(5, 6)),
         -d(p(2, 6) * p(3, 2) * q(2, 3, 4) * q(2, 3, 5), dc(2, 6) * dc(3, 6) * dc(4, 6) * dc(5, 6)),
         -d(p(2, 6) * p(3, 1) * q(2, 3, 6) * q(2, 4, 6) * q(2, 5, 6),
            dc(1, 2) * dc(1, 6) * dc(3, 6) * dc(4, 6) * dc(5, 6))],
    ]


def _extra_vectors_B(t: RigidTriple):
    s = t.spectrum
    pq = PQ(s)
    p, q, dc = pq.pe, pq.q3, pq.dc
    b1, b2, b3 = s.b
    d = _div
    # the w_5, w_6 differences mix q_ijk with p_ij, written here as printed
    q126, q125 = q(1, 2, 6), q(1, 2, 5)
    p31, p32 = p(3, 1), p(3, 2)
    return [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [d(p(1, 6) * q(2, 4, 5), (b1 - b2) * dc(3, 4)),
         -d(p(1, 5) * q(2, 3, 5) * q(2, 4, 6), (b1 - b2) * dc(3, 4) * dc(5, 6)), 1, 0, 0, 0],
        [-d(p(1, 6), b1 - b2), d(p(1, 5) * q(2, 3, 6), (b1 - b2) * dc(5, 6)), 0, 1, 0, 0],
        [-d(p(1, 6) * q(2, 4, 5) * (q126 - p31), (b1 - b3) * (b2 - b3) * dc(1, 2)),
         d(p(1, 5) * q(2, 3, 6) * q(2, 4, 6) * (q125 - p31), (b1 - b3) * (b2 - b3) * dc(1, 2) * dc(5, 6)),
         d(p(2, 4) * q(2, 3, 6), (b2 - b3) * dc(1, 2)),
         d(p(2, 3) * q(2, 4, 5) * q(2, 4, 6), (b2 - b3) * dc(1, 2) * dc(3, 4)), 1, 0],
        [-d(p(1, 6) * (q126 - p32), (b1 - b3) * (b2 - b3)),
         d(p(1, 5) * q(2, 3, 5) * (q125 - p32), (b1 - b3) * (b2 - b3) * dc(5, 6)),
         -d(p(2, 4), b2 - b3), -d(p(2, 3) * q(2, 3, 5), (b2 - b3) * dc(3, 4)), 0, 1],
    ]


def kernel_vectors(M: RatMatrix, eigen):
    """Eigenvectors of M from kernels of M - lambda Id, one column per multiplicity.

    ``eigen`` lists eigenvalues with repetition; equal values share a kernel.
    """
    cols, seen = [], {}
    for lam in eigen:
        if lam not in seen:
            seen[lam] = kernel(M.shift(-lam))
            seen[lam] = list(seen[lam])
        if not seen[lam]:
            raise FormulaPole(f"eigenvalue {lam} has a smaller eigenspace than claimed")
        cols.append(seen[lam].pop(0))
    return cols


def _c_order(t: RigidTriple):
    """Eigenvalues of C in the order v_1, v_2, ... (v_i belongs to c_i)."""
    s = t.spectrum
    ma, mb, mc = t.kind.multiplicities
    return tuple(x for x, k in zip(s.c, mc) for _ in range(k))


def _b_order(t: RigidTriple):
    s = t.spectrum
    ma, mb, mc = t.kind.multiplicities
    return tuple(x for x, k in zip(s.b, mb) for _ in range(k))


def eigenvectors(t: RigidTriple) -> EigenSystem:
    """Eigenvectors of C and B with the pivots used by the closed forms.

    Where no closed form exists the columns come from exact kernels.
    """
    tag = t.kind.tag
    ec, eb = _c_order(t), _b_order(t)
    if tag == "hg":
        # B's eigenvectors carry the form; order C's by the matching c
        vb = _hg_vectors_B(t)
        vc = kernel_vectors(t.C, ec)
    elif tag == "even":
        vc, vb = _even_vectors_C(t), _even_vectors_B(t)
    elif tag == "odd":
        vc = _odd_vectors_C(t)
        vb = kernel_vectors(t.B, eb)
    elif tag == "extra":
        vc, vb = _extra_vectors_C(t), _extra_vectors_B(t)
    else:
        vc = kernel_vectors(t.C, ec)
        vb = kernel_vectors(t.B, eb)
    return EigenSystem(RatMatrix.from_columns(vc), RatMatrix.from_columns(vb), ec, eb)


# Gram values

def _hg_gram(t: RigidTriple):
    s = t.spectrum
    m = t.n
    a2, b, c = s.a[1], s.b, s.c

    def T(i, k):
        return b[i - 1] + c[k - 1] - a2

    gram = []
    for i in range(1, m + 1):
        num = _P(b[i - 1] - b[k - 1] for k in range(i + 1, m + 1))
        num *= _P(T(i, k) for k in range(m + 2 - i, m + 1))
        den = _P(b[i - 1] - b[k - 1] for k in range(1, i))
        den *= _P(T(i, k) for k in range(1, m + 2 - i))
        gram.append(_div(num, den))
    return gram


def hg_s_x(t: RigidTriple):
    """The auxiliary s_i and x_i, written shift-invariantly (b + c - a2)."""
    s = t.spectrum
    m = t.n
    a2, b, c = s.a[1], s.b, s.c

    def T(i, k):
        return b[i - 1] + c[k - 1] - a2

    ss, xs = [], []
    for i in range(1, m + 1):
        ss.append(_P(_div(T(i, m + 1 - k), b[i - 1] - b[k - 1]) for k in range(1, i)))
        x = T(i, m + 1 - i)
        for k in range(1, m - i + 1):
            x *= _div(T(i, m + 1 - i - k), b[i - 1] - b[i + k - 1])
        xs.append(x)
    return ss, xs


def _evenodd_gram(t: RigidTriple):
    pq = PQ(t.spectrum)
    N = len(t.spectrum.c)
    m = N // 2
    even = t.kind.tag == "even"
    gram = []
    for i in range(1, N + 1):
        val = _div(_P(pq.dc(i, k) for k in range(i + 1, N + 1)), _P(pq.dc(i, k) for k in range(1, i)))
        val *= _div(_P(pq.q(i, k) for k in range(N + 1 - i, N + 1) if k != i),
                    _P(pq.q(i, k) for k in range(1, N + 1 - i) if k != i))
        p31 = pq.p(i, 3, 1)
        px = pq.p(i, 3, 2) if even else pq.p(i, 2, 1)
        val *= _div(p31, px) if i <= m else p31 * px
        gram.append(val)
    return gram


def _extra_gram(t: RigidTriple):
    pq = PQ(t.spectrum)
    p, q, dc = pq.pe, pq.q3, pq.dc
    d = _div

    def cd(i):
        return d(_P(dc(i, k) for k in range(i + 1, 7)), _P(dc(i, k) for k in range(1, i)))

    return [
        -d(cd(1), p(1, 1) * p(2, 1) * p(3, 1)),
        d(cd(2), p(1, 2) * p(2, 2) * p(3, 2)) * d(q(1, 3, 4) * q(1, 3, 5) * q(1, 3, 6) * q(1, 4, 5),
                                                   q(1, 4, 6) * q(1, 5, 6)),
        d(cd(3) * p(3, 3), p(1, 3) * p(2, 3)) * d(q(1, 2, 4) * q(1, 2, 5) * q(1, 2, 6) * q(1, 4, 5),
                                                   q(1, 4, 6) * q(1, 5, 6)),
        d(cd(4) * p(3, 4), p(1, 4) * p(2, 4)) * d(q(1, 2, 3) * q(1, 2, 5) * q(1, 2, 6) * q(1, 3, 5)
                                                   * q(1, 3, 6), q(1, 5, 6)),
        d(cd(5) * p(2, 5) * p(3, 5), p(1, 5)) * d(q(1, 2, 3) * q(1, 2, 4) * q(1, 2, 6) * q(1, 3, 4)
                                                   * q(1, 3, 6), q(1, 4, 6)),
        d(cd(6) * p(2, 6) * p(3, 6), p(1, 6)) * q(1, 2, 3) * q(1, 2, 4) * q(1, 2, 5) * q(1, 3, 4)
        * q(1, 3, 5) * q(1, 4, 5),
    ]


def form_system(t: RigidTriple):
    """Linear system for symmetric G with G M = M^T G for M in {B, C}.

    Unknowns are the upper-triangular entries of G in row-major order.
    """
    n = t.n
    idx, k = {}, 0
    for i in range(n):
        for j in range(i, n):
            idx[i, j] = idx[j, i] = k
            k += 1
    nvars = k
    rows = []
    for M in (t.B, t.C):
        for i in range(n):
            for j in range(i + 1, n):
                # (G M)_ij - (M^T G)_ij = sum_k G_ik M_kj - M_ki G_kj
                r = [Fraction(0)] * nvars
                for kk in range(n):
                    if M[kk, j]:
                        r[idx[i, kk]] += M[kk, j]
                    if M[kk, i]:
                        r[idx[kk, j]] -= M[kk, i]
                if any(r):
                    rows.append(r)
    return rows, idx, nvars


def _form_from_vector(vec, idx, n):
    return RatMatrix([[vec[idx[i, j]] for j in range(n)] for i in range(n)], n)


def solve_form(t: RigidTriple):
    """Basis of the invariant symmetric forms as matrices."""
    rows, idx, nvars = form_system(t)
    M = RatMatrix(rows, nvars) if rows else RatMatrix.zeros(0, nvars)
    return [_form_from_vector(v, idx, t.n) for v in kernel(M)]


def ldl_diagonal(G: RatMatrix):
    """Diagonal of an exact congruence diagonalization of a symmetric matrix.

    Symmetric pivoting; when every remaining diagonal entry is zero but an
    off-diagonal one is not, the pair is combined first (e_i + e_j).
    """
    a = [list(r) for r in G.rows()]
    n = len(a)
    diag = []
    live = list(range(n))
    while live:
        piv = next((i for i in live if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in live for j in live if i < j and a[i][j] != 0), None)
            if pair is None:
                diag.extend([Fraction(0)] * len(live))
                break
            i, j = pair
            # row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        diag.append(d)
        live.remove(piv)
        for i in live:
            f = a[i][piv] / d
            if f:
                for j in live:
                    a[i][j] -= f * a[piv][j]
        for i in live:
            a[i][piv] = a[piv][i] = Fraction(0)
    return diag


def invariant_form(t: RigidTriple, es: EigenSystem | None = None, strict: bool = False) -> InvariantForm:
    """The invariant symmetric form, as Gram values on an eigenbasis and as G.

    HG uses the B-eigenbasis, the other closed-form families the C-eigenbasis.
    For E8, G is the solution of the self-adjointness system scaled so its
    first nonzero entry (row-major) is 1, and ``gram`` is the LDL^T diagonal.
    With ``strict`` a vanishing Gram value raises DegenerateForm.
    """
    tag = t.kind.tag
    es = es or eigenvectors(t)
    s_aux = x_aux = ()
    if tag == "e8":
        sols = solve_form(t)
        if len(sols) != 1:
            raise DegenerateForm(f"self-adjointness system has {len(sols)} independent solutions")
        G = sols[0]
        first = next(x for r in G.rows() for x in r if x != 0)
        G = G.scale(1 / first)
        form = InvariantForm(tuple(ldl_diagonal(G)), G, RatMatrix.identity(t.n))
    else:
        if tag == "hg":
            gram, V = _hg_gram(t), es.vectors_B
            s_aux, x_aux = (tuple(v) for v in hg_s_x(t))
        elif tag in ("even", "odd"):
            gram, V = _evenodd_gram(t), es.vectors_C
        else:
            gram, V = _extra_gram(t), es.vectors_C
        Vi = inverse(V)
        G = mat_mul(mat_mul(Vi.T, RatMatrix.diag(gram)), Vi)
        form = InvariantForm(tuple(gram), G, V, s_aux, x_aux)
    if strict and form.degenerate:
        raise DegenerateForm("a Gram value vanishes: spectrum is outside S''", form)
    return form


def check_self_adjoint(M: RatMatrix, G: RatMatrix) -> bool:
    return mat_mul(G, M) == mat_mul(M.T, G)


def check_form_uniqueness(t: RigidTriple) -> int:
    rows, idx, nvars = form_system(t)
    if not rows:
        return nvars
    return nvars - len(echelon(rows, nvars)[0])


# irreducibility

_PRIME = (1 << 61) - 1


def _mod_matrix(M: RatMatrix, p: int):
    out = []
    for r in M.rows():
        row = []
        for x in r:
            if x.denominator % p == 0:
                return None
            row.append(x.numerator * pow(x.denominator, -1, p) % p)
        out.append(row)
    return out


def _span_closure_mod(mats, n, p):
    """Dimension of the unital algebra generated by ``mats`` over F_p."""
    basis = {}  # pivot -> normalized row

    def reduce(v):
        for piv, row in basis.items():
            c = v[piv]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return v

    def add(v):
        v = reduce(v)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return None
        inv = pow(v[piv], -1, p)
        v = [x * inv % p for x in v]
        for k, row in basis.items():
            c = row[piv]
            if c:
                basis[k] = [(x - c * y) % p for x, y in zip(row, v)]
        basis[piv] = v
        return v

    ident = [1 if i == j else 0 for i in range(n) for j in range(n)]
    queue = [add(ident)]
    while queue and len(basis) < n * n:
        X = queue.pop()
        Xm = [X[i * n:(i + 1) * n] for i in range(n)]
        for M in mats:
            prod_ = [sum(M[i][k] * Xm[k][j] for k in range(n) if M[i][k]) % p
                     for i in range(n) for j in range(n)]
            v = add(prod_)
            if v is not None:
                queue.append(v)
    return len(basis)


def _span_closure_exact(mats, n):
    basis = {}

    def add(v):
        for piv, row in basis.items():
            c = v[piv]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return None
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        for k, row in basis.items():
            c = row[piv]
            if c:
                basis[k] = [x - c * y for x, y in zip(row, v)]
        basis[piv] = v
        return v

    ident = [Fraction(int(i == j)) for i in range(n) for j in range(n)]
    queue = [add(ident)]
    while queue and len(basis) < n * n:
        flat = queue.pop()
        X = RatMatrix([flat[i * n:(i + 1) * n] for i in range(n)], n)
        for M in mats:
            P = mat_mul(M, X)
            v = add([x for r in P.rows() for x in r])
            if v is not None:
                queue.append(v)
    return len(basis)


def algebra_dimension(mats, n: int) -> int:
    """Dimension of the unital algebra generated by the given n x n matrices.

    A reduction mod a large prime gives a lower bound that is exact whenever
    it already equals n^2; otherwise the closure is redone over Q.
    """
    if n * n <= 1:
        return n * n
    modded = [_mod_matrix(M, _PRIME) for M in mats]
    if all(x is not None for x in modded):
        if _span_closure_mod(modded, n, _PRIME) == n * n:
            return n * n
    return _span_closure_exact(mats, n)


def check_irreducible(t: RigidTriple) -> bool:
    return algebra_dimension([t.B, t.C], t.n) == t.n * t.n


def verify_spectrum(M: RatMatrix, claimed) -> bool:
    """Certify that M is diagonalizable with exactly the claimed spectrum.

    ``claimed`` is a list of (eigenvalue, multiplicity) with distinct values.
    """
    claimed = [(rat(v), k) for v, k in claimed]
    n = M.nrows
    if sum(k for _, k in claimed) != n:
        return False
    prod_ = RatMatrix.identity(n)
    for lam, k in claimed:
        shifted = M.shift(-lam)
        if rank(shifted) != n - k:
            return False
        prod_ = mat_mul(prod_, shifted)
    return prod_.is_zero()


def verify_triple(t: RigidTriple):
    """verify_spectrum on A, B and C against the declared spectra."""
    cl = claimed_spectra(t.kind, t.spectrum)
    return {name: verify_spectrum(getattr(t, name), cl[name]) for name in "ABC"}


def hg_rank_one_certificate(t: RigidTriple):
    """For a hypergeometric triple with a2 = 0, return the vector i.

    A is rank one with every column equal to i, so A k = (sum of k) i.
    Checks that shape, A i = a1 i, A v_k = s_k i and sum x_k v_k = i;
    raises AssertionError if any of these fails.
    """
    if t.kind.tag != "hg":
        raise NotNormalized("rank-one certificate applies to the hypergeometric family")
    s = t.spectrum
    if s.a[1] != 0:
        raise NotNormalized("normalize so that a2 = 0 first")
    m = t.n
    vec = tuple(s.b[j] + s.c[m - 1 - j] for j in range(m))
    assert all(t.A.col(k) == vec for k in range(m)), "A is not the rank-one matrix with columns i"
    assert mat_vec(t.A, vec) == tuple(s.a[0] * x for x in vec)
    es = eigenvectors(t)
    ss, xs = hg_s_x(t)
    total = [Fraction(0)] * m
    for k in range(m):
        v = es.vectors_B.col(k)
        assert mat_vec(t.A, v) == tuple(ss[k] * x for x in vec)
        total = [tt + xs[k] * x for tt, x in zip(total, v)]
    assert tuple(total) == vec
    return vec
