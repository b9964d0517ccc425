"""Berenstein-Zelevinsky triangles, Littlewood-Richardson counts, and the
closed-form filling of the hypergeometric strip."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoFilling, NonIntegral
from .families import TripleSpectrum


# Points carry doubled barycentric coordinates (2a, 2b, 2g), so every
# coordinate is an integer and a + b + g = 0 still holds.

def bz_points(r):
    """Points of BZ_r: 0 < b < -a < r+1, 2a, 2b, 2g integers, not all of a, b, g integers."""
    top = 2 * (r + 1)
    pts = []
    for A in range(-top + 1, 0):
        for B in range(1, -A):
            if A % 2 == 0 and B % 2 == 0:
                continue
            pts.append((A, B, -A - B))
    return pts


def hexagons(r):
    """(A, B, C, D, E, F) around each integer point 0 < b < -a < r+1."""
    out = []
    for a in range(-r, -1):
        for b in range(1, -a):
            A2, B2, G2 = 2 * a, 2 * b, -2 * a - 2 * b
            nb = lambda da, db, dg: (A2 + da, B2 + db, G2 + dg)
            out.append((nb(0, -1, 1), nb(-1, 0, 1), nb(-1, 1, 0),
                        nb(0, 1, -1), nb(1, 0, -1), nb(1, -1, 0)))
    return out


def _side_line(r, side):
    pts = bz_points(r)
    if side == "l":      # next to the side g = 0, running away from the corner a = 0
        return sorted((p for p in pts if p[2] == 1), key=lambda p: -p[0])
    if side == "m":      # next to the side 2a = -2(r+1), from the g = 0 corner
        return sorted((p for p in pts if p[0] == -2 * r - 1), key=lambda p: -p[1])
    # next to the side b = 0, from the a = 0 corner outwards; l and m run one
    # way round the triangle and n the other, as in the usual picture
    return sorted((p for p in pts if p[1] == 1), key=lambda p: -p[0])


def boundary_segments(r):
    """{'l': [(P, Q) for l_1..l_r], 'm': [...], 'n': [...]}."""
    out = {}
    for side in "lmn":
        line = _side_line(r, side)
        out[side] = [(line[2 * k], line[2 * k + 1]) for k in range(r)]
    return out


@dataclass(frozen=True)
class BZTriangle:
    r: int
    l: tuple
    m: tuple
    n: tuple

    def __post_init__(self):
        for name in "lmn":
            vals = getattr(self, name)
            if len(vals) != self.r:
                raise ValueError(f"{name} must have {self.r} labels")
            if any(int(v) != v or v < 0 for v in vals):
                raise ValueError(f"{name} labels must be nonnegative integers")
        for name in "lmn":
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))

    @property
    def points(self):
        return bz_points(self.r)

    def equations(self):
        """Linear equations (coefficients by point, right-hand side)."""
        eqs = []
        for A, B, C, D, E, F in hexagons(self.r):
            eqs.append(({A: 1, B: 1, D: -1, E: -1}, 0))
            eqs.append(({B: 1, C: 1, E: -1, F: -1}, 0))
        segs = boundary_segments(self.r)
        for side in "lmn":
            for (P, Q), v in zip(segs[side], getattr(self, side)):
                eqs.append(({P: 1, Q: 1}, v))
        return eqs


def is_filling(t: BZTriangle, f) -> bool:
    """Nonnegative integers, hexagon conditions (all three) and boundary conditions."""
    if any(f[p] < 0 for p in t.points):
        return False
    for A, B, C, D, E, F in hexagons(t.r):
        if f[A] + f[B] != f[D] + f[E] or f[B] + f[C] != f[E] + f[F] or f[C] + f[D] != f[F] + f[A]:
            return False
    segs = boundary_segments(t.r)
    return all(f[P] + f[Q] == v for side in "lmn" for (P, Q), v in zip(segs[side], getattr(t, side)))


class _Search:
    """Bounds propagation over the equations, then branching on the narrowest variable."""

    def __init__(self, t: BZTriangle):
        self.vars = t.points
        self.index = {p: i for i, p in enumerate(self.vars)}
        self.eqs = [([(self.index[p], c) for p, c in co.items()], rhs) for co, rhs in t.equations()]
        self.by_var = [[] for _ in self.vars]
        for k, (terms, _) in enumerate(self.eqs):
            for i, _c in terms:
                self.by_var[i].append(k)
        cap = sum(t.l) + sum(t.m) + sum(t.n)
        self.start = [(0, cap) for _ in self.vars]

    def propagate(self, lo, hi, queue):
        pending = set(queue)
        while pending:
            k = pending.pop()
            terms, rhs = self.eqs[k]
            smin = sum(c * (lo[i] if c > 0 else hi[i]) for i, c in terms)
            smax = sum(c * (hi[i] if c > 0 else lo[i]) for i, c in terms)
            if smin > rhs or smax < rhs:
                return False
            for i, c in terms:
                # bounds on c*x_i from the rest of the equation
                rest_min = smin - c * (lo[i] if c > 0 else hi[i])
                rest_max = smax - c * (hi[i] if c > 0 else lo[i])
                if c > 0:
                    nlo, nhi = rhs - rest_max, rhs - rest_min
                else:
                    nlo, nhi = rest_min - rhs, rest_max - rhs
                nlo, nhi = max(lo[i], nlo), min(hi[i], nhi)
                if nlo > nhi:
                    return False
                if (nlo, nhi) != (lo[i], hi[i]):
                    lo[i], hi[i] = nlo, nhi
                    pending.update(self.by_var[i])
        return True

    def solutions(self, limit=None):
        lo = [b[0] for b in self.start]
        hi = [b[1] for b in self.start]
        found = []
        stack = [(lo, hi, range(len(self.eqs)))]
        while stack:
            lo, hi, queue = stack.pop()
            if not self.propagate(lo, hi, queue):
                continue
            open_vars = [i for i in range(len(lo)) if lo[i] < hi[i]]
            if not open_vars:
                found.append(lo)
                if limit is not None and len(found) >= limit:
                    break
                continue
            i = min(open_vars, key=lambda j: hi[j] - lo[j])
            mid = (lo[i] + hi[i]) // 2
            for a, b in ((mid + 1, hi[i]), (lo[i], mid)):
                nlo, nhi = lo[:], hi[:]
                nlo[i], nhi[i] = a, b
                stack.append((nlo, nhi, self.by_var[i]))
        return [dict(zip(self.vars, sol)) for sol in found]


def fillings(t: BZTriangle, limit=None):
    return _Search(t).solutions(limit)


def count_fillings(t: BZTriangle) -> int:
    """Number of BZ fillings satisfying the boundary conditions (= c^nu_{lambda mu})."""
    return len(fillings(t))


def lr_oracle(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam mu} by counting LR tableaux.

    Row i of nu/lam holds k[i][j] letters j (j <= i). Rows are weakly
    increasing by construction; the column-strict and lattice-word
    conditions become inequalities on partial sums of the k's.
    """
    lam, mu, nu = list(lam), list(mu), list(nu)
    n = max(len(lam), len(mu), len(nu), 1)
    lam += [0] * (n - len(lam))
    mu += [0] * (n - len(mu))
    nu += [0] * (n - len(nu))
    for p in (lam, mu, nu):
        if any(p[i] < p[i + 1] for i in range(n - 1)) or p[-1] < 0:
            raise ValueError(f"not a partition: {p}")
    if sum(nu) != sum(lam) + sum(mu) or any(lam[i] > nu[i] for i in range(n)):
        return 0
    total = 0

    def rows(i, prev, used):
        nonlocal total
        if i == n:
            total += used == mu
            return
        width = nu[i] - lam[i]
        cur = [0] * n

        def place(j, filled):
            if j > i:
                if filled == width:
                    rows(i + 1, cur[:], [u + c for u, c in zip(used, cur)])
                return
            top = min(width - filled, mu[j] - used[j])
            if j > 0:
                top = min(top, used[j - 1] - used[j])
            if i > 0:
                top = min(top, lam[i - 1] + sum(prev[:j]) - lam[i] - filled)
            for v in range(top, -1, -1):
                cur[j] = v
                place(j + 1, filled + v)
            cur[j] = 0

        place(0, 0)

    rows(0, [0] * n, [0] * n)
    return total


def labels_from_partitions(lam, mu, nu):
    """Boundary labels: consecutive differences of each weight."""
    r = max(len(lam), len(mu), len(nu)) - 1

    def pad(p):
        p = list(p) + [0] * (r + 1 - len(p))
        return tuple(p[i] - p[i + 1] for i in range(r))

    return pad(lam), pad(mu), pad(nu)


def triangle_for(lam, mu, nu) -> BZTriangle:
    l, m, n = labels_from_partitions(lam, mu, nu)
    return BZTriangle(len(l), l, m, n)


def lr_via_bz(lam, mu, nu) -> int:
    """c^nu_{lam mu} as a BZ count. The labels only see differences, so the
    size condition |nu| = |lam| + |mu| is checked here."""
    for p in (lam, mu, nu):
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or (p and p[-1] < 0):
            raise ValueError(f"not a partition: {list(p)}")
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    width = max(len(lam), len(mu), len(nu), 2)
    pad = [0] * width
    return count_fillings(triangle_for(list(lam) + pad[len(lam):], list(mu) + pad[len(mu):],
                                       list(nu) + pad[len(nu):]))


def _expanded(vals, mult):
    out = []
    for v, k in zip(vals, mult):
        out += [v] * k
    return sorted(out, reverse=True)


def gl_to_sl_weights(spec: TripleSpectrum, kind=None):
    """(l, m, n) with lambda = s(B), mu = s(C), nu = s(A), each sorted decreasingly.

    ``kind`` supplies multiplicities; without it the lists are taken as the
    full (already expanded) eigenvalue lists. The traceless shift changes no
    difference, so the labels are the consecutive differences.
    """
    if kind is None:
        lam, mu, nu = (sorted(x, reverse=True) for x in (spec.b, spec.c, spec.a))
    else:
        ma, mb, mc = kind.multiplicities
        lam, mu, nu = _expanded(spec.b, mb), _expanded(spec.c, mc), _expanded(spec.a, ma)
    out = []
    for p in (lam, mu, nu):
        d = [p[i] - p[i + 1] for i in range(len(p) - 1)]
        if any(Fraction(x).denominator != 1 for x in d):
            raise NonIntegral(f"eigenvalue differences {d} are not integers")
        out.append(tuple(int(x) for x in d))
    return tuple(out)


def spectrum_partitions(spec: TripleSpectrum, kind=None):
    """Integer spectrum -> (lambda, mu, nu) shifted to nonnegative partitions with |nu| = |lambda| + |mu|."""
    if kind is None:
        lam, mu, nu = (sorted(x, reverse=True) for x in (spec.b, spec.c, spec.a))
    else:
        ma, mb, mc = kind.multiplicities
        lam, mu, nu = _expanded(spec.b, mb), _expanded(spec.c, mc), _expanded(spec.a, ma)
    if any(Fraction(x).denominator != 1 for x in lam + mu + nu):
        raise NonIntegral("spectrum is not integral")
    s, u = -min(lam), -min(mu)
    return ([int(x + s) for x in lam], [int(x + u) for x in mu], [int(x + s + u) for x in nu])


def lr_of_spectrum(spec: TripleSpectrum, kind=None) -> int:
    return lr_oracle(*spectrum_partitions(spec, kind))


def bz_of_spectrum(spec: TripleSpectrum, kind=None) -> BZTriangle:
    l, m, n = gl_to_sl_weights(spec, kind)
    return BZTriangle(len(l), l, m, n)


# hypergeometric strip

@dataclass(frozen=True)
class Filling:
    triangle: BZTriangle
    f: dict
    x: int

    def __getitem__(self, p):
        return self.f[p]


def hg_triangle(l, m, n_r) -> BZTriangle:
    r = len(l)
    if len(m) != r:
        raise ValueError("l and m must have the same length")
    return BZTriangle(r, l, m, [0] * (r - 1) + [n_r])


def forced_zeros(t: BZTriangle):
    """Points that vanish in every filling: zero segments, then two zeros on a hexagon side."""
    zero = set()
    eqs = [(co, rhs) for co, rhs in t.equations() if rhs == 0]
    # the third hexagon relation is implied, but it forces zeros the other two miss
    eqs += [({C: 1, D: 1, F: -1, A: -1}, 0) for A, B, C, D, E, F in hexagons(t.r)]
    changed = True
    while changed:
        changed = False
        for co, _ in eqs:
            live = [p for p in co if p not in zero]
            if live and len({co[p] > 0 for p in live}) == 1:
                zero.update(live)
                changed = True
    return zero


def strip_seed(r):
    """The point of the n_r segment that carries x (the one with a zero neighbour)."""
    return boundary_segments(r)["n"][r - 1][0]


def hg_strip_x(l, m, n_r) -> Fraction:
    """x = (sum (r+1-j) l_j - sum j m_j + r n_r) / (r+1)."""
    r = len(l)
    num = (sum((r + 1 - j) * l[j - 1] for j in range(1, r + 1))
           - sum(j * m[j - 1] for j in range(1, r + 1)) + r * n_r)
    return Fraction(num, r + 1)


def strip_linear_solution(l, m, n_r):
    """Values on the strip from an exact solve of its linear system (no closed form)."""
    from .ratmat import RatMatrix, solve_linear
    t = hg_triangle(l, m, n_r)
    zero = forced_zeros(t)
    live = [p for p in t.points if p not in zero]
    idx = {p: i for i, p in enumerate(live)}
    rows, rhs = [], []
    for co, v in t.equations():
        row = [0] * len(live)
        for p, c in co.items():
            if p in idx:
                row[idx[p]] = c
        if any(row):
            rows.append(row)
            rhs.append(v)
    sol = solve_linear(RatMatrix(rows, len(live)), rhs)
    if not sol.unique:
        raise NoFilling("strip system is underdetermined")
    out = {p: Fraction(0) for p in zero}
    out.update({p: sol.particular[idx[p]] for p in live})
    return out


def hg_strip_solution(l, m, n_r) -> Filling:
    """The unique filling for the boundary (l, m, n = (0, ..., 0, n_r)).

    x comes from the closed form; every other value is forced by an
    equation with a single unknown once the zeros are in place.
    """
    t = hg_triangle(l, m, n_r)
    x = hg_strip_x(l, m, n_r)
    if x.denominator != 1 or x < 0:
        raise NoFilling(f"x = {x} is not a nonnegative integer")
    f = {p: Fraction(0) for p in forced_zeros(t)}
    f[strip_seed(t.r)] = x
    eqs = t.equations()
    changed = True
    while changed:
        changed = False
        for co, rhs in eqs:
            unknown = [p for p in co if p not in f]
            if len(unknown) == 1:
                p = unknown[0]
                f[p] = (rhs - sum(c * f[q] for q, c in co.items() if q in f)) / co[p]
                changed = True
    if len(f) != len(t.points) or any(v.denominator != 1 or v < 0 for v in f.values()):
        raise NoFilling("strip entries are not all nonnegative integers")
    f = {p: int(v) for p, v in f.items()}
    if not is_filling(t, f):
        raise NoFilling("forced values violate a boundary or hexagon condition")
    return Filling(t, f, int(x))
