"""Spectra, validation and the closed-form constructors of B, C and A = B + C.

All public indices are 1-based.  Spectra store distinct eigenvalues only;
multiplicities come from the family's composition.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import DegenerateSpectrum, FormulaPole, SamplingExhausted, TraceViolation, ZeroScale
from .ratmat import RatMatrix, rat

TAGS = ("hg", "even", "odd", "extra", "e8")


@dataclass(frozen=True)
class FamilyKind:
    tag: str
    m: int | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown family {self.tag!r}")
        if self.tag in ("hg", "even", "odd"):
            if self.m is None or self.m < 2:
                raise ValueError(f"{self.tag} family needs m >= 2")
        elif self.m is not None:
            raise ValueError(f"{self.tag} takes no m")

    @property
    def n(self) -> int:
        return {"hg": self.m, "even": 2 * (self.m or 0), "odd": 2 * (self.m or 0) + 1,
                "extra": 6, "e8": 6}[self.tag]

    @property
    def multiplicities(self):
        """(a, b, c) multiplicity lists matching the distinct-value lists."""
        m = self.m
        if self.tag == "hg":
            return (1, m - 1), (1,) * m, (1,) * m
        if self.tag == "even":
            return (m, m), (1, m - 1, m), (1,) * (2 * m)
        if self.tag == "odd":
            return (m + 1, m), (1, m, m), (1,) * (2 * m + 1)
        if self.tag == "extra":
            return (4, 2), (2, 2, 2), (1,) * 6
        return (3, 3), (2, 2, 2), (1, 1, 1, 1, 2)

    def __str__(self):
        return self.tag if self.m is None else f"{self.tag}:{self.m}"

    @classmethod
    def parse(cls, text: str) -> FamilyKind:
        tag, _, m = text.partition(":")
        return cls(tag, int(m) if m else None)


def Hypergeometric(m):
    return FamilyKind("hg", m)


def Even(m):
    return FamilyKind("even", m)


def Odd(m):
    return FamilyKind("odd", m)


ExtraE8hat = FamilyKind("extra")
E8 = FamilyKind("e8")


@dataclass(frozen=True)
class TripleSpectrum:
    a: tuple
    b: tuple
    c: tuple

    def __init__(self, a, b, c):
        object.__setattr__(self, "a", tuple(rat(x) for x in a))
        object.__setattr__(self, "b", tuple(rat(x) for x in b))
        object.__setattr__(self, "c", tuple(rat(x) for x in c))

    def expanded(self, kind: FamilyKind):
        ma, mb, mc = kind.multiplicities
        return tuple(list(zip(self.a, ma))), tuple(zip(self.b, mb)), tuple(zip(self.c, mc))

    def to_json(self, kind: FamilyKind):
        ma, mb, mc = kind.multiplicities
        return {
            "a": [str(x) for x in self.a], "b": [str(x) for x in self.b], "c": [str(x) for x in self.c],
            "multiplicities": {"a": list(ma), "b": list(mb), "c": list(mc)},
        }

    @classmethod
    def from_json(cls, data) -> TripleSpectrum:
        return cls(data["a"], data["b"], data["c"])


def claimed_spectra(kind: FamilyKind, spec: TripleSpectrum):
    """{A, B, C} -> list of (eigenvalue, multiplicity), merging equal values."""
    out = {}
    for name, vals, mult in zip("ABC", (spec.a, spec.b, spec.c), kind.multiplicities):
        merged = {}
        for v, k in zip(vals, mult):
            merged[v] = merged.get(v, 0) + k
        out[name] = sorted(merged.items())
    return out


class PQ:
    """The linear forms p_i^{jk}, q_ij and q_ijk of a spectrum (1-based)."""

    def __init__(self, spec: TripleSpectrum):
        self.a, self.b, self.c = spec.a, spec.b, spec.c
        self._csum = sum(self.c)

    def p(self, i, j, k):
        return self.c[i - 1] + self.b[j - 1] - self.a[k - 1]

    def q(self, i, j):
        a, b, c = self.a, self.b, self.c
        return c[i - 1] + c[j - 1] + b[1] + b[2] - a[0] - a[1]

    def q3(self, i, j, k):
        c = self.c
        return c[i - 1] + c[j - 1] + c[k - 1] - self._csum / 2

    def pe(self, i, j):
        """Extra-case p_ij = b_i + c_j - a_1."""
        return self.b[i - 1] + self.c[j - 1] - self.a[0]

    def dc(self, i, k):
        return self.c[i - 1] - self.c[k - 1]


def validate_spectrum(kind: FamilyKind, raw: TripleSpectrum) -> TripleSpectrum:
    ma, mb, mc = kind.multiplicities
    if (len(raw.a), len(raw.b), len(raw.c)) != (len(ma), len(mb), len(mc)):
        raise DegenerateSpectrum(
            f"{kind} expects {len(ma)}, {len(mb)}, {len(mc)} distinct values for a, b, c")
    lhs = sum(x * k for x, k in zip(raw.a, ma))
    rhs = sum(x * k for x, k in zip(raw.b, mb)) + sum(x * k for x, k in zip(raw.c, mc))
    if lhs != rhs:
        raise TraceViolation(f"trace condition fails: {lhs} != {rhs}")
    for name, vals in (("a", raw.a), ("b", raw.b), ("c", raw.c)):
        if len(set(vals)) != len(vals):
            raise DegenerateSpectrum(f"repeated value among the {name}'s")
    return raw


def _div(num, den):
    if den == 0:
        raise FormulaPole("vanishing denominator in a closed-form entry")
    return num / den


def _P(it):
    return prod(it, start=Fraction(1))


@dataclass(frozen=True)
class RigidTriple:
    kind: FamilyKind
    spectrum: TripleSpectrum
    B: RatMatrix
    C: RatMatrix
    A: RatMatrix

    @property
    def n(self):
        return self.A.nrows

    def to_json(self):
        return {
            "family": str(self.kind),
            "spectrum": self.spectrum.to_json(self.kind),
            "B": self.B.to_json(), "C": self.C.to_json(), "A": self.A.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> RigidTriple:
        kind = FamilyKind.parse(data["family"])
        B = RatMatrix.from_json(data["B"])
        C = RatMatrix.from_json(data["C"])
        A = RatMatrix.from_json(data["A"]) if "A" in data else B + C
        return cls(kind, TripleSpectrum.from_json(data["spectrum"]), B, C, A)


def _triple(kind, spec, B, C):
    B = RatMatrix(B)
    C = RatMatrix(C)
    return RigidTriple(kind, spec, B, C, B + C)


def _grid(n):
    return [[Fraction(0)] * n for _ in range(n)]


def build_hypergeometric(spec: TripleSpectrum) -> RigidTriple:
    m = len(spec.b)
    kind = Hypergeometric(m)
    validate_spectrum(kind, spec)
    a2 = spec.a[1]
    b, c = spec.b, spec.c
    B, C = _grid(m), _grid(m)
    for i in range(1, m + 1):
        t = b[i - 1] + c[m - i] - a2  # b_i + c_{m+1-i} - a_2
        B[i - 1][i - 1] = b[i - 1]
        C[i - 1][i - 1] = c[m - i]
        for j in range(1, m + 1):
            if i < j:
                B[i - 1][j - 1] = t
            elif i > j:
                C[i - 1][j - 1] = t
    return _triple(kind, spec, B, C)


def even_entries(pq: PQ, m: int):
    """Off-diagonal entries of the even family as dicts keyed by 1-based (row, col)."""
    q, p, dc = pq.q, pq.p, pq.dc
    B, C = {}, {}
    for j in range(1, m):
        B[1, 1 + j] = (-1) ** (m + 1 - j) * _div(
            _P(q(k, 2 * m - j) for k in range(j + 1, m + 1)),
            _P(dc(k, 2 * m - j) for k in range(m + 1, 2 * m - j)))
    for j in range(1, m + 1):
        tail = _P(dc(k, m + 1 - j) for k in range(1, m - j + 1))
        B[1, m + j] = (-1) ** (m - j) * _div(
            p(m + 1 - j, 3, 1) * _P(q(m + 1 - j, k) for k in range(m + j, 2 * m)), tail)
        for i in range(1, m):
            num = p(m + 1 - j, 3, 1)
            num *= _P(q(k, 2 * m - i) for k in range(1, i + 1) if k != m + 1 - j)
            num *= _P(q(m + 1 - j, k) for k in range(m + j, 2 * m) if k != 2 * m - i)
            den = _P(dc(2 * m - i, k) for k in range(2 * m + 1 - i, 2 * m)) * tail
            B[1 + i, m + j] = (-1) ** (m - j) * _div(num, den)
    for i in range(1, m):
        C[1 + i, 1] = -_div(_P(q(k, 2 * m - i) for k in range(1, i + 1)),
                            _P(dc(2 * m - i, k) for k in range(2 * m + 1 - i, 2 * m)))
    for i in range(1, m + 1):
        head = _P(dc(m + 1 - i, k) for k in range(m + 2 - i, m + 1))
        C[m + i, 1] = -_div(
            p(m + 1 - i, 3, 2) * _P(q(m + 1 - i, k) for k in range(m + 1, m + i)), head)
        for j in range(1, m):
            num = p(m + 1 - i, 3, 2)
            num *= _P(q(m + 1 - i, k) for k in range(m + 1, m + i) if k != 2 * m - j)
            num *= _P(q(k, 2 * m - j) for k in range(j + 1, m + 1) if k != m + 1 - i)
            den = head * _P(dc(k, 2 * m - j) for k in range(m + 1, 2 * m - j))
            C[m + i, 1 + j] = (-1) ** (m + 1 - j) * _div(num, den)
    return B, C


def build_even(spec: TripleSpectrum) -> RigidTriple:
    m = len(spec.c) // 2
    kind = Even(m)
    validate_spectrum(kind, spec)
    n = 2 * m
    b, c = spec.b, spec.c
    B, C = _grid(n), _grid(n)
    bdiag = [b[0]] + [b[1]] * (m - 1) + [b[2]] * m
    for i in range(n):
        B[i][i] = bdiag[i]
        C[i][i] = c[n - 1 - i]
    offB, offC = even_entries(PQ(spec), m)
    for (i, j), v in offB.items():
        B[i - 1][j - 1] = v
    for (i, j), v in offC.items():
        C[i - 1][j - 1] = v
    return _triple(kind, spec, B, C)


def odd_entries(pq: PQ, m: int):
    q, p, dc = pq.q, pq.p, pq.dc
    B, C = {}, {}
    for j in range(1, m + 1):
        B[1, 1 + j] = (-1) ** (m - j) * _div(
            p(2 * m + 1 - j, 2, 1) * _P(q(k, 2 * m + 1 - j) for k in range(j + 1, m + 1)),
            _P(dc(k, 2 * m + 1 - j) for k in range(m + 1, 2 * m + 1 - j)))
    for j in range(1, m + 1):
        tail = _P(dc(k, m + 1 - j) for k in range(1, m - j + 1))
        B[1, m + 1 + j] = (-1) ** (m - j) * _div(
            p(m + 1 - j, 3, 1) * _P(q(m + 1 - j, k) for k in range(m + 1 + j, 2 * m + 1)), tail)
        for i in range(1, m + 1):
            num = p(m + 1 - j, 3, 1)
            num *= _P(q(k, 2 * m + 1 - i) for k in range(1, i + 1) if k != m + 1 - j)
            num *= _P(q(m + 1 - j, k) for k in range(m + 1 + j, 2 * m + 1) if k != 2 * m + 1 - i)
            den = _P(dc(2 * m + 1 - i, k) for k in range(2 * m + 2 - i, 2 * m + 1)) * tail
            B[1 + i, m + 1 + j] = (-1) ** (m - j) * _div(num, den)
    for i in range(1, m + 1):
        C[1 + i, 1] = -_div(_P(q(k, 2 * m + 1 - i) for k in range(1, i + 1)),
                            _P(dc(2 * m + 1 - i, k) for k in range(2 * m + 2 - i, 2 * m + 1)))
    for i in range(1, m + 1):
        head = _P(dc(m + 1 - i, k) for k in range(m + 2 - i, m + 1))
        C[m + 1 + i, 1] = -_div(_P(q(m + 1 - i, k) for k in range(m + 1, m + i + 1)), head)
        for j in range(1, m + 1):
            num = p(2 * m + 1 - j, 2, 1)
            num *= _P(q(m + 1 - i, k) for k in range(m + 1, m + i + 1) if k != 2 * m + 1 - j)
            num *= _P(q(k, 2 * m + 1 - j) for k in range(j + 1, m + 1) if k != m + 1 - i)
            den = head * _P(dc(k, 2 * m + 1 - j) for k in range(m + 1, 2 * m + 1 - j))
            C[m + 1 + i, 1 + j] = (-1) ** (m - j) * _div(num, den)
    return B, C


def build_odd(spec: TripleSpectrum) -> RigidTriple:
    m = (len(spec.c) - 1) // 2
    kind = Odd(m)
    validate_spectrum(kind, spec)
    n = 2 * m + 1
    b, c = spec.b, spec.c
    B, C = _grid(n), _grid(n)
    bdiag = [b[0]] + [b[1]] * m + [b[2]] * m
    for i in range(n):
        B[i][i] = bdiag[i]
        C[i][i] = c[n - 1 - i]
    offB, offC = odd_entries(PQ(spec), m)
    for (i, j), v in offB.items():
        B[i - 1][j - 1] = v
    for (i, j), v in offC.items():
        C[i - 1][j - 1] = v
    return _triple(kind, spec, B, C)


def build_extra(spec: TripleSpectrum) -> RigidTriple:
    validate_spectrum(ExtraE8hat, spec)
    pq = PQ(spec)
    p, q, dc = pq.pe, pq.q3, pq.dc
    b, c = spec.b, spec.c
    d = _div
    B = [
        [b[0], 0, -d(p(1, 6) * q(2, 4, 5), dc(3, 4)), p(1, 6), d(p(1, 6) * q(2, 4, 5), dc(1, 2)), p(1, 6)],
        [0, b[0], d(p(1, 5) * q(2, 3, 5) * q(2, 4, 6), dc(3, 4) * dc(5, 6)),
         -d(p(1, 5) * q(2, 3, 6), dc(5, 6)),
         -d(p(1, 5) * q(2, 3, 6) * q(2, 4, 6), dc(1, 2) * dc(5, 6)),
         -d(p(1, 5) * q(2, 3, 5), dc(5, 6))],
        [0, 0, b[1], 0, -d(p(2, 4) * q(2, 3, 6), dc(1, 2)), p(2, 4)],
        [0, 0, 0, b[1], -d(p(2, 3) * q(2, 4, 5) * q(2, 4, 6), dc(1, 2) * dc(3, 4)),
         d(p(2, 3) * q(2, 3, 5), dc(3, 4))],
        [0, 0, 0, 0, b[2], 0],
        [0, 0, 0, 0, 0, b[2]],
    ]
    C = [
        [c[5], 0, 0, 0, 0, 0],
        [0, c[4], 0, 0, 0, 0],
        [-d(p(2, 4) * q(2, 3, 6), dc(5, 6)), -p(2, 4), c[3], 0, 0, 0],
        [-d(p(2, 3) * q(2, 3, 5) * q(2, 4, 6), dc(3, 4) * dc(5, 6)),
         -d(p(2, 3) * q(2, 4, 5), dc(3, 4)), 0, c[2], 0, 0],
        [-d(p(3, 2) * q(2, 3, 5), dc(5, 6)), -p(3, 2), d(p(3, 2) * q(2, 3, 5), dc(3, 4)), -p(3, 2), c[1], 0],
        [d(p(3, 1) * q(2, 3, 6) * q(2, 4, 6), dc(1, 2) * dc(5, 6)), d(p(3, 1) * q(2, 4, 5), dc(1, 2)),
         d(p(3, 1) * q(2, 4, 5) * q(2, 4, 6), dc(1, 2) * dc(3, 4)), -d(p(3, 1) * q(2, 3, 6), dc(1, 2)),
         0, c[0]],
    ]
    return _triple(ExtraE8hat, spec, B, C)


def e8_entries(spec: TripleSpectrum):
    """The E8-family matrices; every off-diagonal entry is a linear form."""
    a1, a2 = spec.a
    b1, b2, b3 = spec.b
    c1, c2, c3, c4, c5 = spec.c
    u = a1 + a2 - b1 - b3 - c1 - c5
    w = a1 + 2 * a2 - b1 - b2 - b3 - c1 - c3 - c5
    B = [
        [b1, 0, 0, u, -u, -a2 + b3 + c1],
        [0, b1, a1 - b1 - c5, -w, -a1 - a2 + b2 + b3 + c2 + c4, w],
        [0, 0, b2, 0, -a1 + b2 + c4, w],
        [0, 0, 0, b2, 2 * a1 + a2 - b1 - 2 * b2 - c3 - c4 - c5, -a2 + b3 + c1],
        [0, 0, 0, 0, b3, 0],
        [0, 0, 0, 0, 0, b3],
    ]
    v = a1 + a2 - b1 - b2 - c4 - c5
    C = [
        [c5, 0, 0, 0, 0, 0],
        [0, c5, 0, 0, 0, 0],
        [-w, a1 - b2 - c4, c4, 0, 0, 0],
        [a1 + a2 - b2 - b3 - c1 - c3, -v, v, c3, 0, 0],
        [w, -v, v, -w, c2, 0],
        [-a2 + b1 + c5, 0, 0, u, -u, c1],
    ]
    return B, C


def build_e8(spec: TripleSpectrum) -> RigidTriple:
    validate_spectrum(E8, spec)
    B, C = e8_entries(spec)
    return _triple(E8, spec, B, C)


BUILDERS = {
    "hg": build_hypergeometric,
    "even": build_even,
    "odd": build_odd,
    "extra": build_extra,
    "e8": build_e8,
}


def build(kind: FamilyKind, spec: TripleSpectrum) -> RigidTriple:
    t = BUILDERS[kind.tag](spec)
    if t.kind != kind:
        raise DegenerateSpectrum(f"spectrum has the shape of {t.kind}, not {kind}")
    return t


def normalize(t: RigidTriple, k, theta, phi) -> RigidTriple:
    """Affine change A -> kA + theta, B -> kB + phi, C -> kC + (theta - phi)."""
    k, theta, phi = rat(k), rat(theta), rat(phi)
    if k == 0:
        raise ZeroScale("normalization scale must be nonzero")
    s = t.spectrum
    spec = TripleSpectrum([k * x + theta for x in s.a], [k * x + phi for x in s.b],
                          [k * x + theta - phi for x in s.c])
    B = t.B.scale(k).shift(phi)
    C = t.C.scale(k).shift(theta - phi)
    return RigidTriple(t.kind, spec, B, C, t.A.scale(k).shift(theta))


def standard_normalization(t: RigidTriple):
    """(k, theta, phi) putting a triple in the coordinates used by the proofs.

    HG: a_2 -> 0.  Even: a -> (1, -1) with B and C traceless.
    Odd, extra and E8: shift to traceless A, B and C keeping the scale.
    """
    s, kind = t.spectrum, t.kind
    ma, mb, _ = kind.multiplicities
    n = kind.n
    if kind.tag == "hg":
        return Fraction(1), -s.a[1], -s.a[1] / 2
    if kind.tag == "even":
        a1, a2 = s.a
        k = 2 / (a1 - a2)
        theta = -(a1 + a2) / 2
        phi = -sum(x * mu for x, mu in zip(s.b, mb)) / n
        # theta and phi act after scaling
        return k, k * theta, k * phi
    trA = sum(x * mu for x, mu in zip(s.a, ma))
    trB = sum(x * mu for x, mu in zip(s.b, mb))
    return Fraction(1), -trA / n, -trB / n


def normalized(t: RigidTriple) -> RigidTriple:
    return normalize(t, *standard_normalization(t))


# genericity

def gram_linear_forms(kind: FamilyKind, spec: TripleSpectrum):
    """(numerator_forms, denominator_forms) of the family's Gram formulas.

    For E8, where no Gram formula exists, every entry of B and C and every
    same-letter difference counts as a denominator form.
    """
    a, b, c = spec.a, spec.b, spec.c
    num, den = [], []
    if kind.tag == "hg":
        m = kind.m
        den += [b[i] - b[k] for i in range(m) for k in range(m) if i != k]
        num += [b[i] + c[k] - a[1] for i in range(m) for k in range(m)]
        den += [b[i] + c[k] - a[1] for i in range(m) for k in range(m)]
    elif kind.tag in ("even", "odd"):
        pq = PQ(spec)
        N = len(c)
        other = 2 if kind.tag == "even" else None
        den += [pq.dc(i, k) for i in range(1, N + 1) for k in range(1, N + 1) if i != k]
        den += num_q(pq, N)
        num += num_q(pq, N)
        for i in range(1, N + 1):
            p31 = pq.p(i, 3, 1)
            px = pq.p(i, 3, 2) if other else pq.p(i, 2, 1)
            num += [p31, px]
            den += [px]
    elif kind.tag == "extra":
        pq = PQ(spec)
        den += [pq.dc(i, k) for i in range(1, 7) for k in range(1, 7) if i != k]
        forms = [pq.pe(i, j) for i in range(1, 4) for j in range(1, 7)]
        forms += [pq.q3(1, j, k) for j in range(2, 7) for k in range(j + 1, 7)]
        num += forms
        den += forms
    else:
        diffs = [x - y for vals in (a, b, c) for i, x in enumerate(vals) for y in vals[i + 1:]]
        forms = e8_form_values(spec)
        num += forms
        den += diffs + forms
    return num, den


def num_q(pq, N):
    return [pq.q(i, k) for i in range(1, N + 1) for k in range(i + 1, N + 1)]


# off-diagonal slots of the E8 matrices holding a nonconstant linear form (0-based)
E8_B_SLOTS = ((0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5))
E8_C_SLOTS = ((2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 3),
              (5, 4))


def e8_form_values(spec: TripleSpectrum):
    Bm, Cm = e8_entries(spec)
    return [Bm[i][j] for i, j in E8_B_SLOTS] + [Cm[i][j] for i, j in E8_C_SLOTS]


def in_S_double_prime(kind: FamilyKind, spec: TripleSpectrum) -> bool:
    num, den = gram_linear_forms(kind, spec)
    return all(x != 0 for x in num) and all(x != 0 for x in den)


def in_S_prime(kind: FamilyKind, spec: TripleSpectrum) -> bool:
    _, den = gram_linear_forms(kind, spec)
    return all(x != 0 for x in den)


def spectrum_shape(kind: FamilyKind):
    ma, mb, mc = kind.multiplicities
    return len(ma), len(mb), len(mc)


def solve_trace(kind: FamilyKind, a, b, c, which: str, index: int) -> TripleSpectrum:
    """Fill the entry ``which[index]`` (0-based) so the trace condition holds."""
    ma, mb, mc = kind.multiplicities
    vals = {"a": list(a), "b": list(b), "c": list(c)}
    mult = {"a": ma, "b": mb, "c": mc}
    vals[which][index] = Fraction(0)
    lhs = sum(rat(x) * k for x, k in zip(vals["a"], ma))
    rhs = sum(rat(x) * k for x, k in zip(vals["b"], mb)) + sum(rat(x) * k for x, k in zip(vals["c"], mc))
    k = mult[which][index]
    gap = rhs - lhs
    vals[which][index] = gap / k if which == "a" else -gap / k
    return TripleSpectrum(vals["a"], vals["b"], vals["c"])


def random_rational(rng: random.Random, bound: int, den_bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound * den_bound, bound * den_bound), rng.randint(1, den_bound))


def sample_generic_spectrum(kind: FamilyKind, seed, bound: int = 10, retries: int = 1000) -> TripleSpectrum:
    """Deterministic rational spectrum in S'' for the given seed.

    All entries but one are drawn from [-bound, bound] with small
    denominators; the last c is solved from the trace condition.
    """
    if bound < 10:
        raise ValueError("bound must be at least 10")
    rng = random.Random(f"{kind}/{seed}")
    na, nb, nc = spectrum_shape(kind)
    for _ in range(retries):
        a = [random_rational(rng, bound) for _ in range(na)]
        b = [random_rational(rng, bound) for _ in range(nb)]
        c = [random_rational(rng, bound) for _ in range(nc)]
        spec = solve_trace(kind, a, b, c, "c", 0)
        try:
            validate_spectrum(kind, spec)
        except (DegenerateSpectrum, TraceViolation):
            continue
        if in_S_double_prime(kind, spec):
            return spec
    raise SamplingExhausted(f"no generic spectrum for {kind} after {retries} draws")
