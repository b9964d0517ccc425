"""Sign-definiteness of the invariant form: inequality tables, direct Gram scans,
and lattice points on the faces they describe."""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateForm, DegenerateSpectrum, FormulaPole, OrderingViolation, SamplingExhausted,
    TraceViolation,
)
from .families import (
    E8, Even, ExtraE8hat, FamilyKind, Hypergeometric, Odd, TripleSpectrum, build,
    in_S_double_prime, random_rational, solve_trace, spectrum_shape, validate_spectrum,
)
from .spectral import invariant_form

POS, NEG, INDEF, DEGEN = "PositiveDefinite", "NegativeDefinite", "Indefinite", "Degenerate"


@dataclass(frozen=True)
class SignVerdict:
    verdict: str
    witness: tuple | None = None
    matched_case: str | None = None

    @property
    def definite(self):
        return self.verdict in (POS, NEG)

    def to_json(self):
        return {"verdict": self.verdict, "witness": list(self.witness) if self.witness else None,
                "matched_case": self.matched_case}


def _sign(x):
    return (x > 0) - (x < 0)


def signature_of(values) -> SignVerdict:
    signs = [_sign(g) for g in values]
    if 0 in signs:
        return SignVerdict(DEGEN, (signs.index(0) + 1,))
    if all(s > 0 for s in signs):
        return SignVerdict(POS)
    if all(s < 0 for s in signs):
        return SignVerdict(NEG)
    return SignVerdict(INDEF, (signs.index(1) + 1, signs.index(-1) + 1))


def gram_signature(form) -> SignVerdict:
    """Verdict from the signs of the diagonal Gram values (1-based witness)."""
    return signature_of(form.gram)


# linear forms in the distinct eigenvalues

class Lin:
    """Linear form sum coef * x + const over the variables ('a', i), ('b', i), ('c', i)."""

    __slots__ = ("coef", "const")

    def __init__(self, coef=None, const=0):
        self.coef = {k: Fraction(v) for k, v in (coef or {}).items() if v}
        self.const = Fraction(const)

    def __add__(self, other):
        if not isinstance(other, Lin):
            other = Lin(const=other)
        coef = dict(self.coef)
        for k, v in other.coef.items():
            coef[k] = coef.get(k, 0) + v
        return Lin(coef, self.const + other.const)

    __radd__ = __add__

    def __neg__(self):
        return Lin({k: -v for k, v in self.coef.items()}, -self.const)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        return Lin({key: v * k for key, v in self.coef.items()}, self.const * k)

    __rmul__ = __mul__

    def __call__(self, spec: TripleSpectrum):
        vals = {"a": spec.a, "b": spec.b, "c": spec.c}
        return sum((v * vals[l][i - 1] for (l, i), v in self.coef.items()), self.const)

    def __repr__(self):
        parts = [f"{v}*{l}{i}" for (l, i), v in sorted(self.coef.items())]
        if self.const:
            parts.append(str(self.const))
        return " + ".join(parts) or "0"


def a(i):
    return Lin({("a", i): 1})


def b(i):
    return Lin({("b", i): 1})


def c(i):
    return Lin({("c", i): 1})


def p(i, j, k):
    return c(i) + b(j) - a(k)


def q(i, j):
    return c(i) + c(j) + b(2) + b(3) - a(1) - a(2)


@dataclass(frozen=True)
class Case:
    name: str
    positive: tuple          # each Lin must be > 0
    epsilon: Lin | None = None   # sign of this form is the form's sign; None means +1
    implied: tuple = field(default=())  # orderings asserted as consequences


def _gt(x, y):
    return x - y


def _chain(*terms):
    """x1 > x2 > ... as a tuple of positive forms."""
    return tuple(_gt(terms[k], terms[k + 1]) for k in range(len(terms) - 1))


def hg_cases(m):
    col1 = []
    for r in range(1, m):
        col1 += [_gt(b(m + 1 - r) + c(r), a(2)), _gt(a(2), b(m + 1 - r) + c(r + 1))]
    col1.append(_gt(b(1) + c(m), a(2)))
    col2 = []
    for r in range(1, m):
        col2 += [_gt(b(r) + c(m - r), a(2)), _gt(a(2), b(r) + c(m + 1 - r))]
    col2.append(_gt(a(2), b(m) + c(1)))
    eps = a(1) - a(2)
    return [Case("column 1", tuple(col1), eps, (_gt(a(1), a(2)),)),
            Case("column 2", tuple(col2), eps, (_gt(a(2), a(1)),))]


def _between(hi, lo):
    """hi > 0 > lo."""
    return (hi, -lo)


def even_cases(m):
    n = 2 * m
    cases = []
    # each cell lists its b-ordering, p-rows and q-rows
    qs = []
    for k in range(1, m):
        qs += _between(q(k, n - 1 - k), q(k, n - k))
    cases.append(Case("b1>b3>b2", _between(p(m - 1, 3, 1), p(m, 3, 1)) + _between(p(n - 1, 3, 2), p(n, 3, 2))
                      + tuple(qs), None, _chain(b(1), b(3), b(2))))
    qs = []
    for k in range(1, m):
        qs += _between(q(k, n - k), q(k, n + 1 - k))
    qs.append(-q(m, m + 1))
    cases.append(Case("b1>b2>b3", (-p(1, 3, 1),) + _between(p(m, 3, 2), p(m + 1, 3, 2)) + tuple(qs),
                      None, _chain(b(1), b(2), b(3))))
    qs = []
    for k in range(1, m):
        qs += _between(q(k, n + 1 - k), q(k + 1, n + 1 - k))
    qs.append(q(m, m + 1))
    cases.append(Case("b2>b1>b3", (-p(1, 3, 1),) + _between(p(m, 3, 2), p(m + 1, 3, 2)) + tuple(qs),
                      None, _chain(b(2), b(1), b(3))))
    qs = []
    for k in range(2, m + 1):
        qs += _between(q(k, n + 2 - k), q(k + 1, n + 2 - k))
    cases.append(Case("b2>b3>b1", _between(p(1, 3, 1), p(2, 3, 1)) + _between(p(m + 1, 3, 2), p(m + 2, 3, 2))
                      + tuple(qs), None, _chain(b(2), b(3), b(1))))
    qs = []
    for k in range(1, m):
        qs += _between(q(k, n + 1 - k), q(k + 1, n + 1 - k))
    qs.append(q(m, m + 1))
    cases.append(Case("b3>b2>b1", _between(p(m, 3, 1), p(m + 1, 3, 1)) + (p(n, 3, 2),) + tuple(qs),
                      None, _chain(b(3), b(2), b(1))))
    qs = []
    for k in range(1, m):
        qs += _between(q(k, n - k), q(k, n + 1 - k))
    qs.append(-q(m, m + 1))
    cases.append(Case("b3>b1>b2", _between(p(m, 3, 1), p(m + 1, 3, 1)) + (p(n, 3, 2),) + tuple(qs),
                      None, _chain(b(3), b(1), b(2))))
    return cases


def odd_cases(m):
    n = 2 * m + 1
    qs = []
    for k in range(1, m + 1):
        qs += _between(q(k, n - k), q(k, n + 1 - k))
    cases = [Case("b1>b2>b3", (-p(1, 3, 1),) + _between(p(m, 2, 1), p(m + 1, 2, 1)) + tuple(qs),
                  None, _chain(b(1), b(2), b(3)))]
    qs = []
    for k in range(1, m):
        qs += _between(q(k, n + 1 - k), q(k + 1, n + 1 - k))
    qs += _between(q(m, m + 2), q(m + 1, m + 2))
    cases.append(Case("b2>b1>b3", (-p(1, 3, 1),) + _between(p(m + 1, 2, 1), p(m + 2, 2, 1)) + tuple(qs),
                      None, _chain(b(2), b(1), b(3))))
    qs = []
    for k in range(2, m + 1):
        qs += _between(q(k, n + 2 - k), q(k + 1, n + 2 - k))
    qs.append(q(m + 1, m + 2))
    # the undefined r21 is read as p21
    cases.append(Case("b2>b3>b1", _between(p(1, 3, 1), p(2, 3, 1)) + _between(p(m + 1, 2, 1), p(m + 2, 2, 1))
                      + tuple(qs), None, _chain(b(2), b(3), b(1))))
    return cases


def _pe(i, j):
    return b(i) + c(j) - a(1)


def extra_cases():
    cs = (_gt(c(1) + c(4) + c(5), c(2) + c(3) + c(6)),
          _gt(c(1) + c(3) + c(6), c(2) + c(4) + c(5)),
          _gt(c(2) + c(3) + c(5), c(1) + c(4) + c(6)))
    col1 = _between(_pe(1, 4), _pe(1, 5)) + _between(_pe(2, 2), _pe(2, 3)) + (-_pe(3, 1),) + cs
    col2 = _between(_pe(3, 2), _pe(3, 3)) + _between(_pe(2, 4), _pe(2, 5)) + (_pe(1, 6),) + cs
    eps = a(1) - a(2)
    return [Case("column 1", col1, eps, (_gt(a(1), a(2)),)),
            Case("column 2", col2, eps, (_gt(a(2), a(1)),))]


def e8_cases():
    A1, A2 = a(1), a(2)
    B1, B2, B3 = b(1), b(2), b(3)
    C1, C2, C3, C4, C5 = (c(i) for i in range(1, 6))
    s = -A1 - A2
    blocks = [
        ("c1>c2>c3>c4>c5",
         _between(s + B1 + B3 + C1 + C5, s + B1 + B3 + C2 + C5)
         + _between(s + B1 + B2 + C3 + C5, s + B1 + B2 + C4 + C5)
         + _between(A1 - A2 - C1 + C2 - C3 + C4, A1 - A2 - C1 - C2 + C3 + C4)
         + (-(-A2 + B2 + C5),),
         _chain(C1, C2, C3, C4, C5)),
        ("c1>c2>c3>c5>c4",
         _between(s + B1 + B3 + C2 + C5, s + B1 + B3 + C3 + C5)
         + _between(-A2 + B2 + C5, -A2 + B2 + C4)
         + (-A1 + A2 + C1 - C2 + C3 - C4,)
         + (-(s + B2 + B3 + C1 + C5), -(-A1 + B1 + C4))
         # facets needed to close the cell (the rows above alone admit indefinite points)
         + (A1 - A2 + C1 - C2 - C3 + C4, -(-A1 + B1 + C5)),
         _chain(C1, C2, C3, C5, C4)),
        ("c1>c2>c5>c3>c4",
         _between(s + B2 + B3 + C1 + C5, s + B2 + B3 + C2 + C5)
         + _between(s + B1 + B2 + C3 + C5, s + B1 + B2 + C4 + C5)
         + (A1 - A2 - C1 + C2 - C3 + C4, -A1 + B1 + C5, -(-A2 + B3 + C5)),
         _chain(C1, C2, C5, C3, C4)),
        ("c1>c5>c2>c3>c4",
         _between(s + B1 + B3 + C2 + C5, s + B1 + B3 + C3 + C5)
         + _between(-A1 + B2 + C1, -A1 + B2 + C5)
         + (s + B1 + B2 + C4 + C5, -A2 + B3 + C1, -(A1 - A2 - C1 + C2 - C3 + C4))
         # closing facets, as in the second cell
         + (-A2 + B3 + C5, A1 - A2 - C1 + C2 + C3 - C4),
         _chain(C1, C5, C2, C3, C4)),
        ("c5>c1>c2>c3>c4",
         _between(s + B1 + B3 + C3 + C5, s + B1 + B3 + C4 + C5)
         + _between(s + B2 + B3 + C1 + C5, s + B2 + B3 + C2 + C5)
         + _between(-A1 + A2 + C1 + C2 - C3 - C4, -A1 + A2 + C1 - C2 + C3 - C4)
         + (-A1 + B2 + C5,),
         _chain(C5, C1, C2, C3, C4)),
    ]
    return [Case(name, forms, None, implied) for name, forms, implied in blocks]


# E8 degeneracy locus via the root system of the star quiver T(2,3,5)
# coordinates: centre, A arm (1 vertex), B arm (2), C arm (4)
E8_ALPHA = (6, 3, 4, 2, 5, 4, 3, 2)
_E8_EDGES = ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7))
_E8_ROOTS = None


def e8_roots():
    """Positive roots beta <= alpha of the E8 star quiver (Tits form q = 1)."""
    global _E8_ROOTS
    if _E8_ROOTS is None:
        import itertools
        out = []
        for beta in itertools.product(*(range(k + 1) for k in E8_ALPHA)):
            if not any(beta):
                continue
            q = sum(x * x for x in beta) - sum(beta[u] * beta[v] for u, v in _E8_EDGES)
            if q == 1:
                out.append(beta)
        _E8_ROOTS = out
    return _E8_ROOTS


def _arm_multiplicities(beta):
    c0, a1, b1, b2, c1, c2, c3, c4 = beta
    ma = (c0 - a1, a1)
    mb = (c0 - b1, b1 - b2, b2)
    mc = (c0 - c1, c1 - c2, c2 - c3, c3 - c4, c4)
    return ma, mb, mc


def root_trace(beta, spec: TripleSpectrum):
    """Trace defect of a subspace with the eigenvalue multiplicities encoded by beta."""
    ma, mb, mc = _arm_multiplicities(beta)
    return (sum(k * x for k, x in zip(ma, spec.a)) - sum(k * x for k, x in zip(mb, spec.b))
            - sum(k * x for k, x in zip(mc, spec.c)))


def e8_reducible(spec: TripleSpectrum) -> bool:
    """True when alpha splits into at least two positive roots with zero trace defect.

    For a rigid dimension vector that is exactly the locus where the triple
    has an invariant subspace, so the invariant form is degenerate there.
    """
    zero = [beta for beta in e8_roots() if beta != E8_ALPHA and root_trace(beta, spec) == 0]
    if not zero:
        return False
    seen = {tuple([0] * 8)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for beta in zero:
                w = tuple(x + y for x, y in zip(v, beta))
                if w in seen or any(x > k for x, k in zip(w, E8_ALPHA)):
                    continue
                if w == E8_ALPHA:
                    return True
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    return False


def definite_generic(kind: FamilyKind, spec: TripleSpectrum) -> bool:
    """False on the locus where the table reports Degenerate."""
    if kind.tag == "e8":
        return not e8_reducible(spec)
    return in_S_double_prime(kind, spec)


def cases_for(kind: FamilyKind):
    if kind.tag == "hg":
        return hg_cases(kind.m)
    if kind.tag == "even":
        return even_cases(kind.m)
    if kind.tag == "odd":
        return odd_cases(kind.m)
    if kind.tag == "extra":
        return extra_cases()
    return e8_cases()


def ordering_hypothesis(kind: FamilyKind):
    """Forms that must be positive for the family's inequality table to apply."""
    na, nb, nc = spectrum_shape(kind)
    if kind.tag == "hg":
        return _chain(*[b(i) for i in range(1, nb + 1)]) + _chain(*[c(i) for i in range(1, nc + 1)])
    if kind.tag == "even":
        return (_gt(a(1), a(2)),) + _chain(*[c(i) for i in range(1, nc + 1)])
    if kind.tag == "odd":
        return (_gt(b(2), b(3)),) + _chain(*[c(i) for i in range(1, nc + 1)])
    if kind.tag == "extra":
        return _chain(b(1), b(2), b(3)) + _chain(*[c(i) for i in range(1, nc + 1)])
    return (_gt(a(1), a(2)),) + _chain(b(1), b(2), b(3))


def epsilon_of(kind: FamilyKind, spec: TripleSpectrum):
    """The sign the form takes when it is definite, per the family's law."""
    if kind.tag in ("hg", "extra"):
        return _sign(spec.a[0] - spec.a[1])
    if kind.tag in ("even", "odd"):
        b1, b2, b3 = spec.b
        return _sign((b1 - b2) * (b1 - b3))
    # E8: G is scaled so its first nonzero entry is 1; a definite G has G11 != 0
    return 1


def symmetry_reduce(kind: FamilyKind, spec: TripleSpectrum) -> TripleSpectrum:
    """Relabel eigenvalues whose permutation leaves the spectrum unchanged.

    E8: c1..c4 all have multiplicity one, so they are sorted decreasingly
    (the table is written for c1 > c2 > c3 > c4). Odd: b2 and b3 share
    multiplicity m, so b2 < b3 is mirrored to b2 > b3. Rigidity makes the
    relabelled triple conjugate to the original one, hence the same verdict.
    """
    if kind.tag == "e8":
        return TripleSpectrum(spec.a, spec.b, sorted(spec.c[:4], reverse=True) + [spec.c[4]])
    if kind.tag == "odd" and spec.b[1] < spec.b[2]:
        return TripleSpectrum(spec.a, (spec.b[0], spec.b[2], spec.b[1]), spec.c)
    return spec


def predicate(kind: FamilyKind, spec: TripleSpectrum, reduce: bool = False) -> SignVerdict:
    """Verdict from the inequality table alone (no matrices are built).

    E8 spectra are always relabelled with c1 > ... > c4. With ``reduce`` the
    odd family's mirrored case b2 < b3 is accepted as well.
    """
    if reduce or kind.tag == "e8":
        spec = symmetry_reduce(kind, spec)
    if any(f(spec) <= 0 for f in ordering_hypothesis(kind)):
        raise OrderingViolation(f"spectrum does not satisfy the ordering hypothesis for {kind}")
    if not definite_generic(kind, spec):
        return SignVerdict(DEGEN)
    eps = epsilon_of(kind, spec)
    verdict = POS if eps > 0 else NEG
    for case in cases_for(kind):
        if all(f(spec) > 0 for f in case.positive):
            return SignVerdict(verdict, None, case.name)
    if kind.tag == "odd":
        # the odd table only produces a1 > a2; a1 < a2 is covered by negation
        neg = odd_negation(spec)
        for case in cases_for(kind):
            if all(f(neg) > 0 for f in case.positive):
                return SignVerdict(verdict, None, case.name + " (negated)")
    return SignVerdict(INDEF)


def odd_negation(spec: TripleSpectrum) -> TripleSpectrum:
    """Spectrum of (-A, -B, -C) relabelled into odd-family order.

    b2 and b3 swap (both have multiplicity m) and the c's are reversed, so
    b2 > b3 and c decreasing are preserved. The invariant form is the same.
    """
    return TripleSpectrum([-x for x in spec.a], (-spec.b[0], -spec.b[2], -spec.b[1]),
                          [-x for x in reversed(spec.c)])


def predicate_hg(spec):
    return predicate(Hypergeometric(len(spec.b)), spec)


def predicate_even(spec):
    return predicate(Even(len(spec.c) // 2), spec)


def predicate_odd(spec):
    return predicate(Odd((len(spec.c) - 1) // 2), spec)


def predicate_extra(spec):
    return predicate(ExtraE8hat, spec)


def predicate_e8(spec):
    return predicate(E8, spec)


def scan(kind: FamilyKind, spec: TripleSpectrum) -> SignVerdict:
    """Direct verdict: build the triple, compute the form, read its signs."""
    t = build(kind, spec)
    try:
        form = invariant_form(t)
    except (FormulaPole, DegenerateForm):
        return SignVerdict(DEGEN)
    return gram_signature(form)


# sampling

def _variables(kind):
    na, nb, nc = spectrum_shape(kind)
    return [("a", i) for i in range(1, na + 1)] + [("b", i) for i in range(1, nb + 1)] + \
        [("c", i) for i in range(1, nc + 1)]


def _spec_from_vector(kind, x):
    na, nb, nc = spectrum_shape(kind)
    return TripleSpectrum(x[:na], x[na:na + nb], x[na + nb:])


def _trace_row(kind):
    ma, mb, mc = kind.multiplicities
    return [Fraction(k) for k in ma] + [-Fraction(k) for k in mb] + [-Fraction(k) for k in mc]


TRACE_SLOT = {"hg": ("a", 1), "even": ("b", 1), "odd": ("b", 1), "extra": ("c", 6), "e8": ("c", 1)}


def cell_interior_point(kind: FamilyKind, case: Case, bound: float = 100.0):
    """A rational point strictly inside the cell (ordering + case forms), or None.

    Maximizes the smallest slack with an LP over the trace hyperplane, then
    rationalizes the solution.
    """
    from scipy.optimize import linprog

    vars_ = _variables(kind)
    forms = list(ordering_hypothesis(kind)) + list(case.positive)
    nv = len(vars_)
    # variables: x (nv) and s; maximize s subject to f(x) >= s
    A_ub, b_ub = [], []
    for f in forms:
        A_ub.append([-float(f.coef.get(v, 0)) for v in vars_] + [1.0])
        b_ub.append(float(f.const))
    A_eq = [[float(x) for x in _trace_row(kind)] + [0.0]]
    res = linprog([0.0] * nv + [-1.0], A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[0.0],
                  bounds=[(-bound, bound)] * nv + [(None, 1.0)], method="highs")
    if res.status != 0 or res.x[-1] <= 1e-9:
        return None
    return [Fraction(v).limit_denominator(1000) for v in res.x[:nv]]


def _fix_trace(kind, x, slot):
    spec = _spec_from_vector(kind, x)
    letter, idx = slot
    return solve_trace(kind, spec.a, spec.b, spec.c, letter, idx - 1)


def sample_near_cells(kind: FamilyKind, rng: random.Random, centers, scale=None):
    """A random rational spectrum near one of the cell centers (inside or outside)."""
    x0 = rng.choice(centers)
    if scale is None:
        scale = rng.choice((Fraction(1), Fraction(1, 4), Fraction(1, 16)))
    x = [v + scale * random_rational(rng, 3, 7) for v in x0]
    return _fix_trace(kind, x, TRACE_SLOT[kind.tag])


def sample_ordered(kind: FamilyKind, rng: random.Random, bound=10):
    """Random rational spectrum satisfying the ordering hypothesis and trace."""
    na, nb, nc = spectrum_shape(kind)
    for _ in range(1000):
        x = [random_rational(rng, bound) for _ in range(na + nb + nc)]
        spec = _spec_from_vector(kind, x)
        spec = _sorted_for(kind, spec)
        spec = _fix_trace(kind, list(spec.a) + list(spec.b) + list(spec.c), TRACE_SLOT[kind.tag])
        if all(f(spec) > 0 for f in ordering_hypothesis(kind)):
            return spec
    raise SamplingExhausted("no ordered spectrum")


def sample_ordered_generic(kind: FamilyKind, seed, retries: int = 1000):
    """Deterministic ordered spectrum in S'' (for one-off predicate queries)."""
    rng = random.Random(f"ordered/{kind}/{seed}")
    for _ in range(retries):
        spec = sample_ordered(kind, rng)
        if _valid(kind, spec) and in_S_double_prime(kind, spec):
            return spec
    raise SamplingExhausted(f"no ordered generic spectrum for {kind}")


def _sorted_for(kind, spec):
    a_, b_, c_ = list(spec.a), list(spec.b), list(spec.c)
    if kind.tag in ("even", "e8"):
        a_.sort(reverse=True)
    if kind.tag in ("hg", "extra", "e8"):
        b_.sort(reverse=True)
    if kind.tag == "odd":
        b_[1:] = sorted(b_[1:], reverse=True)
    if kind.tag != "e8":
        c_.sort(reverse=True)
    return TripleSpectrum(a_, b_, c_)


def _valid(kind, spec):
    try:
        validate_spectrum(kind, spec)
    except (DegenerateSpectrum, TraceViolation):
        return False
    return all(f(spec) > 0 for f in ordering_hypothesis(kind))


def agreement_samples(kind: FamilyKind, seed, count: int):
    """Deterministic list of ordered spectra: half uniform, half near table cells."""
    rng = random.Random(f"sweep/{kind}/{seed}")
    centers = [pt for pt in (cell_interior_point(kind, cs) for cs in cases_for(kind)) if pt]
    if kind.tag == "odd":
        for pt in list(centers):
            neg = odd_negation(_spec_from_vector(kind, pt))
            centers.append(list(neg.a + neg.b + neg.c))
    out = []
    while len(out) < count:
        if centers and len(out) % 2:
            spec = sample_near_cells(kind, rng, centers)
        else:
            spec = sample_ordered(kind, rng)
        if _valid(kind, spec):
            out.append(spec)
    return out


@dataclass
class SweepReport:
    kind: str
    samples: int
    mismatches: list
    epsilon_failures: list
    counts: dict

    @property
    def ok(self):
        return not self.mismatches and not self.epsilon_failures

    def to_json(self):
        return {"family": self.kind, "samples": self.samples, "mismatches": self.mismatches[:20],
                "epsilon_failures": self.epsilon_failures[:20], "counts": self.counts, "ok": self.ok}


def _check_one(args):
    kind_s, idx, spec_json = args
    kind = FamilyKind.parse(kind_s)
    spec = TripleSpectrum.from_json(spec_json)
    pv = predicate(kind, spec)
    sv = scan(kind, spec)
    eps_ok = True
    if sv.definite:
        eps_ok = (sv.verdict == POS) == (epsilon_of(kind, spec) > 0)
    return idx, pv.verdict, sv.verdict, eps_ok


def max_workers():
    try:
        return max(1, int(os.environ.get("RT_MAX_THREADS", "1")))
    except ValueError:
        return 1


def sweep(kind: FamilyKind, samples: int = 10000, seed=7, workers: int | None = None) -> SweepReport:
    """Compare predicate and direct scan on ``samples`` deterministic spectra."""
    specs = agreement_samples(kind, seed, samples)
    jobs = [(str(kind), k, s.to_json(kind)) for k, s in enumerate(specs)]
    workers = workers or max_workers()
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_check_one, jobs, chunksize=64))
    else:
        results = [_check_one(j) for j in jobs]
    results.sort()
    mismatches, eps_fail, counts = [], [], {}
    for idx, pv, sv, eps_ok in results:
        counts[sv] = counts.get(sv, 0) + 1
        if pv != sv:
            mismatches.append({"index": idx, "predicate": pv, "scan": sv,
                               "spectrum": specs[idx].to_json(kind)})
        if not eps_ok:
            eps_fail.append(idx)
    return SweepReport(str(kind), len(specs), mismatches, eps_fail, counts)


def klyachko_face_sample(kind: FamilyKind, seed, count: int, scale: int = 12, retries: int = 5000):
    """Integer spectra strictly inside the family's definite cells.

    An LP interior point of a cell is scaled up, perturbed by small integers,
    rounded, and the trace condition is solved last; points are kept only
    if every strict inequality of the cell holds.
    """
    rng = random.Random(f"face/{kind}/{seed}")
    cases = cases_for(kind)
    centers = [(cs, cell_interior_point(kind, cs, bound=10.0)) for cs in cases]
    centers = [(cs, x) for cs, x in centers if x]
    if not centers:
        raise SamplingExhausted(f"no nonempty cell for {kind}")
    slot = TRACE_SLOT[kind.tag]
    out = []
    k = 0
    for _ in range(retries):
        if len(out) >= count:
            break
        cs, x0 = centers[k % len(centers)]
        k += 1
        x = [round(v * scale) + rng.randint(-2, 2) for v in x0]
        spec = _fix_trace(kind, x, slot)
        if any(v.denominator != 1 for v in spec.a + spec.b + spec.c):
            continue
        if not _valid(kind, spec) or not all(f(spec) > 0 for f in cs.positive):
            continue
        if not in_S_double_prime(kind, spec):
            continue
        out.append(spec)
    if len(out) < count:
        raise SamplingExhausted(f"only {len(out)} lattice points found for {kind}")
    return out
