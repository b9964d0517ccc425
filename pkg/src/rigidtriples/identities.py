"""The fourteen rational identities behind the eigenvector and Gram formulas,
checked exactly at random integer points.

Each identity is a sum of products of linear forms over products of linear
forms. Multiplying lhs - rhs by the product Q of every denominator form
gives a polynomial N; its total degree is at most deg Q plus the largest
(numerator degree - denominator degree) over the terms (or deg rhs). That
bound is what ``degree_bound`` returns.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .errors import PoleAtPoint


def _P(it):
    return prod(it, start=Fraction(1))


def _div(num, den):
    if den == 0:
        raise PoleAtPoint("denominator vanishes at this point")
    return num / den


def _vandermonde_term(x, i, n):
    return _P(x[i] - x[j] for j in range(n) if j != i)


def _lhs1(x, y, p):
    n, k = p["n"], p["k"]
    return sum(_div(_P(x[i] - y[j] for j in range(k)), _vandermonde_term(x, i, n)) for i in range(n))


def _id1(x, y, p):
    return _lhs1(x, y, p), Fraction(0)


def _id2(x, y, p):
    n = p["n"]
    return _lhs1(x, y, {"n": n, "k": n - 1}), Fraction(1)


def _id3(x, y, p):
    n = p["n"]
    return _lhs1(x, y, {"n": n, "k": n}), sum(x[i] - y[i] for i in range(n))


def _id4(x, y, p):
    n = p["n"]
    lhs = sum(_div(_P(x[i] + y[j] for j in range(n + 1)), _vandermonde_term(x, i, n)) for i in range(n))
    rhs = (sum(v * v for v in x) + sum(x[i] * x[j] for i in range(n) for j in range(i + 1, n))
           + sum(y[i] * y[j] for i in range(n + 1) for j in range(i + 1, n + 1)) + sum(x) * sum(y))
    return lhs, rhs


def _id5(x, y, p):
    m, i = p["m"], p["i"]
    lhs = Fraction(0)
    for j in range(m):
        a = _div(_P(x[j] - y[k] for k in range(m) if k != i), _vandermonde_term(x, j, m))
        b = _div(_P(y[i] - x[k] for k in range(m) if k != j), _P(y[i] - y[k] for k in range(m) if k != i))
        lhs += a * b
    return lhs, Fraction(1)


def _id6(x, y, p):
    m, i = p["m"], p["i"]
    lhs = y[i] ** 2 * _div(_P(y[i] - y[k] for k in range(m - 1) if k != i), _P(y[i] - x[k] for k in range(m)))
    for j in range(m):
        lhs += _div(x[j] ** 2, (y[i] - x[j]) ** 2) * _div(_P(x[j] - y[k] for k in range(m - 1)),
                                                          _vandermonde_term(x, j, m))
    return lhs, Fraction(1)


def _id7(x, y, p):
    m, i = p["m"], p["i"]
    lhs = _div(_vandermonde_term(x, i, m), _P(x[i] + y[k] for k in range(m - 1)))
    for j in range(m - 1):
        lhs += _div(1, x[i] + y[j]) * _div(_P(y[j] + x[k] for k in range(m) if k != i),
                                           _P(y[j] - y[k] for k in range(m - 1) if k != j))
    return lhs, Fraction(1)


def _sym(x, n, power):
    return sum(x[i] ** power * _div(_P(x[i] + x[j] for j in range(n) if j != i), _vandermonde_term(x, i, n))
               for i in range(n))


def _id8(x, y, p):
    n = p["n"]
    return _sym(x, n, 0), Fraction(n % 2)


def _id9(x, y, p):
    n = p["n"]
    return _sym(x, n, 1), sum(x)


def _id10(x, y, p):
    n = p["n"]
    return _sym(x, n, 2), sum(x) ** 2


def _id11_12(x, y, p, power):
    m, j = p["m"], p["j"]
    lhs = y[j] ** power * _div(_P(y[j] + y[k] for k in range(m) if k != j), _P(y[j] - x[k] for k in range(m)))
    for r in range(m):
        lhs += _div(x[r] ** power, x[r] - y[j]) * _div(_P(x[r] + y[k] for k in range(m) if k != j),
                                                       _vandermonde_term(x, r, m))
    return lhs


def _id11(x, y, p):
    return _id11_12(x, y, p, 1), Fraction(1)


def _id12(x, y, p):
    m = p["m"]
    return _id11_12(x, y, p, 2), sum(x[r] + y[r] for r in range(m))


def _id13(x, y, p):
    m, i, j = p["m"], p["i"], p["j"]
    lhs = Fraction(0)
    for r in range(m - 1):
        outer = _div(_P(x[k] + y[r] for k in range(m) if k != j), _P(y[r] - y[k] for k in range(m - 1) if k != r))
        inner = sum(_div(1, x[s] + y[i]) * _div(_P(x[s] ** 2 - y[k] ** 2 for k in range(m) if k != r),
                                                _P(x[s] ** 2 - x[k] ** 2 for k in range(m) if k != s))
                    for s in range(m))
        lhs += outer * inner
    lhs += _div(x[j] + y[m - 1], x[j] + y[i]) * _div(_P(x[j] - y[k] for k in range(m) if k != i),
                                                     _P(x[j] + x[k] for k in range(m) if k != j))
    return lhs, Fraction(1)


def _id14(x, y, p):
    m, q = p["m"], p["p"]
    lhs = sum(_div(_P(y[r] + x[k] for k in range(m) if k != q), _P(y[r] - y[k] for k in range(m) if k != r))
              * _div(_P(x[q] - y[k] for k in range(m) if k != r), _P(x[q] + x[k] for k in range(m) if k != q))
              for r in range(m))
    return lhs, Fraction(1)


def _tri(s):
    return s * (s - 1) // 2


@dataclass(frozen=True)
class IdentityId:
    id: int
    size_name: str                 # "n" or "m"
    x_len: object                  # size -> len(x)
    y_len: object                  # size -> len(y)
    index_ranges: dict = field(default_factory=dict)   # name -> size -> range of 0-based values
    constraint: str = ""
    degree: object = None          # size -> bound on total degree of the cleared numerator
    evaluate: object = None

    def arity(self, size):
        return self.x_len(size), self.y_len(size)


IDENTITIES = {
    1: IdentityId(1, "n", lambda n: n, lambda n: n, {"k": lambda n: range(0, n - 1)},
                  "0 <= k < n-1", lambda n: _tri(n), _id1),
    2: IdentityId(2, "n", lambda n: n, lambda n: n - 1, {}, "", lambda n: _tri(n), _id2),
    3: IdentityId(3, "n", lambda n: n, lambda n: n, {}, "", lambda n: _tri(n) + 1, _id3),
    4: IdentityId(4, "n", lambda n: n, lambda n: n + 1, {}, "", lambda n: _tri(n) + 2, _id4),
    5: IdentityId(5, "m", lambda m: m, lambda m: m, {"i": lambda m: range(m - 1)},
                  "1 <= i <= m-1", lambda m: _tri(m) + m - 1, _id5),
    6: IdentityId(6, "m", lambda m: m, lambda m: m - 1, {"i": lambda m: range(m - 1)},
                  "1 <= i <= m-1", lambda m: _tri(m) + 2 * m, _id6),
    7: IdentityId(7, "m", lambda m: m, lambda m: m - 1, {"i": lambda m: range(m)},
                  "1 <= i <= m", lambda m: _tri(m - 1) + m - 1, _id7),
    8: IdentityId(8, "n", lambda n: n, lambda n: 0, {}, "", lambda n: _tri(n), _id8),
    9: IdentityId(9, "n", lambda n: n, lambda n: 0, {}, "", lambda n: _tri(n) + 1, _id9),
    10: IdentityId(10, "n", lambda n: n, lambda n: 0, {}, "", lambda n: _tri(n) + 2, _id10),
    11: IdentityId(11, "m", lambda m: m, lambda m: m, {"j": lambda m: range(m - 1)},
                   "1 <= j <= m-1", lambda m: _tri(m) + m, _id11),
    12: IdentityId(12, "m", lambda m: m, lambda m: m, {"j": lambda m: range(m - 1)},
                   "1 <= j <= m-1", lambda m: _tri(m) + m + 1, _id12),
    13: IdentityId(13, "m", lambda m: m, lambda m: m,
                   {"i": lambda m: range(m - 1), "j": lambda m: range(m)},
                   "1 <= i <= m-1, 1 <= j <= m", lambda m: _tri(m - 1) + m + 2 * _tri(m), _id13),
    14: IdentityId(14, "m", lambda m: m, lambda m: m, {"p": lambda m: range(m - 1)},
                   "1 <= p <= m-1", lambda m: _tri(m) + m - 1, _id14),
}


def eval_sides(ident, x, y, params):
    """(lhs, rhs) at the point; ``params`` holds the size and 0-based indices."""
    if isinstance(ident, int):
        ident = IDENTITIES[ident]
    size = params[ident.size_name]
    nx, ny = ident.arity(size)
    if len(x) != nx or len(y) != ny:
        raise ValueError(f"identity {ident.id} with {ident.size_name}={size} needs {nx} x's and {ny} y's")
    for name, rng in ident.index_ranges.items():
        if params[name] not in rng(size):
            raise ValueError(f"{name}={params[name]} outside {ident.constraint}")
    x = [Fraction(v) for v in x]
    y = [Fraction(v) for v in y]
    return ident.evaluate(x, y, params)


@dataclass
class IdentityReport:
    id: int
    trials: int
    passed: int
    failure: dict | None
    sizes: list
    degree_bounds: dict       # size -> total degree bound of the cleared numerator
    distinct_values: dict     # size -> fewest distinct values any variable took
    box: int

    @property
    def ok(self):
        return self.failure is None and self.passed == self.trials

    @property
    def grid_covered(self):
        """Every variable took more distinct values than the degree bound, at every size used."""
        return all(self.distinct_values[s] > self.degree_bounds[s] for s in self.sizes)

    def to_json(self):
        return {"id": self.id, "trials": self.trials, "passed": self.passed, "ok": self.ok,
                "failure": self.failure, "sizes": self.sizes,
                "degree_bounds": {str(k): v for k, v in self.degree_bounds.items()},
                "distinct_values_per_variable": {str(k): v for k, v in self.distinct_values.items()},
                "box": self.box,
                "schwartz_zippel_bound_per_point": {str(k): f"{v}/{2 * self.box + 1}"
                                                    for k, v in self.degree_bounds.items()}}


def check_identity(ident, trials: int = 100, seed=0, box: int = 10**6, sizes=range(2, 7),
                   rhs_offset=0) -> IdentityReport:
    """Evaluate at pole-free integer points from [-box, box].

    The ``trials`` points are split across ``sizes``, and each size is topped
    up to degree_bound + 1 points so every variable takes more distinct values
    than the cleared numerator's degree. Indices are drawn from the identity's
    allowed ranges. ``rhs_offset`` perturbs the right side (for negative tests).
    """
    if isinstance(ident, int):
        ident = IDENTITIES[ident]
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(f"identity/{ident.id}/{seed}")
    sizes = list(sizes)
    share = -(-trials // len(sizes))
    plan = []
    for s in sizes:
        plan += [s] * max(share, ident.degree(s) + 1)
    passed = 0
    failure = None
    seen = {}
    for t, size in enumerate(plan):
        nx, ny = ident.arity(size)
        params = {ident.size_name: size}
        for name, r in ident.index_ranges.items():
            params[name] = rng.choice(list(r(size)))
        while True:
            x = [rng.randint(-box, box) for _ in range(nx)]
            y = [rng.randint(-box, box) for _ in range(ny)]
            try:
                lhs, rhs = eval_sides(ident, x, y, params)
                break
            except PoleAtPoint:
                continue
        cols = seen.setdefault(size, [set() for _ in range(nx + ny)])
        for col, v in zip(cols, x + y):
            col.add(v)
        if lhs == rhs + rhs_offset:
            passed += 1
        else:
            failure = {"trial": t, "params": params, "x": x, "y": y, "lhs": str(lhs), "rhs": str(rhs + rhs_offset)}
            break
    used = sorted(seen)
    return IdentityReport(ident.id, len(plan), passed, failure, used,
                          {s: ident.degree(s) for s in used},
                          {s: min((len(c) for c in seen[s]), default=0) for s in used}, box)


def check_all(trials: int = 100, seed=0):
    return [check_identity(k, trials, seed) for k in sorted(IDENTITIES)]
