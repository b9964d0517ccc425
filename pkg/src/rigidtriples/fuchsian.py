"""The Fuchsian system df/dz = B/(z-z2) + C/(z-z3) - A/(z-z1) as a data object.

Residues are stored as (-A, B, C), so they sum to zero.  A singular point is
either a Fraction or the INFINITY marker; on disk infinity is the tagged
object {"kind": "infinity"}, never a magic number.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import CoincidentSingularities, DegenerateForm, FormulaPole, SchemaError
from .families import RigidTriple, claimed_spectra
from .ratmat import RatMatrix, rat
from .spectral import check_self_adjoint, invariant_form, verify_spectrum


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def point(z):
    """A singular point: INFINITY, or anything `rat` accepts."""
    if z is INFINITY:
        return z
    if isinstance(z, str) and z.strip().lower() in ("inf", "infinity", "oo"):
        return INFINITY
    return rat(z)


def _point_json(z):
    return {"kind": "infinity"} if z is INFINITY else str(z)


def _exponents(values, mults):
    merged = {}
    for v, k in zip(values, mults):
        merged[v] = merged.get(v, 0) + k
    return tuple(sorted(merged.items()))


@dataclass(frozen=True)
class FuchsianSystem:
    singularities: tuple
    residues: tuple
    exponents: tuple          # per point: ((value, multiplicity), ...)
    form: RatMatrix | None = None
    family: str | None = None

    @property
    def n(self):
        return self.residues[0].nrows

    def residue_sum(self) -> RatMatrix:
        total = RatMatrix.zeros(self.n)
        for R in self.residues:
            total = total + R
        return total

    def check(self):
        """Claim name -> bool for the residue theorem, the exponents and the form."""
        out = {"residue_sum": self.residue_sum().is_zero()}
        out["exponents"] = all(verify_spectrum(R, e) for R, e in zip(self.residues, self.exponents))
        if self.form is not None:
            out["self_adjoint"] = all(check_self_adjoint(R, self.form) for R in self.residues)
            out["form_symmetric"] = self.form.is_symmetric()
        return out

    def to_json(self):
        data = {
            "singularities": [_point_json(z) for z in self.singularities],
            "residues": [R.to_json() for R in self.residues],
            "exponents": [[[str(v), k] for v, k in e] for e in self.exponents],
        }
        if self.form is not None:
            data["form"] = self.form.to_json()
        if self.family is not None:
            data["family"] = self.family
        return data

    @classmethod
    def from_json(cls, data) -> FuchsianSystem:
        return _parse(data)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"


def assemble(t: RigidTriple, z1=0, z2=1, z3=INFINITY, with_form: bool = True) -> FuchsianSystem:
    """Residues (-A, B, C) at (z1, z2, z3); local exponents from the declared spectra.

    The invariant form is attached when it exists (spectrum in S'').
    """
    zs = tuple(point(z) for z in (z1, z2, z3))
    if len(set(zs)) != 3:
        raise CoincidentSingularities(f"singular points must be distinct, got {zs}")
    ma, mb, mc = t.kind.multiplicities
    s = t.spectrum
    exps = (_exponents([-x for x in s.a], ma), _exponents(s.b, mb), _exponents(s.c, mc))
    form = None
    if with_form:
        try:
            form = invariant_form(t, strict=True).G
        except (DegenerateForm, FormulaPole):
            form = None
    sys_ = FuchsianSystem(zs, (-t.A, t.B, t.C), exps, form, str(t.kind))
    if not sys_.residue_sum().is_zero():
        raise AssertionError("residues do not sum to zero")
    return sys_


def local_exponents(t: RigidTriple):
    """(s(-A), s(B), s(C)) as (value, multiplicity) lists."""
    cl = claimed_spectra(t.kind, t.spectrum)
    return [sorted((-v, k) for v, k in cl["A"]), cl["B"], cl["C"]]


# parsing

def _rat_at(x, where):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise SchemaError(where, f"expected a rational string, got {type(x).__name__}")
    try:
        return Fraction(x.strip()) if isinstance(x, str) else Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(where, f"not a rational: {x!r}") from None


def _matrix_at(data, where, n=None):
    if not isinstance(data, list) or not data:
        raise SchemaError(where, "expected a non-empty list of rows")
    size = n if n is not None else len(data)
    if len(data) != size:
        raise SchemaError(where, f"expected {size} rows, got {len(data)}")
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != size:
            raise SchemaError(f"{where}[{i}]", f"expected a row of length {size}")
        rows.append([_rat_at(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    return RatMatrix(rows)


def _point_at(z, where):
    if isinstance(z, dict):
        if z.get("kind") != "infinity" or len(z) != 1:
            raise SchemaError(where, 'tagged point must be {"kind": "infinity"}')
        return INFINITY
    return _rat_at(z, where)


def _parse(data) -> FuchsianSystem:
    if not isinstance(data, dict):
        raise SchemaError("$", "top level must be an object")
    for key in ("singularities", "residues", "exponents"):
        if key not in data:
            raise SchemaError(key, "missing field")
    sing = data["singularities"]
    if not isinstance(sing, list) or len(sing) != 3:
        raise SchemaError("singularities", "expected exactly three points")
    zs = tuple(_point_at(z, f"singularities[{i}]") for i, z in enumerate(sing))
    if len(set(zs)) != 3:
        raise SchemaError("singularities", "points are not distinct")
    res = data["residues"]
    if not isinstance(res, list) or len(res) != 3:
        raise SchemaError("residues", "expected three matrices")
    first = _matrix_at(res[0], "residues[0]")
    mats = (first,) + tuple(_matrix_at(r, f"residues[{i}]", first.nrows) for i, r in enumerate(res[1:], 1))
    exps = data["exponents"]
    if not isinstance(exps, list) or len(exps) != 3:
        raise SchemaError("exponents", "expected three eigenvalue lists")
    parsed = []
    for i, e in enumerate(exps):
        where = f"exponents[{i}]"
        if not isinstance(e, list) or not e:
            raise SchemaError(where, "empty spectrum")
        pairs = []
        for j, pair in enumerate(e):
            if not isinstance(pair, list) or len(pair) != 2 or isinstance(pair[1], bool) \
                    or not isinstance(pair[1], int) or pair[1] < 1:
                raise SchemaError(f"{where}[{j}]", "expected [value, positive multiplicity]")
            pairs.append((_rat_at(pair[0], f"{where}[{j}][0]"), pair[1]))
        if sum(k for _, k in pairs) != first.nrows:
            raise SchemaError(where, f"multiplicities do not add up to {first.nrows}")
        parsed.append(tuple(pairs))
    form = None
    if data.get("form") is not None:
        form = _matrix_at(data["form"], "form", first.nrows)
    family = data.get("family")
    if family is not None and not isinstance(family, str):
        raise SchemaError("family", "expected a string")
    sys_ = FuchsianSystem(zs, mats, tuple(parsed), form, family)
    if not sys_.residue_sum().is_zero():
        raise SchemaError("residues", "residues do not sum to zero")
    return sys_


def loads(text: str, source: str = "<string>") -> FuchsianSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"{source}:{e.lineno}:{e.colno}", e.msg) from None
    return _parse(data)


def export(sys_: FuchsianSystem, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(sys_.dumps())


def import_system(path) -> FuchsianSystem:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), str(path))

