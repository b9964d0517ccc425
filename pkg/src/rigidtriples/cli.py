"""rigidtriples command line.

Every subcommand builds one JSON document; --json prints it, otherwise a
short table rendered from the same document.  Exit codes: 0 all claims hold,
1 some claim failed (or the input was rejected), 2 bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bz, degeneration, fuchsian, identities, positivity, spectral
from .errors import RigidTripleError
from .families import (
    TAGS, FamilyKind, RigidTriple, TripleSpectrum, build, claimed_spectra,
    sample_generic_spectrum, validate_spectrum,
)

SWEEP_KINDS = ("hg:3", "even:3", "odd:3", "extra", "e8")


class UsageError(Exception):
    pass


def _kind(family, m):
    if family in ("hg", "even", "odd"):
        if m is None:
            raise UsageError(f"--m is required for --family {family}")
        return FamilyKind(family, m)
    if m is not None:
        raise UsageError(f"--m does not apply to --family {family}")
    return FamilyKind(family)


def _read_json(path, what):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"{what}: cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise RigidTripleError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None


def _spectrum(args, kind, sampler=sample_generic_spectrum):
    """Spectrum from --spectrum-file, or sampled from --seed; never both."""
    if args.spectrum_file and args.seed is not None:
        raise UsageError("--spectrum-file and --seed are mutually exclusive")
    if args.spectrum_file:
        data = _read_json(args.spectrum_file, "--spectrum-file")
        data = data.get("spectrum", data)
        try:
            spec = TripleSpectrum.from_json(data)
        except (KeyError, TypeError, ValueError) as e:
            raise RigidTripleError(f"{args.spectrum_file}: bad spectrum ({e})") from None
        return validate_spectrum(kind, spec)
    return sampler(kind, 0 if args.seed is None else args.seed)


def _claims_table(claims):
    return "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in claims.items())


def _latex(M):
    def cell(x):
        return str(x.numerator) if x.denominator == 1 else rf"\frac{{{x.numerator}}}{{{x.denominator}}}"
    body = " \\\\\n".join(" & ".join(cell(x) for x in row) for row in M.rows())
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


# subcommands: each returns (document, ok, human text)

def cmd_generate(args):
    kind = _kind(args.family, args.m)
    t = build(kind, _spectrum(args, kind))
    doc = t.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
    if args.latex:
        doc["latex"] = {name: _latex(getattr(t, name)) for name in "BCA"}
    text = json.dumps(doc, indent=1) if not args.out else f"wrote {kind} triple ({t.n}x{t.n}) to {args.out}"
    return doc, True, text


def verify_claims(t: RigidTriple):
    """Claim name -> bool, in the order they are checked."""
    claims = {}
    try:
        validate_spectrum(t.kind, t.spectrum)
        claims["trace condition"] = True
    except RigidTripleError:
        claims["trace condition"] = False
    claims["A = B + C"] = t.A == t.B + t.C
    try:
        claims["matches constructor"] = build(t.kind, t.spectrum) == RigidTriple(t.kind, t.spectrum, t.B, t.C, t.A)
    except RigidTripleError:
        claims["matches constructor"] = False
    cl = claimed_spectra(t.kind, t.spectrum)
    for name in "ABC":
        claims[f"spectrum {name}"] = spectral.verify_spectrum(getattr(t, name), cl[name])
    try:
        G = spectral.invariant_form(t, strict=True).G
        for name in "ABC":
            claims[f"self-adjoint {name}"] = spectral.check_self_adjoint(getattr(t, name), G)
    except RigidTripleError:
        claims["invariant form"] = False
    claims["form uniqueness"] = spectral.check_form_uniqueness(t) == 1
    claims["irreducible"] = spectral.check_irreducible(t)
    return claims


def cmd_verify(args):
    data = _read_json(args.input, "--in")
    try:
        t = RigidTriple.from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise RigidTripleError(f"{args.input}: not a triple file ({e})") from None
    claims = verify_claims(t)
    ok = all(claims.values())
    doc = {"family": str(t.kind), "claims": claims, "ok": ok}
    return doc, ok, _claims_table(claims)


def cmd_positivity(args):
    if args.action == "sweep":
        if args.spectrum_file:
            raise UsageError("sweep samples its own spectra; drop --spectrum-file")
        kinds = [str(_kind(args.family, args.m))] if args.family else list(SWEEP_KINDS)
        seed = 7 if args.seed is None else args.seed
        reports = [positivity.sweep(FamilyKind.parse(k), args.samples, seed) for k in kinds]
        ok = all(r.ok for r in reports)
        doc = {"seed": seed, "reports": [r.to_json() for r in reports], "ok": ok}
        text = "\n".join(f"{'PASS' if r.ok else 'FAIL'}  {r.kind:8s} samples={r.samples} "
                         f"mismatches={len(r.mismatches)} eps_failures={len(r.epsilon_failures)}"
                         for r in reports)
        return doc, ok, text
    if not args.family:
        raise UsageError("--family is required")
    kind = _kind(args.family, args.m)
    spec = _spectrum(args, kind, positivity.sample_ordered_generic)
    pv = positivity.predicate(kind, spec, reduce=args.reduce)
    doc = {"family": str(kind), "spectrum": spec.to_json(kind), "predicate": pv.to_json()}
    if args.scan:
        doc["scan"] = positivity.scan(kind, spec).to_json()
    text = f"{kind}: {pv.verdict}" + (f" ({pv.matched_case})" if pv.matched_case else "")
    return doc, True, text


def _int_list(text, flag):
    if text is None or text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def cmd_lr(args):
    if args.face:
        kind = _kind(args.face, args.m)
        seed = 0 if args.seed is None else args.seed
        rows = []
        for spec in positivity.klyachko_face_sample(kind, seed, args.count):
            t = bz.bz_of_spectrum(spec, kind)
            rows.append({"spectrum": spec.to_json(kind), "labels": [list(t.l), list(t.m), list(t.n)],
                         "cell": positivity.predicate(kind, spec).matched_case,
                         "count": bz.count_fillings(t)})
            if args.oracle:
                rows[-1]["oracle"] = bz.lr_of_spectrum(spec, kind)
        ok = all(r["count"] == 1 == r.get("oracle", 1) for r in rows)
        doc = {"family": str(kind), "seed": seed, "points": rows, "ok": ok}
        text = "\n".join(f"{r['count']}  l={r['labels'][0]} m={r['labels'][1]} n={r['labels'][2]}  {r['cell']}"
                         for r in rows)
        return doc, ok, text
    if args.nu is None:
        raise UsageError("give --lambda/--mu/--nu or --face")
    lam, mu, nu = _int_list(args.lam, "--lambda"), _int_list(args.mu, "--mu"), _int_list(args.nu, "--nu")
    try:
        count = bz.lr_via_bz(lam, mu, nu)
    except ValueError as e:
        raise UsageError(str(e)) from None
    doc = {"lambda": lam, "mu": mu, "nu": nu, "count": count}
    return doc, True, str(count)


def cmd_identities(args):
    ids = [args.id] if args.id else sorted(identities.IDENTITIES)
    seed = 0 if args.seed is None else args.seed
    reps = [identities.check_identity(k, args.trials, seed) for k in ids]
    ok = all(r.ok for r in reps)
    doc = {"seed": seed, "identities": [r.to_json() for r in reps], "ok": ok}
    lines = []
    for r in reps:
        cover = ", ".join(f"{s}:{r.distinct_values[s]}>{r.degree_bounds[s]}" for s in r.sizes)
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  identity {r.id:2d}  points={r.trials:3d}  "
                     f"coverage {'ok' if r.grid_covered else 'SHORT'} (size:values>degree {cover})")
    return doc, ok, "\n".join(lines)


MAPS = {
    "om-sub": ("even", "p32"),
    "om-factor": ("even", "p31"),
    "em-factor": ("odd", "p31"),
    "hgm-sub": ("hg", "hg"),
    "hgm-inside-em": ("even", None),
}


def cmd_degenerate(args):
    try:
        kind = FamilyKind.parse(args.source)
    except ValueError as e:
        raise UsageError(f"--from: {e}") from None
    want, form = MAPS[args.map]
    if kind.tag != want:
        raise UsageError(f"--map {args.map} starts from the {want} family, not {kind.tag}")
    seed = 0 if args.seed is None else args.seed
    if form is None:
        src = build(kind, sample_generic_spectrum(kind, seed))
        d = degeneration.hgm_inside_em(src, args.variant)
    else:
        if args.i is None or not 1 <= args.i <= kind.m:
            raise UsageError(f"--i must be in 1..{kind.m}")
        src = build(kind, degeneration.hyperplane_spectrum(kind, form, args.i, seed))
        fn = {"om-sub": degeneration.om_from_em_sub, "om-factor": degeneration.om_from_em_factor,
              "em-factor": degeneration.em_from_om_factor, "hgm-sub": degeneration.hgm_sub_from_hgm}[args.map]
        d = fn(src, args.i)
    diff = [[name, i, j, str(getattr(d.triple, name)[i, j]), str(getattr(d.direct, name)[i, j])]
            for name in "BCA" for i in range(d.triple.n) for j in range(d.triple.n)
            if getattr(d.triple, name)[i, j] != getattr(d.direct, name)[i, j]]
    doc = {"source": src.to_json(), "restricted": d.triple.to_json() if d.triple.kind else None,
           "direct": d.direct.to_json() if d.direct.kind else None,
           "basis_change": d.kind_of_transform, "transform": d.transform.to_json(),
           "differences": diff, "matches": d.matches}
    text = (f"{args.map} from {kind}: {'entrywise equal' if d.matches else f'{len(diff)} entries differ'}"
            f" after {d.kind_of_transform} basis change")
    return doc, d.matches, text


def cmd_fuchsian(args):
    if args.input:
        sys_ = fuchsian.import_system(args.input)
    else:
        if not args.family:
            raise UsageError("--family or --in is required")
        kind = _kind(args.family, args.m)
        t = build(kind, _spectrum(args, kind))
        sys_ = fuchsian.assemble(t, args.z1, args.z2, args.z3)
        if args.out:
            fuchsian.export(sys_, args.out)
    claims = sys_.check()
    claims["round trip"] = fuchsian.loads(sys_.dumps()) == sys_
    ok = all(claims.values())
    doc = {"system": sys_.to_json(), "claims": claims, "ok": ok}
    return doc, ok, _claims_table(claims)


def build_parser():
    p = argparse.ArgumentParser(prog="rigidtriples", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, family=True, spectrum=True):
        sp.add_argument("--json", action="store_true", help="print the JSON document")
        sp.add_argument("--seed", type=int, default=None)
        if family:
            sp.add_argument("--family", choices=TAGS)
            sp.add_argument("--m", type=int, default=None)
        if spectrum:
            sp.add_argument("--spectrum-file", "--spectrum", dest="spectrum_file")

    g = sub.add_parser("generate", help="build a triple")
    common(g)
    g.add_argument("--out")
    g.add_argument("--latex", action="store_true")
    g.set_defaults(func=cmd_generate, need_family=True)

    v = sub.add_parser("verify", help="check every claim about a triple file")
    common(v, family=False, spectrum=False)
    v.add_argument("--in", dest="input", required=True)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("positivity", help="sign verdict, or the predicate/scan agreement sweep")
    s.add_argument("action", nargs="?", choices=("check", "sweep"), default="check")
    common(s)
    s.add_argument("--samples", type=int, default=10000)
    s.add_argument("--reduce", action="store_true", help="apply the family's relabelling symmetries first")
    s.add_argument("--scan", action="store_true", help="also report the Gram signature")
    s.set_defaults(func=cmd_positivity)

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficients from BZ triangles")
    common(lr, family=False, spectrum=False)
    lr.add_argument("--lambda", dest="lam")
    lr.add_argument("--mu")
    lr.add_argument("--nu")
    lr.add_argument("--face", choices=TAGS)
    lr.add_argument("--m", type=int, default=None)
    lr.add_argument("--count", type=int, default=20)
    lr.add_argument("--oracle", action="store_true", help="also run the tableau count (slow for large weights)")
    lr.set_defaults(func=cmd_lr)

    i = sub.add_parser("identities", help="randomized exact check of the rational identities")
    common(i, family=False, spectrum=False)
    i.add_argument("--trials", type=int, default=100)
    i.add_argument("--id", type=int, choices=sorted(identities.IDENTITIES))
    i.set_defaults(func=cmd_identities)

    d = sub.add_parser("degenerate", help="compare a degeneration with the direct constructor")
    common(d, family=False, spectrum=False)
    d.add_argument("--from", dest="source", required=True, help="e.g. even:3")
    d.add_argument("--map", choices=sorted(MAPS), required=True)
    d.add_argument("--i", type=int)
    d.add_argument("--variant", choices=("V1+V2", "V1+V3"), default="V1+V2")
    d.set_defaults(func=cmd_degenerate)

    f = sub.add_parser("fuchsian", help="assemble, export or check a Fuchsian system")
    common(f)
    f.add_argument("--z1", default="0")
    f.add_argument("--z2", default="1")
    f.add_argument("--z3", default="infinity")
    f.add_argument("--out")
    f.add_argument("--in", dest="input")
    f.set_defaults(func=cmd_fuchsian)
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        if getattr(args, "need_family", False) and not args.family:
            raise UsageError("--family is required")
        doc, ok, text = args.func(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except RigidTripleError as e:
        doc, ok = {"error": type(e).__name__, "message": str(e), "ok": False}, False
        text = f"FAIL  {type(e).__name__}: {e}"
    if args.json:
        print(json.dumps(doc, indent=1), file=out)
    else:
        print(text, file=out)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
