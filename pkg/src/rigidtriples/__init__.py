"""Exact rigid matrix triples A = B + C: constructors, spectra, invariant forms,
sign tables, Littlewood-Richardson counts via BZ triangles, degenerations,
rational identities and Fuchsian-system export."""
# flake8: noqa
from .errors import *
from .ratmat import RatMatrix, rat, solve_linear
from .families import (
    E8, Even, ExtraE8hat, FamilyKind, Hypergeometric, Odd, RigidTriple, TripleSpectrum,
    build, in_S_double_prime, normalize, sample_generic_spectrum, validate_spectrum,
)
from .spectral import (
    check_form_uniqueness, check_irreducible, check_self_adjoint, eigenvectors,
    invariant_form, verify_spectrum,
)
from .positivity import gram_signature, klyachko_face_sample, predicate, scan, sweep
from .bz import BZTriangle, count_fillings, gl_to_sl_weights, hg_strip_solution, lr_oracle, lr_via_bz
from .identities import IDENTITIES, check_identity, eval_sides
from .fuchsian import INFINITY, FuchsianSystem, assemble

__version__ = "0.1.0"
