"""Exception hierarchy shared by all modules."""


class RigidTripleError(Exception):
    pass


class DimensionMismatch(RigidTripleError, ValueError):
    pass


class Singular(RigidTripleError, ValueError):
    pass


class Inconsistent(RigidTripleError, ValueError):
    pass


class TraceViolation(RigidTripleError, ValueError):
    pass


class DegenerateSpectrum(RigidTripleError, ValueError):
    pass


class ZeroScale(RigidTripleError, ValueError):
    pass


class SamplingExhausted(RigidTripleError, RuntimeError):
    pass


class FormulaPole(RigidTripleError, ZeroDivisionError):
    pass


# eigenvector closed forms report the same condition under their own name
PoleInFormula = FormulaPole


class DegenerateForm(RigidTripleError, ValueError):
    """Raised when a Gram value vanishes; the form is attached for inspection."""

    def __init__(self, message, form=None):
        super().__init__(message)
        self.form = form


class NotNormalized(RigidTripleError, ValueError):
    pass


class NotOnHyperplane(RigidTripleError, ValueError):
    pass


class OrderingViolation(RigidTripleError, ValueError):
    pass


class NoFilling(RigidTripleError, ValueError):
    pass


class NonIntegral(RigidTripleError, ValueError):
    pass


class PoleAtPoint(RigidTripleError, ZeroDivisionError):
    pass


class CoincidentSingularities(RigidTripleError, ValueError):
    pass


class SchemaError(RigidTripleError, ValueError):
    """Malformed input file; ``field`` names the offending location."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
