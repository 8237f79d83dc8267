"""Exception hierarchy shared by all modules."""


class MajorizationError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class ParameterError(MajorizationError, ValueError):
    """Unknown case id or parameter outside its admissible range."""

    exit_code = 2


class DomainError(MajorizationError, ValueError):
    """Argument outside the open unit disk (or another stated domain)."""

    exit_code = 2


class RuleInapplicableError(MajorizationError):
    """The closed-form m(r) rule needs psi'(0) != 0 (and the -r branch for sharpness)."""


class SingularityError(MajorizationError):
    """A quantity that must stay away from zero vanished numerically."""


class EvaluationError(MajorizationError):
    """Non-finite value while sampling a function on a circle."""

    def __init__(self, message: str, angle: float):
        super().__init__(message)
        self.angle = angle

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["angle"] = self.angle
        return d


class QuadratureError(MajorizationError):
    """Node doubling did not converge."""

    def __init__(self, message: str, estimates):
        super().__init__(message)
        self.estimates = tuple(estimates)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["estimates"] = [str(e) for e in self.estimates]
        return d


class NoRootError(MajorizationError):
    """No sign change of the radius function on the scan grid."""
