"""Exception hierarchy.  Every domain failure derives from :class:`GentleError`."""


class GentleError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class DimensionError(GentleError, ValueError):
    pass


class SpecializationError(GentleError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "specialization error"


class QuiverSyntaxError(GentleError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class GentleAxiomError(GentleError):
    def __init__(self, axiom: int, vertex: str, arrows, detail: str):
        arrows = tuple(arrows)
        super().__init__(
            f"gentle axiom ({axiom}) violated at vertex {vertex} "
            f"(arrows {', '.join(arrows)}): {detail}"
        )
        self.axiom = axiom
        self.vertex = vertex
        self.arrows = arrows


class AcyclicityError(GentleError):
    pass


class ColoringError(GentleError):
    pass


class RankFunctionError(GentleError):
    pass


class NotRegularError(GentleError):
    pass


class SignFunctionError(GentleError):
    pass


class BandParameterError(GentleError):
    pass


class RelationError(GentleError):
    pass


class ShapeError(GentleError):
    """A symbolic determinant did not have the expected factored shape."""


class NotSquareError(GentleError):
    pass


class FamilyCoincidenceError(GentleError):
    pass


class BadPrimeError(GentleError):
    pass


class BudgetExceededError(GentleError):
    pass


class WeightError(GentleError):
    pass
