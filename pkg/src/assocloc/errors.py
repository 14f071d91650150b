"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all package errors."""


class InputError(AlgebraError):
    """Malformed or inconsistent input. The CLI maps these to exit code 2."""


class ShapeError(InputError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class InvalidAlgebra(InputError):
    """Carries every violated constraint, not just the first one."""

    def __init__(self, violations: list[tuple]):
        self.violations = list(violations)
        shown = ", ".join(f"{type(self).__name__}{v}" for v in self.violations[:5])
        more = f" (+{len(self.violations) - 5} more)" if len(self.violations) > 5 else ""
        super().__init__(shown + more)


class NonAssociative(InvalidAlgebra):
    pass


class BadUnit(InvalidAlgebra):
    pass


class InvalidModule(InputError):
    def __init__(self, violations: list[tuple]):
        self.violations = list(violations)
        shown = ", ".join(f"{type(self).__name__}{v}" for v in self.violations[:5])
        super().__init__(shown)


class RelationViolated(InvalidModule):
    pass


class UnitNotIdentity(InvalidModule):
    pass


class NotAnIdeal(AlgebraError):
    pass


class UnitInIdeal(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    pass


class ZeroModule(InputError):
    pass


class MeataxeInconclusive(AlgebraError):
    pass


class NonSimpleSummand(InputError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"summand {index} is not simple")


class ZeroDivisorFound(AlgebraError):
    def __init__(self, left, right):
        self.witness = (left, right)
        super().__init__("zero divisor in a supposed division ring")


class NotHomomorphism(AlgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not multiplicative at basis pair {witness}")


class KernelNotContained(AlgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__("ker(eta) is not contained in ker(kappa)")


class DenominatorNotUnit(AlgebraError):
    def __init__(self, preimage):
        self.preimage = preimage
        super().__init__(f"kappa(s) is not a unit for s = {list(map(int, preimage))}")


class NotWellDefined(AlgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"induced map fails multiplicativity at {witness}")


class LayoutMismatch(InputError):
    pass


class NotCommutative(InputError):
    pass


class NotMaximal(InputError):
    pass


class PullbackMismatch(AlgebraError):
    pass
