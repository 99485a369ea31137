"""Exception types shared across the package."""


class MalformedPassport(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


class NotATree(ValueError):
    pass


class NotPrimePlusOne(ValueError):
    pass


class DegenerateN(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class DegeneratePassport(ValueError):
    pass


class NoSolutionsFound(RuntimeError):
    pass


class SingularNormalization(ArithmeticError):
    pass


class PoleEvaluation(ZeroDivisionError):
    pass
