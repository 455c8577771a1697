"""Exception hierarchy shared by the library and the command line."""


class EllrankError(Exception):
    """Base class for every error raised by this package."""


class InputError(EllrankError, ValueError):
    """Bad user-level input; the CLI maps these to exit code 2."""


class NotPrime(InputError):
    pass


class InvalidPrime(NotPrime):
    pass


class EqualPrimes(InputError):
    pass


class NonpositiveM(InputError):
    pass


class SingularCurve(InputError):
    pass


class BadReduction(EllrankError):
    pass


class DenominatorDivisible(EllrankError):
    pass


class NoUsablePrime(EllrankError):
    pass


class BudgetExceeded(EllrankError):
    pass


class TorsionInconsistency(EllrankError):
    """The assembled torsion subgroup does not divide the reduction bound."""


class CertificateFailed(EllrankError):
    def __init__(self, fact, detail=""):
        self.fact = fact
        self.detail = detail
        super().__init__(f"certificate fact failed: {fact}" + (f" ({detail})" if detail else ""))
