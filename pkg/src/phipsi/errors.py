"""
Error kinds raised by phipsi.

Verdicts (not-in-image, no-closed-form, ...) are returned as data; these
exceptions only signal inputs the library cannot work with.
"""


class PhipsiError(Exception):
    pass


class InvalidModulusError(PhipsiError, ValueError):
    pass


class NotAUnitError(PhipsiError, ArithmeticError):
    pass


class IncompatibleOperandsError(PhipsiError, ValueError):
    pass


class UnsupportedRingError(PhipsiError, ValueError):
    pass


class UnsupportedGroupError(PhipsiError, ValueError):
    pass


class InvalidExponentError(PhipsiError, ValueError):
    pass


class NotAProperIdealError(PhipsiError, ValueError):
    pass


class NotAnIdealError(PhipsiError, RuntimeError):
    pass


class TooLargeError(PhipsiError, RuntimeError):
    pass


class NotApplicableError(PhipsiError, ValueError):
    pass


class UnknownSuiteError(PhipsiError, RuntimeError):
    pass


class InvalidInputError(PhipsiError, ValueError):
    pass
