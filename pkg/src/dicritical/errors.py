"""Exception hierarchy shared by every module."""


class DicriticalError(Exception):
    """Base class for domain errors (CLI exit code 1)."""

    code = "DomainError"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class FieldMismatch(DicriticalError):
    code = "FieldMismatch"


class DimensionMismatch(DicriticalError):
    code = "DimensionMismatch"


class ZeroPolynomial(DicriticalError):
    code = "ZeroPolynomial"


class NotHomogeneous(DicriticalError):
    code = "NotHomogeneous"


class ZeroElement(DicriticalError):
    code = "ZeroElement"


class InvalidReesElement(DicriticalError):
    code = "InvalidReesElement"


class InvalidElement(DicriticalError):
    code = "InvalidElement"


class NonRationalPoint(DicriticalError):
    code = "NonRationalPoint"


class NotMPrimary(DicriticalError):
    code = "NotMPrimary"


class NotNormal(DicriticalError):
    code = "NotNormal"


class NotInIdeal(DicriticalError):
    code = "NotInIdeal"


class NotEquigenerated(DicriticalError):
    code = "NotEquigenerated"


class FieldTooSmall(DicriticalError):
    code = "FieldTooSmall"


class SearchExhausted(DicriticalError):
    code = "SearchExhausted"


class CertificationFailed(DicriticalError):
    code = "CertificationFailed"


class DepthExceeded(DicriticalError):
    code = "DepthExceeded"


class NotRegularParameter(DicriticalError):
    code = "NotRegularParameter"


class PreconditionFailed(DicriticalError):
    code = "PreconditionFailed"


class BadParameters(DicriticalError):
    code = "BadParameters"


class ParseError(Exception):
    """Malformed input (CLI exit code 2)."""

    def __init__(self, field, reason):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason

    def to_json(self):
        return {"error": "ParseError", "field": self.field, "reason": self.reason}
