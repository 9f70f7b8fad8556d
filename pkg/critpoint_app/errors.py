from __future__ import annotations

from typing import Any, Dict, Optional


class CritPointError(ValueError):
    code = "CritPointError"

    def __init__(self, detail: str, **context: Any) -> None:
        super().__init__(detail)
        self.detail = detail
        self.context: Dict[str, Any] = context

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.code, "detail": self.detail}
        if self.context:
            payload["context"] = {key: str(value) for key, value in self.context.items()}
        return payload


class BadDegree(CritPointError):
    code = "BadDegree"


class DivisionByZeroPoly(CritPointError):
    code = "DivisionByZeroPoly"


class NonSquare(CritPointError):
    code = "NonSquare"


class OnArrangement(CritPointError):
    code = "OnArrangement"


class DegenerateQuadrilateral(CritPointError):
    code = "DegenerateQuadrilateral"


class OnPoleLocus(CritPointError):
    code = "OnPoleLocus"


class NonRealInput(CritPointError):
    code = "NonRealInput"


class OddAmbientDimension(CritPointError):
    code = "OddAmbientDimension"


class WrongPointCount(CritPointError):
    code = "WrongPointCount"


class NotHamiltonian(CritPointError):
    code = "NotHamiltonian"


class NotAZero(CritPointError):
    code = "NotAZero"


class ZeroParameters(CritPointError):
    code = "ZeroParameters"


class NotACriticalPoint(CritPointError):
    code = "NotACriticalPoint"


class ConstantInput(CritPointError):
    code = "ConstantInput"


class DuplicatePoint(CritPointError):
    code = "DuplicatePoint"


class SingularAffineMap(CritPointError):
    code = "SingularAffineMap"


class NonRealPlotData(CritPointError):
    code = "NonRealPlotData"


class BadInput(CritPointError):
    code = "BadInput"


class UsageError(Exception):
    def __init__(self, message: str, flag: Optional[str] = None) -> None:
        super().__init__(message)
        self.flag = flag


class InvariantViolation(RuntimeError):
    pass
