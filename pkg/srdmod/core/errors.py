# srdmod/core/errors.py
from typing import Any, Dict, Optional

# Exit codes shared by every command
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT_ERROR = 2


class SRDModError(Exception):
    """Base error carrying a user-facing detail and the CLI exit code"""

    exit_code: int = EXIT_INPUT_ERROR

    def __init__(self, detail: str, payload: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.detail = detail
        self.payload = payload or {}

    def to_dict(self) -> Dict[str, Any]:
        body = {"error": self.detail, "kind": type(self).__name__}
        if self.payload:
            body["payload"] = self.payload
        return body


class CapacityError(SRDModError):
    """Input exceeds a hard size limit (vertex count, enumeration size)"""


class DomainError(SRDModError):
    """Argument outside the mathematical domain of an operation"""


class FieldError(SRDModError):
    """Unsupported characteristic or mismatched coefficient fields"""


class ParseError(SRDModError):
    """Malformed complex file or literal"""


class PreconditionError(SRDModError):
    """Operation called outside its documented precondition"""
