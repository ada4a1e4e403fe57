"""Exception taxonomy shared by every module.

Two families matter to callers: SchemaError for inputs that are malformed
(wrong shape, wrong degree, unparseable scalars), and DegenerateError for
inputs that parse fine but are mathematically inadmissible for the requested
operation (non-coprime pencils, parabolic involutions, singular conics, ...).
Both carry a stable machine-readable ``kind`` tag.
"""


class CobleError(Exception):

    def __init__(self, kind: str, message: str, *, retryable: bool = False):
        super().__init__(message)
        self.kind = kind
        self.retryable = retryable


class SchemaError(CobleError):
    """Malformed or ill-typed input (CLI exit status 2)."""


class DegenerateError(CobleError):
    """Well-formed input rejected on mathematical grounds (CLI exit status 3)."""
