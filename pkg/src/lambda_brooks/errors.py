"""Exception types shared across the package."""

from __future__ import annotations

import json
from typing import Any


class UsageError(ValueError):
    """A caller violated an operation's precondition (bad ids, bad arguments)."""


class ParseError(ValueError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """An exact oracle was asked to exceed its configured size limit."""


class InternalInconsistencyError(RuntimeError):
    """A branch the underlying theory rules out was reached.

    Carries a serialized repro bundle so the offending input can be replayed.
    """

    def __init__(self, stage: str, bundle: dict[str, Any]):
        self.stage = stage
        self.bundle = dict(bundle, stage=stage)
        super().__init__(f"internal inconsistency at {stage}: {json.dumps(self.bundle, sort_keys=True)}")
