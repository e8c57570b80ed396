"""Exception taxonomy shared by the library and the command line tool.

Every error carries a stable ``kind`` string and the process exit code the
CLI maps it to, so failures stay machine-parseable end to end.
"""

from __future__ import annotations

import json


class HurstlabError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 5
    kind = "internal-error"

    def record(self) -> str:
        """One-line JSON error record for the diagnostic stream."""
        return json.dumps(
            {"error": self.kind, "exit_code": self.exit_code, "message": str(self)}
        )


class ParseError(HurstlabError):
    """Malformed input file (bad header, bad row, bad date or number)."""

    exit_code = 2
    kind = "parse-error"


class RejectedInputError(HurstlabError):
    """Well-formed but unacceptable input, e.g. a non-positive price."""

    exit_code = 2
    kind = "rejected-input"


class InvalidParameterError(HurstlabError):
    """A parameter outside its documented domain."""

    exit_code = 2
    kind = "invalid-parameter"


class InsufficientDataError(HurstlabError):
    """Not enough observations to perform the requested computation."""

    exit_code = 3
    kind = "insufficient-data"


class DegenerateSeriesError(HurstlabError):
    """Input with no usable variation (constant window, zero variance)."""

    exit_code = 4
    kind = "degenerate-series"


class DegenerateTailError(DegenerateSeriesError):
    """All tail points equal, so the tail exponent diverges."""

    kind = "degenerate-tail"


class NumericError(HurstlabError):
    """Internal numerical failure."""

    exit_code = 5
    kind = "numeric-failure"


class GeneratorFailureError(NumericError):
    """A synthetic-series generator could not produce a valid sample."""

    kind = "generator-failure"
