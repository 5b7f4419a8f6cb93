"""Issue records carried by Error and Invalid values."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Issue:
    """A single problem found while ingesting or validating input.

    Attributes:
        field: Dotted name of the offending key (``"user.1.nt"``) or
            ``"<line 7>"`` when the problem is syntactic
        message: Human readable description

    Example:
        >>> Issue("sigma2", "must be positive")
        Issue(sigma2: must be positive)
    """

    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"

    def __repr__(self) -> str:
        return f"Issue({self})"


__all__ = ["Issue"]
