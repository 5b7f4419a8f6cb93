"""Result and Validation values used for ingestion and batch evaluation."""

from mimo_capacity.outcome.issue import Issue
from mimo_capacity.outcome.result import Error, Ok, Result
from mimo_capacity.outcome.validation import Invalid, Valid, Validation

__all__ = [
    "Issue",
    "Result",
    "Ok",
    "Error",
    "Validation",
    "Valid",
    "Invalid",
]
