"""Exception hierarchy shared by the library and the command line."""


class HeapknotError(Exception):
    """Base class for every error raised by heapknot."""


class GroupSpecError(HeapknotError, ValueError):
    """Malformed group, subgroup, coefficient or variant text."""


class LinkSpecError(HeapknotError, ValueError):
    """Malformed braid word or framing list."""


class BudgetExceededError(HeapknotError):
    """An enumeration or tuple-count guard was exceeded."""

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what} needs {size} states, budget is {budget}")
        self.what = what
        self.size = size
        self.budget = budget


class ComplexError(HeapknotError):
    """A chain complex or cochain failed a structural check."""


class PresentationError(HeapknotError):
    """A group presentation could not be transformed as requested."""
