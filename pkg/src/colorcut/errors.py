"""Exception types shared across the toolkit."""


class ColorcutError(Exception):
    """Base class for toolkit errors."""


class AllocationIncompleteError(ColorcutError):
    """An allocation is missing an assignment for a required qubit."""


class IncompatibleBlocksError(ColorcutError):
    """Blocks do not share family/distance, so qubits cannot be paired."""


class UnsupportedGateError(ColorcutError):
    """Gate kind not handled by the cost model."""


class InfeasibleError(ColorcutError):
    """No allocation can satisfy the capacity constraints."""


class CircuitParseError(ColorcutError):
    """Circuit text could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
