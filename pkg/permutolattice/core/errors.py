"""
Exception hierarchy. Every class carries a `kind` used by the CLI for its
`error: <kind>` first line, and an `exit_code` (2 = bad input, 1 = negative
domain result).
"""


class PermutolatticeError(Exception):
    kind = "error"
    exit_code = 2


# --- input / usage -------------------------------------------------------

class InvalidPermutation(PermutolatticeError, ValueError):
    kind = "invalid_permutation"


class OrderMismatch(PermutolatticeError, ValueError):
    kind = "order_mismatch"


class ElementOutOfRange(PermutolatticeError, ValueError):
    kind = "element_out_of_range"


class TrivialPartition(PermutolatticeError, ValueError):
    kind = "trivial_partition"


class GuardExceeded(PermutolatticeError, ValueError):
    kind = "guard_exceeded"


class VertexNotFound(PermutolatticeError, KeyError):
    kind = "vertex_not_found"

    def __str__(self):
        return Exception.__str__(self)


class EmptyFamily(PermutolatticeError, ValueError):
    kind = "empty_family"


class DuplicateComponents(PermutolatticeError, ValueError):
    kind = "duplicate_components"


class EmptyInterior(PermutolatticeError, ValueError):
    kind = "empty_interior"


class UnknownVariable(PermutolatticeError, ValueError):
    kind = "unknown_variable"


class ExprSyntaxError(PermutolatticeError, ValueError):
    kind = "syntax_error"

    def __init__(self, message: str, position: int = 0, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.position = position
        self.line = line
        self.column = column


class InputFormatError(PermutolatticeError, ValueError):
    kind = "input_format"

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source


# --- negative domain results ---------------------------------------------

class IsometryViolation(PermutolatticeError):
    kind = "isometry_violation"
    exit_code = 1

    def __init__(self, message: str, pair=None, path_distance=None, inversion_distance=None):
        super().__init__(message)
        self.pair = pair
        self.path_distance = path_distance
        self.inversion_distance = inversion_distance


class SeparationViolation(PermutolatticeError):
    kind = "separation_violation"
    exit_code = 1

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class NotDPL(PermutolatticeError):
    kind = "not_dpl"
    exit_code = 1

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class UncoveredRegion(PermutolatticeError):
    kind = "uncovered_region"
    exit_code = 1


class AmbiguousAssignment(PermutolatticeError):
    kind = "ambiguous_assignment"
    exit_code = 1


class NotRepresentable(PermutolatticeError):
    kind = "not_representable"
    exit_code = 1


class InternalConsistencyError(PermutolatticeError):
    kind = "internal"
    exit_code = 1


class InvalidGraph(PermutolatticeError, ValueError):
    kind = "invalid_graph"


class InvalidAntichain(PermutolatticeError, ValueError):
    kind = "invalid_antichain"
