"""Exception hierarchy. Every error carries a short machine-readable code."""


class AlmostChordalError(Exception):
    code = "error"


class GraphError(AlmostChordalError, ValueError):
    code = "invalid-graph"


class NotChordalError(AlmostChordalError, ValueError):
    code = "not-chordal"


class DecompositionError(AlmostChordalError, ValueError):
    code = "invalid-decomposition"


class WitnessError(AlmostChordalError, ValueError):
    code = "invalid-witness"


class InputFormatError(AlmostChordalError, ValueError):
    code = "malformed-input"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OracleLimitError(AlmostChordalError, ValueError):
    code = "oracle-size-guard"


class ParameterError(AlmostChordalError, ValueError):
    code = "invalid-parameters"
