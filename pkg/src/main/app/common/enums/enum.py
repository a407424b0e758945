from enum import Enum


class ResponseCode(Enum):
    """
    Enum for toolkit response codes.
    """

    SUCCESS = (0, "Success")
    SERVICE_INTERNAL_ERROR = (-1, "Service internal error")

    PARAMETER_ERROR = (400, "Parameter error")
    DIMENSION_MISMATCH = (401, "Dimension mismatch")
    NOT_POWER_OF_TWO = (402, "Length is not a power of two")
    DIMENSION_LIMIT_EXCEEDED = (403, "Dimension exceeds the supported maximum")
    APPROXIMATION_OUT_OF_RANGE = (404, "Approximation parameter m out of range")
    STEP_OUT_OF_RANGE = (405, "Step index out of range")
    QUBIT_OUT_OF_RANGE = (406, "Qubit index out of range")
    STRUCTURE_MISMATCH = (407, "Matrix does not match the expected step structure")
    CIRCUIT_SYNTAX_ERROR = (408, "Circuit text syntax error")
    NON_UNIT_NORM = (409, "State vector does not have unit norm")
    ZERO_VECTOR = (410, "Cannot normalize the zero vector")
    QUBIT_COUNT_MISMATCH = (411, "Qubit count mismatch between state and circuit")
    VECTOR_FILE_ERROR = (412, "Malformed vector file")
    FILE_WRITE_ERROR = (413, "Cannot write output file")
    CONFIG_ERROR = (414, "Invalid configuration file")
    VERIFICATION_FAILED = (500, "Verification failed")

    @property
    def code(self):
        return self.value[0]

    @property
    def msg(self):
        return self.value[1]


class ConstantCode:
    """
    Build-time constants shared by the toolkit.
    """

    UTF_8 = "utf-8"
    # dense 2^n x 2^n matrices are only materialized up to this width
    MAX_DENSE_QUBITS = 12
    MAX_SIM_QUBITS = 26
    MAX_SYNTH_QUBITS = 24
    MAX_VERIFY_QUBITS = 8


class GateKind(str, Enum):
    """
    Enum for gate variants, valued by their circuit text mnemonic.
    """

    hadamard = "h"
    controlled_phase = "cp"
    swap = "swap"


class CircuitFormat(str, Enum):
    """
    Enum for circuit output formats.
    """

    text = "text"
    qasm = "qasm"
