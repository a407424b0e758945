"""Domain exceptions"""

from src.main.app.common.exception.exception import ServiceException


class NumericsException(ServiceException):
    """
    Dense linear algebra kernel exception
    """


class TransformException(ServiceException):
    """
    Fourier transform module exception
    """


class StepMatrixException(ServiceException):
    """
    Step matrix construction and decomposition exception
    """


class CircuitException(ServiceException):
    """
    Circuit synthesis and expansion exception
    """


class CircuitParseException(CircuitException):
    """
    Circuit text parsing exception, carries the offending line number.
    """

    def __init__(self, code: int, msg: str, line_no: int = 0):
        super(CircuitParseException, self).__init__(code=code, msg=f"line {line_no}: {msg}" if line_no else msg)
        self.line_no = line_no


class SimulatorException(ServiceException):
    """
    State vector simulator exception
    """


class CommandException(ServiceException):
    """
    Command line front end exception
    """
