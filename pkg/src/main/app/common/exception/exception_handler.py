"""Global exception handler"""

import sys

from loguru import logger
from pydantic import ValidationError

from src.main.app.common.enums.enum import ResponseCode
from src.main.app.common.exception.exception import ServiceException

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_SERVICE_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def global_exception_handler(exc: Exception) -> int:
    """
    Handler of last resort: logs the traceback.

    Args:
        exc: The unexpected exception.

    Returns:
        int: The exit status for an internal error.
    """
    logger.opt(exception=exc).error(f"{ResponseCode.SERVICE_INTERNAL_ERROR.msg}: {exc}")
    sys.stderr.write(f"error {ResponseCode.SERVICE_INTERNAL_ERROR.code}: {exc}\n")
    return EXIT_INTERNAL_ERROR


def service_exception_handler(exc: ServiceException) -> int:
    """
    Report a ServiceException on standard error.

    Args:
        exc: ServiceException instance.

    Returns:
        int: 1 for a failed verification verdict, 2 for every other service error.
    """
    logger.debug(repr(exc))
    sys.stderr.write(f"error {exc.code}: {exc.msg}\n")
    if exc.code == ResponseCode.VERIFICATION_FAILED.code:
        return EXIT_VERIFICATION_FAILED
    return EXIT_SERVICE_ERROR


def validation_exception_handler(exc: ValidationError) -> int:
    """
    Report a rejected domain value as a parameter error.

    Args:
        exc: ValidationError raised while building a schema.

    Returns:
        int: The exit status for a service error.
    """
    details = "; ".join(f"{'.'.join(str(loc) for loc in error['loc'])}: {error['msg']}" for error in exc.errors())
    sys.stderr.write(f"error {ResponseCode.PARAMETER_ERROR.code}: {ResponseCode.PARAMETER_ERROR.msg}: {details}\n")
    return EXIT_SERVICE_ERROR
