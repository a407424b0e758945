"""Customer exceptions"""

from src.main.app.common.enums.enum import ResponseCode


class ServiceException(Exception):
    """
    Base service exception for handling toolkit errors.

    Args:
        code: An integer representing the error code.
        msg: A string containing the error message.
    """

    def __init__(self, code: int, msg: str):
        """
        Initializes the ServiceException with the given parameters.

        Args:
            code: Error code indicating the entity of error.
            msg: Error message providing details about the error.
        """
        super().__init__(msg)
        self.code = code
        self.msg = msg

    @classmethod
    def of(cls, response_code: ResponseCode, detail: str = ""):
        """
        Build the exception from a ResponseCode, appending an optional detail.

        Args:
            response_code: The response code describing the failure class.
            detail: Extra context appended to the code's message.
        """
        msg = f"{response_code.msg}: {detail}" if detail else response_code.msg
        return cls(response_code.code, msg)

    def __repr__(self) -> str:
        """
        Returns a string representation of the exception.

        Returns:
            str: A string representation of the instance.
        """
        return f"{self.__class__.__name__}({self.__dict__})"
