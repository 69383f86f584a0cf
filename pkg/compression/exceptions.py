class CzgrepError(Exception):
    """Base class for every error raised by the compressed search code."""


class FormatError(CzgrepError):
    """A compressed stream is malformed."""

    def __init__(self, message, offset=None, element_index=None):
        self.offset = offset
        self.element_index = element_index
        details = []
        if element_index is not None:
            details.append(f'element {element_index}')
        if offset is not None:
            details.append(f'byte offset {offset}')
        if details:
            message = f"{message} ({', '.join(details)})"
        super().__init__(message)


class ParameterError(CzgrepError, ValueError):
    """A search or selection parameter is out of range."""


class UnsupportedConfigurationError(CzgrepError):
    """The requested operation needs labels that the stream does not carry."""


class PreconditionError(CzgrepError):
    """An operation was called with arguments that violate its contract."""
