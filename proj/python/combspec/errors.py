class CombspecError(Exception):
    """Raised by the native module; ``code`` is one of invalid_argument,
    parse, precondition, size_guard, not_divisible, timeout, internal."""

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
