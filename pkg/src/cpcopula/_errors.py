class ChangePointError(ValueError):
    """Raised on invalid input or configuration.

    ``code`` is a short machine-readable tag such as ``"empty-window"`` or
    ``"split-range"``; the CLI maps it to an exit status.
    """

    def __init__(self, code, message=None):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class DegenerateDataError(ChangePointError):
    """The data carry too little rank information for a meaningful test."""
