"""Exception types shared across the package."""


class GuardError(ValueError):
    """A size or enumeration guard was exceeded; nothing was computed."""


class ParseError(ValueError):
    """Malformed polynomial expression or input file."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None and text is not None:
            message = f"{message} at position {position}: {text!r}\n  {' ' * (position + 1)}^"
        elif position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
