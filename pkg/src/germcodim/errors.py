class GermcodimError(Exception):
    pass


class ExponentOverflow(GermcodimError, OverflowError):
    pass


class RingMismatch(GermcodimError, ValueError):
    pass


class ParseError(GermcodimError, ValueError):
    def __init__(self, message, text="", pos=None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class NotHomogeneous(GermcodimError, ValueError):
    """Raised with the two terms of different weighted degree."""

    def __init__(self, first, second, degrees):
        self.terms = (first, second)
        self.degrees = degrees
        super().__init__(
            f"not weighted homogeneous: {first} has degree {degrees[0]}, "
            f"{second} has degree {degrees[1]}"
        )


class StageTimeout(GermcodimError):
    def __init__(self, stage, last_completed):
        self.stage = stage
        self.last_completed = last_completed
        super().__init__(
            f"timed out during {stage!r}; last completed stage: {last_completed or 'none'}"
        )
