class SpectraError(ValueError):
    pass


class ExpressionSyntaxError(SpectraError):

    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f'{message} at position {position} in {text!r}')


class NonIntegerResult(RuntimeError):
    pass
