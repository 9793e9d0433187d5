class TreeCountError(RuntimeError):
    pass


class ExactCapExceeded(TreeCountError):

    def __init__(self, size: int, cap: int, message: str = None):
        self.size = size
        self.cap = cap
        super().__init__(message or f'{size} vertices exceeds the exact matrix-tree cap of {cap}; use the modular engine')


class EngineNotApplicable(TreeCountError):
    pass


class InconsistentResult(TreeCountError):
    pass
