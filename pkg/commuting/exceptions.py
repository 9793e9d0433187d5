from groups.exceptions import GroupError


class CommutingError(GroupError):
    pass


class InvalidSubset(CommutingError):
    pass


class NotMaximumWitness(CommutingError):
    pass


class NotACGroup(CommutingError):
    pass


class TooLargeForExact(RuntimeError):

    def __init__(self, size: int, cap: int, lower_bound=None):
        self.size = size
        self.cap = cap
        self.lower_bound = lower_bound
        super().__init__(f'{size} vertices exceeds the exact search cap of {cap}')
