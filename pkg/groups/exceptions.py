from algebra.exceptions import AlgebraError


class GroupError(AlgebraError):
    pass


class InvalidGenerator(GroupError):

    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f'generators[{index}]: {message}')


class OrderCapExceeded(GroupError):
    pass


class OrderMismatch(GroupError):
    pass


class BadParams(GroupError):
    pass


class UnknownFamily(GroupError):
    pass


class InvalidGroupTable(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class NotNormal(GroupError):
    pass


class PDoesNotDivideOrder(GroupError):
    pass


class TargetTooLarge(GroupError):
    pass


class UnknownTarget(GroupError):
    pass
