from groups.exceptions import GroupError


class PartitionError(GroupError):
    pass


class CenterTooSmall(PartitionError):
    pass


class IndexTooSmall(PartitionError):
    pass


class AbelianInput(PartitionError):
    pass


class InvalidCertificate(PartitionError):
    pass
