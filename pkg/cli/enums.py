from django.db import models


class ExitCode(models.IntegerChoices):
    OK = (0, 'Success')
    UNEXPECTED_MISMATCH = (1, 'A ledger entry disagrees with its oracles')
    PARSE_ERROR = (2, 'The group or certificate JSON does not parse')
    CONSTRUCTION_ERROR = (3, 'The group cannot be built')
    INAPPLICABLE = (4, 'The requested engine does not apply or exceeds its cap')


# Integer family parameters accepted as --<name> flags
FAMILY_FLAGS = ('k', 'p', 'q', 'd', 'n', 'a', 'b', 'u', 's')
