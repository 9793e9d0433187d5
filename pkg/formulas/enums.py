from django.db import models


class Quantity(models.TextChoices):
    KAPPA = ('kappa', 'Tree-number of the commuting graph')
    BLOCKS = ('t', 'Distinct centralizers of noncentral elements')
    BOUND = ('bound', 'Class-count lower bound on partition blocks')


class Oracle(models.TextChoices):
    CENTRALIZER_COUNT = ('centralizer_count', 'Centralizers counted on the group table')
    CLASS_COUNT = ('class_count', 'Lower bound from the computed class count')


class Verdict(models.TextChoices):
    MATCH = ('match', 'Match')
    MISMATCH = ('mismatch', 'Mismatch')
    ORACLE_UNAVAILABLE = ('oracle-unavailable', 'No engine produced a value')
    ERROR = ('error', 'The closed form or the group could not be evaluated')


class Classification(models.TextChoices):
    OK = ('ok', 'OK')
    EXPECTED_MISMATCH = ('expected-mismatch', 'Known discrepancy in the printed formula')
    UNEXPECTED_MISMATCH = ('unexpected-mismatch', 'Unexpected mismatch')
    UNVERIFIED = ('unverified', 'Not checked against an engine')


class Scope(models.TextChoices):
    DEFAULT = ('default', 'Every closed form on groups small enough for the determinant')
    FULL = ('full', 'The default scope plus the larger linear groups')
