from django.db import models


class Violation(models.TextChoices):
    OUT_OF_RANGE = ('out_of_range', 'Element index outside the group')
    OVERLAP = ('overlap', 'Blocks are not pairwise disjoint')
    NON_COVER = ('non_cover', 'Blocks do not cover the group')
    A_NOT_ABELIAN_SUBGROUP = ('a_not_abelian_subgroup', 'A is not an abelian subgroup')
    BLOCK_NOT_COMMUTING = ('block_not_commuting', 'A block contains two noncommuting elements')
    BLOCK_TOO_SMALL = ('block_too_small', 'A block has fewer than two elements')
    TOO_FEW_BLOCKS = ('too_few_blocks', 'Fewer than two blocks besides A')


class SearchMode(models.TextChoices):
    EXACT = ('exact', 'Exhaustive minimum search')
    HEURISTIC = ('heuristic', 'Greedy cover by maximal abelian subgroups')


class SearchOutcome(models.TextChoices):
    FOUND = ('found', 'Found')
    NOT_FOUND = ('not_found', 'No partition exists within the limit')
    INCONCLUSIVE = ('inconclusive', 'The heuristic found no partition within the limit')


class ThreeAbelianCase(models.TextChoices):
    KLEIN = ('a', 'G/Z is Z2xZ2')
    ELEMENTARY_NINE = ('b', 'G/Z is Z3xZ3')
    SYMMETRIC = ('c', 'G/Z is S3')
