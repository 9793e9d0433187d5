from django.db import models


class KappaMethod(models.TextChoices):
    MATRIX_TREE = ('matrix_tree', 'Fraction-free matrix-tree determinant')
    MODULAR_CRT = ('modular_crt', 'Modular determinants with CRT reconstruction')
    AC_STRUCTURE = ('ac_structure', 'Centralizer formula for AC-groups')
    SPECTRUM = ('spectrum', 'Laplacian spectrum of the clique model')
    CAYLEY = ('cayley', 'Cayley formula for a complete graph')


# Command-line spellings of the engines a caller may request
METHOD_ALIASES = {
    'matrix': KappaMethod.MATRIX_TREE,
    'modular': KappaMethod.MODULAR_CRT,
    'ac': KappaMethod.AC_STRUCTURE,
    'spectrum': KappaMethod.SPECTRUM,
    'cayley': KappaMethod.CAYLEY,
}
