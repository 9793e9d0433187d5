"""
Fraction-free (Bareiss) elimination over Python integers. Every division is exact, so intermediates stay
integral and bounded by minors of the input.
"""
import logging

import numpy as np

from commuting.graphs import SimpleGraph

logger = logging.getLogger(__name__)


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """
    Determinant of a square integer matrix. The pivot for column k is the first row at or below k with a
    nonzero entry there; each row swap flips the sign. The matrix is modified in place.
    """
    n = len(matrix)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if not matrix[k][k]:
            swap = next((i for i in range(k + 1, n) if matrix[i][k]), None)
            if swap is None:
                return 0
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign
        pivot_row = matrix[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = matrix[i]
            factor = row[k]
            for j in range(k + 1, n):
                row[j] = (pivot * row[j] - factor * pivot_row[j]) // previous
            row[k] = 0
        previous = pivot
    return sign * matrix[n - 1][n - 1]


def reduced_laplacian(graph: SimpleGraph, drop: int = 0) -> list[list[int]]:
    """Laplacian with row and column `drop` removed, as nested lists of Python ints."""
    keep = [i for i in range(graph.size) if i != drop]
    return graph.laplacian()[np.ix_(keep, keep)].tolist()


def matrix_tree_count(graph: SimpleGraph) -> int:
    if graph.size <= 1:
        return 1
    logger.debug(f'Bareiss elimination on a {graph.size - 1}x{graph.size - 1} reduced Laplacian')
    return bareiss_determinant(reduced_laplacian(graph))
