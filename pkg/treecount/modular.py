"""
Spanning-tree counts as determinants modulo a fixed sequence of large primes, reconstructed by CRT.

The primes are the largest primes below 2^MODULAR_PRIME_BITS taken in descending order, so the sequence is the
same on every run. Enough of them are used that their product exceeds a Hadamard bound on the determinant.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from django.conf import settings
from sympy import prevprime
from sympy.ntheory.modular import crt

from commuting.graphs import SimpleGraph
from treecount.enums import KappaMethod
from treecount.results import KappaResult

logger = logging.getLogger(__name__)


# bits -> primes found so far, descending
_PRIMES = {}


def modular_primes(count: int, bits: int = None) -> tuple:
    bits = bits or settings.MODULAR_PRIME_BITS
    primes = _PRIMES.setdefault(bits, [])
    while len(primes) < count:
        primes.append(prevprime(primes[-1] if primes else 1 << bits))
    return tuple(primes[:count])


def hadamard_bits(graph: SimpleGraph) -> int:
    """
    Certified bit bound on the reduced Laplacian determinant: row i has Euclidean norm below deg(i) + 1, and
    bit_length(d + 1) exceeds log2(d + 1).
    """
    return sum(int(d + 1).bit_length() for d in graph.degrees[1:].tolist())


def sparse_reduced_laplacian(graph: SimpleGraph) -> list[dict]:
    """
    Reduced Laplacian (position 0 removed) as one {column: entry} dict per row, with rows and columns
    symmetrically reordered by ascending (degree, position) so high-degree vertices are eliminated last.
    """
    positions = sorted(range(1, graph.size), key=lambda i: (int(graph.degrees[i]), i))
    relabel = {v: i for i, v in enumerate(positions)}
    rows = []
    for v in positions:
        row = {relabel[v]: int(graph.degrees[v])}
        for u in graph.neighbours(v).tolist():
            if u:
                row[relabel[u]] = -1
        rows.append(row)
    return rows


def determinant_mod(rows: list[dict], p: int) -> int:
    """Gaussian elimination over GF(p) on sparse rows. The input rows are not modified."""
    rows = [{j: value % p for j, value in row.items() if value % p} for row in rows]
    n = len(rows)
    # column -> indices of the rows holding a nonzero entry in it
    holders = [set() for _ in range(n)]
    for i, row in enumerate(rows):
        for j in row:
            holders[j].add(i)

    def exchange(a: int, b: int):
        for index in (a, b):
            for j in rows[index]:
                holders[j].discard(index)
        rows[a], rows[b] = rows[b], rows[a]
        for index in (a, b):
            for j in rows[index]:
                holders[j].add(index)

    det = 1
    for k in range(n):
        if not rows[k].get(k):
            swap = min((i for i in holders[k] if i > k), default=None)
            if swap is None:
                return 0
            exchange(k, swap)
            det = -det
        pivot_row = rows[k]
        pivot = pivot_row[k]
        det = det * pivot % p
        inverse = pow(pivot, -1, p)
        for i in sorted(i for i in holders[k] if i > k):
            row = rows[i]
            factor = row.pop(k) * inverse % p
            holders[k].discard(i)
            for j, value in pivot_row.items():
                if j <= k:
                    continue
                updated = (row.get(j, 0) - factor * value) % p
                if updated:
                    if j not in row:
                        holders[j].add(i)
                    row[j] = updated
                elif j in row:
                    del row[j]
                    holders[j].discard(i)
    return det % p


def kappa_modular(graph: SimpleGraph, bit_bound: int = None, extra_primes: int = 0, workers: int = None) -> KappaResult:
    if graph.size <= 1:
        return KappaResult(value=1, method=KappaMethod.MODULAR_CRT)
    if not graph.is_connected:
        return KappaResult(value=0, method=KappaMethod.MODULAR_CRT, notes=('disconnected',))

    bit_bound = hadamard_bits(graph) if bit_bound is None else bit_bound
    bits = settings.MODULAR_PRIME_BITS
    count = bit_bound // (bits - 1) + 1 + extra_primes
    primes = modular_primes(count, bits)
    rows = sparse_reduced_laplacian(graph)
    workers = workers or settings.MODULAR_WORKERS
    logger.info(f'Modular determinant of {len(rows)} rows under {count} primes ({bit_bound}-bit bound)')

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            residues = list(executor.map(partial(determinant_mod, rows), primes))
    else:
        residues = [determinant_mod(rows, p) for p in primes]

    value, _ = crt(primes, residues)
    return KappaResult(
        value=int(value),
        method=KappaMethod.MODULAR_CRT,
        notes=(f'{count} primes', f'{bit_bound}-bit bound'),
    )
