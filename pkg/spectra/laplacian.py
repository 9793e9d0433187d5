"""
Exact Laplacian spectra of clique expressions and the tree-number identities read off them.

Eigenvalues are nonnegative integers stored as (value, multiplicity) pairs, value descending.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable

from spectra.exceptions import NonIntegerResult, SpectraError
from spectra.expressions import CliqueExpr, Complete, Empty, Join, Union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LapSpectrum:
    terms: tuple

    @classmethod
    def from_counts(cls, counts) -> 'LapSpectrum':
        counts = Counter(counts)
        return cls(terms=tuple(sorted(((v, c) for v, c in counts.items() if c > 0), reverse=True)))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> 'LapSpectrum':
        return cls.from_counts(Counter(values))

    def __str__(self):
        return ' '.join(f'{value}^{count}' for value, count in self.terms)

    def __add__(self, other: 'LapSpectrum') -> 'LapSpectrum':
        return LapSpectrum.from_counts(self.counts + other.counts)

    @property
    def counts(self) -> Counter:
        return Counter(dict(self.terms))

    @property
    def size(self) -> int:
        return sum(count for _, count in self.terms)

    def multiplicity(self, value: int) -> int:
        return dict(self.terms).get(value, 0)

    @property
    def zero_multiplicity(self) -> int:
        return self.multiplicity(0)

    @property
    def largest(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def values(self) -> list[int]:
        return [value for value, count in self.terms for _ in range(count)]

    def without_zero(self) -> 'LapSpectrum':
        """Drop one zero eigenvalue."""
        counts = self.counts
        if counts[0] < 1:
            raise SpectraError('Spectrum has no zero eigenvalue to drop')
        counts[0] -= 1
        return LapSpectrum.from_counts(counts)

    def shifted(self, by: int) -> 'LapSpectrum':
        return LapSpectrum(terms=tuple((value + by, count) for value, count in self.terms))


def spectrum(expr: CliqueExpr) -> LapSpectrum:
    if isinstance(expr, Complete):
        return LapSpectrum.from_counts({expr.s: expr.s - 1, 0: 1})
    if isinstance(expr, Empty):
        return LapSpectrum.from_counts({0: expr.s})
    if isinstance(expr, Union):
        result = LapSpectrum(terms=())
        for part in expr.parts:
            result = result + spectrum(part)
        return result
    if isinstance(expr, Join):
        a, b = expr.left.size, expr.right.size
        return (
            LapSpectrum.from_counts({a + b: 1, 0: 1})
            + spectrum(expr.left).without_zero().shifted(b)
            + spectrum(expr.right).without_zero().shifted(a)
        )
    raise SpectraError(f'Not a clique expression: {expr!r}')


def _power_product(terms) -> int:
    return prod(value ** count for value, count in terms)


def kappa_from_spectrum(s: LapSpectrum) -> int:
    """Product of the nonzero eigenvalues over the vertex count; 0 for a disconnected graph."""
    if s.zero_multiplicity != 1:
        return 0
    numerator = _power_product((value, count) for value, count in s.terms if value)
    kappa, remainder = divmod(numerator, s.size)
    if remainder:
        raise NonIntegerResult(f'Eigenvalue product {numerator} is not divisible by {s.size}')
    return kappa


@dataclass(frozen=True)
class SigmaValue:
    """value = sigma(L; -m) = (-1)^n * shifted_product, shifted_product = prod(mu + m) over every eigenvalue."""
    value: int
    shifted_product: int


def sigma_eval(s: LapSpectrum, m: int) -> SigmaValue:
    if m < 1:
        raise SpectraError(f'm must be at least 1, got {m}')
    shifted_product = _power_product(s.shifted(m).terms)
    if shifted_product % m:
        raise NonIntegerResult(f'Shifted product {shifted_product} is not divisible by {m}')
    return SigmaValue(value=-shifted_product if s.size % 2 else shifted_product, shifted_product=shifted_product)


def kappa_centerless(s: LapSpectrum) -> int:
    """Tree-number of K1 joined with the graph whose spectrum is s."""
    return _power_product(s.without_zero().shifted(1).terms)


def kappa_from_noncentral(s: LapSpectrum, m: int) -> int:
    """
    Tree-number of K_m joined with a graph of spectrum s: n^(m-1) * prod(mu + m) / m over all of s, n the total
    vertex count.
    """
    if not s.size:
        return m ** (m - 2) if m > 1 else 1
    n = s.size + m
    shifted_product = sigma_eval(s, m).shifted_product
    kappa = n ** (m - 1) * (shifted_product // m)
    logger.debug(f'Tree-number of K{m} joined with {s.size} vertices: {kappa.bit_length()} bits')
    return kappa
