"""
Graphs built from complete and empty graphs by disjoint union and join.

Text syntax: K5, E3, U(e1,e2,...), J(e1,e2). Whitespace between tokens is ignored.
"""
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from commuting.graphs import SimpleGraph
from spectra.exceptions import ExpressionSyntaxError, SpectraError


class CliqueExpr(ABC):

    @property
    @abstractmethod
    def size(self) -> int:
        pass

    @abstractmethod
    def adjacency(self) -> np.ndarray:
        pass


@dataclass(frozen=True)
class Complete(CliqueExpr):
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise SpectraError(f'K{self.s} needs at least one vertex')

    def __str__(self):
        return f'K{self.s}'

    @property
    def size(self) -> int:
        return self.s

    def adjacency(self) -> np.ndarray:
        return ~np.eye(self.s, dtype=bool)


@dataclass(frozen=True)
class Empty(CliqueExpr):
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise SpectraError(f'E{self.s} needs at least one vertex')

    def __str__(self):
        return f'E{self.s}'

    @property
    def size(self) -> int:
        return self.s

    def adjacency(self) -> np.ndarray:
        return np.zeros((self.s, self.s), dtype=bool)


@dataclass(frozen=True)
class Union(CliqueExpr):
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise SpectraError('A union needs at least one part')

    def __str__(self):
        return f'U({",".join(str(part) for part in self.parts)})'

    @cached_property
    def size(self) -> int:
        return sum(part.size for part in self.parts)

    def adjacency(self) -> np.ndarray:
        matrix = np.zeros((self.size, self.size), dtype=bool)
        offset = 0
        for part in self.parts:
            matrix[offset:offset + part.size, offset:offset + part.size] = part.adjacency()
            offset += part.size
        return matrix


@dataclass(frozen=True)
class Join(CliqueExpr):
    left: CliqueExpr
    right: CliqueExpr

    def __str__(self):
        return f'J({self.left},{self.right})'

    @cached_property
    def size(self) -> int:
        return self.left.size + self.right.size

    def adjacency(self) -> np.ndarray:
        a = self.left.size
        matrix = np.ones((self.size, self.size), dtype=bool)
        matrix[:a, :a] = self.left.adjacency()
        matrix[a:, a:] = self.right.adjacency()
        return matrix


def union(parts) -> CliqueExpr:
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else Union(parts)


def copies(expr: CliqueExpr, count: int) -> CliqueExpr:
    return union([expr] * count)


def clique_model(m: int, blocks) -> CliqueExpr:
    """K_m joined with the disjoint union of K_s, one per block, blocks given as (size, multiplicity)."""
    cliques = [Complete(size) for size, count in blocks for _ in range(count)]
    if not cliques:
        return Complete(m)
    return Join(Complete(m), union(cliques))


def realize(expr: CliqueExpr) -> SimpleGraph:
    return SimpleGraph(matrix=expr.adjacency(), vertices=tuple(range(expr.size)))


_TOKEN = re.compile(r'\s*(?:([KE])(\d+)|([UJ])\s*\(|(,)|(\)))')


class _Parser:

    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def error(self, message: str):
        raise ExpressionSyntaxError(self.text, self.position, message)

    def token(self):
        match = _TOKEN.match(self.text, self.position)
        if not match:
            self.error('Unexpected input' if self.position < len(self.text.rstrip()) else 'Unexpected end')
        self.position = match.end()
        return match

    def expression(self) -> CliqueExpr:
        start = self.position
        match = self.token()
        leaf, count, node = match.group(1), match.group(2), match.group(3)
        if leaf:
            try:
                return Complete(int(count)) if leaf == 'K' else Empty(int(count))
            except SpectraError as e:
                raise ExpressionSyntaxError(self.text, start, str(e)) from e
        if not node:
            self.position = start
            self.error('Expected K, E, U( or J(')
        parts = [self.expression()]
        while True:
            separator = self.token()
            if separator.group(5):
                break
            if not separator.group(4):
                self.error('Expected "," or ")"')
            parts.append(self.expression())
        if node == 'U':
            return Union(tuple(parts))
        if len(parts) != 2:
            self.position = start
            self.error(f'A join takes two operands, got {len(parts)}')
        return Join(*parts)


def parse_expression(text: str) -> CliqueExpr:
    parser = _Parser(text)
    expr = parser.expression()
    if text[parser.position:].strip():
        parser.error('Trailing input')
    return expr
