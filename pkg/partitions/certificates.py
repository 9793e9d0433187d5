"""
n-abelian partitions G = A + A_1 + ... + A_n: A an abelian subgroup, each A_i a commuting set with at least two
elements, n >= 2. Certificates hold element indices of one GroupTable.
"""
import logging
from dataclasses import dataclass, replace
from typing import Iterable, Optional

import numpy as np

from groups.exceptions import NotASubgroup
from groups.subgroups import is_abelian_set, make_subgroup
from groups.tables import GroupTable
from partitions.enums import Violation
from partitions.exceptions import CenterTooSmall, IndexTooSmall

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionCertificate:
    A: tuple
    blocks: tuple
    verified: bool = False

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> list[int]:
        return [len(block) for block in self.blocks]


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    n: int
    violation: Optional[str] = None
    message: str = ''

    def __bool__(self):
        return self.ok


def _fail(n: int, violation: Violation, message: str) -> VerificationReport:
    return VerificationReport(ok=False, n=n, violation=violation, message=message)


def verify_partition(G: GroupTable, cert: PartitionCertificate) -> VerificationReport:
    """Checks the definition clause by clause and reports the first one violated."""
    n = cert.n
    parts = [tuple(cert.A)] + [tuple(block) for block in cert.blocks]
    flat = [x for part in parts for x in part]
    bad = [x for x in flat if not 0 <= x < G.order]
    if bad:
        return _fail(n, Violation.OUT_OF_RANGE, f'{bad[0]} is not an element index of {G.name}')

    counts = np.bincount(np.asarray(flat, dtype=np.int64), minlength=G.order)
    if (counts > 1).any():
        return _fail(n, Violation.OVERLAP, f'Element {int(np.argmax(counts > 1))} lies in more than one block')
    if (counts == 0).any():
        return _fail(n, Violation.NON_COVER, f'Element {int(np.argmax(counts == 0))} lies in no block')

    try:
        A = make_subgroup(G, cert.A)
    except NotASubgroup as e:
        return _fail(n, Violation.A_NOT_ABELIAN_SUBGROUP, str(e))
    if not A.is_abelian:
        return _fail(n, Violation.A_NOT_ABELIAN_SUBGROUP, f'A of order {A.order} is not abelian')

    for i, block in enumerate(cert.blocks, start=1):
        if not is_abelian_set(G, list(block)):
            return _fail(n, Violation.BLOCK_NOT_COMMUTING, f'Block {i} contains two noncommuting elements')
    for i, block in enumerate(cert.blocks, start=1):
        if len(block) < 2:
            return _fail(n, Violation.BLOCK_TOO_SMALL, f'Block {i} has {len(block)} element')
    if n < 2:
        return _fail(n, Violation.TOO_FEW_BLOCKS, f'{n} blocks besides A; at least 2 are needed')
    return VerificationReport(ok=True, n=n)


def certify(G: GroupTable, A: Iterable[int], blocks: Iterable[Iterable[int]]) -> PartitionCertificate:
    """Canonical certificate (sorted A, sorted blocks ordered by least element) with its verification result."""
    cert = PartitionCertificate(
        A=tuple(sorted(A)),
        blocks=tuple(sorted((tuple(sorted(block)) for block in blocks), key=lambda block: block[:1])),
    )
    report = verify_partition(G, cert)
    if not report:
        logger.debug(f'{G.name}: certificate rejected ({report.violation}: {report.message})')
    return replace(cert, verified=report.ok)


def center_cosets(G: GroupTable) -> list[tuple]:
    """Cosets of Z(G), ordered by least element, Z(G) first."""
    Z = np.asarray(G.center, dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    cosets = []
    for x in range(G.order):
        if seen[x]:
            continue
        coset = np.sort(G.table[Z, x])
        seen[coset] = True
        cosets.append(tuple(coset.tolist()))
    return cosets


def coset_partition(G: GroupTable) -> PartitionCertificate:
    """A = Z(G) and one block per nontrivial coset of the centre."""
    m = len(G.center)
    if m < 2:
        raise CenterTooSmall(f'{G.name} has a trivial centre')
    index = G.order // m
    if index < 4:
        raise IndexTooSmall(f'[G : Z(G)] = {index} leaves fewer than 3 cosets')
    cosets = center_cosets(G)
    cert = certify(G, cosets[0], cosets[1:])
    if not cert.verified:
        logger.error(f'{G.name}: coset partition failed verification')
    return cert
