import logging

from groups.structure import class_count
from groups.tables import GroupTable
from partitions.certificates import PartitionCertificate
from treecount.factors import evaluate, factor_product

logger = logging.getLogger(__name__)


def lower_bound_blocks(G: GroupTable) -> int:
    """
    A partition into n blocks besides A bounds nc(G) by n + 1, and |G| <= nc(G) k(G), so n >= floor(|G| / k(G)) - 1.
    """
    bound = G.order // class_count(G) - 1
    logger.debug(f'{G.name}: any abelian partition needs at least {bound} blocks')
    return bound


def partition_kappa_terms(cert: PartitionCertificate) -> list[tuple]:
    """C(A) is complete and each C(A_i + {1}) is complete, so their tree-numbers multiply to a lower bound."""
    a = len(cert.A)
    terms = [(a, a - 2)] if a > 1 else []
    terms.extend((len(block) + 1, len(block) - 1) for block in cert.blocks)
    return terms


def partition_kappa_bound(cert: PartitionCertificate) -> int:
    return evaluate(factor_product(partition_kappa_terms(cert)))


def coset_kappa_terms(G: GroupTable) -> list[tuple]:
    m = len(G.center)
    n = G.order // m - 1
    terms = [(m, m - 2)] if m > 1 else []
    terms.append((m + 1, (m - 1) * n))
    return terms


def coset_kappa_bound(G: GroupTable) -> int:
    """|Z|^(|Z|-2) (|Z|+1)^((|Z|-1)n) for the coset partition with n = [G:Z] - 1."""
    return evaluate(factor_product(coset_kappa_terms(G)))
