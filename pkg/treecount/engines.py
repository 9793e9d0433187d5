"""
Tree-number engines for the commuting graph of a group and the dispatcher that picks among them.

kappa_auto uses the cheapest engine that is exact for the group and cross-checks the structural formula
against the determinant for groups up to AC_CROSS_CHECK_MAX_ORDER.
"""
import logging
from dataclasses import replace
from typing import Iterable

from django.conf import settings

from commuting.centralizers import centralizer_decomposition
from commuting.exceptions import NotACGroup
from commuting.graphs import SimpleGraph, commuting_graph
from groups.structure import is_ac_group
from groups.tables import GroupTable
from spectra.expressions import clique_model
from spectra.laplacian import kappa_from_spectrum, spectrum
from treecount.bareiss import matrix_tree_count
from treecount.enums import KappaMethod
from treecount.exceptions import EngineNotApplicable, ExactCapExceeded
from treecount.factors import divide_factors, factor_product
from treecount.modular import kappa_modular
from treecount.results import KappaResult

logger = logging.getLogger(__name__)


def kappa_matrix_tree(graph: SimpleGraph) -> KappaResult:
    if graph.size > settings.MATRIX_TREE_EXACT_CAP:
        raise ExactCapExceeded(graph.size, settings.MATRIX_TREE_EXACT_CAP)
    if not graph.is_connected:
        return KappaResult(value=0, method=KappaMethod.MATRIX_TREE, notes=('disconnected',))
    return KappaResult(value=matrix_tree_count(graph), method=KappaMethod.MATRIX_TREE)


def kappa_graph(graph: SimpleGraph) -> KappaResult:
    """Matrix-tree up to the exact cap, modular above it."""
    if graph.size > settings.MATRIX_TREE_EXACT_CAP:
        logger.warning(f'{graph.size} vertices is above the matrix-tree cap; using the modular engine')
        return kappa_modular(graph)
    return kappa_matrix_tree(graph)


def cayley_terms(n: int) -> list[tuple]:
    return [(n, n - 2)] if n > 1 else []


def kappa_cayley(G: GroupTable) -> KappaResult:
    if not G.is_abelian:
        raise EngineNotApplicable(f'{G.name} is not abelian; its commuting graph is not complete')
    terms = cayley_terms(G.order)
    factors = factor_product(terms)
    return KappaResult(value=G.order ** (G.order - 2) if G.order > 1 else 1, method=KappaMethod.CAYLEY, factors=factors)


def ac_terms(n: int, m: int, decomposition: Iterable[tuple]) -> list[tuple]:
    """Base and exponent pairs of n^(m-1) m^(t-1) prod (m_i + m)^(m_i - 1)."""
    decomposition = list(decomposition)
    t = sum(count for _, count in decomposition)
    terms = [(n, m - 1), (m, t - 1)]
    terms.extend((size + m, (size - 1) * count) for size, count in decomposition)
    return terms


def kappa_ac(G: GroupTable) -> KappaResult:
    if G.is_abelian:
        raise NotACGroup(f'{G.name} is abelian; the centralizer formula needs a noncentral element')
    decomposition = centralizer_decomposition(G)
    m = len(G.center)
    terms = ac_terms(G.order, m, decomposition)
    value = 1
    for base, exponent in terms:
        value *= base ** exponent
    return KappaResult(
        value=value,
        method=KappaMethod.AC_STRUCTURE,
        factors=factor_product(terms),
        notes=(f'm={m}', f't={sum(count for _, count in decomposition)}'),
    )


def kappa_spectrum(G: GroupTable) -> KappaResult:
    """Spectrum of K_m joined with one clique per noncentral centralizer block."""
    if not G.is_abelian and not is_ac_group(G):
        raise EngineNotApplicable(f'{G.name} is not an AC-group; its commuting graph is not a clique expression')
    m = len(G.center)
    decomposition = [] if G.is_abelian else centralizer_decomposition(G)
    s = spectrum(clique_model(m, decomposition))
    value = kappa_from_spectrum(s)
    numerator = factor_product((mu, count) for mu, count in s.terms if mu)
    return KappaResult(value=value, method=KappaMethod.SPECTRUM, factors=divide_factors(numerator, G.order))


def kappa_subset(G: GroupTable, X: Iterable[int]) -> KappaResult:
    """Tree-number of C(X); a commuting subset gives |X|^(|X|-2) directly."""
    graph = commuting_graph(G, X)
    if graph.edge_count == graph.size * (graph.size - 1) // 2:
        factors = factor_product(cayley_terms(graph.size))
        return KappaResult(
            value=graph.size ** (graph.size - 2) if graph.size > 1 else 1, method=KappaMethod.CAYLEY, factors=factors,
        )
    return kappa_graph(graph)


def applicable_methods(G: GroupTable) -> list[str]:
    methods = []
    if G.order <= settings.MATRIX_TREE_EXACT_CAP:
        methods.append(KappaMethod.MATRIX_TREE)
    methods.append(KappaMethod.MODULAR_CRT)
    if G.is_abelian:
        methods.extend([KappaMethod.CAYLEY, KappaMethod.SPECTRUM])
    elif is_ac_group(G):
        methods.extend([KappaMethod.AC_STRUCTURE, KappaMethod.SPECTRUM])
    return methods


def _run_matrix_tree(G: GroupTable) -> KappaResult:
    return kappa_matrix_tree(commuting_graph(G))


def _run_modular(G: GroupTable) -> KappaResult:
    return kappa_modular(commuting_graph(G))


def _run_ac(G: GroupTable) -> KappaResult:
    try:
        return kappa_ac(G)
    except NotACGroup as e:
        raise EngineNotApplicable(str(e)) from e


ENGINE_MAP = {
    KappaMethod.MATRIX_TREE: _run_matrix_tree,
    KappaMethod.MODULAR_CRT: _run_modular,
    KappaMethod.AC_STRUCTURE: _run_ac,
    KappaMethod.SPECTRUM: kappa_spectrum,
    KappaMethod.CAYLEY: kappa_cayley,
}


def run_engine(G: GroupTable, method: str) -> KappaResult:
    try:
        engine = ENGINE_MAP[KappaMethod(method)]
    except ValueError as e:
        raise EngineNotApplicable(f'Unknown method {method!r}') from e
    logger.info(f'Running {method} on {G.name} (order {G.order})')
    return engine(G)


def with_cross_checks(G: GroupTable, primary: KappaResult, methods: Iterable[str]) -> KappaResult:
    engines = {primary.method: primary.value}
    for method in methods:
        if method not in engines:
            engines[method] = run_engine(G, method).value
    agreed = len(set(engines.values())) == 1
    if not agreed:
        logger.warning(f'Engines disagree on {G.name}: ' + ', '.join(f'{k}={v}' for k, v in engines.items()))
    return replace(primary, engines=engines, engines_agreed=agreed)


def kappa_auto(G: GroupTable, cross_check: bool = False) -> KappaResult:
    if G.is_abelian:
        primary = kappa_cayley(G)
    elif is_ac_group(G):
        primary = kappa_ac(G)
    else:
        primary = kappa_graph(commuting_graph(G))

    if cross_check:
        return with_cross_checks(G, primary, applicable_methods(G))
    if primary.method == KappaMethod.AC_STRUCTURE and G.order <= settings.AC_CROSS_CHECK_MAX_ORDER:
        return with_cross_checks(G, primary, [KappaMethod.MATRIX_TREE])
    return with_cross_checks(G, primary, [])
