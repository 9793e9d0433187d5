import pytest
from django.test import SimpleTestCase, override_settings

from commuting.graphs import SimpleGraph, commuting_graph
from groups.catalog import SMALL_CATALOG, catalog_group
from spectra.expressions import Complete, realize
from treecount.bareiss import bareiss_determinant
from treecount.engines import (
    applicable_methods, kappa_ac, kappa_auto, kappa_graph, kappa_matrix_tree, kappa_spectrum, kappa_subset,
    run_engine,
)
from treecount.enums import KappaMethod
from treecount.exceptions import EngineNotApplicable, ExactCapExceeded, InconsistentResult
from treecount.factors import divide_factors, evaluate, factor_product, format_factors
from treecount.modular import determinant_mod, hadamard_bits, kappa_modular, modular_primes
from treecount.results import KappaResult

A5_KAPPA = 2 ** 20 * 3 ** 10 * 5 ** 18


class FactorsTestCase(SimpleTestCase):

    def test_factor_product(self):
        self.assertEqual(factor_product([(12, 2), (3, 1), (1, 5), (7, 0)]), ((2, 4), (3, 3)))
        self.assertEqual(evaluate(((2, 4), (3, 3))), 432)
        self.assertEqual(format_factors(((2, 20), (3, 10), (5, 18))), '2^20*3^10*5^18')
        self.assertEqual(format_factors(()), '1')

    def test_divide(self):
        self.assertEqual(divide_factors(((2, 11),), 8), ((2, 8),))
        with self.assertRaises(ValueError):
            divide_factors(((2, 1),), 3)

    def test_result_checks_factors(self):
        with self.assertRaises(InconsistentResult):
            KappaResult(value=10, method=KappaMethod.AC_STRUCTURE, factors=((2, 1), (3, 1)))


class BareissTestCase(SimpleTestCase):

    def test_determinants(self):
        self.assertEqual(bareiss_determinant([[2, -1], [-1, 2]]), 3)
        self.assertEqual(bareiss_determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(bareiss_determinant([[1, 2], [2, 4]]), 0)
        self.assertEqual(bareiss_determinant([[0, 2, 1], [3, 0, 0], [1, 1, 1]]), -3)
        self.assertEqual(bareiss_determinant([]), 1)


class MatrixTreeTestCase(SimpleTestCase):

    def test_complete(self):
        self.assertEqual(kappa_matrix_tree(realize(Complete(4))).value, 16)

    def test_symmetric_three(self):
        self.assertEqual(run_engine(catalog_group('S3'), KappaMethod.MATRIX_TREE).value, 3)

    def test_dihedral_eight(self):
        self.assertEqual(run_engine(catalog_group('D8'), KappaMethod.MATRIX_TREE).value, 2048)

    def test_disconnected(self):
        result = kappa_matrix_tree(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))
        self.assertEqual(result.value, 0)
        self.assertTrue(result.is_disconnected)

    @override_settings(MATRIX_TREE_EXACT_CAP=10)
    def test_cap(self):
        self.assertEqual(kappa_graph(commuting_graph(catalog_group('D8'))).value, 2048)
        self.assertEqual(kappa_graph(commuting_graph(catalog_group('D8'))).method, KappaMethod.MATRIX_TREE)
        self.assertEqual(kappa_graph(commuting_graph(catalog_group('A4'))).method, KappaMethod.MODULAR_CRT)
        with self.assertRaises(ExactCapExceeded):
            kappa_matrix_tree(commuting_graph(catalog_group('A4')))


class ModularTestCase(SimpleTestCase):

    def test_primes_descend(self):
        primes = modular_primes(3)
        self.assertEqual(len(primes), 3)
        self.assertTrue(all(p < 2 ** 62 for p in primes))
        self.assertEqual(list(primes), sorted(primes, reverse=True))
        self.assertEqual(modular_primes(2), primes[:2])

    def test_determinant_with_zero_pivot(self):
        self.assertEqual(determinant_mod([{1: 1}, {0: 1}], 7), 6)
        self.assertEqual(determinant_mod([{0: 2, 1: -1}, {0: -1, 1: 2}], 7), 3)
        self.assertEqual(determinant_mod([{0: 1, 1: 2}, {0: 2, 1: 4}], 7), 0)

    def test_complete(self):
        self.assertEqual(kappa_modular(realize(Complete(4)), bit_bound=1).value, 16)

    def test_alternating_five(self):
        result = run_engine(catalog_group('A5'), KappaMethod.MODULAR_CRT)
        self.assertEqual(result.value, A5_KAPPA)

    def test_extra_primes_do_not_change_the_value(self):
        graph = commuting_graph(catalog_group('S4'))
        self.assertEqual(kappa_modular(graph).value, kappa_modular(graph, extra_primes=4).value)
        self.assertEqual(kappa_modular(graph).value, kappa_matrix_tree(graph).value)

    @override_settings(MODULAR_PRIME_BITS=16)
    def test_small_primes(self):
        graph = commuting_graph(catalog_group('GL2(3)'))
        self.assertEqual(kappa_modular(graph).value, 2 ** 85 * 3 ** 13)

    def test_hadamard_bound_holds(self):
        for name in ('S3', 'Q8', 'D12', 'A4', 'S4'):
            graph = commuting_graph(catalog_group(name))
            self.assertLess(kappa_matrix_tree(graph).value.bit_length(), hadamard_bits(graph) + 1)

    def test_workers(self):
        graph = commuting_graph(catalog_group('D12'))
        self.assertEqual(kappa_modular(graph, workers=2).value, 2 ** 14 * 3 ** 4)

    def test_disconnected(self):
        self.assertTrue(kappa_modular(SimpleGraph.from_edges(3, [(0, 1)])).is_disconnected)


class ACFormulaTestCase(SimpleTestCase):

    def test_quaternion(self):
        result = kappa_ac(catalog_group('Q8'))
        self.assertEqual(result.value, 2048)
        self.assertEqual(result.factors, ((2, 11),))

    def test_semidihedral(self):
        self.assertEqual(kappa_ac(catalog_group('SD16')).value, 2 ** 31)

    def test_general_linear(self):
        G = catalog_group('GL2(3)')
        result = kappa_ac(G)
        self.assertEqual(result.factors, ((2, 85), (3, 13)))
        self.assertEqual(result.value, run_engine(G, KappaMethod.MATRIX_TREE).value)

    def test_alternating_five(self):
        self.assertEqual(kappa_ac(catalog_group('A5')).factors, ((2, 20), (3, 10), (5, 18)))

    def test_not_applicable(self):
        with self.assertRaises(EngineNotApplicable):
            run_engine(catalog_group('S4'), KappaMethod.AC_STRUCTURE)
        with self.assertRaises(EngineNotApplicable):
            run_engine(catalog_group('S4'), KappaMethod.SPECTRUM)
        with self.assertRaises(EngineNotApplicable):
            run_engine(catalog_group('Z6'), KappaMethod.AC_STRUCTURE)
        with self.assertRaises(EngineNotApplicable):
            run_engine(catalog_group('S3'), 'magic')


class SpectrumEngineTestCase(SimpleTestCase):

    def test_quaternion(self):
        result = kappa_spectrum(catalog_group('Q8'))
        self.assertEqual(result.value, 2048)
        self.assertEqual(result.factors, ((2, 11),))

    def test_abelian(self):
        self.assertEqual(kappa_spectrum(catalog_group('Z6')).value, 6 ** 4)


class KappaAutoTestCase(SimpleTestCase):

    def test_cyclic(self):
        result = kappa_auto(catalog_group('Z6'))
        self.assertEqual(result.value, 1296)
        self.assertEqual(result.method, KappaMethod.CAYLEY)
        self.assertEqual(result.factors, ((2, 4), (3, 4)))

    def test_dihedral_ten(self):
        result = kappa_auto(catalog_group('D10'))
        self.assertEqual(result.value, 125)
        self.assertEqual(result.method, KappaMethod.AC_STRUCTURE)
        self.assertEqual(set(result.engines), {KappaMethod.AC_STRUCTURE, KappaMethod.MATRIX_TREE})
        self.assertTrue(result.engines_agreed)

    def test_dihedral_twelve(self):
        result = kappa_auto(catalog_group('D12'))
        self.assertEqual(result.value, 1327104)
        self.assertEqual(result.factors, ((2, 14), (3, 4)))

    def test_not_ac(self):
        result = kappa_auto(catalog_group('S4'))
        self.assertEqual(result.method, KappaMethod.MATRIX_TREE)
        self.assertIsNone(result.factors)

    def test_cross_check(self):
        result = kappa_auto(catalog_group('S3'), cross_check=True)
        self.assertEqual(result.value, 3)
        self.assertTrue(result.engines_agreed)
        self.assertEqual(
            set(result.engines),
            {KappaMethod.MATRIX_TREE, KappaMethod.MODULAR_CRT, KappaMethod.AC_STRUCTURE, KappaMethod.SPECTRUM},
        )

    def test_cross_check_threshold(self):
        G = catalog_group('Q8')
        with self.settings(AC_CROSS_CHECK_MAX_ORDER=0):
            self.assertEqual(kappa_auto(G).engines, {KappaMethod.AC_STRUCTURE: 2048})



@pytest.fixture
def wrong_matrix_tree(mocker):
    return mocker.patch(
        'treecount.engines.kappa_matrix_tree', return_value=KappaResult(value=1, method=KappaMethod.MATRIX_TREE),
    )


def test_disagreement_is_flagged(wrong_matrix_tree):
    result = kappa_auto(catalog_group('Q8'))
    assert wrong_matrix_tree.called
    assert not result.engines_agreed
    assert result.value == 2048
    assert result.engines[KappaMethod.MATRIX_TREE] == 1

class SubsetTestCase(SimpleTestCase):

    def test_commuting_subset(self):
        G = catalog_group('Q8')
        X = [x for x in range(8) if G.commutes[x, G.labels.index('x')]]
        result = kappa_subset(G, X)
        self.assertEqual(result.value, 16)
        self.assertEqual(result.method, KappaMethod.CAYLEY)

    def test_whole_group(self):
        self.assertEqual(kappa_subset(catalog_group('S3'), range(6)).value, 3)

    def test_without_identity(self):
        G = catalog_group('Q8')
        self.assertEqual(kappa_subset(G, [x for x in range(8) if not G.center_mask[x]]).value, 0)


def _slow_if_large(names):
    return [pytest.param(name, marks=pytest.mark.slow) if catalog_group(name).order > 100 else name for name in names]


@pytest.mark.parametrize('name', _slow_if_large(SMALL_CATALOG))
def test_engines_agree(name):
    G = catalog_group(name)
    result = kappa_auto(G, cross_check=True)
    assert result.engines_agreed, result.engines
    assert set(result.engines) == set(applicable_methods(G))


@pytest.mark.parametrize('name', _slow_if_large([name for name in SMALL_CATALOG if not catalog_group(name).is_abelian]))
def test_center_power_divides(name):
    G = catalog_group(name)
    assert kappa_auto(G).value % G.order ** (len(G.center) - 1) == 0


@pytest.mark.parametrize('name', _slow_if_large(SMALL_CATALOG))
def test_center_clique_bound(name):
    G = catalog_group(name)
    n, m = G.order, len(G.center)
    if G.is_abelian or m < 2 or n // m < 4:
        pytest.skip('bound needs a nontrivial center of index at least 4')
    t = n // m
    bound = n ** (m - 1) * m ** (n - m - 1) * 2 ** ((t - 1) * (m - 1))
    kappa = kappa_auto(G).value
    assert kappa >= bound
    if name == 'Q8':
        assert kappa == bound


def test_general_linear_four():
    G = catalog_group('GL2(4)')
    assert kappa_ac(G).factors == ((2, 84), (3, 230), (5, 68))


@pytest.mark.slow
def test_general_linear_four_matrix_tree():
    G = catalog_group('GL2(4)')
    assert run_engine(G, KappaMethod.MATRIX_TREE).value == 2 ** 84 * 3 ** 230 * 5 ** 68


@pytest.mark.slow
def test_l2_eight_modular():
    G = catalog_group('L2(8)')
    assert run_engine(G, KappaMethod.MODULAR_CRT).value == 2 ** 162 * 3 ** 392 * 7 ** 180
