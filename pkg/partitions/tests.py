import pytest
from django.test import SimpleTestCase, override_settings

from commuting.graphs import commuting_graph
from commuting.independence import independence_number
from groups.catalog import SMALL_CATALOG, catalog_group
from groups.subgroups import subgroup_generated, sylow_subgroups
from partitions.bounds import coset_kappa_bound, lower_bound_blocks, partition_kappa_bound
from partitions.certificates import PartitionCertificate, certify, coset_partition, verify_partition
from partitions.classifiers import classify_2_abelian, classify_3_abelian, three_abelian_partition
from partitions.enums import SearchMode, SearchOutcome, ThreeAbelianCase, Violation
from partitions.exceptions import AbelianInput, CenterTooSmall, PartitionError
from partitions.frobenius import frobenius_empty_complement
from partitions.search import find_partition
from treecount.engines import kappa_auto
from treecount.exceptions import ExactCapExceeded


def indices(G, *labels):
    return [G.labels.index(label) for label in labels]


def sylow_certificate(G):
    """A is the first Sylow 5-subgroup; every other Sylow subgroup minus the identity is a block."""
    fives, threes, twos = (sylow_subgroups(G, p) for p in (5, 3, 2))
    blocks = [H.elements[1:] for H in fives[1:] + threes + twos]
    return certify(G, fives[0].elements, blocks)


class VerifyPartitionTestCase(SimpleTestCase):

    def setUp(self):
        self.Q8 = catalog_group('Q8')
        self.A = indices(self.Q8, '1', 'x', 'x^2', 'x^3')

    def test_quaternion(self):
        G = self.Q8
        cert = PartitionCertificate(A=self.A, blocks=(indices(G, 'y', 'x^2y'), indices(G, 'xy', 'x^3y')))
        report = verify_partition(G, cert)
        self.assertTrue(report)
        self.assertEqual(report.n, 2)
        self.assertIsNone(report.violation)

    def test_alternating_five_sylow_partition(self):
        G = catalog_group('A5')
        cert = sylow_certificate(G)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.n, 20)
        self.assertEqual(sorted(cert.block_sizes), [2] * 10 + [3] * 5 + [4] * 5)

    def test_symmetric_three_reflections(self):
        G = catalog_group('S3')
        A = subgroup_generated(G, indices(G, '(0 1 2)')).elements
        cert = PartitionCertificate(A=A, blocks=(indices(G, '(0 1)', '(0 2)'), indices(G, '(1 2)')))
        report = verify_partition(G, cert)
        self.assertFalse(report)
        self.assertEqual(report.violation, Violation.BLOCK_NOT_COMMUTING)

    def test_violations(self):
        G = self.Q8
        y, x2y, xy, x3y = indices(G, 'y', 'x^2y', 'xy', 'x^3y')
        cases = [
            (self.A, ([y, x2y], [xy, x3y, 8]), Violation.OUT_OF_RANGE),
            (self.A, ([y, x2y, 1], [xy, x3y]), Violation.OVERLAP),
            (self.A, ([y, x2y], [xy]), Violation.NON_COVER),
            (indices(G, '1', 'x'), ([y, x2y], [xy, x3y], indices(G, 'x^2', 'x^3')), Violation.A_NOT_ABELIAN_SUBGROUP),
            (self.A, ([y], [x2y], [xy, x3y]), Violation.BLOCK_TOO_SMALL),
        ]
        for A, blocks, violation in cases:
            report = verify_partition(G, PartitionCertificate(A=tuple(A), blocks=blocks))
            self.assertEqual(report.violation, violation, report.message)

    def test_single_block(self):
        report = verify_partition(catalog_group('Z4'), PartitionCertificate(A=(0,), blocks=((1, 2, 3),)))
        self.assertEqual(report.violation, Violation.TOO_FEW_BLOCKS)

    def test_nonabelian_subgroup_as_a(self):
        G = catalog_group('S4')
        A = subgroup_generated(G, indices(G, '(0 1)', '(0 1 2)')).elements
        rest = [x for x in range(G.order) if x not in A]
        report = verify_partition(G, PartitionCertificate(A=A, blocks=(rest[:9], rest[9:])))
        self.assertEqual(report.violation, Violation.A_NOT_ABELIAN_SUBGROUP)


class CosetPartitionTestCase(SimpleTestCase):

    def test_quaternion(self):
        G = catalog_group('Q8')
        cert = coset_partition(G)
        self.assertTrue(cert.verified)
        self.assertEqual(cert.A, G.center)
        self.assertEqual(cert.block_sizes, [2, 2, 2])

    def test_dihedral_twelve(self):
        cert = coset_partition(catalog_group('D12'))
        self.assertTrue(cert.verified)
        self.assertEqual(cert.n, 5)

    def test_centerless(self):
        with self.assertRaises(CenterTooSmall):
            coset_partition(catalog_group('S3'))

    def test_kappa_bounds(self):
        G = catalog_group('Q8')
        self.assertEqual(coset_kappa_bound(G), 27)
        self.assertEqual(partition_kappa_bound(coset_partition(G)), 27)
        self.assertLessEqual(coset_kappa_bound(G), kappa_auto(G).value)


class LowerBoundTestCase(SimpleTestCase):

    def test_alternating_five(self):
        self.assertEqual(lower_bound_blocks(catalog_group('A5')), 11)

    def test_general_linear(self):
        self.assertEqual(lower_bound_blocks(catalog_group('GL2(3)')), 5)

    def test_sylow_partition_is_tight_for_kappa(self):
        G = catalog_group('A5')
        self.assertEqual(partition_kappa_bound(sylow_certificate(G)), 2 ** 20 * 3 ** 10 * 5 ** 18)


@pytest.mark.slow
def test_special_linear_eight_lower_bound():
    assert lower_bound_blocks(catalog_group('L2(8)')) == 8 ** 2 - 8 - 1


class FindPartitionTestCase(SimpleTestCase):

    def test_quaternion_exact(self):
        G = catalog_group('Q8')
        result = find_partition(G, SearchMode.EXACT)
        self.assertEqual(result.outcome, SearchOutcome.FOUND)
        self.assertEqual(result.certificate.n, 2)
        self.assertEqual(len(result.certificate.A), 4)
        self.assertTrue(set(G.center) <= set(result.certificate.A))

    def test_symmetric_three_has_none(self):
        result = find_partition(catalog_group('S3'), SearchMode.EXACT)
        self.assertEqual(result.outcome, SearchOutcome.NOT_FOUND)
        self.assertIsNone(result.certificate)

    def test_dihedral_twelve_minimum(self):
        result = find_partition(catalog_group('D12'), SearchMode.EXACT)
        self.assertEqual(result.certificate.n, 3)

    def test_dihedral_odd_has_none(self):
        self.assertFalse(find_partition(catalog_group('D10'), SearchMode.EXACT).found)

    def test_order_twenty_four(self):
        result = find_partition(catalog_group('D8xZ3'), SearchMode.EXACT)
        self.assertEqual(result.certificate.n, 2)
        self.assertEqual(len(result.certificate.A), 12)

    def test_block_limit(self):
        result = find_partition(catalog_group('D12'), SearchMode.EXACT, n_max=2)
        self.assertEqual(result.outcome, SearchOutcome.NOT_FOUND)

    def test_cap(self):
        with self.assertRaises(ExactCapExceeded):
            find_partition(catalog_group('GL2(3)'), SearchMode.EXACT)

    @override_settings(PARTITION_EXACT_CAP=6)
    def test_cap_setting(self):
        with self.assertRaises(ExactCapExceeded) as ctx:
            find_partition(catalog_group('D8'), SearchMode.EXACT)
        self.assertEqual(ctx.exception.cap, 6)

    def test_abelian_input(self):
        with self.assertRaises(AbelianInput):
            find_partition(catalog_group('Z6'))

    def test_alternating_five_heuristic(self):
        result = find_partition(catalog_group('A5'), SearchMode.HEURISTIC, n_max=20)
        self.assertTrue(result.found)
        self.assertEqual(result.certificate.n, 20)
        self.assertEqual(len(result.certificate.A), 5)
        self.assertTrue(result.certificate.verified)

    def test_heuristic_inconclusive(self):
        result = find_partition(catalog_group('A5'), SearchMode.HEURISTIC, n_max=19)
        self.assertEqual(result.outcome, SearchOutcome.INCONCLUSIVE)
        self.assertIn('n=20', result.message)

    def test_quaternion_heuristic(self):
        self.assertEqual(find_partition(catalog_group('Q8'), SearchMode.HEURISTIC).certificate.n, 2)


class ClassifierTestCase(SimpleTestCase):

    def test_quaternion_two_abelian(self):
        witness = classify_2_abelian(catalog_group('Q8'))
        self.assertTrue(witness)
        self.assertEqual(witness.A.order, 4)
        self.assertEqual(witness.complement.order, 1)
        self.assertTrue(witness.certificate.verified)
        self.assertEqual(witness.certificate.n, 2)

    def test_direct_product_two_abelian(self):
        witness = classify_2_abelian(catalog_group('D8xZ3'))
        self.assertTrue(witness)
        self.assertEqual(witness.sylow.order, 8)
        self.assertEqual(witness.complement.order, 3)

    def test_dihedral_twelve_not_two_abelian(self):
        self.assertFalse(classify_2_abelian(catalog_group('D12')))

    def test_three_abelian_cases(self):
        for name, case in (('Q8', ThreeAbelianCase.KLEIN), ('D12', ThreeAbelianCase.SYMMETRIC),
                           ('Heis3', ThreeAbelianCase.ELEMENTARY_NINE), ('S3', None), ('D16', None)):
            self.assertEqual(classify_3_abelian(catalog_group(name)), case, name)

    def test_three_abelian_partitions(self):
        for name, a_order in (('Q8', 2), ('D12', 6), ('Heis3', 9), ('Q12', 6)):
            cert = three_abelian_partition(catalog_group(name))
            self.assertTrue(cert.verified, name)
            self.assertEqual(cert.n, 3, name)
            self.assertEqual(len(cert.A), a_order, name)

    def test_no_three_abelian_partition(self):
        with self.assertRaises(PartitionError):
            three_abelian_partition(catalog_group('A4'))

    def test_abelian_input(self):
        with self.assertRaises(AbelianInput):
            classify_2_abelian(catalog_group('V4'))
        with self.assertRaises(AbelianInput):
            classify_3_abelian(catalog_group('Z4'))


class FrobeniusTestCase(SimpleTestCase):

    def test_symmetric_three(self):
        found = frobenius_empty_complement(catalog_group('S3'))
        self.assertEqual(found.kernel.order, 3)
        self.assertEqual(found.kappa.value, 3)
        self.assertEqual(found.model, 'J(K1,U(K2,E3))')

    def test_dihedral_ten(self):
        G = catalog_group('D10')
        found = frobenius_empty_complement(G)
        self.assertEqual(found.kappa.value, 125)
        self.assertEqual(found.kappa.value, kappa_auto(G).value)

    def test_dihedral_fourteen(self):
        G = catalog_group('D14')
        found = frobenius_empty_complement(G)
        self.assertEqual(found.kappa.factors, ((7, 5),))
        self.assertEqual(found.kappa.value, kappa_auto(G).value)

    def test_no_empty_complement(self):
        for name in ('Q8', 'A4', 'Z7:Z3', 'D12'):
            self.assertIsNone(frobenius_empty_complement(catalog_group(name)), name)


SMALL_NONABELIAN = [
    name for name in SMALL_CATALOG if catalog_group(name).order <= 16 and not catalog_group(name).is_abelian
]


@pytest.mark.parametrize('name', SMALL_NONABELIAN)
def test_minimum_partition_matches_classifiers(name):
    G = catalog_group(name)
    result = find_partition(G, SearchMode.EXACT)
    n = result.certificate.n if result.found else None
    two = bool(classify_2_abelian(G))
    three = classify_3_abelian(G) is not None
    assert (n == 2) == two
    assert (n is not None and n <= 3) == (two or three)


@pytest.mark.parametrize('name', SMALL_NONABELIAN + ['D8xZ3', 'A5'])
def test_certificates_respect_bounds(name):
    G = catalog_group(name)
    mode = SearchMode.EXACT if G.order <= 24 else SearchMode.HEURISTIC
    result = find_partition(G, mode)
    if not result.found:
        return
    cert = result.certificate
    assert verify_partition(G, cert)
    assert cert.n >= lower_bound_blocks(G)
    assert independence_number(commuting_graph(G)).size <= cert.n + 1
    assert partition_kappa_bound(cert) <= kappa_auto(G).value


@pytest.mark.parametrize('name', ['Q8', 'D8', 'D8xZ3'])
def test_two_abelian_kappa(name):
    G = catalog_group(name)
    assert classify_2_abelian(G)
    m = len(G.center)
    assert kappa_auto(G).value == 2 ** (5 * m - 5) * m ** (4 * m - 2)
