import numpy as np
import pytest
from django.test import SimpleTestCase

from groups.catalog import SMALL_CATALOG, catalog_group
from groups.exceptions import NotASubgroup, NotNormal, PDoesNotDivideOrder, TargetTooLarge, UnknownTarget
from groups.families import make_family
from groups.structure import center, centralizer, is_ac_group, maximal_divisors, profile
from groups.subgroups import (
    abelian_subgroups, is_isomorphic_small, is_ti_subgroup, make_subgroup, maximal_abelian_subgroups, normalizer,
    quotient, subgroup_generated, sylow_subgroups, whole_group,
)


class ProfileTestCase(SimpleTestCase):

    def test_alternating_five(self):
        result = profile(catalog_group('A5'))
        self.assertEqual(result.class_count, 5)
        self.assertEqual(result.center_size, 1)
        self.assertEqual(result.max_spectrum, (2, 3, 5))
        self.assertEqual(result.class_sizes, (1, 12, 15, 20))
        self.assertTrue(result.is_ac)

    def test_general_linear(self):
        self.assertEqual(profile(catalog_group('GL2(3)')).class_count, 8)

    def test_quaternion(self):
        result = profile(catalog_group('Q8'))
        self.assertEqual(result.center_size, 2)
        self.assertEqual(result.centralizer_count, 4)
        self.assertEqual(result.class_sizes, (1, 2))
        self.assertEqual(result.element_order_spectrum, (1, 2, 4))

    def test_maximal_divisors(self):
        self.assertEqual(maximal_divisors([1, 2, 3, 4, 6]), (4, 6))
        self.assertEqual(maximal_divisors([1]), (1,))


@pytest.mark.parametrize('name', SMALL_CATALOG)
def test_profile_invariants(name):
    G = catalog_group(name)
    n = G.order
    result = profile(G)
    Z = center(G)
    assert n % result.center_size == 0
    assert result.center_size * quotient(G, Z).order == n
    sizes = [len(c) for c in G.conjugacy_classes]
    assert sum(sizes) == n
    assert all(n % size == 0 for size in sizes)
    assert 1 in result.class_sizes
    assert result.class_count >= result.center_size
    spectrum = set(result.element_order_spectrum)
    assert all(d in spectrum for o in spectrum for d in range(1, o + 1) if o % d == 0)
    assert spectrum == {d for m in result.max_spectrum for d in range(1, m + 1) if m % d == 0}
    full = np.flatnonzero([centralizer(G, x).order == n for x in range(n)]).tolist()
    assert tuple(full) == G.center


class CentralizerTestCase(SimpleTestCase):

    def test_identity(self):
        G = catalog_group('S4')
        self.assertEqual(centralizer(G, 0).order, 24)

    def test_quaternion_unit(self):
        G = catalog_group('Q8')
        i = G.labels.index('x')
        C = centralizer(G, i)
        self.assertEqual(C.order, 4)
        self.assertIn(i, C)
        self.assertTrue(C.is_abelian)

    def test_dihedral_reflection(self):
        G = catalog_group('D10')
        C = centralizer(G, G.labels.index('y'))
        self.assertEqual(C.order, 2)

    def test_not_a_subgroup(self):
        G = catalog_group('S3')
        with self.assertRaises(NotASubgroup):
            make_subgroup(G, [0, 1, 2])
        with self.assertRaises(NotASubgroup):
            make_subgroup(G, [1])


class QuotientTestCase(SimpleTestCase):

    def test_quaternion_mod_center(self):
        G = catalog_group('Q8')
        Q = quotient(G, center(G))
        self.assertEqual(Q.order, 4)
        self.assertEqual(sorted(Q.element_orders.tolist()), [1, 2, 2, 2])
        self.assertTrue(is_isomorphic_small(Q, 'Z2xZ2'))

    def test_dihedral_twelve_mod_center(self):
        G = catalog_group('D12')
        Q = quotient(G, center(G))
        self.assertEqual(Q.order, 6)
        self.assertFalse(Q.is_abelian)
        self.assertTrue(is_isomorphic_small(Q, 'S3'))

    def test_trivial_quotient(self):
        G = catalog_group('A4')
        self.assertEqual(quotient(G, whole_group(G)).order, 1)

    def test_not_normal(self):
        G = catalog_group('S3')
        with self.assertRaises(NotNormal):
            quotient(G, subgroup_generated(G, [G.labels.index('(0 1)')]))


class SmallIsomorphismTestCase(SimpleTestCase):

    def test_targets(self):
        self.assertFalse(is_isomorphic_small(catalog_group('Z4'), 'Z2xZ2'))
        self.assertTrue(is_isomorphic_small(catalog_group('Z4'), 'Z4'))
        self.assertTrue(is_isomorphic_small(catalog_group('V4'), 'Z2xZ2'))
        self.assertTrue(is_isomorphic_small(catalog_group('Z6'), 'Z6'))
        self.assertFalse(is_isomorphic_small(catalog_group('S3'), 'Z6'))
        self.assertTrue(is_isomorphic_small(make_family('cyclic', {'n': 1}), 'trivial'))

    def test_heisenberg_mod_center(self):
        G = catalog_group('Heis3')
        self.assertTrue(is_isomorphic_small(quotient(G, center(G)), 'Z3xZ3'))
        self.assertFalse(is_isomorphic_small(quotient(G, center(G)), 'Z9'))

    def test_errors(self):
        with self.assertRaises(TargetTooLarge):
            is_isomorphic_small(catalog_group('Q16'), 'S3')
        with self.assertRaises(UnknownTarget):
            is_isomorphic_small(catalog_group('Z4'), 'Q8')


class SylowTestCase(SimpleTestCase):

    def test_alternating_five(self):
        G = catalog_group('A5')
        fives = sylow_subgroups(G, 5)
        self.assertEqual([P.order for P in fives], [5] * 6)
        self.assertEqual([P.order for P in sylow_subgroups(G, 3)], [3] * 10)
        twos = sylow_subgroups(G, 2)
        self.assertEqual([P.order for P in twos], [4] * 5)
        self.assertTrue(all(P.is_abelian and not P.is_normal for P in twos))

    def test_cyclic_twelve(self):
        subgroups = sylow_subgroups(catalog_group('Z12'), 2)
        self.assertEqual(len(subgroups), 1)
        self.assertEqual(subgroups[0].order, 4)
        self.assertTrue(subgroups[0].is_normal)

    def test_count_is_one_mod_p(self):
        G = catalog_group('S4')
        self.assertEqual(len(sylow_subgroups(G, 2)), 3)
        self.assertEqual(len(sylow_subgroups(G, 3)), 4)

    def test_p_must_divide_order(self):
        with self.assertRaises(PDoesNotDivideOrder):
            sylow_subgroups(catalog_group('A5'), 7)


class ACGroupTestCase(SimpleTestCase):

    def test_examples(self):
        self.assertTrue(is_ac_group(catalog_group('Q8')))
        self.assertFalse(is_ac_group(catalog_group('S4')))
        self.assertTrue(is_ac_group(catalog_group('A5')))
        self.assertTrue(is_ac_group(catalog_group('GL2(3)')))
        self.assertFalse(is_ac_group(catalog_group('L3(2)')))


class TISubgroupTestCase(SimpleTestCase):

    def test_sylow_two_of_l2_four(self):
        G = catalog_group('A5')
        P = sylow_subgroups(G, 2)[0]
        self.assertTrue(is_ti_subgroup(G, P))
        self.assertEqual(normalizer(G, P).order, 4 * 3)

    def test_center_is_ti(self):
        for name in ('Q8', 'D12', 'Heis3'):
            G = catalog_group(name)
            self.assertTrue(is_ti_subgroup(G, center(G)))

    def test_symmetric_four(self):
        G = catalog_group('S4')
        transposition = subgroup_generated(G, [G.labels.index('(0 1)')])
        self.assertTrue(is_ti_subgroup(G, transposition))
        self.assertFalse(is_ti_subgroup(G, sylow_subgroups(G, 2)[0]))


class AbelianSubgroupsTestCase(SimpleTestCase):

    def test_quaternion(self):
        G = catalog_group('Q8')
        orders = sorted(H.order for H in abelian_subgroups(G))
        self.assertEqual(orders, [1, 2, 4, 4, 4])

    def test_maximal_cover_of_alternating_five(self):
        G = catalog_group('A5')
        maximal = maximal_abelian_subgroups(G)
        self.assertEqual([H.order for H in maximal], [5] * 6 + [4] * 5 + [3] * 10)
        covered = set().union(*(H.elements for H in maximal))
        self.assertEqual(len(covered), 60)
