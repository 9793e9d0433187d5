import numpy as np
import pytest
from django.test import SimpleTestCase

from algebra.carriers import Matrix, Perm
from algebra.fields import build_field
from groups.catalog import SMALL_CATALOG, catalog_group
from groups.exceptions import (
    BadParams, InvalidGenerator, InvalidGroupTable, OrderCapExceeded, UnknownFamily,
)
from groups.families import make_family
from groups.specs import group_from_spec
from groups.tables import check_associativity, generate_group, group_from_table


class GenerateGroupTestCase(SimpleTestCase):

    def test_symmetric_three(self):
        G = generate_group([Perm.from_cycles([(0, 1)], 3), Perm.from_cycles([(0, 1, 2)], 3)])
        self.assertEqual(G.order, 6)
        self.assertFalse(G.is_abelian)
        self.assertEqual(str(G.elements[0]), '()')

    def test_alternating_five(self):
        G = generate_group([Perm.from_cycles([(0, 1, 2, 3, 4)], 5), Perm.from_cycles([(0, 1, 2)], 5)])
        self.assertEqual(G.order, 60)

    def test_unit_transvections_over_gf4_stay_in_gf2(self):
        field = build_field(2, 2)
        transvections = [Matrix.from_rows(field, [[1, 1], [0, 1]]), Matrix.from_rows(field, [[1, 0], [1, 1]])]
        self.assertEqual(generate_group(transvections).order, 6)
        diagonal = Matrix.diagonal(field, [field.primitive_element, field.inverse(field.primitive_element)])
        self.assertEqual(generate_group([diagonal] + transvections).order, 60)

    def test_bfs_numbering(self):
        a, b = Perm.from_cycles([(0, 1)], 3), Perm.from_cycles([(0, 1, 2)], 3)
        G = generate_group([a, b])
        self.assertEqual(G.elements[1], a)
        self.assertEqual(G.elements[2], b)

    def test_order_cap(self):
        with self.assertRaises(OrderCapExceeded):
            make_family('symmetric', {'d': 5}, order_cap=100)

    def test_singular_generator_is_named(self):
        field = build_field(3, 1)
        generators = [Matrix.from_rows(field, [[1, 1], [0, 1]]), Matrix.from_rows(field, [[1, 2], [2, 1]])]
        with self.assertRaises(InvalidGenerator) as ctx:
            generate_group(generators)
        self.assertEqual(ctx.exception.index, 1)
        self.assertIn('generators[1]', str(ctx.exception))

    def test_mixed_carriers(self):
        with self.assertRaises(InvalidGenerator) as ctx:
            generate_group([Perm.identity(3), Perm.identity(4)])
        self.assertEqual(ctx.exception.index, 1)


class MakeFamilyTestCase(SimpleTestCase):

    def test_quaternion_eight(self):
        G = make_family('generalized_quaternion', {'k': 2})
        self.assertEqual(G.name, 'Q8')
        self.assertEqual(G.order, 8)
        self.assertEqual(sorted(G.element_orders.tolist()), [1, 2, 4, 4, 4, 4, 4, 4])

    def test_general_linear(self):
        self.assertEqual(make_family('GL2', {'q': 3}).order, 48)
        self.assertEqual(make_family('GL2', {'q': 2}).order, 6)
        self.assertEqual(make_family('GL3', {'q': 2}).order, 168)

    def test_orders(self):
        expected = {
            'S3': 6, 'D8': 8, 'D10': 10, 'Q12': 12, 'A4': 12, 'SD16': 16, 'Z7:Z3': 21, 'D8xZ3': 24,
            'S4': 24, 'Heis3': 27, 'M27': 27, 'A5': 60, 'GL2(4)': 180,
        }
        for name, order in expected.items():
            self.assertEqual(catalog_group(name).order, order, name)

    def test_bad_params(self):
        with self.assertRaises(BadParams):
            make_family('metacyclic', {'a': 7, 'b': 3, 'u': 3})
        with self.assertRaises(BadParams):
            make_family('dihedral', {'k': 2})
        with self.assertRaises(BadParams):
            make_family('GL2', {'q': 9})
        with self.assertRaises(BadParams):
            make_family('dihedral', {})
        with self.assertRaises(BadParams):
            make_family('dihedral', {'k': '5'})
        with self.assertRaises(UnknownFamily):
            make_family('sporadic', {'n': 1})

    def test_direct_product(self):
        G = make_family('direct_product', {
            'left': {'family': 'quaternion', 'params': {'k': 2}},
            'right': {'family': 'cyclic', 'params': {'n': 3}},
        })
        self.assertEqual(G.name, 'Q8xZ3')
        self.assertEqual(G.order, 24)
        self.assertEqual(len(G.center), 6)

    def test_group_from_spec(self):
        G = group_from_spec({'generators': [[[0, 1]], [[0, 1, 2]]], 'points': 3, 'name': 'S3'})
        self.assertEqual((G.name, G.order), ('S3', 6))
        G = group_from_spec({'generators': [[[1, 1], [0, 1]], [[0, 1], [1, 0]]], 'field': {'p': 3, 'n': 1}})
        self.assertEqual(G.order, 48)


@pytest.mark.slow
def test_l2_eight():
    G = make_family('L2', {'k': 3})
    assert G.order == 504


class TableValidationTestCase(SimpleTestCase):

    def test_not_a_latin_square(self):
        with self.assertRaises(InvalidGroupTable):
            group_from_table(np.array([[0, 1], [1, 1]]))

    def test_identity_must_be_first(self):
        with self.assertRaises(InvalidGroupTable):
            group_from_table(np.array([[1, 0], [0, 1]]))

    def test_non_associative_quasigroup(self):
        # a loop of order 5 that is not a group
        table = np.array([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])
        with self.assertRaises(InvalidGroupTable):
            check_associativity(table)


@pytest.mark.parametrize('name', SMALL_CATALOG)
def test_table_invariants(name):
    G = catalog_group(name)
    n = G.order
    indices = np.arange(n)
    assert np.array_equal(G.table[0], indices)
    assert np.array_equal(G.table[:, 0], indices)
    assert (np.sort(G.table, axis=1) == indices).all()
    assert (np.sort(G.table, axis=0) == indices[:, None]).all()
    assert (G.table[indices, G.inverses] == 0).all()
    assert (n % G.element_orders == 0).all()
