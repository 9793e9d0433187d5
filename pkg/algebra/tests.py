import itertools

import numpy as np
import pytest
from django.test import SimpleTestCase

from algebra.carriers import (
    Matrix, MetacyclicCarrier, Pair, Perm, PermutationCarrier, Word, element_compose, element_identity,
    element_inverse,
)
from algebra.exceptions import CarrierMismatch, InvalidElement, NonPrimeCharacteristic, UnsupportedSize
from algebra.fields import build_field, format_polynomial, is_irreducible_gf2, least_irreducible_gf2


class BuildFieldTestCase(SimpleTestCase):

    def test_prime_field(self):
        field = build_field(2, 1)
        self.assertEqual(field.order, 2)
        self.assertEqual(field.elements.tolist(), [0, 1])
        self.assertIsNone(field.modulus)

    def test_gf4_modulus(self):
        field = build_field(2, 2)
        self.assertEqual(field.modulus, 0b111)
        self.assertEqual(format_polynomial(field.modulus), 'x^2+x+1')

    def test_gf3_arithmetic(self):
        field = build_field(3, 1)
        self.assertEqual(field.multiply(2, 2), 1)
        self.assertEqual(field.add(2, 2), 1)
        self.assertEqual(field.negate(1), 2)

    def test_least_irreducible_moduli(self):
        self.assertEqual(least_irreducible_gf2(3), 0b1011)
        self.assertEqual(least_irreducible_gf2(4), 0b10011)
        self.assertEqual(build_field(2, 8).modulus, 0x11B)

    def test_irreducibility(self):
        self.assertTrue(is_irreducible_gf2(0b111))
        self.assertFalse(is_irreducible_gf2(0b101))  # (x+1)^2
        self.assertFalse(is_irreducible_gf2(0x103))  # x^8+x+1 has the factor x^2+x+1

    def test_construction_is_cached(self):
        self.assertIs(build_field(2, 4), build_field(2, 4))

    def test_errors(self):
        with self.assertRaises(NonPrimeCharacteristic):
            build_field(4, 1)
        with self.assertRaises(UnsupportedSize):
            build_field(3, 2)
        with self.assertRaises(UnsupportedSize):
            build_field(257, 1)
        with self.assertRaises(UnsupportedSize):
            build_field(2, 17)

    def test_zero_has_no_inverse(self):
        with self.assertRaises(ZeroDivisionError):
            build_field(5, 1).inverse(0)


@pytest.mark.parametrize('p,n', [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (2, 4), (2, 5), (251, 1), (2, 8)])
def test_field_axioms(p, n):
    field = build_field(p, n)
    q = field.order
    values = field.elements
    b, c = np.meshgrid(values, values, indexing='ij')

    nonzero = values[1:]
    inverses = np.array([field.inverse(int(a)) for a in nonzero])
    assert (field.multiply_array(nonzero, inverses) == 1).all()

    for a in range(q):
        left = field.multiply_array(a, field.add_array(b, c))
        right = field.add_array(field.multiply_array(a, b), field.multiply_array(a, c))
        assert np.array_equal(left, right)

    products = field.multiply_array(b, c)
    assert np.array_equal(products, products.T)
    assert ((products == 0) == ((b == 0) | (c == 0))).all()


class PermTestCase(SimpleTestCase):

    def setUp(self) -> None:
        self.transposition = Perm.from_cycles([(0, 1)], 3)
        self.rotation = Perm.from_cycles([(0, 1, 2)], 3)

    def test_compose_is_noncommutative(self):
        self.assertNotEqual(
            element_compose(self.transposition, self.rotation),
            element_compose(self.rotation, self.transposition),
        )

    def test_left_factor_applies_first(self):
        product = self.transposition.compose(self.rotation)
        # 0 -> 1 under (0 1), then 1 -> 2 under (0 1 2)
        self.assertEqual(product.images[0], 2)

    def test_inverse_and_identity(self):
        identity = element_identity(PermutationCarrier(3))
        self.assertEqual(self.rotation.compose(element_inverse(self.rotation)), identity)
        self.assertEqual(identity.compose(self.rotation), self.rotation)
        self.assertEqual(str(identity), '()')
        self.assertEqual(str(self.rotation), '(0 1 2)')

    def test_invalid(self):
        with self.assertRaises(InvalidElement):
            Perm((0, 0, 1))
        with self.assertRaises(InvalidElement):
            Perm.from_cycles([(0, 3)], 3)
        with self.assertRaises(InvalidElement):
            Perm.from_cycles([(0, 1), (1, 2)], 3)

    def test_carrier_mismatch(self):
        with self.assertRaises(CarrierMismatch):
            element_compose(self.rotation, Perm.identity(4))
        with self.assertRaises(CarrierMismatch):
            element_compose(self.rotation, Matrix.identity(build_field(2, 1), 2))


class MatrixTestCase(SimpleTestCase):

    def test_involution_in_characteristic_two(self):
        field = build_field(2, 1)
        m = Matrix.from_rows(field, [[1, 1], [0, 1]])
        self.assertEqual(m.inverse(), m)

    def test_inverse_law(self):
        field = build_field(2, 2)
        m = Matrix.from_rows(field, [[2, 1], [3, 3]])
        self.assertEqual(m.compose(m.inverse()), Matrix.identity(field, 2))
        self.assertEqual(m.inverse().compose(m), Matrix.identity(field, 2))

    def test_three_by_three(self):
        field = build_field(5, 1)
        m = Matrix.from_rows(field, [[1, 2, 0], [0, 1, 4], [3, 0, 2]])
        self.assertEqual(m.compose(m.inverse()), Matrix.identity(field, 3))

    def test_singular(self):
        field = build_field(3, 1)
        m = Matrix.from_rows(field, [[1, 2], [2, 1]])
        self.assertEqual(m.determinant(), 0)
        with self.assertRaises(InvalidElement):
            m.inverse()

    def test_entries_must_lie_in_field(self):
        with self.assertRaises(InvalidElement):
            Matrix.from_rows(build_field(3, 1), [[1, 3], [0, 1]])

    def test_mismatched_fields(self):
        a = Matrix.identity(build_field(2, 1), 2)
        b = Matrix.identity(build_field(2, 2), 2)
        with self.assertRaises(CarrierMismatch):
            a.compose(b)


def _all_matrices(field):
    for entries in itertools.product(range(field.order), repeat=4):
        yield Matrix(field, 2, entries)


@pytest.mark.parametrize('p,n', [(2, 1), (3, 1), (2, 2)])
def test_adjugate_inverse_matches_search_exhaustively(p, n):
    field = build_field(p, n)
    identity = Matrix.identity(field, 2)
    candidates = list(_all_matrices(field))
    for m in candidates:
        if m.determinant() == 0:
            continue
        found = [c for c in candidates if m.compose(c) == identity]
        assert found == [m.inverse()]


@pytest.mark.parametrize('p,n', [(5, 1), (7, 1), (2, 3)])
def test_adjugate_inverse_matches_search_sampled(p, n):
    field = build_field(p, n)
    identity = Matrix.identity(field, 2)
    rng = np.random.default_rng(7)
    candidates = list(_all_matrices(field))
    checked = 0
    while checked < 5:
        m = Matrix(field, 2, tuple(int(v) for v in rng.integers(0, field.order, size=4)))
        if m.determinant() == 0:
            continue
        assert [c for c in candidates if m.compose(c) == identity] == [m.inverse()]
        checked += 1


class MetacyclicTestCase(SimpleTestCase):

    def setUp(self) -> None:
        self.q8 = MetacyclicCarrier(4, 2, 3, 2)
        self.x, self.y = self.q8.generators()

    def _power(self, w, k):
        result = self.q8.identity()
        for _ in range(k):
            result = result.compose(w)
        return result

    def test_quaternion_relations(self):
        self.assertEqual(self._power(self.x, 4), self.q8.identity())
        self.assertEqual(self._power(self.y, 2), self._power(self.x, 2))
        conjugate = self.y.compose(self.x).compose(self.y.inverse())
        self.assertEqual(conjugate, self.x.inverse())

    def test_inverse_law(self):
        for carrier in (self.q8, MetacyclicCarrier(7, 3, 2), MetacyclicCarrier(8, 2, 3)):
            for i in range(carrier.a):
                for j in range(carrier.b):
                    w = Word(carrier, i, j)
                    self.assertEqual(w.compose(w.inverse()), carrier.identity())

    def test_inconsistent_presentation(self):
        with self.assertRaises(InvalidElement):
            MetacyclicCarrier(7, 3, 3)

    def test_labels(self):
        self.assertEqual(str(self.q8.identity()), '1')
        self.assertEqual(str(self.x.compose(self.y)), 'xy')
        self.assertEqual(str(Word(self.q8, 2, 1)), 'x^2y')


def _carrier_samples():
    f4 = build_field(2, 2)
    perms = [Perm.from_cycles([(0, 1)], 4), Perm.from_cycles([(0, 1, 2, 3)], 4), Perm.from_cycles([(1, 2, 3)], 4)]
    matrices = [
        Matrix.from_rows(f4, [[2, 0], [0, 3]]), Matrix.from_rows(f4, [[1, 1], [0, 1]]),
        Matrix.from_rows(f4, [[1, 0], [1, 1]]),
    ]
    carrier = MetacyclicCarrier(8, 2, 3)
    words = [Word(carrier, 1, 0), Word(carrier, 0, 1), Word(carrier, 5, 1)]
    pairs = [Pair(p, w) for p, w in zip(perms, words)]
    return [perms, matrices, words, pairs]


@pytest.mark.parametrize('elements', _carrier_samples())
def test_carrier_laws(elements):
    carrier = elements[0].carrier
    identity = carrier.identity()
    for a, b, c in itertools.product(elements, repeat=3):
        assert a.compose(b.compose(c)) == a.compose(b).compose(c)
    for a in elements:
        assert identity.compose(a) == a
        assert a.compose(identity) == a
        assert a.compose(a.inverse()) == identity


@pytest.mark.parametrize('elements', _carrier_samples())
def test_batch_multiplication_matches_compose(elements):
    carrier = elements[0].carrier
    array = carrier.to_array(elements)
    for a in elements:
        batch = carrier.codes(carrier.left_multiply(a, array))
        expected = carrier.codes(carrier.to_array([a.compose(x) for x in elements]))
        assert np.array_equal(batch, expected)
