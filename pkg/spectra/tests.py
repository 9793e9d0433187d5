import numpy as np
import pytest
from django.test import SimpleTestCase

from spectra.exceptions import ExpressionSyntaxError, SpectraError
from spectra.expressions import CliqueExpr, Complete, Empty, Join, Union, clique_model, copies, parse_expression, realize
from spectra.laplacian import (
    LapSpectrum, kappa_centerless, kappa_from_noncentral, kappa_from_spectrum, sigma_eval, spectrum,
)
from treecount.engines import kappa_matrix_tree


def random_expression(rng, budget, depth=0):
    if budget < 2 or depth > 3 or rng.random() < 0.35:
        s = int(rng.integers(1, min(budget, 6) + 1))
        return Complete(s) if rng.random() < 0.6 else Empty(s)
    left = random_expression(rng, int(rng.integers(1, budget)), depth + 1)
    right = random_expression(rng, budget - left.size, depth + 1)
    return Join(left, right) if rng.random() < 0.5 else Union((left, right))


def random_expressions(seed, count, budget):
    rng = np.random.default_rng(seed)
    return [random_expression(rng, int(rng.integers(1, budget + 1))) for _ in range(count)]


class ExpressionTestCase(SimpleTestCase):

    def test_parse(self):
        expr = parse_expression('J(K1, U(K2,E3))')
        self.assertEqual(expr, Join(Complete(1), Union((Complete(2), Empty(3)))))
        self.assertEqual(str(expr), 'J(K1,U(K2,E3))')
        self.assertEqual(expr.size, 6)

    def test_parse_round_trip(self):
        for text in ('K5', 'E1', 'U(K3,K3,K3)', 'J(J(K1,E2),U(K4,E1))'):
            self.assertEqual(str(parse_expression(text)), text)

    def test_syntax_errors(self):
        for text, position in (('K', 0), ('J(K1)', 0), ('U(K1,', 5), ('K2 K3', 2), ('K0', 0), ('X4', 0)):
            with self.assertRaises(ExpressionSyntaxError) as ctx:
                parse_expression(text)
            self.assertEqual(ctx.exception.position, position, text)

    def test_realize_join(self):
        graph = realize(parse_expression('J(K1,U(K2,E3))'))
        self.assertEqual(graph.size, 6)
        self.assertEqual(graph.edge_count, 5 + 1)
        self.assertEqual(graph.degrees.tolist(), [5, 2, 2, 1, 1, 1])

    def test_clique_model(self):
        self.assertEqual(clique_model(2, [(2, 3)]), Join(Complete(2), copies(Complete(2), 3)))
        self.assertEqual(clique_model(4, []), Complete(4))
        self.assertEqual(copies(Complete(3), 1), Complete(3))

    def test_empty_leaf_rejected(self):
        with self.assertRaises(SpectraError):
            Complete(0)

    def test_base_is_abstract(self):
        with self.assertRaises(TypeError):
            CliqueExpr()
        self.assertIsInstance(Join(Complete(1), Empty(2)), CliqueExpr)


class SpectrumTestCase(SimpleTestCase):

    def test_complete(self):
        s = spectrum(Complete(4))
        self.assertEqual(s.values(), [4, 4, 4, 0])
        self.assertEqual(str(s), '4^3 0^1')

    def test_join_with_star_center(self):
        s = spectrum(parse_expression('J(K1,U(K2,E3))'))
        self.assertEqual(s.values(), [6, 3, 1, 1, 1, 0])

    def test_center_joined_with_cliques(self):
        m, t = 2, 4
        n = m * t
        s = spectrum(Join(Complete(m), copies(Complete(m), t - 1)))
        self.assertEqual(s.multiplicity(n), m)
        self.assertEqual(s.multiplicity(2 * m), (t - 1) * (m - 1))
        self.assertEqual(s.multiplicity(m), t - 2)
        self.assertEqual(s.zero_multiplicity, 1)
        self.assertEqual(s.values(), [8, 8, 4, 4, 4, 2, 2, 0])

    def test_empty(self):
        self.assertEqual(spectrum(Empty(3)).values(), [0, 0, 0])


class KappaFromSpectrumTestCase(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(kappa_from_spectrum(LapSpectrum.from_values([4, 4, 4, 0])), 16)
        self.assertEqual(kappa_from_spectrum(LapSpectrum.from_values([6, 3, 1, 1, 1, 0])), 3)
        self.assertEqual(kappa_from_spectrum(LapSpectrum.from_values([8, 8, 4, 4, 4, 2, 2, 0])), 2048)

    def test_disconnected(self):
        self.assertEqual(kappa_from_spectrum(spectrum(Empty(2))), 0)

    def test_single_vertex(self):
        self.assertEqual(kappa_from_spectrum(spectrum(Complete(1))), 1)


class SigmaTestCase(SimpleTestCase):

    def test_complete_three(self):
        result = sigma_eval(spectrum(Complete(3)), 2)
        self.assertEqual(result.shifted_product, 5 * 5 * 2)
        self.assertEqual(result.value, -50)

    def test_m_one(self):
        result = sigma_eval(spectrum(Complete(2)), 1)
        self.assertEqual(result.shifted_product, 3)
        self.assertEqual(result.value, 3)

    def test_m_must_be_positive(self):
        with self.assertRaises(SpectraError):
            sigma_eval(spectrum(Complete(2)), 0)


class CenterlessTestCase(SimpleTestCase):

    def test_symmetric_three(self):
        self.assertEqual(kappa_centerless(spectrum(parse_expression('U(K2,E3)'))), 3)

    def test_alternating_five(self):
        delta = Union((copies(Complete(3), 5), copies(Complete(2), 10), copies(Complete(4), 6)))
        self.assertEqual(kappa_centerless(spectrum(delta)), 2 ** 20 * 3 ** 10 * 5 ** 18)

    def test_single_edge(self):
        self.assertEqual(kappa_centerless(spectrum(Complete(2))), 3)

    def test_noncentral_form(self):
        self.assertEqual(kappa_from_noncentral(spectrum(copies(Complete(2), 3)), 2), 2048)
        delta = parse_expression('U(K2,E3)')
        self.assertEqual(kappa_from_noncentral(spectrum(delta), 1), kappa_centerless(spectrum(delta)))
        self.assertEqual(kappa_from_noncentral(LapSpectrum(terms=()), 4), 16)


def test_spectrum_invariants():
    for expr in random_expressions(seed=1, count=1000, budget=40):
        s = spectrum(expr)
        graph = realize(expr)
        assert s.size == expr.size
        assert s.zero_multiplicity == len(graph.components)
        if isinstance(expr, Join):
            assert s.largest == expr.size
        for m in range(1, 8):
            assert sigma_eval(s, m).shifted_product % m == 0


def test_spectrum_agrees_with_matrix_tree():
    for expr in random_expressions(seed=2, count=1000, budget=40):
        assert kappa_from_spectrum(spectrum(expr)) == kappa_matrix_tree(realize(expr)).value, str(expr)


@pytest.mark.parametrize('m', [1, 2, 3, 4])
def test_universal_vertices_divide(m):
    for expr in random_expressions(seed=10 + m, count=250, budget=20):
        joined = Join(Complete(m), expr)
        assert kappa_from_spectrum(spectrum(joined)) % joined.size ** (m - 1) == 0
        assert kappa_from_spectrum(spectrum(joined)) == kappa_from_noncentral(spectrum(expr), m)
