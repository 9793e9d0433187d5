from itertools import combinations

import numpy as np
import pytest
from django.test import SimpleTestCase, override_settings

from commuting.centralizers import (
    block_count, centralizer_blocks, centralizer_core, centralizer_core_abelian, centralizer_decomposition,
)
from commuting.exceptions import InvalidSubset, NotACGroup, NotMaximumWitness, TooLargeForExact
from commuting.graphs import SimpleGraph, commuting_graph, noncentral_graph, to_networkx, universal_vertices, write_edge_list
from commuting.independence import NoncommutingSet, greedy_independent_set, independence_number
from groups.catalog import SMALL_CATALOG, catalog_group
from groups.structure import is_ac_group


def complete_graph(n):
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


class CommutingGraphTestCase(SimpleTestCase):

    def test_abelian_group_is_complete(self):
        graph = commuting_graph(catalog_group('Z4'))
        self.assertEqual(graph.size, 4)
        self.assertEqual(graph.edge_count, 6)
        self.assertTrue(graph.is_clique(range(4)))

    def test_quaternion_noncentral_part(self):
        G = catalog_group('Q8')
        graph = noncentral_graph(G)
        self.assertEqual(graph.size, 6)
        self.assertEqual(graph.edge_count, 3)
        self.assertEqual([len(c) for c in graph.components], [2, 2, 2])
        self.assertFalse(graph.is_connected)

    def test_adjacency_matches_table(self):
        G = catalog_group('S4')
        graph = commuting_graph(G)
        for u, v in combinations(range(G.order), 2):
            commute = G.multiply(u, v) == G.multiply(v, u)
            self.assertEqual(bool(graph.matrix[u, v]), commute)
            self.assertEqual(bool(graph.bitsets[u] >> v & 1), commute)
        self.assertTrue(graph.is_connected)

    def test_subset(self):
        G = catalog_group('S3')
        graph = commuting_graph(G, [3, 0, 1])
        self.assertEqual(graph.vertices, (0, 1, 3))
        self.assertEqual(graph.position_of[3], 2)
        with self.assertRaises(InvalidSubset):
            commuting_graph(G, [0, 6])

    def test_alternating_five_blocks(self):
        G = catalog_group('A5')
        graph = noncentral_graph(G)
        sizes = sorted(len(c) for c in graph.components)
        self.assertEqual(sizes, [2] * 10 + [3] * 5 + [4] * 6)
        for component in graph.components:
            self.assertTrue(graph.is_clique(component))


class UniversalVerticesTestCase(SimpleTestCase):

    def test_quaternion(self):
        G = catalog_group('Q8')
        found = universal_vertices(commuting_graph(G))
        self.assertEqual([G.labels[x] for x in found], ['1', 'x^2'])

    def test_centerless(self):
        self.assertEqual(universal_vertices(commuting_graph(catalog_group('A5'))), (0,))

    def test_abelian(self):
        self.assertEqual(universal_vertices(commuting_graph(catalog_group('Z6'))), tuple(range(6)))


@pytest.mark.parametrize('name', SMALL_CATALOG)
def test_universal_vertices_are_the_center(name):
    G = catalog_group(name)
    assert universal_vertices(commuting_graph(G)) == G.center


class IndependenceNumberTestCase(SimpleTestCase):

    def test_symmetric_three(self):
        G = catalog_group('S3')
        witness = independence_number(commuting_graph(G))
        self.assertTrue(witness.is_maximum)
        self.assertEqual(witness.size, 4)
        labels = {G.labels[x] for x in witness.elements}
        self.assertTrue({'(0 1)', '(0 2)', '(1 2)'} <= labels)

    def test_quaternion(self):
        G = catalog_group('Q8')
        witness = independence_number(commuting_graph(G))
        self.assertEqual(witness.size, 3)
        for u, v in combinations(witness.elements, 2):
            self.assertFalse(G.commutes[u, v])

    def test_complete_graph(self):
        self.assertEqual(independence_number(complete_graph(7)).size, 1)

    def test_empty_graph(self):
        graph = SimpleGraph.from_edges(5, [])
        self.assertEqual(independence_number(graph).elements, (0, 1, 2, 3, 4))

    def test_alternating_five(self):
        self.assertEqual(independence_number(commuting_graph(catalog_group('A5'))).size, 21)

    @override_settings(INDEPENDENCE_EXACT_CAP=4)
    def test_above_cap(self):
        graph = commuting_graph(catalog_group('S3'))
        result = independence_number(graph)
        self.assertFalse(result.is_maximum)
        self.assertEqual(len(greedy_independent_set(graph)), result.size)
        with self.assertRaises(TooLargeForExact) as ctx:
            independence_number(graph, strict=True)
        self.assertEqual(ctx.exception.lower_bound, result)


def brute_force_independence(graph):
    best = 0
    for mask in range(1 << graph.size):
        if all(not graph.bitsets[i] & mask for i in range(graph.size) if mask >> i & 1):
            best = max(best, bin(mask).count('1'))
    return best


@pytest.mark.parametrize('seed', range(40))
def test_independence_matches_brute_force(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 13))
    density = rng.uniform(0.1, 0.9)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < density]
    graph = SimpleGraph.from_edges(n, edges)
    witness = independence_number(graph)
    assert witness.size == brute_force_independence(graph)
    assert all(not graph.matrix[u, v] for u, v in combinations(witness.elements, 2))


class CentralizerCoreTestCase(SimpleTestCase):

    def test_symmetric_three(self):
        G = catalog_group('S3')
        witness = independence_number(commuting_graph(G))
        self.assertTrue(centralizer_core_abelian(G, witness))
        self.assertEqual(centralizer_core(G, witness).order, 1)

    def test_quaternion(self):
        G = catalog_group('Q8')
        witness = independence_number(commuting_graph(G))
        self.assertTrue(centralizer_core_abelian(G, witness))
        self.assertEqual(centralizer_core(G, witness).elements, G.center)

    def test_requires_certified_witness(self):
        G = catalog_group('D10')
        with self.assertRaises(NotMaximumWitness):
            centralizer_core_abelian(G, NoncommutingSet(elements=(1, 2), is_maximum=False))
        with self.assertRaises(NotMaximumWitness):
            centralizer_core_abelian(G, NoncommutingSet(elements=(0, 1), is_maximum=True))


@pytest.mark.parametrize('name', [name for name in SMALL_CATALOG if catalog_group(name).order <= 60])
def test_noncommuting_set_properties(name):
    G = catalog_group(name)
    witness = independence_number(commuting_graph(G))
    assert centralizer_core_abelian(G, witness)
    assert G.order <= witness.size * len(G.conjugacy_classes)


class CentralizerDecompositionTestCase(SimpleTestCase):

    def test_quaternion(self):
        self.assertEqual(centralizer_decomposition(catalog_group('Q8')), [(2, 3)])

    def test_dihedral_ten(self):
        self.assertEqual(centralizer_decomposition(catalog_group('D10')), [(4, 1), (1, 5)])

    def test_alternating_five(self):
        self.assertEqual(centralizer_decomposition(catalog_group('A5')), [(4, 6), (3, 5), (2, 10)])

    def test_general_linear(self):
        G = catalog_group('GL2(3)')
        self.assertEqual(centralizer_decomposition(G), [(6, 3), (4, 4), (2, 6)])
        self.assertEqual(block_count(G), 13)

    def test_semidihedral_block_count(self):
        self.assertEqual(block_count(catalog_group('SD16')), 5)

    def test_abelian(self):
        self.assertEqual(centralizer_decomposition(catalog_group('Z6')), [])

    def test_not_ac(self):
        with self.assertRaises(NotACGroup):
            centralizer_decomposition(catalog_group('S4'))


@pytest.mark.parametrize('name', [name for name in SMALL_CATALOG if is_ac_group(catalog_group(name))])
def test_blocks_are_the_noncentral_cliques(name):
    G = catalog_group(name)
    blocks = centralizer_blocks(G)
    graph = noncentral_graph(G)
    components = sorted(tuple(graph.vertices[i] for i in c) for c in graph.components)
    assert sorted(blocks) == components
    assert sum(size * count for size, count in centralizer_decomposition(G)) == G.order - len(G.center)


@pytest.mark.slow
def test_l2_sixteen_decomposition():
    G = catalog_group('L2(16)')
    assert centralizer_decomposition(G) == [(16, 120), (15, 17), (14, 136)]


class ExportTestCase(SimpleTestCase):

    def test_networkx(self):
        G = catalog_group('Q8')
        exported = to_networkx(commuting_graph(G))
        self.assertEqual(exported.number_of_nodes(), 8)
        self.assertEqual(exported.number_of_edges(), 16)
        self.assertEqual(exported.nodes[0]['label'], '1')


def test_write_edge_list(tmp_path):
    path = tmp_path / 'edges.txt'
    write_edge_list(commuting_graph(catalog_group('S3')), path)
    lines = path.read_text().splitlines()
    assert len(lines) == 6
    assert lines[0] == '0 1'
    assert all(len(line.split()) == 2 for line in lines)
