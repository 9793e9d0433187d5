import pytest
from django.test import SimpleTestCase

from api.serializers import (
    GroupSpecSerializer, KappaResultSerializer, LedgerEntrySerializer, PartitionCertificateSerializer,
    PartitionSearchResultSerializer, error_paths,
)
from formulas.closed_forms import closed_form
from formulas.ledger import LedgerEntry, OracleValue
from groups.specs import group_from_spec
from partitions.certificates import PartitionCertificate
from partitions.enums import SearchMode, SearchOutcome
from partitions.search import PartitionSearchResult
from treecount.enums import KappaMethod
from treecount.results import KappaResult


def spec_errors(data) -> list[str]:
    serializer = GroupSpecSerializer(data=data)
    assert not serializer.is_valid()
    return error_paths(serializer.errors)


class GroupSpecSerializerTestCase(SimpleTestCase):

    def test_family(self):
        serializer = GroupSpecSerializer(data={'family': 'generalized_quaternion', 'params': {'k': 2}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['family'], 'quaternion')
        self.assertEqual(group_from_spec(serializer.validated_data).order, 8)

    def test_permutations(self):
        serializer = GroupSpecSerializer(data={'generators': [[[0, 1]], [[0, 1, 2]]], 'points': 3, 'name': 'S3'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        G = group_from_spec(serializer.validated_data)
        self.assertEqual((G.name, G.order), ('S3', 6))

    def test_matrices(self):
        data = {'generators': [[[1, 1], [0, 1]], [[0, 1], [1, 0]]], 'field': {'p': 3}}
        serializer = GroupSpecSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['field']['n'], 1)

    def test_direct_product(self):
        data = {
            'family': 'direct_product',
            'params': {
                'left': {'family': 'dihedral', 'params': {'k': 4}},
                'right': {'family': 'cyclic', 'params': {'n': 3}},
            },
        }
        serializer = GroupSpecSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(group_from_spec(serializer.validated_data).order, 24)

    def test_exactly_one_route(self):
        self.assertEqual(
            spec_errors({'family': 'dihedral', 'params': {'k': 3}, 'generators': [[[0, 1]]]}),
            ['Give exactly one of "family" or "generators".'],
        )
        self.assertEqual(spec_errors({}), ['Give exactly one of "family" or "generators".'])

    def test_generator_path(self):
        self.assertEqual(
            spec_errors({'generators': [[[0, 1]], 'x'], 'points': 3}),
            ['generators[1]: Expected a list of cycles or matrix rows.'],
        )
        self.assertEqual(
            spec_errors({'generators': [[[0, 1]], [[0, 1.5]]]}),
            ['generators[1]: Entries must be integers.'],
        )

    def test_param_path(self):
        self.assertEqual(spec_errors({'family': 'dihedral', 'params': {'k': '5'}}), ['params.k: Must be an integer.'])
        self.assertEqual(spec_errors({'family': 'dihedral', 'params': {'k': True}}), ['params.k: Must be an integer.'])

    def test_nested_param_path(self):
        data = {
            'family': 'direct_product',
            'params': {'left': {'family': 'dihedral', 'params': {'k': 'four'}}},
        }
        errors = spec_errors(data)
        self.assertIn('params.left.params.k: Must be an integer.', errors)
        self.assertIn('params.right: This field is required.', errors)

    def test_unknown_family(self):
        [error] = spec_errors({'family': 'dodecahedral', 'params': {}})
        self.assertTrue(error.startswith('family: '))
        self.assertIn('dodecahedral', error)

    def test_field_needs_generators(self):
        self.assertEqual(
            spec_errors({'family': 'GL2', 'params': {'q': 3}, 'field': {'p': 3}}),
            ['"field" and "points" only apply to generators.'],
        )
        self.assertEqual(
            spec_errors({'generators': [[[0, 1]]], 'field': {'p': 1}}),
            ['field.p: Ensure this value is greater than or equal to 2.'],
        )


class OutputSerializerTestCase(SimpleTestCase):

    def test_big_values_are_strings(self):
        result = KappaResult(
            value=2 ** 100, method=KappaMethod.MODULAR_CRT, factors=((2, 100),),
            engines={KappaMethod.MODULAR_CRT: 2 ** 100}, engines_agreed=True,
        )
        data = KappaResultSerializer(result).data
        self.assertEqual(data['value'], '1267650600228229401496703205376')
        self.assertEqual(data['method'], 'modular_crt')
        self.assertEqual(data['factors'], [[2, 100]])
        self.assertEqual(data['engines'], {'modular_crt': '1267650600228229401496703205376'})

    def test_unfactored_result(self):
        data = KappaResultSerializer(KappaResult(value=3, method=KappaMethod.MATRIX_TREE)).data
        self.assertIsNone(data['factors'])
        self.assertIsNone(data['engines_agreed'])
        self.assertEqual(data['notes'], [])

    def test_certificate_round_trip(self):
        serializer = PartitionCertificateSerializer(data={'A': [0, 1, 3, 6], 'blocks': [[2, 7], [4, 5]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        certificate = serializer.save()
        self.assertEqual(certificate, PartitionCertificate(A=(0, 1, 3, 6), blocks=((2, 7), (4, 5))))
        data = PartitionCertificateSerializer(certificate).data
        self.assertEqual(data['n'], 2)
        self.assertEqual(data['block_sizes'], [2, 2])
        self.assertFalse(data['verified'])

    def test_certificate_rejects_negative(self):
        serializer = PartitionCertificateSerializer(data={'A': [0, -1], 'blocks': [[2]]})
        self.assertFalse(serializer.is_valid())
        self.assertEqual(error_paths(serializer.errors), ['A[1]: Ensure this value is greater than or equal to 0.'])

    def test_search_result(self):
        result = PartitionSearchResult(outcome=SearchOutcome.NOT_FOUND, mode=SearchMode.EXACT, lower_bound=1)
        data = PartitionSearchResultSerializer(result).data
        self.assertEqual(data['result'], 'not_found')
        self.assertIsNone(data['certificate'])


@pytest.fixture
def ledger_entry():
    value = closed_form('dihedral_odd', {'k': 5})
    return LedgerEntry(
        formula='dihedral_odd', params={'k': 5}, group='D10', closed_form=value,
        oracles=(OracleValue(engine=KappaMethod.SPECTRUM, value=125, factors=((5, 3),)),),
        verdict='match', classification='ok', ms=1.5,
    )


def test_ledger_entry(ledger_entry):
    data = LedgerEntrySerializer(ledger_entry).data
    assert data['closed_form'] == {'formula': 'dihedral_odd', 'value': '125', 'factors': [[5, 3]]}
    assert data['oracles'] == [{'engine': 'spectrum', 'value': '125', 'factors': [[5, 3]]}]
    assert data['ms'] == 1.5


def test_ledger_entry_without_timing(ledger_entry):
    data = LedgerEntrySerializer([ledger_entry], many=True, context={'omit_timings': True}).data
    assert 'ms' not in data[0]
    assert data[0]['verdict'] == 'match'
