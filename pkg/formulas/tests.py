import pytest
from django.test import SimpleTestCase

from formulas.closed_forms import CLOSED_FORM_MAP, PRINTED_DISCREPANCIES, closed_form, corrected_value
from formulas.enums import Classification, Oracle, Verdict
from formulas.exceptions import ParamsOutOfRange, UnknownFormula
from formulas.ledger import (
    LedgerInstance, OracleValue, classify, has_unexpected_mismatch, verify_instance, verify_ledger,
)
from formulas.scopes import D12, DEFAULT_SCOPE, FULL_SCOPE, family
from treecount.engines import ac_terms
from treecount.enums import KappaMethod
from treecount.factors import evaluate, factor_product


def value(formula, **params):
    return closed_form(formula, params).value


def ac_value(n, m, decomposition):
    return evaluate(factor_product(ac_terms(n, m, decomposition)))


class ClosedFormTestCase(SimpleTestCase):

    def test_alternating_five(self):
        self.assertEqual(closed_form('L2_char2', {'q': 4}).factors, ((2, 20), (3, 10), (5, 18)))

    def test_semidihedral(self):
        self.assertEqual(closed_form('semidihedral', {'k': 4}).factors, ((2, 31),))

    def test_extraspecial(self):
        self.assertEqual(closed_form('extraspecial', {'p': 3}).factors, ((3, 49),))

    def test_general_linear(self):
        self.assertEqual(closed_form('GL2', {'q': 3}).factors, ((2, 85), (3, 13)))
        self.assertEqual(closed_form('GL2', {'q': 4}).factors, ((2, 84), (3, 230), (5, 68)))

    def test_table_values(self):
        self.assertEqual(value('dihedral_odd', k=5), 125)
        self.assertEqual(value('dihedral_odd', k=7), 7 ** 5)
        self.assertEqual(value('dihedral_even', k=4), 2048)
        self.assertEqual(value('dihedral_even', k=6), 2 ** 14 * 3 ** 4)
        self.assertEqual(value('quaternion', k=4), 2 ** 31)

    def test_counts_and_bounds(self):
        self.assertEqual(value('GL2_t', q=3), 13)
        self.assertEqual(value('L2_char2_t', k=2), 69)
        self.assertEqual(value('L2_char2_bound', q=8), 55)
        self.assertEqual(value('GL2_bound', q=3), 5)
        self.assertEqual(value('GL3_bound', q=2), 27)

    def test_out_of_range(self):
        cases = [
            ('dihedral_odd', {'k': 4}),
            ('dihedral_even', {'k': 5}),
            ('semidihedral', {'k': 3}),
            ('L2_char2', {'q': 6}),
            ('L2_char2', {'q': 2}),
            ('GL2', {'q': 2}),
            ('GL2', {'q': 6}),
            ('extraspecial', {'p': 4}),
            ('two_abelian', {'m': 1}),
            ('quaternion', {}),
            ('quaternion', {'k': 2, 'q': 3}),
            ('quaternion', {'k': True}),
        ]
        for formula, params in cases:
            with self.assertRaises(ParamsOutOfRange, msg=f'{formula} {params}'):
                closed_form(formula, params)

    def test_unknown(self):
        with self.assertRaises(UnknownFormula):
            closed_form('dihedral', {'k': 5})

    def test_factors_multiply_back(self):
        for formula, params in [(i.formula, i.params) for i in FULL_SCOPE]:
            result = closed_form(formula, params)
            self.assertEqual(evaluate(result.factors), result.value, formula)


class ConsistencyTestCase(SimpleTestCase):

    def test_pp_center_matches_two_abelian(self):
        for m in range(2, 12):
            self.assertEqual(value('pp_center', p=2, m=m), value('two_abelian', m=m))
            self.assertEqual(value('three_abelian_a', m=m), value('two_abelian', m=m))

    def test_pp_center_matches_three_abelian_b(self):
        for m in range(2, 8):
            self.assertEqual(value('pp_center', p=3, m=m), value('three_abelian_b', m=m))

    def test_extraspecial_chain(self):
        self.assertEqual(value('pp_center', p=3, m=3), value('extraspecial', p=3))
        self.assertEqual(value('pp_center', p=5, m=5), value('extraspecial', p=5))
        self.assertEqual(value('quaternion', k=2), value('two_abelian', m=2))
        self.assertEqual(value('two_abelian', m=2), 2 ** 11)

    def test_char2_forms_agree(self):
        for k in range(2, 7):
            self.assertEqual(value('L2_char2', q=2 ** k), value('L2_char2_k', k=k))

    def test_char2_centralizer_formula(self):
        for k in range(2, 6):
            q = 2 ** k
            blocks = [(q, (q - 1) * q // 2), (q - 1, q + 1), (q - 2, q * (q + 1) // 2)]
            self.assertEqual(value('L2_char2', q=q), ac_value(q * (q * q - 1), 1, blocks))
            self.assertEqual(sum(count for _, count in blocks), q * q + q + 1)

    def test_general_linear_centralizer_formula(self):
        for q in (3, 4, 5, 7, 8, 9):
            blocks = [(q * q - 3 * q + 2, q * (q + 1) // 2), (q * q - q, q * (q - 1) // 2), (q * q - 2 * q + 1, q + 1)]
            n = (q * q - 1) * (q * q - q)
            self.assertEqual(value('GL2', q=q), ac_value(n, q - 1, blocks), q)
            self.assertEqual(sum(count for _, count in blocks), value('GL2_t', q=q))

    def test_table_rows_match_centralizer_formula(self):
        for k in range(3, 21, 2):
            self.assertEqual(value('dihedral_odd', k=k), ac_value(2 * k, 1, [(k - 1, 1), (1, k)]))
        for k in range(4, 21, 2):
            self.assertEqual(value('dihedral_even', k=k), ac_value(2 * k, 2, [(k - 2, 1), (2, k // 2)]))
        for k in range(2, 12):
            self.assertEqual(value('quaternion', k=k), ac_value(4 * k, 2, [(2 * k - 2, 1), (2, k)]))
        for k in range(4, 9):
            n = 2 ** k
            self.assertEqual(value('semidihedral', k=k), ac_value(n, 2, [(n // 2 - 2, 1), (2, n // 4)]))
        for p in (2, 3, 5, 7):
            self.assertEqual(value('extraspecial', p=p), ac_value(p ** 3, p, [(p * p - p, p + 1)]))

    def test_symmetric_quotient_exponent(self):
        for m in range(2, 8):
            computed = ac_value(6 * m, m, [(2 * m, 1), (m, 3)])
            self.assertEqual(computed, 2 ** (4 * m - 4) * 3 ** (3 * m - 2) * m ** (6 * m - 2))
            self.assertEqual(value('three_abelian_c', m=m), computed * m)


class VerifyInstanceTestCase(SimpleTestCase):

    def test_match(self):
        entry = verify_instance(LedgerInstance('dihedral_odd', {'k': 5}, family('dihedral', k=5)))
        self.assertEqual(entry.verdict, Verdict.MATCH)
        self.assertEqual(entry.classification, Classification.OK)
        self.assertEqual(entry.group, 'D10')
        self.assertEqual(
            {oracle.engine: oracle.value for oracle in entry.oracles},
            {KappaMethod.AC_STRUCTURE: 125, KappaMethod.SPECTRUM: 125, KappaMethod.MATRIX_TREE: 125},
        )

    def test_symmetric_quotient_mismatch(self):
        entry = verify_instance(LedgerInstance('three_abelian_c', {'m': 2}, D12))
        self.assertEqual(entry.verdict, Verdict.MISMATCH)
        self.assertEqual(entry.classification, Classification.EXPECTED_MISMATCH)
        self.assertEqual(entry.closed_form.factors, ((2, 15), (3, 4)))
        for oracle in entry.oracles:
            self.assertEqual(oracle.value, 2 ** 14 * 3 ** 4)
            self.assertEqual(oracle.factors, ((2, 14), (3, 4)))

    def test_semidihedral_count(self):
        entry = verify_instance(LedgerInstance('semidihedral_t', {'k': 4}, family('semidihedral', k=4)))
        self.assertEqual(entry.classification, Classification.EXPECTED_MISMATCH)
        self.assertEqual(entry.closed_form.value, 9)
        self.assertEqual(entry.oracles[0].engine, Oracle.CENTRALIZER_COUNT)
        self.assertEqual(entry.oracles[0].value, 5)

    def test_char2_count(self):
        entry = verify_instance(LedgerInstance('L2_char2_t', {'k': 2}, family('L2', k=2)))
        self.assertEqual(entry.closed_form.value, 69)
        self.assertEqual(entry.oracles[0].value, 21)
        self.assertEqual(entry.classification, Classification.EXPECTED_MISMATCH)

    def test_unknown_formula(self):
        entry = verify_instance(LedgerInstance('dihedral', {'k': 5}, family('dihedral', k=5)))
        self.assertEqual(entry.verdict, Verdict.ERROR)
        self.assertEqual(entry.classification, Classification.UNEXPECTED_MISMATCH)
        self.assertIsNone(entry.closed_form)
        self.assertTrue(has_unexpected_mismatch([entry]))

    def test_bad_group(self):
        entry = verify_instance(LedgerInstance('dihedral_odd', {'k': 5}, family('dihedral', k=1)))
        self.assertEqual(entry.verdict, Verdict.ERROR)
        self.assertTrue(entry.notes)

    def test_oracle_unavailable(self):
        instance = LedgerInstance('dihedral_odd', {'k': 5}, family('dihedral', k=5), engines=(KappaMethod.CAYLEY,))
        entry = verify_instance(instance)
        self.assertEqual(entry.verdict, Verdict.ORACLE_UNAVAILABLE)
        self.assertEqual(entry.classification, Classification.UNVERIFIED)
        self.assertIn('cayley', entry.notes[0])


def test_runtime_is_recorded(mocker):
    mocker.patch('formulas.ledger.time.perf_counter', side_effect=[10.0, 10.25])
    entry = verify_instance(LedgerInstance('GL2_bound', {'q': 3}, family('GL2', q=3)))
    assert entry.ms == 250.0
    assert entry.verdict == Verdict.MATCH


def test_ledger_order_is_canonical():
    scope = [
        LedgerInstance('quaternion', {'k': 3}, family('quaternion', k=3)),
        LedgerInstance('dihedral_odd', {'k': 5}, family('dihedral', k=5)),
        LedgerInstance('dihedral_odd', {'k': 3}, family('dihedral', k=3)),
    ]
    entries = verify_ledger(scope)
    assert [(entry.formula, entry.params) for entry in entries] == [
        ('dihedral_odd', {'k': 3}), ('dihedral_odd', {'k': 5}), ('quaternion', {'k': 3}),
    ]


def test_parallel_ledger_matches_serial():
    scope = [instance for instance in DEFAULT_SCOPE if instance.formula.startswith('dihedral')]
    serial = verify_ledger(scope, workers=1)
    parallel = verify_ledger(scope, workers=2)
    assert [(e.formula, e.params, e.verdict, e.oracles) for e in serial] == \
        [(e.formula, e.params, e.verdict, e.oracles) for e in parallel]


def test_default_scope():
    entries = verify_ledger(DEFAULT_SCOPE)
    assert len(entries) >= 20
    assert not has_unexpected_mismatch(entries)
    expected = {entry.formula for entry in entries if entry.classification == Classification.EXPECTED_MISMATCH}
    assert expected == PRINTED_DISCREPANCIES
    assert all(
        entry.classification == Classification.OK for entry in entries if entry.formula not in PRINTED_DISCREPANCIES
    )


def test_scopes_cover_every_formula():
    assert {instance.formula for instance in FULL_SCOPE} == set(CLOSED_FORM_MAP)


@pytest.mark.slow
def test_char2_eight_by_modular_determinant():
    instance = next(i for i in FULL_SCOPE if i.formula == 'L2_char2' and i.params == {'q': 8})
    entry = verify_instance(instance)
    assert entry.verdict == Verdict.MATCH
    assert entry.closed_form.factors == ((2, 162), (3, 392), (7, 180))
    assert {oracle.engine for oracle in entry.oracles} == {KappaMethod.AC_STRUCTURE, KappaMethod.MODULAR_CRT}


class CorrectedValueTestCase(SimpleTestCase):

    def test_symmetric_quotient(self):
        for m in range(2, 8):
            self.assertEqual(corrected_value('three_abelian_c', {'m': m}) * m, value('three_abelian_c', m=m))

    def test_counts(self):
        self.assertEqual(corrected_value('semidihedral_t', {'k': 4}), 5)
        self.assertEqual(corrected_value('semidihedral_t', {'k': 5}), 9)
        self.assertEqual(corrected_value('L2_char2_t', {'k': 2}), 21)
        self.assertEqual(corrected_value('L2_char2_t', {'k': 3}), 73)

    def test_forms_without_correction(self):
        self.assertIsNone(corrected_value('dihedral_odd', {'k': 5}))

    def test_classify_checks_the_value(self):
        params = {'m': 2}
        right = [OracleValue(engine=KappaMethod.SPECTRUM, value=2 ** 14 * 3 ** 4)]
        wrong = [OracleValue(engine=KappaMethod.SPECTRUM, value=2 ** 14 * 3 ** 4 + 1)]
        self.assertEqual(classify('three_abelian_c', params, Verdict.MISMATCH, right), Classification.EXPECTED_MISMATCH)
        self.assertEqual(classify('three_abelian_c', params, Verdict.MISMATCH, wrong), Classification.UNEXPECTED_MISMATCH)
        self.assertEqual(
            classify('three_abelian_c', params, Verdict.MISMATCH, right + wrong), Classification.UNEXPECTED_MISMATCH,
        )
        self.assertEqual(classify('dihedral_odd', {'k': 5}, Verdict.MISMATCH, right), Classification.UNEXPECTED_MISMATCH)


def test_regression_behind_misprint_fails_the_ledger(mocker):
    corrupted = [OracleValue(engine=KappaMethod.AC_STRUCTURE, value=2 ** 13 * 3 ** 4)]
    mocker.patch('formulas.ledger.compute_oracles', return_value=corrupted)
    entries = verify_ledger([LedgerInstance('three_abelian_c', {'m': 2}, D12)], workers=1)
    assert entries[0].verdict == Verdict.MISMATCH
    assert entries[0].classification == Classification.UNEXPECTED_MISMATCH
    assert has_unexpected_mismatch(entries)


def test_wrong_block_count_behind_misprint_fails_the_ledger(mocker):
    mocker.patch('formulas.ledger.block_count', return_value=68)
    entry = verify_instance(LedgerInstance('L2_char2_t', {'k': 2}, family('L2', k=2)))
    assert entry.classification == Classification.UNEXPECTED_MISMATCH
