import json
from io import StringIO

import pytest
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from cli.enums import ExitCode
from formulas.ledger import LedgerInstance
from formulas.scopes import family

FIXTURES = settings.BASE_DIR / 'fixtures'


def run(command, *args, **options) -> dict:
    out = StringIO()
    call_command(command, *args, stdout=out, **options)
    return json.loads(out.getvalue())


def fails(command, *args, **options) -> CommandError:
    with pytest.raises(CommandError) as excinfo:
        call_command(command, *args, stdout=StringIO(), **options)
    return excinfo.value


class TestGroupCommand:

    def test_char2_linear(self):
        data = run('group', family='L2', k=2)
        assert data['order'] == 60
        assert data['class_count'] == 5
        assert data['is_ac'] is True

    def test_quaternion(self):
        data = run('group', family='quaternion', k=2)
        assert data['order'] == 8
        assert data['center_size'] == 2

    def test_spec_file(self):
        data = run('group', str(FIXTURES / 'groups' / 'GL2_3.json'))
        assert data['name'] == 'GL2(3)'
        assert data['order'] == 48

    def test_bad_generator(self):
        error = fails('group', str(FIXTURES / 'groups' / 'bad_generator.json'))
        assert error.returncode == ExitCode.CONSTRUCTION_ERROR
        assert 'generators[1]' in str(error)

    def test_bad_params(self):
        assert fails('group', family='dihedral', k=1).returncode == ExitCode.CONSTRUCTION_ERROR

    def test_unknown_family(self):
        assert fails('group', family='dodecahedral', k=3).returncode == ExitCode.PARSE_ERROR

    def test_missing_spec(self):
        assert fails('group').returncode == ExitCode.PARSE_ERROR

    def test_unreadable_json(self, tmp_path):
        path = tmp_path / 'spec.json'
        path.write_text('{"family": ')
        assert fails('group', str(path)).returncode == ExitCode.PARSE_ERROR

    def test_spec_and_family(self):
        error = fails('group', str(FIXTURES / 'groups' / 'Q8.json'), family='dihedral', k=3)
        assert error.returncode == ExitCode.PARSE_ERROR

    def test_field_path_error(self, tmp_path):
        path = tmp_path / 'spec.json'
        path.write_text(json.dumps({'family': 'dihedral', 'params': {'k': 'five'}}))
        error = fails('group', str(path))
        assert error.returncode == ExitCode.PARSE_ERROR
        assert 'params.k' in str(error)


class TestKappaCommand:

    def test_dihedral(self):
        data = run('kappa', family='dihedral', k=5)
        assert data['value'] == '125'
        assert data['method'] == 'ac_structure'

    def test_cross_check(self):
        data = run('kappa', family='symmetric', d=3, cross_check=True)
        assert data['value'] == '3'
        assert data['engines_agreed'] is True
        assert set(data['engines']) >= {'matrix_tree', 'modular_crt', 'ac_structure', 'spectrum'}

    def test_explicit_method(self):
        data = run('kappa', family='quaternion', k=2, method='matrix')
        assert data['value'] == str(2 ** 11)
        assert data['method'] == 'matrix_tree'

    def test_inapplicable_method(self):
        assert fails('kappa', family='symmetric', d=4, method='ac').returncode == ExitCode.INAPPLICABLE
        assert fails('kappa', family='dihedral', k=5, method='cayley').returncode == ExitCode.INAPPLICABLE

    def test_dump_graph(self, tmp_path):
        path = tmp_path / 'S3.edges'
        run('kappa', str(FIXTURES / 'groups' / 'S3.json'), dump_graph=str(path))
        assert len(path.read_text().splitlines()) == 6

    def test_output_is_repeatable(self):
        first, second = StringIO(), StringIO()
        call_command('kappa', family='GL2', q=3, stdout=first)
        call_command('kappa', family='GL2', q=3, stdout=second)
        assert first.getvalue() == second.getvalue()

    @pytest.mark.slow
    def test_char2_eight_modular(self):
        data = run('kappa', family='L2', k=3, method='modular')
        assert data['value'] == str(2 ** 162 * 3 ** 392 * 7 ** 180)


class TestPartitionCommand:

    def test_find_quaternion(self):
        data = run('partition', family='quaternion', k=2, find='exact')
        assert data['result'] == 'found'
        assert data['certificate']['n'] == 2
        assert len(data['certificate']['A']) == 4

    def test_find_symmetric(self):
        data = run('partition', family='symmetric', d=3, find='exact')
        assert data['result'] == 'not_found'
        assert data['certificate'] is None

    def test_bound(self):
        assert run('partition', family='alternating', d=5, bound=True)['lower_bound'] == 11

    def test_verify_fixture(self):
        data = run(
            'partition', str(FIXTURES / 'groups' / 'Q8.json'), verify=str(FIXTURES / 'certificates' / 'Q8.json'),
        )
        assert data['ok'] is True
        assert data['n'] == 2
        assert data['kappa_lower_bound'] == '144'

    def test_verify_rejects(self, tmp_path):
        path = tmp_path / 'cert.json'
        path.write_text(json.dumps({'A': [0, 1, 2, 3], 'blocks': [[4, 5], [6, 7]]}))
        data = run('partition', str(FIXTURES / 'groups' / 'Q8.json'), verify=str(path))
        assert data['ok'] is False
        assert data['violation'] is not None
        assert 'kappa_lower_bound' not in data

    def test_verify_unparseable_certificate(self, tmp_path):
        path = tmp_path / 'cert.json'
        path.write_text(json.dumps({'A': 'all', 'blocks': []}))
        error = fails('partition', family='quaternion', k=2, verify=str(path))
        assert error.returncode == ExitCode.PARSE_ERROR

    def test_exact_cap(self):
        error = fails('partition', str(FIXTURES / 'groups' / 'GL2_3.json'), find='exact')
        assert error.returncode == ExitCode.INAPPLICABLE

    def test_abelian(self):
        assert fails('partition', family='cyclic', n=6, find='heuristic').returncode == ExitCode.INAPPLICABLE


@pytest.fixture
def small_scope(mocker):
    scope = [LedgerInstance('dihedral_odd', {'k': 5}, family('dihedral', k=5))]
    return mocker.patch('cli.management.commands.verify.get_scope', return_value=scope)


def test_verify_small_scope(small_scope):
    data = run('verify', omit_timings=True)
    small_scope.assert_called_once_with('default')
    assert data['summary'] == {'ok': 1}
    assert data['entries'][0]['verdict'] == 'match'
    assert 'ms' not in data['entries'][0]


def test_verify_unexpected_mismatch(mocker):
    scope = [LedgerInstance('dihedral_odd', {'k': 5}, family('dihedral', k=7))]
    mocker.patch('cli.management.commands.verify.get_scope', return_value=scope)
    out = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command('verify', stdout=out)
    assert excinfo.value.returncode == ExitCode.UNEXPECTED_MISMATCH
    entry = json.loads(out.getvalue())['entries'][0]
    assert entry['classification'] == 'unexpected-mismatch'
    assert entry['oracles'][0]['factors'] == [[7, 5]]


def test_verify_default_scope_is_repeatable():
    first = run('verify', omit_timings=True)
    second = run('verify', omit_timings=True)
    assert first == second
    assert len(first['entries']) >= 20
    assert 'unexpected-mismatch' not in first['summary']
    assert first['summary']['expected-mismatch'] == 4
