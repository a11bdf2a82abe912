import json

import pytest
from click.testing import CliRunner

import app.views.construct as construct_view
from app import create_cli
from app.errors import ConvergenceError
from app.utils.graph6 import graph6_decode
from app.utils.graph_engine import complete_multipartite_parts
from config import Config


@pytest.fixture
def cli():
    return create_cli()


@pytest.fixture
def runner():
    return CliRunner()


def _json_lines(result):
    return [json.loads(line) for line in result.stdout.splitlines() if line.startswith(('{', '['))]


def test_construct_y_graph(cli, runner):
    result = runner.invoke(cli, ['construct', 'y', '--n', '13', '--r', '3'])
    assert result.exit_code == 0
    assert graph6_decode(result.stdout.splitlines()[0]).n == 13
    summary = _json_lines(result)[0]
    assert summary['m'] == 53
    assert summary['omega'] == 3
    assert summary['chi'] == 4


def test_construct_turan(cli, runner):
    result = runner.invoke(cli, ['construct', 'turan', '--n', '5', '--r', '2'])
    assert result.exit_code == 0
    summary = _json_lines(result)[0]
    assert summary['lambda'] == pytest.approx(2.449489743, abs=1e-9)
    assert summary['q'] == pytest.approx(5.0)


def test_construct_sk_is_a_pentagon(cli, runner):
    result = runner.invoke(cli, ['construct', 'sk', '--a', '2', '--b', '2'])
    assert result.exit_code == 0
    summary = _json_lines(result)[0]
    assert (summary['n'], summary['m'], summary['omega'], summary['chi']) == (5, 5, 2, 3)
    assert summary['lambda'] == pytest.approx(2.0)
    assert summary['q'] == pytest.approx(4.0)


def test_construct_rejects_bad_parts(cli, runner):
    result = runner.invoke(cli, ['construct', 'multipartite', '--parts', '2,0'])
    assert result.exit_code == 2


def test_construct_domain_error(cli, runner):
    result = runner.invoke(cli, ['construct', 'y', '--n', '6', '--r', '3'])
    assert result.exit_code == 2


def test_spectrum_from_stdin(cli, runner):
    result = runner.invoke(cli, ['spectrum'], input='Dhc\n')
    assert result.exit_code == 0
    data = _json_lines(result)[0]
    assert data['graph'] == 'Dhc'
    assert data['objective'] == 'lambda'
    assert data['value'] == pytest.approx(2.0)

    result = runner.invoke(cli, ['spectrum', '--objective', 'q'], input='Dhc\nC~\n')
    values = [line['value'] for line in _json_lines(result)]
    assert values == pytest.approx([4.0, 6.0])


def test_spectrum_errors(cli, runner):
    assert runner.invoke(cli, ['spectrum'], input='D h\n').exit_code == 2
    assert runner.invoke(cli, ['spectrum', '--objective', 'p'], input='Dhc\n').exit_code == 2
    assert runner.invoke(cli, ['spectrum'], input='').exit_code == 2


def test_global_options_reach_the_config(cli, runner):
    result = runner.invoke(cli, ['--seed', '7', '--tol', '1e-9', '--jobs', '2', 'spectrum'], input='Dhc\n')
    assert result.exit_code == 0
    assert Config.RANDOM_SEED == 7
    assert Config.SOLVER_TOLERANCE == 1e-9
    assert Config.JOBS == 2
    assert runner.invoke(cli, ['--jobs', '0', 'spectrum'], input='Dhc\n').exit_code == 2


def test_charpoly_identities(cli, runner):
    result = runner.invoke(cli, ['charpoly', '--check-identities', '--max', '3'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1].startswith('identities: PASS')


def test_charpoly_of_a_graph(cli, runner):
    result = runner.invoke(cli, ['--format', 'json', 'charpoly'], input='Dhc\n')
    assert result.exit_code == 0
    data = _json_lines(result)[0]
    assert data['coefficients'] == [-2, 5, 0, -5, 0, 1]
    assert data['largest_root'] == pytest.approx(2.0)


def test_charpoly_family(cli, runner):
    result = runner.invoke(cli, ['charpoly', '--family', 'f', '--a', '2', '--b', '3'])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == 'F_{2,3}'
    assert runner.invoke(cli, ['charpoly', '--family', 'f', '--a', '2']).exit_code == 2


def test_symmetrize_pentagon(cli, runner):
    result = runner.invoke(cli, ['symmetrize'], input='Dhc\n')
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    records = _json_lines(result)
    summary = records[-1]
    assert summary['initial'] == 'Dhc'
    assert summary['monotone'] is True
    assert summary['steps'] == len(records) - 1
    assert set(records[0]) == {'op', 'vertices', 'lambda_before', 'lambda_after', 'step'}
    parts = complete_multipartite_parts(graph6_decode(lines[-1]))
    assert parts is not None and parts.r == 2


def test_symmetrize_needs_a_connected_graph(cli, runner):
    result = runner.invoke(cli, ['symmetrize'], input='C`\n')
    assert result.exit_code == 2


def test_verify_mantel(cli, runner):
    result = runner.invoke(cli, ['--format', 'json', '--log-level', 'ERROR', 'verify', '--theorem', 'mantel',
                                 '--n', '4-5'])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report['pass'] is True
    assert [row['n'] for row in report['rows']] == [4, 5]


def test_verify_csv(cli, runner):
    result = runner.invoke(cli, ['--format', 'csv', 'verify', '--theorem', 'lemma33', '--n', '5,7'])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 'theorem,n,r,param,found,expected,witnesses,unique,pass'
    assert len(lines) == 3


def test_verify_list(cli, runner):
    result = runner.invoke(cli, ['--format', 'json', 'verify', '--list'])
    assert result.exit_code == 0
    ids = [entry['id'] for entry in _json_lines(result)]
    assert 'main' in ids and 'mantel' in ids


def test_verify_usage_errors(cli, runner):
    assert runner.invoke(cli, ['verify', '--theorem', 'fermat']).exit_code == 2
    assert runner.invoke(cli, ['verify']).exit_code == 2
    assert runner.invoke(cli, ['verify', '--theorem', 'mantel', '--n', '7-5']).exit_code == 2


def test_construct_prints_nothing_when_the_solver_fails(cli, runner, monkeypatch):
    def fail(graph, *args, **kwargs):
        raise ConvergenceError('Power iteration did not converge', residual=1e-3, iterations=10)

    monkeypatch.setattr(construct_view, 'signless_laplacian_radius', fail)
    result = runner.invoke(cli, ['construct', 'sk', '--a', '2', '--b', '3'])
    assert result.exit_code == 3
    assert not [line for line in result.stdout.splitlines() if not line.startswith(('error:', '{'))]
    assert not [record for record in _json_lines(result) if 'lambda' in record]
