import json

import pytest

from braidkit.cli import main


def run(capsys, *argv) -> tuple:
    """返回 (退出码, 标准输出, 标准错误)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQueries:

    def test_equal(self, capsys):
        assert run(capsys, 'equal', '--n', '3', 's1 s2 s1', 's2 s1 s2')[:2] == (0, 'true\n')
        assert run(capsys, 'equal', '--n', '3', 's1', 's2')[:2] == (0, 'false\n')

    def test_brunnian(self, capsys):
        assert run(capsys, 'brunnian', '--n', '3', '[A[1,2],A[2,3]]')[:2] == (0, 'true\n')
        assert run(capsys, 'brunnian', '--n', '3', 'A[1,2]')[:2] == (0, 'false\n')

    def test_in_z(self, capsys):
        assert run(capsys, 'in-z', '--n', '3', '[A[1,2],A[2,3]]')[:2] == (0, 'true\n')

    @pytest.mark.parametrize('oracle', ('artin', 'dehornoy', 'both'))
    def test_trivial(self, capsys, oracle):
        code, out, _ = run(capsys, 'trivial', '--n', '3', '--oracle', oracle, 's1 s2 s1 (s2 s1 s2)^-1')
        assert (code, out) == (0, 'true\n')

    def test_eval(self, capsys):
        assert run(capsys, 'eval', '--n', '3', 'A[1,3] s1^0')[:2] == (0, 's2 s1^2 s2^-1\n')
        code, out, _ = run(capsys, 'eval', '--n', '2', 'A[1,2]', '--format', 'json')
        assert code == 0
        assert json.loads(out) == {
            'command': 'eval',
            'n': 2,
            'input': 'A[1,2]',
            'result': {'word': 's1^2', 'letters': [1, 1]},
        }

    def test_perm(self, capsys):
        assert run(capsys, 'perm', '--n', '3', 's1 s2')[:2] == (0, '1->3 2->1 3->2\n')

    def test_comb(self, capsys):
        assert run(capsys, 'comb', '--n', '2', 's1^2')[:2] == (0, 'A[1,2]\n')
        assert run(capsys, 'comb', '--n', '3', 's2 s1^2 s2^-1')[:2] == (0, 'A[1,3]\n')

    def test_abelianize(self, capsys):
        assert run(capsys, 'abelianize', '--n', '3', 'z')[:2] == (0, 'A[1,2]=1 A[1,3]=1 A[2,3]=1\n')
        # σ 字先梳理.
        assert run(capsys, 'abelianize', '--n', '2', 's1^-4')[:2] == (0, 'A[1,2]=-2\n')


class TestApply:

    @pytest.mark.parametrize('spec, expr, expected', (
        ['theta-inv', 'A[1,3]', 'A[2,3]^-1 A[1,3]^-1'],
        ['theta', 'A[2,3]', 'A[2,3]'],
        ['w', 'A[1,2]', 'A[1,2]'],
        ['chi', 's1 s2', 's1^-1 s2^-1'],
        ['d:2', 'A[1,3]', 's1^2'],
        ['conj:s2', 's1', 's2^-1 s1 s2'],
    ))
    def test_maps(self, capsys, spec, expr, expected):
        assert run(capsys, 'apply', '--n', '3', '--map', spec, expr)[:2] == (0, expected + '\n')

    def test_boundary(self, capsys):
        code, out, _ = run(capsys, 'apply', '--n', '3', '--map', 'del', 'A[0,2]', '--format', 'json')
        data = json.loads(out)
        assert code == 0
        assert data['result']['map'] == 'del'
        assert data['result']['strands'] == 2

    @pytest.mark.parametrize('spec', ('bogus', 'd:x', 'conj:'))
    def test_bad_map(self, capsys, spec):
        assert run(capsys, 'apply', '--n', '3', '--map', spec, 's1')[0] == 2


class TestSample:

    def test_reproducible(self, capsys):
        first = run(capsys, 'sample', '--n', '3', '--set', 'brun', '--seed', '4')
        second = run(capsys, 'sample', '--n', '3', '--set', 'brun', '--seed', '4')
        assert first == second
        assert first[0] == 0

    def test_closure(self, capsys):
        argv = ('sample', '--n', '3', '--set', 'closure:A[1,3]', '--max-conjugator-length', '0', '--factors', '1')
        assert run(capsys, *argv)[:2] == (0, 's2 s1^2 s2^-1\n')

    def test_bd(self, capsys):
        code, out, _ = run(capsys, 'sample', '--n', '3', '--set', 'bd', '--format', 'json')
        assert code == 0
        assert json.loads(out)['result']['seed'] == 0


class TestCheck:

    def test_json(self, capsys):
        code, out, _ = run(capsys, 'check', 'C15', '--n', '4', '--format', 'json')
        data = json.loads(out)
        assert code == 0
        assert data['total'] == 1
        assert data['reports'][0]['status'] == 'pass'

    def test_negative_control(self, capsys):
        code, out, _ = run(capsys, 'check', 'N11', '--n', '3')
        assert code == 1
        assert 'fail' in out
        assert out.rstrip().endswith('total 1, passed 0, failed 1, skipped 0')

    def test_skip_does_not_fail(self, capsys):
        code, out, _ = run(capsys, 'check', 'C11', '--n', '2..3')
        assert code == 0
        assert out.rstrip().endswith('total 2, passed 1, failed 0, skipped 1')

    @pytest.mark.parametrize('argv', (
        ('check', '--n', '3'),
        ('check', 'C99', '--n', '3'),
        ('check', 'C0', '--n', '5..3'),
        ('check', 'C0', '--n', 'three'),
    ))
    def test_usage(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestErrors:

    def test_missing_n(self, capsys):
        code, _, err = run(capsys, 'equal', 's1', 's1')
        assert code == 2
        assert '--n' in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, 'eval', '--n', '3', 's1 s4')
        assert code == 2
        assert 'position 3' in err

    @pytest.mark.parametrize('argv', (
        ('sample', '--set', 'brun', '--n', '2'),
        ('sample', '--set', 'bd', '--n', '1'),
        ('apply', '--map', 'w', '--n', '2', 'A[1,2]'),
        ('apply', '--map', 'theta', '--n', '1', '1'),
        ('in-z', '--n', '1', '1'),
    ))
    def test_too_few_strands(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert (code, out) == (2, '')
        assert 'strands' in err

    def test_unknown_command(self, capsys):
        assert run(capsys, 'frobnicate')[0] == 2

    def test_resource_limit(self, capsys):
        code, out, err = run(capsys, 'trivial', '--n', '3', '--max-free-len', '1', 's1 s2')
        assert (code, out) == (3, '')
        assert 'max_free_len' in err

    def test_help(self, capsys):
        code, out, _ = run(capsys, '--help')
        assert code == 0
        assert 'check' in out
