import pytest
from hypothesis import given

from braidkit import (
    BraidError, ParseError,
    a0, commutator, equal, evaluate, evaluate_pure, expand, full_twist, generator,
    is_trivial, parse,
)
from braidkit.expression import Commutator, Identity, Power, Product, Pure, Sigma, Twist
from strategies import braid_words, pure_words


class TestParse:

    def test_product(self):
        expr = parse('s1 s2^-1', 3)
        assert expr == Product((Sigma(1), Power(Sigma(2), -1)))
        assert evaluate(expr, 3).letters == (1, -2)
        assert parse('s1*s2^-1', 3) == expr

    def test_commutator(self):
        expr = parse('[A[1,2], A[2,3]]', 3)
        assert expr == Commutator(Pure(1, 2), Pure(2, 3))
        a, b = generator(1, 2, 3), generator(2, 3, 3)
        assert evaluate(expr, 3) == expand(commutator(a, b))
        assert evaluate_pure(expr, 3) == commutator(a, b)

    def test_derived_letter_and_twist(self):
        expr = parse('A[0,2] z^2', 3)
        assert expr == Product((Pure(0, 2), Power(Twist(), 2)))
        assert evaluate(expr, 3) == expand(a0(2, 3) * full_twist(3) ** 2)

    def test_identity(self):
        assert parse('1', 3) == Identity()
        assert evaluate(parse('1', 3), 3).letters == ()
        assert evaluate(parse('s1^0', 3), 3).letters == ()
        assert evaluate(parse('s1 1 s2', 3), 3).letters == (1, 2)

    def test_positions_are_ignored(self):
        assert parse('  s1', 3) == parse('s1', 3)


class TestEvaluate:

    def test_known_values(self):
        assert evaluate(parse('A[1,2]', 2), 2).letters == (1, 1)
        assert is_trivial(evaluate(parse('[s1,s1]', 3), 3))
        z = expand(full_twist(3))
        assert evaluate(parse('z^-2', 3), 3) == ~z * ~z

    def test_pure(self):
        assert evaluate_pure(parse('s1^2', 3), 3) is None
        assert evaluate_pure(parse('A[1,3]^-1 z', 3), 3) == generator(1, 3, 3, -1) * full_twist(3)
        assert evaluate_pure(parse('(A[1,2] A[2,3])^2', 3), 3) == (generator(1, 2, 3) * generator(2, 3, 3)) ** 2

    def test_braid_relation(self):
        assert equal(evaluate(parse('s1 s2 s1', 3), 3), evaluate(parse('s2 s1 s2', 3), 3))


class TestErrors:

    @pytest.mark.parametrize('text, n, position', (
        ['s3', 3, 0],
        ['s1 s4', 3, 3],
        ['s1 A[1,4]', 3, 3],
        ['A[2,2]', 3, 0],
        ['1 z', 1, 2],
    ))
    def test_index_range(self, text, n, position):
        with pytest.raises(ParseError) as e:
            parse(text, n)
        assert e.value.position == position

    @pytest.mark.parametrize('text', (
        '',
        's1 ^',
        '(s1',
        '[s1 s2]',
        's1 + s2',
        'x1',
    ))
    def test_syntax(self, text):
        with pytest.raises(ParseError) as e:
            parse(text, 3)
        assert 'syntax error' in str(e.value)

    def test_is_braid_error(self):
        with pytest.raises(BraidError):
            parse('s9', 3)
        with pytest.raises(ValueError):
            parse('s9', 3)


class TestRoundTrip:

    @pytest.mark.parametrize('text', (
        's1 s2^-1',
        '[A[1,2], A[2,3]]^2',
        '(s1 s2)^3 z',
        'A[0,2] z^2',
        '[s1, [s2, s1^-1]]',
        '(s1^2)^3',
        '(s1 s2^-1)^-2',
        '1',
    ))
    def test_str(self, text):
        expr = parse(text, 3)
        assert parse(str(expr), 3) == expr

    def test_nested_power(self):
        expr = Power(Power(Sigma(1), 2), 3)
        assert str(expr) == '(s1^2)^3'
        assert parse(str(expr), 3) == expr
        assert evaluate(expr, 3).letters == (1,) * 6

    @given(braid_words())
    def test_braid_word(self, u):
        assert evaluate(parse(str(u), u.strands), u.strands) == u

    @given(pure_words())
    def test_pure_word(self, w):
        assert evaluate_pure(parse(str(w), w.strands), w.strands) == w
