import numpy as np
import pytest
from hypothesis import given

from braidkit import (
    AbelianVector, BraidWord, IndexRangeError, NotPureError, PureLetter, PureWord,
    StrandMismatchError,
    a0, abelianize, comb, commutator, equal, expand, exponent_sum, format_pure,
    full_twist, generator, is_pure, linking_vector, standard_pairs, standardize,
)
from strategies import pure_braids, pure_words, random_pure_braid

# 500 个随机纯辫子的梳理比较耗时, 默认关闭.
CLOSE = True


class TestPureLetter:

    def test_normalize(self):
        letter = PureLetter(3, 1, -1)
        assert letter.pair == (1, 3)
        assert letter == PureLetter(1, 3, -1)
        assert ~letter == PureLetter(1, 3)
        assert str(letter) == 'A[1,3]^-1'

    @pytest.mark.parametrize('args, error', (
        [(2, 2), IndexRangeError],
        [(-1, 2), IndexRangeError],
        [(1, 2, 2), ValueError],
    ))
    def test_validate(self, args, error):
        with pytest.raises(error):
            PureLetter(*args)

    def test_word(self):
        with pytest.raises(IndexRangeError):
            PureWord(2, (PureLetter(1, 3),))
        with pytest.raises(StrandMismatchError):
            generator(1, 2, 2) * generator(1, 2, 3)
        w = generator(1, 2, 3) ** 2 * generator(0, 3, 3, -1)
        assert str(w) == 'A[1,2]^2 A[0,3]^-1'
        assert format_pure(PureWord(3)) == '1'
        assert (~w).letters == (PureLetter(0, 3), PureLetter(1, 2, -1), PureLetter(1, 2, -1))


class TestGenerators:

    def test_standard_pairs(self):
        assert standard_pairs(3) == [(1, 2), (1, 3), (2, 3)]
        assert standard_pairs(1) == []

    def test_a0(self):
        assert str(a0(1, 3)) == 'A[1,3]^-1 A[1,2]^-1'
        assert str(a0(3, 3)) == 'A[2,3]^-1 A[1,3]^-1'
        assert equal(expand(a0(2, 3)), ~expand(generator(1, 2, 3) * generator(2, 3, 3)))
        with pytest.raises(IndexRangeError):
            a0(4, 3)

    def test_full_twist(self):
        assert str(full_twist(2)) == 'A[1,2]'
        assert str(full_twist(3)) == 'A[1,2] A[1,3] A[2,3]'
        with pytest.raises(ValueError):
            full_twist(1)

    def test_standardize(self):
        w = PureWord(3, (PureLetter(0, 2), PureLetter(1, 2)))
        assert standardize(w).letters == a0(2, 3).letters + (PureLetter(1, 2),)
        assert standardize(~PureWord(3, (PureLetter(0, 2),))) == ~a0(2, 3)


class TestExpand:

    @pytest.mark.parametrize('w, expected', (
        [generator(1, 2, 3), (1, 1)],
        [generator(1, 3, 3), (2, 1, 1, -2)],
        [a0(2, 3), (-2, -2, -1, -1)],
        [generator(1, 4, 4, -1), (3, 2, -1, -1, -2, -3)],
        [generator(0, 2, 3), (-2, -2, -1, -1)],
    ))
    def test_expand(self, w, expected):
        assert expand(w).letters == expected

    @given(pure_words())
    def test_expand_is_pure(self, w):
        assert is_pure(expand(w))


class TestAbelianization:

    def test_abelianize(self):
        a, b = generator(1, 2, 3), generator(2, 3, 3)
        assert abelianize(commutator(a, b)).is_zero()
        assert abelianize(full_twist(3)).exponents.tolist() == [1, 1, 1]
        assert abelianize(a0(2, 3)).as_dict() == {'A[1,2]': -1, 'A[1,3]': 0, 'A[2,3]': -1}
        assert str(abelianize(full_twist(3))) == 'A[1,2]=1 A[1,3]=1 A[2,3]=1'

    @pytest.mark.parametrize('w, pair, expected', (
        [generator(1, 2, 3) ** 3 * generator(1, 3, 3, -1), (1, 2), 3],
        [a0(2, 3), (1, 3), 0],
        [full_twist(4), (2, 4), 1],
    ))
    def test_exponent_sum(self, w, pair, expected):
        assert exponent_sum(w, pair) == expected

    def test_vector(self):
        assert AbelianVector.index((2, 3), 4) == 3
        assert AbelianVector.index((3, 4), 4) == 5
        with pytest.raises(IndexRangeError):
            AbelianVector.index((2, 2), 4)
        with pytest.raises(ValueError):
            AbelianVector(3, [1, 2])

        v = AbelianVector(3, [1, 0, -1])
        assert v + v == AbelianVector(3, [2, 0, -2])
        assert v[1, 3] == 0
        assert v != AbelianVector(4)
        assert AbelianVector(4).is_zero()
        # 向量不可变, 因此不能作为字典的键也不能原地修改.
        with pytest.raises(TypeError):
            hash(v)
        with pytest.raises(ValueError):
            v.exponents[0] = 5

    def test_linking_vector(self):
        assert linking_vector(BraidWord(2, (1, 1))).exponents.tolist() == [1]
        assert linking_vector(expand(full_twist(3))).exponents.tolist() == [1, 1, 1]
        a, b = generator(1, 2, 3), generator(2, 3, 3)
        assert linking_vector(expand(commutator(a, b))).is_zero()
        with pytest.raises(NotPureError):
            linking_vector(BraidWord(3, (1,)))

    @given(pure_words())
    def test_linking_vector_agrees(self, w):
        assert linking_vector(expand(w)) == abelianize(w)


class TestComb:

    def test_known_values(self):
        assert comb(BraidWord(2, (1, 1))) == generator(1, 2, 2)
        assert comb(BraidWord(3, (2, 1, 1, -2))) == generator(1, 3, 3)
        u = BraidWord(3, (1, 1, 2, 2))
        assert equal(expand(comb(u)), expand(generator(1, 2, 3) * generator(2, 3, 3)))
        assert comb(BraidWord(4)) == PureWord(4)

    def test_not_pure(self):
        with pytest.raises(NotPureError):
            comb(BraidWord(3, (1, 2)))

    def test_blocks_are_ordered(self):
        # 结果依次是 A[i,2], A[i,3], ... 的块.
        w = comb(random_pure_braid(4, 12, np.random.default_rng(7)))
        columns = [letter.j for letter in w.letters]
        assert columns == sorted(columns)
        assert all(letter.i >= 1 for letter in w.letters)

    @given(pure_braids())
    def test_round_trip(self, u):
        w = comb(u)
        assert equal(expand(w), u)
        assert abelianize(w) == linking_vector(u)

    @pytest.mark.skipif(CLOSE, reason='500 个随机纯辫子的梳理比较耗时, 测试时要手动开启.')
    def test_round_trip_many(self):
        rng = np.random.default_rng(2020)
        for _ in range(500):
            n = int(rng.integers(2, 6))
            u = random_pure_braid(n, int(rng.integers(0, 25)), rng)
            w = comb(u)
            assert equal(expand(w), u), u
            assert abelianize(w) == linking_vector(u), u
