import numpy as np
import pytest

from braidkit import (
    BraidWord, NotPureError, SamplerParams, StrandMismatchError,
    a0, abelianize, comb, commutator, delete_strand, expand, generator,
    in_z, is_brunnian, is_trivial, linking_vector, random_pure_word,
    sample_bd, sample_bd_direct, sample_brun, sample_brun3_alt, sample_closure,
    sample_symmetric_commutator,
)

# 数百个样本的检验比较耗时, 默认关闭.
CLOSE = True


@pytest.fixture
def bracket() -> BraidWord:
    return expand(commutator(generator(1, 2, 3), generator(2, 3, 3)))


class TestPredicates:

    def test_is_brunnian(self, bracket):
        assert is_brunnian(BraidWord(3))
        assert not is_brunnian(expand(generator(1, 2, 3)))
        assert is_brunnian(bracket)
        assert is_brunnian(BraidWord(1))
        with pytest.raises(NotPureError):
            is_brunnian(BraidWord(3, (1,)))

    def test_in_z(self, bracket):
        assert in_z(BraidWord(3))
        assert in_z(bracket)
        assert not in_z(expand(generator(1, 2, 3)))
        with pytest.raises(ValueError):
            in_z(BraidWord(1))


class TestSamplerParams:

    def test_validate(self):
        with pytest.raises(ValueError):
            SamplerParams(max_conjugator_length=-1)
        with pytest.raises(ValueError):
            SamplerParams(commutator_depth=0)
        with pytest.raises(ValueError):
            SamplerParams(factors_per_closure=0)

    def test_with_seed(self):
        params = SamplerParams(seed=1, max_conjugator_length=2)
        assert params.with_seed(5) == SamplerParams(seed=5, max_conjugator_length=2)


class TestSamplers:

    def test_random_pure_word(self):
        w = random_pure_word(4, 7, np.random.default_rng(0))
        assert len(w) == 7
        assert w.strands == 4

    def test_closure(self):
        g = generator(1, 3, 3)
        single = SamplerParams(max_conjugator_length=0, factors_per_closure=1)
        assert sample_closure(g, 3, single) == expand(g)
        for seed in range(5):
            x = sample_closure(g, 3, SamplerParams(seed=seed))
            assert is_trivial(delete_strand(x, 1))
            assert is_trivial(delete_strand(x, 3))
        with pytest.raises(StrandMismatchError):
            sample_closure(g, 4)

    def test_symmetric_commutator(self):
        a13, a23 = generator(1, 3, 3), generator(2, 3, 3)
        params = SamplerParams(max_conjugator_length=0, factors_per_closure=1)
        x = sample_symmetric_commutator([a13, a23], 3, params)
        # 排列只有两种, 对应 [A[1,3], A[2,3]] 或 [A[2,3], A[1,3]].
        assert x in (expand(commutator(a13, a23)), expand(commutator(a23, a13)))
        with pytest.raises(ValueError):
            sample_symmetric_commutator([a13], 3, params)

    def test_reproducible(self):
        params = SamplerParams(seed=11)
        assert sample_brun(3, params) == sample_brun(3, params)
        assert sample_bd(3, params) == sample_bd(3, params)

    def test_errors(self):
        with pytest.raises(ValueError):
            sample_brun(2)
        with pytest.raises(ValueError):
            sample_bd(1)

    @pytest.mark.parametrize('n', (3, 4))
    def test_brun(self, n):
        for seed in range(3):
            b = sample_brun(n, SamplerParams(seed=seed))
            assert is_brunnian(b), b
            assert linking_vector(b).is_zero()

    def test_bd(self):
        for seed in range(3):
            b = sample_bd(3, SamplerParams(seed=seed))
            assert b.strands == 3
            assert in_z(b), b
            assert abelianize(comb(b)).is_zero()
        assert in_z(sample_bd_direct(3, SamplerParams(seed=1)))

    def test_bd_of_trivial_sample(self):
        params = SamplerParams(max_conjugator_length=0, factors_per_closure=1)
        gens = [a0(j, 3) for j in range(1, 4)]
        x = sample_symmetric_commutator(gens, 3, params)
        assert in_z(x)

    def test_brun3_alt(self):
        for seed in range(3):
            x = sample_brun3_alt(SamplerParams(seed=seed))
            assert is_brunnian(x)
            assert in_z(x)

    def test_brun3_in_free_kernel(self):
        for seed in range(3):
            assert is_trivial(delete_strand(sample_brun(3, SamplerParams(seed=seed)), 2))

    @pytest.mark.skipif(CLOSE, reason='数百个样本的检验比较耗时, 测试时要手动开启.')
    @pytest.mark.parametrize('n', (3, 4))
    def test_brun_many(self, n):
        for seed in range(200):
            b = sample_brun(n, SamplerParams(seed=seed))
            assert is_brunnian(b), b
            assert linking_vector(b).is_zero()

    @pytest.mark.skipif(CLOSE, reason='数百个样本的检验比较耗时, 测试时要手动开启.')
    def test_bd_many(self):
        for seed in range(100):
            b = sample_bd(3, SamplerParams(seed=seed))
            assert in_z(b), b
