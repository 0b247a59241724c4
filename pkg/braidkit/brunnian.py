"""布伦辫的判定, 以及正规闭包 / 对称交换子群 / Brun_n / Bd_n 的随机取样.

取样只保证 "属于" 的方向: 每个样本按构造属于对应的子群.
"""
__all__ = (
    'SamplerParams',
    'in_z', 'is_brunnian', 'random_pure_word', 'sample_bd', 'sample_brun',
    'sample_bd_direct', 'sample_brun3_alt', 'sample_closure',
    'sample_symmetric_commutator',
)

import dataclasses
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .braid_core import BraidWord, is_pure
from .config import DEFAULT_LIMITS, Limits
from .errors import IndexRangeError, NotPureError, StrandMismatchError
from .maps import boundary_braid, commutator, conjugate, delete_strand
from .pure_braid import PureLetter, PureWord, a0, expand, generator, standard_pairs
from .word_oracle import is_trivial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SamplerParams:
    """取样参数.

    `seed`: 随机数种子, 相同的参数得到相同的样本.
    `max_conjugator_length`: 共轭元 (A 字) 的最大长度, 0 表示共轭元总是平凡的.
    `commutator_depth`: 每个样本中相乘的左正规交换子的个数.
    `factors_per_closure`: 正规闭包中每个元素最多由几个共轭相乘.
    """
    seed: int = 0
    max_conjugator_length: int = 4
    commutator_depth: int = 1
    factors_per_closure: int = 2

    def __post_init__(self):
        if self.max_conjugator_length < 0:
            raise ValueError('max_conjugator_length must not be negative')
        if self.commutator_depth < 1 or self.factors_per_closure < 1:
            raise ValueError('sampler bounds must be positive')

    def with_seed(self, seed: int) -> 'SamplerParams':
        return dataclasses.replace(self, seed=seed)


def is_brunnian(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> bool:
    """删去任意一股后都是平凡辫子."""
    if not is_pure(u):
        raise NotPureError('Brunnian braids are pure')
    if u.strands == 1:
        return True
    return all(is_trivial(delete_strand(u, k), limits) for k in range(1, u.strands + 1))


def in_z(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Z_n := Brun_n ∩ Ker(∂_n)."""
    if u.strands < 2:
        raise IndexRangeError('Z_n needs at least two strands')
    return is_brunnian(u, limits) and is_trivial(boundary_braid(u, limits), limits)


def random_pure_word(n: int, length: int, rng: np.random.Generator) -> PureWord:
    """均匀地从 A_{i,j}^{±1} 中取 `length` 个字母."""
    pairs = standard_pairs(n)
    letters = []
    for _ in range(length):
        i, j = pairs[int(rng.integers(len(pairs)))]
        letters.append(PureLetter(i, j, int(rng.choice((-1, 1)))))
    return PureWord(n, tuple(letters))


def _conjugator(n: int, params: SamplerParams, rng: np.random.Generator) -> BraidWord:
    # 长度服从几何分布, 再截断到上限.
    length = min(int(rng.geometric(0.5)) - 1, params.max_conjugator_length)
    return expand(random_pure_word(n, length, rng))


def _closure(g: PureWord, n: int, params: SamplerParams, rng: np.random.Generator) -> BraidWord:
    if g.strands != n:
        raise StrandMismatchError(g.strands, n)
    base = expand(g)
    count = int(rng.integers(1, params.factors_per_closure + 1))
    result = BraidWord.identity(n)
    for index in range(count):
        sign = 1 if index == 0 else int(rng.choice((-1, 1)))
        result *= conjugate(base if sign > 0 else ~base, _conjugator(n, params, rng))
    return result


def _symmetric_commutator(gens: Sequence[PureWord], n: int, params: SamplerParams,
                          rng: np.random.Generator) -> BraidWord:
    if len(gens) < 2:
        raise ValueError('a symmetric commutator needs at least two subgroups')
    result = BraidWord.identity(n)
    for _ in range(params.commutator_depth):
        order = rng.permutation(len(gens))
        closures = [_closure(gens[int(index)], n, params, rng) for index in order]
        # 左正规: [[[x_1, x_2], x_3], ..., x_m]
        result *= reduce(commutator, closures)
    return result


def sample_closure(g: PureWord, n: int, params: SamplerParams = SamplerParams()) -> BraidWord:
    """正规闭包 <<g>> 中的随机元素: 若干个 Ψ_β(g^{±1}) 的乘积, 第一个因子取 g."""
    return _closure(g, n, params, np.random.default_rng(params.seed))


def sample_symmetric_commutator(gens: Sequence[PureWord], n: int,
                                params: SamplerParams = SamplerParams()) -> BraidWord:
    """对称交换子群 [<<g_1>>, ..., <<g_m>>]_S 中的随机元素."""
    return _symmetric_commutator(gens, n, params, np.random.default_rng(params.seed))


def sample_brun(n: int, params: SamplerParams = SamplerParams()) -> BraidWord:
    """Brun_n = [<<A_{1,n}>>, ..., <<A_{n-1,n}>>]_S 中的随机元素."""
    if n < 3:
        raise IndexRangeError('sample_brun needs at least three strands')
    logger.debug('sample_brun: n=%s seed=%s', n, params.seed)
    gens = [generator(i, n, n) for i in range(1, n)]
    return sample_symmetric_commutator(gens, n, params)


def sample_bd(n: int, params: SamplerParams = SamplerParams(),
              limits: Limits = DEFAULT_LIMITS) -> BraidWord:
    """Bd_n := ∂_{n+1}(Brun_{n+1}) 中的随机元素."""
    if n < 2:
        raise IndexRangeError('sample_bd needs at least two strands')
    logger.debug('sample_bd: n=%s seed=%s', n, params.seed)
    return boundary_braid(sample_brun(n + 1, params), limits)


def sample_bd_direct(n: int, params: SamplerParams = SamplerParams()) -> BraidWord:
    """用 Bd_n = [<<A_{0,1}>>, ..., <<A_{0,n}>>]_S 直接取样."""
    return sample_symmetric_commutator([a0(j, n) for j in range(1, n + 1)], n, params)


def sample_brun3_alt(params: SamplerParams = SamplerParams()) -> BraidWord:
    """Brun_3 = [P_3, P_3], 随机纯辫子的交换子都是布伦辫."""
    rng = np.random.default_rng(params.seed)
    longest = max(1, params.max_conjugator_length)
    result = PureWord(3)
    for _ in range(params.commutator_depth):
        x = random_pure_word(3, int(rng.integers(1, longest + 1)), rng)
        y = random_pure_word(3, int(rng.integers(1, longest + 1)), rng)
        result *= commutator(x, y)
    return expand(result)
