__all__ = (
    'AbelianVector', 'PureLetter', 'PureWord',
    'a0', 'abelianize', 'comb', 'expand', 'exponent_sum', 'format_pure',
    'full_twist', 'generator', 'linking_vector', 'standard_pairs', 'standardize',
)

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .braid_core import BraidWord, format_letters, free_cancel, is_pure, reduce_letters
from .config import DEFAULT_LIMITS, Limits
from .errors import IndexRangeError, NotPureError, ResourceLimitError, StrandMismatchError
from .word_oracle import inverse, join

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class PureLetter:
    """A_{i,j}^{sign}, i = 0 表示派生字母 A_{0,j}.

    构造时规范化: A_{j,i} 存为 A_{i,j}, A_{i,i} 不存在.
    """
    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if self.i == self.j:
            raise IndexRangeError(f'A[{self.i},{self.i}] is the trivial letter')
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, 'i', i)
            object.__setattr__(self, 'j', j)
        if self.i < 0:
            raise IndexRangeError(f'negative index in A[{self.i},{self.j}]')
        if self.sign not in (1, -1):
            raise ValueError(f'sign must be 1 or -1, got {self.sign}')

    @property
    def pair(self) -> Pair:
        return self.i, self.j

    def __invert__(self) -> 'PureLetter':
        return PureLetter(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        return f'A[{self.i},{self.j}]' + ('' if self.sign == 1 else '^-1')


@dataclass(frozen=True)
class PureWord:
    """纯辫子群 P_n 中 A_{i,j} 字母组成的字."""
    strands: int
    letters: Tuple[PureLetter, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if letter.j > self.strands:
                raise IndexRangeError(f'{letter} out of range for n={self.strands}')
        object.__setattr__(self, 'letters', letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return True

    def __mul__(self, other: 'PureWord') -> 'PureWord':
        if self.strands != other.strands:
            raise StrandMismatchError(self.strands, other.strands)
        return PureWord(self.strands, self.letters + other.letters)

    def __invert__(self) -> 'PureWord':
        return PureWord(self.strands, tuple(~letter for letter in reversed(self.letters)))

    def __pow__(self, exponent: int) -> 'PureWord':
        base = self if exponent >= 0 else ~self
        return PureWord(self.strands, base.letters * abs(exponent))

    def __str__(self) -> str:
        return format_pure(self)

    def __repr__(self) -> str:
        return f'<PureWord n={self.strands} word={format_pure(self)!r}>'


class AbelianVector:
    """P_n 阿贝尔化的像, 按 (1,2), (1,3), ..., (2,3), ... 的顺序存放指数和."""

    def __init__(self, strands: int, exponents=None):
        self.strands = strands
        size = strands * (strands - 1) // 2
        if exponents is None:
            exponents = np.zeros(size, dtype=np.int64)
        exponents = np.asarray(exponents, dtype=np.int64)
        if exponents.shape != (size,):
            raise ValueError(f'expected {size} exponents, got {exponents.shape}')
        exponents.flags.writeable = False
        self.exponents = exponents

    @staticmethod
    def index(pair: Pair, n: int) -> int:
        i, j = pair
        if not 1 <= i < j <= n:
            raise IndexRangeError(f'({i},{j}) is not a standard pair for n={n}')
        # 第 i 行之前共有 (i-1)(2n-i)/2 个元素.
        return (i - 1) * (2 * n - i) // 2 + (j - i - 1)

    def __getitem__(self, pair: Pair) -> int:
        return int(self.exponents[self.index(pair, self.strands)])

    def __add__(self, other: 'AbelianVector') -> 'AbelianVector':
        if self.strands != other.strands:
            raise StrandMismatchError(self.strands, other.strands)
        return AbelianVector(self.strands, self.exponents + other.exponents)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianVector):
            return NotImplemented
        return self.strands == other.strands and np.array_equal(self.exponents, other.exponents)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.exponents.any()

    def as_dict(self) -> Dict[str, int]:
        return {f'A[{i},{j}]': int(value)
                for (i, j), value in zip(standard_pairs(self.strands), self.exponents)}

    def __repr__(self) -> str:
        return f'<AbelianVector n={self.strands} exponents={self.exponents.tolist()}>'

    def __str__(self) -> str:
        return ' '.join(f'{k}={v}' for k, v in self.as_dict().items())


def standard_pairs(n: int) -> List[Pair]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def generator(i: int, j: int, n: int, sign: int = 1) -> PureWord:
    """只有一个字母的字 A_{i,j}^{sign}."""
    return PureWord(n, (PureLetter(i, j, sign),))


def a0(j: int, n: int) -> PureWord:
    """A_{0,j} := A_{j,n}^{-1} ... A_{j,j+1}^{-1} A_{j-1,j}^{-1} ... A_{1,j}^{-1}."""
    if not 1 <= j <= n:
        raise IndexRangeError(f'A[0,{j}] out of range for n={n}')
    letters = [PureLetter(j, k, -1) for k in range(n, j, -1)]
    letters += [PureLetter(k, j, -1) for k in range(j - 1, 0, -1)]
    return PureWord(n, tuple(letters))


def full_twist(n: int) -> PureWord:
    """z_n := A_{1,2} (A_{1,3} A_{2,3}) ... (A_{1,n} ... A_{n-1,n})."""
    if n < 2:
        raise IndexRangeError('the full twist needs at least two strands')
    return PureWord(n, tuple(PureLetter(i, j) for j in range(2, n + 1) for i in range(1, j)))


def _standard_letters(w: PureWord) -> Iterator[PureLetter]:
    for letter in w.letters:
        if letter.i:
            yield letter
            continue
        expansion = a0(letter.j, w.strands).letters
        if letter.sign < 0:
            expansion = tuple(~x for x in reversed(expansion))
        yield from expansion


def standardize(w: PureWord) -> PureWord:
    """把派生字母 A_{0,j} 按定义展开, 结果只含 1 <= i < j <= n 的字母."""
    return PureWord(w.strands, tuple(_standard_letters(w)))


@lru_cache(maxsize=None)
def _sigma_letters(i: int, j: int) -> Tuple[int, ...]:
    """A_{i,j} = σ_{j-1} ... σ_{i+1} σ_i^2 σ_{i+1}^{-1} ... σ_{j-1}^{-1}."""
    down = tuple(range(j - 1, i, -1))
    return down + (i, i) + tuple(-k for k in reversed(down))


def expand(w: PureWord) -> BraidWord:
    letters = []
    for letter in _standard_letters(w):
        sigmas = _sigma_letters(letter.i, letter.j)
        letters.extend(sigmas if letter.sign > 0 else inverse(sigmas))
    return BraidWord(w.strands, tuple(letters))


def abelianize(w: PureWord) -> AbelianVector:
    n = w.strands
    exponents = np.zeros(n * (n - 1) // 2, dtype=np.int64)
    for letter in _standard_letters(w):
        exponents[AbelianVector.index(letter.pair, n)] += letter.sign
    return AbelianVector(n, exponents)


def exponent_sum(w: PureWord, pair: Pair) -> int:
    """A_{i,j} 的指数和, 0 行字母先展开."""
    return abelianize(w)[pair]


def linking_vector(u: BraidWord) -> AbelianVector:
    """由交叉直接计算阿贝尔化: 每对股之间带符号交叉数的一半."""
    if not is_pure(u):
        raise NotPureError('linking numbers need a pure braid')
    n = u.strands
    twice = np.zeros(n * (n - 1) // 2, dtype=np.int64)
    at = list(range(1, n + 1))
    for letter in u.letters:
        k = abs(letter)
        left, right = sorted((at[k - 1], at[k]))
        twice[AbelianVector.index((left, right), n)] += 1 if letter > 0 else -1
        at[k - 1], at[k] = at[k], at[k - 1]
    return AbelianVector(n, twice // 2)


def _move_past(gamma: Tuple[int, ...], letter: int) -> Tuple[int, ...]:
    """把 γ 写成 A_{i,m} 的字后, 计算 σ^{-1} γ σ, 其中 σ 对应 `letter`.

    x_i 表示 A_{i,m}, σ_k 作用为 x_k -> x_k x_{k+1} x_k^{-1}, x_{k+1} -> x_k.
    """
    k = abs(letter)
    if letter > 0:
        images = {k: (k, k + 1, -k), k + 1: (k,)}
    else:
        images = {k: (k + 1,), k + 1: (-(k + 1), k, k + 1)}
    result = ()
    for x in gamma:
        image = images.get(abs(x), (abs(x),))
        result = join(result, image if x > 0 else inverse(image))
    return result


def _separate_last_strand(letters: Tuple[int, ...], m: int, limits: Limits
                          ) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """把 m 股纯辫子写成 v * γ, v 不含最后一股, γ 属于 Ker(d_m).

    返回 v 的 σ 字 (m-1 股) 与 γ 在 A_{1,m}, ..., A_{m-1,m} 上的字.
    过程中保持 u 的前缀 = v * γ * σ_{m-1} ... σ_p, p 是最后一股的当前位置.
    """
    p = m
    rest = []
    gamma = ()
    for letter in letters:
        k = abs(letter)
        if k == p - 1:
            if letter < 0:
                gamma = join(gamma, (-(p - 1),))
            p -= 1
        elif k == p:
            if letter > 0:
                gamma = join(gamma, (p,))
            p += 1
        else:
            moved = letter if k < p else letter - (1 if letter > 0 else -1)
            rest.append(moved)
            gamma = _move_past(gamma, moved)
            if len(gamma) > limits.max_free_len:
                raise ResourceLimitError('max_free_len', limits.max_free_len)
    if p != m:
        raise NotPureError('the last strand does not return to its position')
    return tuple(rest), gamma


def comb(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> PureWord:
    """梳理: 把纯辫子的 σ 字改写为标准字母 A_{i,j} 的字.

    逐层分离最后一股, u = γ_2 γ_3 ... γ_n, 其中 γ_m 只含 A_{i,m}.
    结果不是规范形式, 只保证与 `u` 表示同一个辫子.
    """
    if not is_pure(u):
        raise NotPureError('only pure braids can be combed')
    letters = free_cancel(u).letters
    blocks = []
    for m in range(u.strands, 1, -1):
        letters, gamma = _separate_last_strand(letters, m, limits)
        letters = reduce_letters(letters)
        blocks.append(tuple(PureLetter(abs(x), m, 1 if x > 0 else -1) for x in gamma))
        logger.debug('comb: strand %s separated, %s letters', m, len(gamma))
    return PureWord(u.strands, tuple(letter for block in reversed(blocks) for letter in block))


def format_pure(w: PureWord) -> str:
    """例如 "A[1,2]^2 A[0,3]^-1", 空字为 "1"."""
    return format_letters((f'A[{letter.i},{letter.j}]', letter.sign) for letter in w.letters)
