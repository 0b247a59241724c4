__all__ = (
    'BraidWord', 'Permutation',
    'concat', 'format_braid', 'format_letters', 'free_cancel', 'invert',
    'is_pure', 'perm', 'power', 'reduce_letters', 'reflect', 'sigma',
)

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Tuple

from more_itertools import run_length

from .errors import IndexRangeError, StrandMismatchError


@dataclass(frozen=True)
class BraidWord:
    """`strands` 股辫子群 B_n 中的字.

    `letters`: 非零整数序列, `k` 表示 σ_k, `-k` 表示 σ_k^{-1}, 1 <= k <= n-1.
               空序列表示平凡辫子.
    """
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError('a braid needs at least one strand')
        letters = tuple(self.letters)
        for letter in letters:
            if not 0 < abs(letter) < self.strands:
                raise IndexRangeError(f'sigma index {abs(letter)} out of range for n={self.strands}')
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def identity(cls, n: int) -> 'BraidWord':
        return cls(n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        # 空字表示平凡辫子, 仍然是真值.
        return True

    def __mul__(self, other: 'BraidWord') -> 'BraidWord':
        return concat(self, other)

    def __invert__(self) -> 'BraidWord':
        return invert(self)

    def __pow__(self, exponent: int) -> 'BraidWord':
        return power(self, exponent)

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f'<BraidWord n={self.strands} word={format_braid(self)!r}>'


@dataclass(frozen=True)
class Permutation:
    """辫子诱导的置换.

    `images[k-1]` 是从位置 k 出发的那股在底部的位置.
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f'not a permutation: {images}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: 'Permutation') -> 'Permutation':
        """先作用 `self` 再作用 `other`, 即 k -> other(self(k))."""
        if self.size != other.size:
            raise StrandMismatchError(self.size, other.size)
        return Permutation(tuple(other(k) for k in self.images))

    def inverse(self) -> 'Permutation':
        images = [0] * self.size
        for start, end in enumerate(self.images, start=1):
            images[end - 1] = start
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(start == end for start, end in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return ' '.join(f'{start}->{end}' for start, end in enumerate(self.images, start=1))


def sigma(k: int, n: int, sign: int = 1) -> BraidWord:
    """单个字母 σ_k^{sign}."""
    if sign not in (1, -1):
        raise ValueError(f'sign must be 1 or -1, got {sign}')
    return BraidWord(n, (sign * k,))


def concat(*words: BraidWord) -> BraidWord:
    """依次拼接, 不做任何约化."""
    if not words:
        raise ValueError('nothing to concatenate')

    def join(u: BraidWord, v: BraidWord) -> BraidWord:
        if u.strands != v.strands:
            raise StrandMismatchError(u.strands, v.strands)
        return BraidWord(u.strands, u.letters + v.letters)

    return reduce(join, words)


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-letter for letter in reversed(u.letters)))


def power(u: BraidWord, exponent: int) -> BraidWord:
    """`exponent` 可以为负, 为 0 时得到空字."""
    base = u if exponent >= 0 else invert(u)
    return BraidWord(u.strands, base.letters * abs(exponent))


def free_cancel(u: BraidWord) -> BraidWord:
    """消去相邻的 σ_k^{ε} σ_k^{-ε}."""
    return BraidWord(u.strands, reduce_letters(u.letters))


def reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    stack = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def perm(u: BraidWord) -> Permutation:
    """辫子诱导的置换, 满足 perm(u * v) == perm(u).then(perm(v))."""
    # at[p] 是当前位于位置 p + 1 的那股的起点.
    at = list(range(1, u.strands + 1))
    for letter in u.letters:
        k = abs(letter)
        at[k - 1], at[k] = at[k], at[k - 1]

    images = [0] * u.strands
    for position, start in enumerate(at, start=1):
        images[start - 1] = position
    return Permutation(tuple(images))


def is_pure(u: BraidWord) -> bool:
    return perm(u).is_identity()


def reflect(u: BraidWord) -> BraidWord:
    """镜像自同构 χ_n: σ_k -> σ_k^{-1}."""
    return BraidWord(u.strands, tuple(-letter for letter in u.letters))


def format_letters(tokens: Iterable[Tuple[str, int]]) -> str:
    """把 (符号, 指数) 序列格式化为表达式文本, 相同的相邻字母合并为幂."""
    parts = []
    for token, count in run_length.encode(tokens):
        exponent = token[1] * count
        parts.append(token[0] if exponent == 1 else f'{token[0]}^{exponent}')
    return ' '.join(parts) or '1'


def format_braid(u: BraidWord) -> str:
    """例如 "s1^2 s2^-1", 空字为 "1"."""
    return format_letters((f's{abs(letter)}', 1 if letter > 0 else -1) for letter in u.letters)
