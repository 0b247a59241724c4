"""辫子群的字问题.

两种互相独立的判定方法:

  - Artin 表示: B_n 忠实地作用在自由群 F_n = <x_1, ..., x_n> 上, 辫子平凡当且仅当作用是恒等.
  - Dehornoy 柄约化: 不断约化最左边的柄, 结果为空字当且仅当辫子平凡.
"""
__all__ = (
    'FreeAutomorphism', 'FreeWord',
    'artin_action', 'compare', 'equal', 'find_handle', 'handle_reduce',
    'has_handle', 'is_trivial', 'is_trivial_dehornoy', 'sigma_sign',
)

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .braid_core import BraidWord, concat, format_letters, free_cancel, invert, reduce_letters
from .config import DEFAULT_LIMITS, Limits
from .errors import IndexRangeError, ResourceLimitError, StrandMismatchError

logger = logging.getLogger(__name__)

Letters = Tuple[int, ...]


@dataclass(frozen=True)
class FreeWord:
    """秩为 `rank` 的自由群中的既约字, `g` 表示 x_g, `-g` 表示 x_g^{-1}."""
    rank: int
    letters: Letters = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for letter in letters:
            if not 0 < abs(letter) <= self.rank:
                raise IndexRangeError(f'generator x_{abs(letter)} out of range for rank {self.rank}')
        object.__setattr__(self, 'letters', reduce_letters(letters))

    @classmethod
    def generator(cls, g: int, rank: int) -> 'FreeWord':
        return cls(rank, (g,))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: 'FreeWord') -> 'FreeWord':
        if self.rank != other.rank:
            raise StrandMismatchError(self.rank, other.rank)
        return FreeWord(self.rank, join(self.letters, other.letters))

    def __invert__(self) -> 'FreeWord':
        return FreeWord(self.rank, inverse(self.letters))

    def __str__(self) -> str:
        return format_letters((f'x{abs(letter)}', 1 if letter > 0 else -1) for letter in self.letters)


@dataclass(frozen=True)
class FreeAutomorphism:
    """由生成元的像给出的自由群自同态, `images[g-1]` 是 x_g 的像."""
    images: Tuple[FreeWord, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, rank: int) -> 'FreeAutomorphism':
        return cls(tuple(FreeWord.generator(g, rank) for g in range(1, rank + 1)))

    def is_identity(self) -> bool:
        return all(image.letters == (g,) for g, image in enumerate(self.images, start=1))

    def apply(self, word: FreeWord) -> FreeWord:
        """把 `word` 中的每个生成元替换为它的像."""
        return FreeWord(word.rank, substitute(word.letters, [image.letters for image in self.images]))

    def compose(self, other: 'FreeAutomorphism') -> 'FreeAutomorphism':
        """复合 self ∘ other, 先作用 `other`."""
        return FreeAutomorphism(tuple(self.apply(image) for image in other.images))

    def __str__(self) -> str:
        return ', '.join(f'x{g} -> {image}' for g, image in enumerate(self.images, start=1))


def inverse(letters: Letters) -> Letters:
    return tuple(-letter for letter in reversed(letters))


def join(left: Letters, right: Letters) -> Letters:
    """拼接两个既约字, 只需要在接缝处消去."""
    cut = 0
    limit = min(len(left), len(right))
    while cut < limit and left[-1 - cut] == -right[cut]:
        cut += 1
    return left[:len(left) - cut] + right[cut:]


def substitute(letters: Letters, images: Sequence[Letters]) -> Letters:
    result = ()
    for letter in letters:
        image = images[abs(letter) - 1]
        result = join(result, image if letter > 0 else inverse(image))
    return result


def artin_action(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> FreeAutomorphism:
    """辫子在自由群 F_n 上的 Artin 作用.

    σ_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
    σ_i^{-1}: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}.

    字从左往右读, 满足 artin_action(u * v) == artin_action(u).compose(artin_action(v)).
    """
    n = u.strands
    images = [(g,) for g in range(1, n + 1)]
    for letter in u.letters:
        k = abs(letter)
        a, b = images[k - 1], images[k]
        if letter > 0:
            images[k - 1], images[k] = join(join(a, b), inverse(a)), a
        else:
            images[k - 1], images[k] = b, join(join(inverse(b), a), b)
        if len(images[k - 1]) > limits.max_free_len or len(images[k]) > limits.max_free_len:
            raise ResourceLimitError('max_free_len', limits.max_free_len)
    return FreeAutomorphism(tuple(FreeWord(n, image) for image in images))


def is_trivial(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> bool:
    reduced = free_cancel(u)
    if not reduced.letters:
        return True
    logger.debug('artin oracle: n=%s length=%s', u.strands, len(reduced))
    return artin_action(reduced, limits).is_identity()


def equal(u: BraidWord, v: BraidWord, limits: Limits = DEFAULT_LIMITS) -> bool:
    if u.strands != v.strands:
        raise StrandMismatchError(u.strands, v.strands)
    u, v = free_cancel(u), free_cancel(v)
    if u.letters == v.letters:
        return True
    return is_trivial(concat(u, invert(v)), limits)


def _find_handle(letters: Letters, start: int = 0) -> Optional[Tuple[int, int]]:
    """返回右端位置最小的柄 (p, q), 只检查 q >= `start` 的柄."""
    # last[k] 是目前为止最后一个下标为 k 的字母的位置.
    last = {}
    for q, letter in enumerate(letters):
        k = abs(letter)
        if q >= start:
            p = max((last[i] for i in range(1, k + 1) if i in last), default=-1)
            if p >= 0 and letters[p] == -letter:
                return p, q
        last[k] = q
    return None


def find_handle(u: BraidWord) -> Optional[Tuple[int, int]]:
    """柄是形如 σ_i^{e} w σ_i^{-e} 的子字, 其中 w 只含下标大于 i 的字母.

    返回最左边的柄两端的位置, 没有柄时返回 None.
    """
    return _find_handle(u.letters)


def has_handle(u: BraidWord) -> bool:
    return _find_handle(u.letters) is not None


def _reduce_handle(letters: Letters, p: int, q: int) -> Letters:
    i = abs(letters[p])
    e = 1 if letters[p] > 0 else -1
    middle = []
    for letter in letters[p + 1:q]:
        if abs(letter) == i + 1:
            d = 1 if letter > 0 else -1
            middle.extend((-e * (i + 1), d * i, e * (i + 1)))
        else:
            middle.append(letter)
    return letters[:p] + tuple(middle) + letters[q + 1:]


def handle_reduce(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> BraidWord:
    """反复约化最左边的柄, 直到字中不再有柄.

    结果为空字当且仅当 `u` 是平凡辫子, 否则结果是 σ-正的或 σ-负的.
    """
    letters = u.letters
    steps = 0
    start = 0
    while (handle := _find_handle(letters, start)) is not None:
        steps += 1
        if steps > limits.max_steps:
            raise ResourceLimitError('max_steps', limits.max_steps)
        p, q = handle
        letters = _reduce_handle(letters, p, q)
        # 左边的前缀不变, 新的柄的右端不会早于 p.
        start = p
    logger.debug('handle reduction: n=%s length=%s steps=%s', u.strands, len(u), steps)
    return BraidWord(u.strands, letters)


def is_trivial_dehornoy(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> bool:
    return not handle_reduce(u, limits).letters


def sigma_sign(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> int:
    """约化后最小下标字母的符号: 1 为 σ-正, -1 为 σ-负, 0 为平凡辫子."""
    letters = handle_reduce(u, limits).letters
    if not letters:
        return 0
    lowest = min(letters, key=abs)
    return 1 if lowest > 0 else -1


def compare(u: BraidWord, v: BraidWord, limits: Limits = DEFAULT_LIMITS) -> int:
    """Dehornoy 序: u < v 当且仅当 u^{-1} v 是 σ-正的, 此时返回 1."""
    return sigma_sign(concat(invert(u), v), limits)
