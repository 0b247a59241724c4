__all__ = (
    'GeneratorMap',
    'apply_map', 'boundary', 'boundary_braid', 'commutator', 'conjugate',
    'delete_strand', 'face', 'identity_map', 'theta', 'theta_inv',
    'theta_inv_map', 'theta_map', 'transposition_conjugator',
    'transversal_conjugator', 'w_automorphism', 'w_map', 'w_simplified',
)

from functools import lru_cache, reduce
from typing import Dict, Mapping, TypeVar

from .braid_core import BraidWord, concat, invert
from .config import DEFAULT_LIMITS, Limits
from .errors import IndexRangeError, StrandMismatchError
from .pure_braid import Pair, PureWord, a0, comb, expand, generator, standard_pairs, standardize

Word = TypeVar('Word', BraidWord, PureWord)


class GeneratorMap:
    """由标准字母 A_{i,j} 的像决定的同态 P_n -> P_{n'}.

    `images`: 每个 (i, j), 1 <= i < j <= n 对应一个 `target` 股的 PureWord.
    """

    def __init__(self, name: str, source: int, target: int, images: Mapping[Pair, PureWord]):
        missing = set(standard_pairs(source)) - set(images)
        if missing:
            raise ValueError(f'{name}: no image for {sorted(missing)}')
        for pair, image in images.items():
            if image.strands != target:
                raise StrandMismatchError(image.strands, target)
        self.name = name
        self.source = source
        self.target = target
        self.images: Dict[Pair, PureWord] = dict(images)

    def __call__(self, w: PureWord) -> PureWord:
        return apply_map(self, w)

    def __repr__(self) -> str:
        return f'<GeneratorMap name={self.name} source={self.source} target={self.target}>'


def apply_map(m: GeneratorMap, w: PureWord) -> PureWord:
    """逐个字母替换, 派生字母 A_{0,j} 先展开."""
    if w.strands != m.source:
        raise StrandMismatchError(w.strands, m.source)
    letters = []
    for letter in standardize(w).letters:
        image = m.images[letter.pair]
        letters.extend(image.letters if letter.sign > 0 else (~image).letters)
    return PureWord(m.target, tuple(letters))


@lru_cache(maxsize=None)
def identity_map(n: int) -> GeneratorMap:
    return GeneratorMap('identity', n, n, {(i, j): generator(i, j, n) for i, j in standard_pairs(n)})


@lru_cache(maxsize=None)
def theta_map(n: int) -> GeneratorMap:
    """θ_n(A_{1,j}) = A_{1,j}^{-1} A_{0,j} A_{1,j}, 其余 A_{i,j} 不变."""
    images = {}
    for i, j in standard_pairs(n):
        if i == 1:
            images[i, j] = generator(1, j, n, -1) * a0(j, n) * generator(1, j, n)
        else:
            images[i, j] = generator(i, j, n)
    return GeneratorMap('theta', n, n, images)


@lru_cache(maxsize=None)
def theta_inv_map(n: int) -> GeneratorMap:
    """θ_n^{-1}(A_{1,j}) = A_{0,j}, 其余 A_{i,j} 不变."""
    images = {(i, j): a0(j, n) if i == 1 else generator(i, j, n) for i, j in standard_pairs(n)}
    return GeneratorMap('theta-inv', n, n, images)


@lru_cache(maxsize=None)
def w_automorphism(n: int) -> GeneratorMap:
    """w_n: j <= n-1 时 A_{i,j} 不变,
    w_n(A_{i,n}) = (A_{i,n} A_{1,i} ... A_{i-1,i} A_{i,i+1} ... A_{i,n-1})^{-1}.
    """
    if n < 3:
        raise IndexRangeError('w_n needs at least three strands')
    images = {}
    for i, j in standard_pairs(n):
        if j < n:
            images[i, j] = generator(i, j, n)
            continue
        word = generator(i, n, n)
        for k in range(1, i):
            word *= generator(k, i, n)
        for k in range(i + 1, n):
            word *= generator(i, k, n)
        images[i, j] = ~word
    return GeneratorMap('w', n, n, images)


@lru_cache(maxsize=None)
def w_simplified(n: int) -> GeneratorMap:
    """w_n 的另一种写法: w_n(A_{i,n}) = A_{i,n} A_{0,i} A_{i,n}^{-1}."""
    if n < 3:
        raise IndexRangeError('w_n needs at least three strands')
    images = {}
    for i, j in standard_pairs(n):
        if j < n:
            images[i, j] = generator(i, j, n)
        else:
            images[i, j] = generator(i, n, n) * a0(i, n) * generator(i, n, n, -1)
    return GeneratorMap('w-simplified', n, n, images)


def theta(w: PureWord) -> PureWord:
    if w.strands < 2:
        raise IndexRangeError('theta needs at least two strands')
    return apply_map(theta_map(w.strands), w)


def theta_inv(w: PureWord) -> PureWord:
    if w.strands < 2:
        raise IndexRangeError('theta needs at least two strands')
    return apply_map(theta_inv_map(w.strands), w)


def w_map(w: PureWord) -> PureWord:
    return apply_map(w_automorphism(w.strands), w)


def delete_strand(u: BraidWord, k: int) -> BraidWord:
    """d_k: 删去从位置 k 出发的那股.

    对非纯辫子同样有定义, 跟踪这一股的当前位置 p.
    """
    n = u.strands
    if not 1 <= k <= n or n < 2:
        raise IndexRangeError(f'cannot delete strand {k} of a {n}-strand braid')
    p = k
    letters = []
    for letter in u.letters:
        i = abs(letter)
        if p == i:
            p = i + 1
        elif p == i + 1:
            p = i
        elif i + 1 < p:
            letters.append(letter)
        else:
            letters.append(letter - 1 if letter > 0 else letter + 1)
    return BraidWord(n - 1, tuple(letters))


def boundary(w: PureWord) -> BraidWord:
    """∂_n := d_1 ∘ θ_n."""
    return delete_strand(expand(theta(w)), 1)


def boundary_braid(u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> BraidWord:
    """σ 字上的 ∂_n, 先梳理成 A 字."""
    return boundary(comb(u, limits))


def face(i: int, u: BraidWord, limits: Limits = DEFAULT_LIMITS) -> BraidWord:
    """第 i 个面映射: i = 0 为 ∂, 否则为 d_i."""
    if i == 0:
        return boundary_braid(u, limits)
    return delete_strand(u, i)


def conjugate(x: BraidWord, b: BraidWord) -> BraidWord:
    """Ψ_b(x) = b^{-1} x b."""
    return concat(invert(b), x, b)


def commutator(x: Word, y: Word) -> Word:
    """[x, y] := x^{-1} y^{-1} x y, 对 BraidWord 与 PureWord 都适用."""
    if x.strands != y.strands:
        raise StrandMismatchError(x.strands, y.strands)
    return reduce(lambda left, right: left * right, (~x, ~y, x, y))


def transversal_conjugator(j: int, n: int) -> BraidWord:
    """β = σ_{n-1} ... σ_j, 满足 Ψ_β(A_{i,n}) = A_{i,j}, i < j."""
    if not 1 <= j <= n:
        raise IndexRangeError(f'no transversal element for j={j}, n={n}')
    return BraidWord(n, tuple(range(n - 1, j - 1, -1)))


def transposition_conjugator(m: int) -> BraidWord:
    """β = (σ_{m-1} ... σ_2) σ_1 (σ_2^{-1} ... σ_{m-1}^{-1}), 诱导的置换交换 1 和 m."""
    if m < 2:
        raise IndexRangeError('a transposition needs at least two strands')
    down = tuple(range(m - 1, 1, -1))
    return BraidWord(m, down + (1,) + tuple(-k for k in reversed(down)))
