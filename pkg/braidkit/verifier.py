"""恒等式校验目录.

每一项校验对应一族具体的辫子恒等式 (或不等式), 以股数 n 为参数,
全部用字问题的判定精确地验证, 不涉及任何数值误差.
"""
__all__ = (
    'CATALOG', 'NEGATIVE_CONTROLS', 'CheckEntry', 'CheckReport', 'Checker', 'Status',
    'check', 'run_all', 'run_check',
)

import enum
import logging
import multiprocessing
import time
from dataclasses import dataclass
from functools import partial, reduce
from operator import mul
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from more_itertools import pairwise

from .braid_core import BraidWord, perm, reflect, sigma
from .brunnian import (
    SamplerParams, in_z, is_brunnian, random_pure_word,
    sample_bd, sample_bd_direct, sample_brun, sample_brun3_alt, sample_closure,
)
from .config import DEFAULT_LIMITS, Limits
from .errors import IndexRangeError, ResourceLimitError, UnknownCheckError
from .maps import (
    apply_map, boundary, boundary_braid, commutator, conjugate, delete_strand, face,
    theta, theta_inv, transposition_conjugator, transversal_conjugator,
    w_automorphism, w_map, w_simplified,
)
from .pure_braid import (
    PureWord, a0, abelianize, comb, expand, full_twist, generator,
    linking_vector, standard_pairs,
)
from .word_oracle import equal, is_trivial, is_trivial_dehornoy

logger = logging.getLogger(__name__)

Word = Union[BraidWord, PureWord]

# 需要随机样本的校验中, 每个 n 取多少个样本.
SAMPLES = 4


class Status(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIP = 'skip'


def accessors(enum_cls: enum.EnumMeta, predicate: str, prefix: str = 'is_') -> Callable:
    """为 `enum_cls` 的每个成员生成只读属性 `{prefix}{成员名小写}`, 取值为 `predicate(成员)`."""
    def deco(cls: type):
        test = getattr(cls, predicate)
        for member in enum_cls:
            name = prefix + member.name.lower()
            if hasattr(cls, name):
                raise ValueError(f'{cls.__name__}.{name} already exists')
            setattr(cls, name, property(lambda self, member=member: test(self, member)))
        return cls
    return deco


@accessors(Status, 'has_status')
@dataclass(frozen=True)
class CheckReport:
    check: str
    n: int
    seed: int
    status: Status
    witness: str
    elapsed_ms: int

    def has_status(self, status: Status) -> bool:
        return self.status is status

    def to_dict(self) -> dict:
        return {
            'check': self.check,
            'n': self.n,
            'seed': self.seed,
            'status': self.status.value,
            'witness': self.witness,
            'elapsed_ms': self.elapsed_ms,
        }


@dataclass(frozen=True)
class CheckEntry:
    id: str
    title: str
    min_n: int
    max_n: int
    func: Callable[['Checker'], None]

    def supports(self, n: int) -> bool:
        return self.min_n <= n <= self.max_n


class CheckFailed(Exception):
    pass


def _braid(word: Word) -> BraidWord:
    return expand(word) if isinstance(word, PureWord) else word


class Checker:
    """单次校验的上下文: 记录已经验证的恒等式, 失败时抛出带见证的异常."""

    def __init__(self, n: int, params: SamplerParams, limits: Limits):
        self.n = n
        self.params = params
        self.limits = limits
        self.rng = np.random.default_rng([params.seed, n])
        self.count = 0
        self.last = ''

    def sampler(self, index: int) -> SamplerParams:
        return self.params.with_seed(self.params.seed + index)

    def random_braid(self, length: int, n: Optional[int] = None) -> BraidWord:
        n = n or self.n
        indexes = self.rng.integers(1, n, size=length)
        signs = self.rng.choice((-1, 1), size=length)
        return BraidWord(n, tuple(int(k * s) for k, s in zip(indexes, signs)))

    def _passed(self, label: str):
        self.count += 1
        self.last = label

    def equal(self, label: str, lhs: Word, rhs: Word):
        if not equal(_braid(lhs), _braid(rhs), self.limits):
            raise CheckFailed(f'{label}: {lhs} != {rhs}')
        self._passed(label)

    def differ(self, label: str, lhs: Word, rhs: Word):
        if equal(_braid(lhs), _braid(rhs), self.limits):
            raise CheckFailed(f'{label}: {lhs} == {rhs}')
        self._passed(label)

    def trivial(self, label: str, word: Word):
        if not is_trivial(_braid(word), self.limits):
            raise CheckFailed(f'{label}: {word} != 1')
        self._passed(label)

    def nontrivial(self, label: str, word: Word):
        if is_trivial(_braid(word), self.limits):
            raise CheckFailed(f'{label}: {word} == 1')
        self._passed(label)

    def holds(self, label: str, condition: bool, witness: object = ''):
        if not condition:
            raise CheckFailed(f'{label}: {witness}' if witness != '' else label)
        self._passed(label)


CATALOG: Dict[str, CheckEntry] = {}
NEGATIVE_CONTROLS: Dict[str, CheckEntry] = {}


def check(check_id: str, title: str, n_range: Tuple[int, int],
          catalog: Dict[str, CheckEntry] = CATALOG) -> Callable:
    """登记一项校验, `n_range` 是支持的股数闭区间."""
    def deco(func: Callable[[Checker], None]):
        if check_id in CATALOG or check_id in NEGATIVE_CONTROLS:
            raise ValueError(f'duplicate check id {check_id}')
        catalog[check_id] = CheckEntry(check_id, title, n_range[0], n_range[1], func)
        return func
    return deco


def _lookup(check_id: str) -> CheckEntry:
    entry = CATALOG.get(check_id) or NEGATIVE_CONTROLS.get(check_id)
    if entry is None:
        raise UnknownCheckError(check_id)
    return entry


def run_check(check_id: str, n: int, params: SamplerParams = SamplerParams(),
              limits: Limits = DEFAULT_LIMITS) -> CheckReport:
    entry = _lookup(check_id)
    started = time.perf_counter()
    if not entry.supports(n):
        status, witness = Status.SKIP, f'requires {entry.min_n} <= n <= {entry.max_n}'
    else:
        ctx = Checker(n, params, limits)
        try:
            entry.func(ctx)
        except CheckFailed as e:
            status, witness = Status.FAIL, str(e)
        except ResourceLimitError as e:
            status, witness = Status.SKIP, str(e)
        else:
            status, witness = Status.PASS, f'{ctx.count} identities verified; last: {ctx.last}'
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    logger.debug('check %s n=%s seed=%s: %s in %sms', check_id, n, params.seed, status.value, elapsed_ms)
    return CheckReport(check_id, n, params.seed, status, witness, elapsed_ms)


def run_all(n_values: Iterable[int], params: SamplerParams = SamplerParams(),
            limits: Limits = DEFAULT_LIMITS, jobs: int = 1,
            check_ids: Optional[Sequence[str]] = None) -> List[CheckReport]:
    """按目录顺序、再按 n 的顺序运行校验.

    `jobs`: 大于 1 时用进程池并发运行, 输出顺序不变.
    `check_ids`: 默认运行整个目录 (不含反例对照).
    """
    ids = list(CATALOG) if check_ids is None else list(check_ids)
    for check_id in ids:
        _lookup(check_id)
    tasks = [(check_id, n, params, limits) for check_id in ids for n in n_values]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            return pool.starmap(run_check, tasks)
    return [run_check(*task) for task in tasks]


def _product(words: Iterable[Word]) -> Word:
    return reduce(mul, words)


def _kernel_generators(k: int, n: int) -> List[PureWord]:
    """Ker(d_k) 的生成元 A_{1,k}, ..., A_{k-1,k}, A_{k,k+1}, ..., A_{k,n}."""
    return [generator(i, k, n) for i in range(1, k)] + [generator(k, j, n) for j in range(k + 1, n + 1)]


def _rejects(func: Callable[[], object], exc: type = IndexRangeError) -> bool:
    try:
        func()
    except exc:
        return True
    return False


@check('C0', 'A[0,j] two forms agree', (3, 6))
def _a0_forms(ctx: Checker):
    n = ctx.n
    for j in range(1, n + 1):
        column = _product(generator(i, j, n) for i in range(1, n + 1) if i != j)
        ctx.equal(f'A[0,{j}] = (A[1,{j}] ... A[{n},{j}])^-1', a0(j, n), ~column)


@check('C1', 'presentation relations', (3, 7))
def _presentation(ctx: Checker):
    n = ctx.n
    s = partial(sigma, n=n)
    for k, l in pairwise(range(1, n)):
        lhs, rhs = s(k) * s(l) * s(k), s(l) * s(k) * s(l)
        ctx.equal(f's{k} s{l} s{k} = s{l} s{k} s{l}', lhs, rhs)
        ctx.holds(f'handle reduction kills s{k} s{l} s{k} (s{l} s{k} s{l})^-1',
                  is_trivial_dehornoy(lhs * ~rhs, ctx.limits))
    for i in range(1, n):
        for j in range(i + 2, n):
            ctx.equal(f's{i} s{j} = s{j} s{i}', s(i) * s(j), s(j) * s(i))
    ctx.nontrivial('s1^2 != 1', s(1) ** 2)


@check('C2', 'kernel generators of d_k', (3, 6))
def _kernel_generators_check(ctx: Checker):
    n = ctx.n
    for k in range(1, n + 1):
        for g in _kernel_generators(k, n):
            ctx.trivial(f'd_{k}({g}) = 1', delete_strand(expand(g), k))
        i, j = next((i, j) for i, j in standard_pairs(n) if k not in (i, j))
        ctx.nontrivial(f'd_{k}(A[{i},{j}]) != 1', delete_strand(expand(generator(i, j, n)), k))


@check('C3', 'Brunnian braids die in the abelianization', (3, 4))
def _brun_abelian(ctx: Checker):
    for index in range(SAMPLES):
        b = sample_brun(ctx.n, ctx.sampler(index))
        ctx.holds(f'linking numbers of Brun sample {index} vanish', linking_vector(b).is_zero(), b)
        ctx.holds(f'abelianization of combed Brun sample {index} vanishes',
                  abelianize(comb(b, ctx.limits)).is_zero(), b)


@check('C4', 'Brun sampler produces Brunnian braids', (3, 4))
def _brun_sampler(ctx: Checker):
    for index in range(SAMPLES):
        b = sample_brun(ctx.n, ctx.sampler(index))
        ctx.holds(f'Brun sample {index} is Brunnian', is_brunnian(b, ctx.limits), b)


@check('C5', 'conjugation permutes the kernels of d_k', (3, 4))
def _kernel_permutation(ctx: Checker):
    n = ctx.n
    for _ in range(SAMPLES):
        beta = ctx.random_braid(6)
        target = perm(beta)
        for k in range(1, n + 1):
            for g in _kernel_generators(k, n):
                ctx.trivial(f'd_{target(k)}(Ψ_β({g})), β = {beta}',
                            delete_strand(conjugate(expand(g), beta), target(k)))


@check('C6', 'normal closure of A[i,j] lies in Ker(d_i) ∩ Ker(d_j)', (3, 4))
def _closure_kernels(ctx: Checker):
    n = ctx.n
    for index, (i, j) in enumerate(standard_pairs(n)):
        x = sample_closure(generator(i, j, n), n, ctx.sampler(index))
        ctx.trivial(f'd_{i}(<<A[{i},{j}]>> sample)', delete_strand(x, i))
        ctx.trivial(f'd_{j}(<<A[{i},{j}]>> sample)', delete_strand(x, j))


@check('C7', 'transversal conjugation', (3, 5))
def _transversal(ctx: Checker):
    n = ctx.n
    for j in range(2, n + 1):
        beta = transversal_conjugator(j, n)
        ctx.holds(f'π_β({n}) = {j} for β = {beta}', perm(beta)(n) == j)
        for i in range(1, j):
            ctx.equal(f'Ψ_β(A[{i},{n}]) = A[{i},{j}], β = {beta}',
                      conjugate(expand(generator(i, n, n)), beta), generator(i, j, n))


@check('C8', 'Bd samples lie in Z', (3, 3))
def _bd_in_z(ctx: Checker):
    for index in range(SAMPLES):
        b = sample_bd(ctx.n, ctx.sampler(index), ctx.limits)
        ctx.holds(f'Bd sample {index} is in Z_{ctx.n}', in_z(b, ctx.limits), b)
        ctx.holds(f'Bd sample {index} has zero linking numbers', linking_vector(b).is_zero(), b)
        direct = sample_bd_direct(ctx.n, ctx.sampler(index))
        ctx.holds(f'symmetric commutator of <<A[0,j]>> sample {index} is in Z_{ctx.n}',
                  in_z(direct, ctx.limits), direct)


@check('C9', 'action of w_n', (3, 5))
def _w_action(ctx: Checker):
    n = ctx.n
    z = full_twist(n)
    for j in range(1, n):
        ctx.equal(f'w(A[0,{j}]) = A[{j},{n}]', w_map(a0(j, n)), generator(j, n, n))
    ctx.equal(f'w(A[0,{n}]) = A[0,{n}] z^2', w_map(a0(n, n)), a0(n, n) * z ** 2)
    ctx.equal('w(z) = z^-1', w_map(z), z ** -1)


@check('C10', 'product of the A[0,j] is z^-2', (3, 6))
def _full_twist(ctx: Checker):
    n = ctx.n
    ctx.equal(f'A[0,1] ... A[0,{n}] = z^-2',
              _product(a0(j, n) for j in range(1, n + 1)), full_twist(n) ** -2)
    z = expand(full_twist(n))
    for k in range(1, n):
        s = sigma(k, n)
        ctx.equal(f'z s{k} = s{k} z', z * s, s * z)


def _boundary_of_a01(ctx: Checker, exponent: int):
    n = ctx.n
    ctx.equal(f'∂(A[0,1]) = z_{n - 1}^{exponent}',
              boundary(a0(1, n)), expand(full_twist(n - 1)) ** exponent)
    ctx.equal('∂(A[1,2]) = A[0,1]', boundary(generator(1, 2, n)), a0(1, n - 1))


@check('C11', '∂ of A[0,1] is z^2', (3, 5))
def _boundary_a01(ctx: Checker):
    _boundary_of_a01(ctx, 2)


@check('N11', 'negative control: ∂ of A[0,1] is z^3', (3, 5), NEGATIVE_CONTROLS)
def _boundary_a01_corrupted(ctx: Checker):
    _boundary_of_a01(ctx, 3)


@check('C12', 'θ sends the 0-row to the 1-row', (3, 5))
def _theta_zero_row(ctx: Checker):
    n = ctx.n
    for j in range(2, n + 1):
        ctx.equal(f'θ(A[0,{j}]) = A[1,{j}]', theta(a0(j, n)), generator(1, j, n))
    for i, j in standard_pairs(n):
        g = generator(i, j, n)
        ctx.equal(f'θ(θ^-1(A[{i},{j}])) = A[{i},{j}]', theta(theta_inv(g)), g)
        ctx.equal(f'θ^-1(θ(A[{i},{j}])) = A[{i},{j}]', theta_inv(theta(g)), g)


@check('C13', '∂ kills the 0-row', (3, 5))
def _boundary_kills(ctx: Checker):
    n = ctx.n
    for j in range(2, n + 1):
        ctx.trivial(f'∂(A[0,{j}]) = 1', boundary(a0(j, n)))
    for _ in range(SAMPLES):
        letters = ctx.rng.integers(2, n + 1, size=6)
        signs = ctx.rng.choice((-1, 1), size=6)
        word = _product(a0(int(j), n) ** int(s) for j, s in zip(letters, signs))
        ctx.trivial(f'∂({word}) = 1', boundary(word))


@check('C14', 'conjugation table of the 0-row', (3, 5))
def _conjugation_table(ctx: Checker):
    n = ctx.n
    for k in range(1, n):
        s = sigma(k, n)
        for j in range(1, n + 1):
            # Ψ_{σ_k^{-1}}(x) = σ_k x σ_k^{-1}
            image = conjugate(expand(a0(j, n)), ~s)
            if k == j - 1:
                expected = ~a0(j, n) * a0(j - 1, n) * a0(j, n)
            elif k == j:
                expected = a0(j + 1, n)
            else:
                expected = a0(j, n)
            ctx.equal(f'Ψ_s{k}^-1(A[0,{j}]) = {expected}', image, expected)


@check('C15', 'the pure braid groups with d_1 and ∂ are not a Delta-group', (4, 5))
def _not_delta(ctx: Checker):
    n = ctx.n
    x = expand(generator(1, 2, n))
    lhs = boundary_braid(delete_strand(x, 1), ctx.limits)
    rhs = boundary_braid(boundary(generator(1, 2, n)), ctx.limits)
    ctx.trivial('(∂ ∘ d_1)(A[1,2]) = 1', lhs)
    ctx.equal(f'(∂ ∘ ∂)(A[1,2]) = z_{n - 2}^2', rhs, expand(full_twist(n - 2)) ** 2)
    ctx.differ('(∂ ∘ d_1)(A[1,2]) != (∂ ∘ ∂)(A[1,2])', lhs, rhs)


@check('C16', '∂ does not intertwine Ψ_s1 with θ', (3, 5))
def _not_intertwined(ctx: Checker):
    n = ctx.n
    a = generator(1, 2, n)
    moved = conjugate(expand(a), sigma(1, n))
    ctx.equal('Ψ_s1(A[1,2]) = A[1,2]', moved, a)
    left = boundary_braid(moved, ctx.limits)
    ctx.equal('∂(Ψ_s1(A[1,2])) = A[0,1]', left, a0(1, n - 1))
    right = theta(a0(1, n - 1))
    ctx.differ('A[0,1] != θ(A[0,1])', left, right)
    if n >= 4:
        ctx.trivial('d_1(A[0,1]) = 1', delete_strand(expand(a0(1, n - 1)), 1))
        twist = expand(full_twist(n - 2)) ** 2
        ctx.equal(f'd_1(θ(A[0,1])) = z_{n - 2}^2', delete_strand(expand(right), 1), twist)
        ctx.nontrivial(f'z_{n - 2}^2 != 1', twist)
    else:
        ctx.equal('A[0,1] = A[1,2]^-1', a0(1, 2), generator(1, 2, 2, -1))
        ctx.differ('A[1,2]^-1 != A[1,2]', generator(1, 2, 2, -1), generator(1, 2, 2))


@check('C17', 'face identities of the collection G', (3, 4))
def _delta_identities(ctx: Checker):
    n = ctx.n
    m = n + 1
    for k in range(1, m):
        g = expand(generator(k, m, m))
        for i in range(n):
            for j in range(i, n):
                lhs = face(j, face(i, g, ctx.limits), ctx.limits)
                rhs = face(i, face(j + 1, g, ctx.limits), ctx.limits)
                ctx.equal(f'd_{j} d_{i} = d_{i} d_{j + 1} on A[{k},{m}]', lhs, rhs)
    ctx.trivial(f'(∂ ∘ ∂)(A[1,{m}]) = 1', face(0, face(0, expand(generator(1, m, m)), ctx.limits), ctx.limits))
    for k in range(2, m):
        ctx.equal(f'∂(A[{k},{m}]) = A[{k - 1},{n}]',
                  face(0, expand(generator(k, m, m)), ctx.limits), generator(k - 1, n, n))


@check('C18', 'identities in P_3', (3, 3))
def _p3_suite(ctx: Checker):
    a, b, c = generator(1, 2, 3), generator(2, 3, 3), generator(1, 3, 3)
    s1, s2 = sigma(1, 3), sigma(2, 3)
    ctx.equal('c^-1 a c = b a b^-1', ~c * a * c, b * a * ~b)
    ctx.equal('c a c^-1 = a^-1 b^-1 a b a', c * a * ~c, ~a * ~b * a * b * a)
    ctx.equal('c^-1 b c = b a b a^-1 b^-1', ~c * b * c, b * a * b * ~a * ~b)
    ctx.equal('c b c^-1 = a^-1 b a', c * b * ~c, ~a * b * a)
    ctx.equal('s1^-1 b s1 = c', conjugate(expand(b), s1), c)
    ctx.equal('s2^-1 a s2 = b^-1 c b', conjugate(expand(a), s2), ~b * c * b)

    ab = commutator(a, b)
    a01 = a0(1, 3)
    ctx.equal('A[0,1] = c^-1 a^-1', a01, ~c * ~a)
    ctx.equal('[[a,b],A[0,1]] = [b,a]^2 [a,b^2]',
              commutator(ab, a01), commutator(b, a) ** 2 * commutator(a, b ** 2))

    ctx.equal('Ψ_s1([a,b]) = [a,c]', conjugate(expand(ab), s1), commutator(a, c))
    ctx.equal('[a,c] = [a,b^-1]', commutator(a, c), commutator(a, ~b))
    ctx.equal('Ψ_s2([a,b]) = [b^-1 c b, b]', conjugate(expand(ab), s2), commutator(~b * c * b, b))
    ctx.equal('[b^-1 c b, b] = [a^-1,b]', commutator(~b * c * b, b), commutator(~a, b))

    a02 = a0(2, 3)
    chain = a * b * a * ~b * a ** -2
    ctx.equal('w(b) = b A[0,2] b^-1', w_map(b), b * a02 * ~b)
    ctx.equal('[a, a A[0,2] a^-1] = a b a b^-1 a^-2', commutator(a, a * a02 * ~a), chain)
    ctx.equal('a b a b^-1 a^-2 = [a^-1,b^-1] [a^-2,b^-1]^-1',
              chain, commutator(~a, ~b) * ~commutator(a ** -2, ~b))
    ctx.equal('w([a,b]) = a^-2 (a b a b^-1 a^-2) a^2', w_map(ab), a ** -2 * chain * a ** 2)
    ctx.equal('w([a,b]) = [a,b^-1]', w_map(ab), commutator(a, ~b))
    # 按 w 的定义, w([a,b]) 与 a b a b^-1 a^-2 只相差一个内自同构.
    ctx.differ('w([a,b]) != a b a b^-1 a^-2', w_map(ab), chain)

    ctx.equal('χ([a,b]) = [a^-1,b^-1]', reflect(expand(ab)), commutator(~a, ~b))

    half = s1 * s2 * s1
    ctx.equal('Ψ_{s1 s2 s1}(a) = b', conjugate(expand(a), half), b)
    ctx.equal('Ψ_{s1 s2 s1}(b) = a', conjugate(expand(b), half), a)
    ctx.holds('s3 is not a generator of B_3', _rejects(lambda: sigma(3, 3)))


@check('C19', 'two forms of w_n agree', (3, 5))
def _w_forms(ctx: Checker):
    n = ctx.n
    for i in range(1, n):
        g = generator(i, n, n)
        ctx.equal(f'w(A[{i},{n}]) agrees with A[{i},{n}] A[0,{i}] A[{i},{n}]^-1',
                  apply_map(w_automorphism(n), g), apply_map(w_simplified(n), g))
    for _ in range(SAMPLES):
        word = random_pure_word(n, 5, ctx.rng)
        ctx.equal(f'two forms of w agree on {word}',
                  apply_map(w_automorphism(n), word), apply_map(w_simplified(n), word))


@check('C20', 'central automorphisms fix commutators', (3, 4))
def _central_commutator(ctx: Checker):
    n = ctx.n
    z = expand(full_twist(n))
    for _ in range(SAMPLES):
        x = expand(random_pure_word(n, 3, ctx.rng))
        y = expand(random_pure_word(n, 3, ctx.rng))
        s, t = (int(e) for e in ctx.rng.integers(-1, 2, size=2))
        ctx.equal(f'[x z^{s}, y z^{t}] = [x, y], x = {x}, y = {y}',
                  commutator(x * z ** s, y * z ** t), commutator(x, y))


@check('C21', 'Brun_3 lies in the free group Ker(d_2)', (3, 3))
def _brun3_free(ctx: Checker):
    a, b = generator(1, 2, 3), generator(2, 3, 3)
    ctx.trivial('d_2(a) = 1', delete_strand(expand(a), 2))
    ctx.trivial('d_2(b) = 1', delete_strand(expand(b), 2))
    for index in range(SAMPLES):
        ctx.trivial(f'd_2(Brun sample {index}) = 1', delete_strand(sample_brun(3, ctx.sampler(index)), 2))
        ctx.trivial(f'd_2([P_3,P_3] sample {index}) = 1',
                    delete_strand(sample_brun3_alt(ctx.sampler(index)), 2))
    for p in (-2, -1, 1, 2):
        for q in (-2, -1, 1, 2):
            word = expand(commutator(a ** p, b ** q))
            ctx.holds(f'[a^{p}, b^{q}] is Brunnian', is_brunnian(word, ctx.limits), word)


@check('C22', 'transposition conjugator', (3, 5))
def _transposition(ctx: Checker):
    n = ctx.n
    beta = transposition_conjugator(n)
    target = perm(beta)
    ctx.holds(f'π_β swaps 1 and {n}, β = {beta}',
              target(1) == n and target(n) == 1 and all(target(k) == k for k in range(2, n)), target)
    for k in range(1, n):
        x = conjugate(expand(generator(k, n, n)), beta)
        ctx.trivial(f'd_{target(k)}(Ψ_β(A[{k},{n}])) = 1', delete_strand(x, target(k)))
        ctx.trivial(f'd_1(Ψ_β(A[{k},{n}])) = 1', delete_strand(x, 1))
    if n <= 4:
        for index in range(2):
            moved = conjugate(sample_brun(n, ctx.sampler(index)), beta)
            ctx.holds(f'Ψ_β(Brun sample {index}) is Brunnian', is_brunnian(moved, ctx.limits), moved)


@check('C23', 'conjugation carries <<A[i,j]>> into <<A[π(i),π(j)]>>', (3, 4))
def _closure_permutation(ctx: Checker):
    n = ctx.n
    for index, (i, j) in enumerate(standard_pairs(n)):
        beta = ctx.random_braid(5)
        target = perm(beta)
        x = conjugate(sample_closure(generator(i, j, n), n, ctx.sampler(index)), beta)
        ctx.trivial(f'd_{target(i)}(Ψ_β(<<A[{i},{j}]>> sample)), β = {beta}', delete_strand(x, target(i)))
        ctx.trivial(f'd_{target(j)}(Ψ_β(<<A[{i},{j}]>> sample)), β = {beta}', delete_strand(x, target(j)))


@check('C24', 'inner automorphisms on [a^p, b^q]', (3, 3))
def _inner_on_commutators(ctx: Checker):
    a, b = generator(1, 2, 3), generator(2, 3, 3)
    half = sigma(1, 3) * sigma(2, 3) * sigma(1, 3)
    for p in (-2, -1, 1, 2):
        for q in (-2, -1, 1, 2):
            x = commutator(a ** p, b ** q)
            ctx.equal(f'Ψ_a([a^{p},b^{q}]) = [a^{p + 1},b^{q}] [a,b^{q}]^-1',
                      ~a * x * a, commutator(a ** (p + 1), b ** q) * ~commutator(a, b ** q))
            ctx.equal(f'Ψ_a^-1([a^{p},b^{q}]) = [a^{p - 1},b^{q}] [a^-1,b^{q}]^-1',
                      a * x * ~a, commutator(a ** (p - 1), b ** q) * ~commutator(~a, b ** q))
            ctx.equal(f'Ψ_b([a^{p},b^{q}]) = [a^{p},b]^-1 [a^{p},b^{q + 1}]',
                      ~b * x * b, ~commutator(a ** p, b) * commutator(a ** p, b ** (q + 1)))
            ctx.equal(f'Ψ_b^-1([a^{p},b^{q}]) = [a^{p},b^-1]^-1 [a^{p},b^{q - 1}]',
                      b * x * ~b, ~commutator(a ** p, ~b) * commutator(a ** p, b ** (q - 1)))
            ctx.equal(f'[a^{p},b^{q}] = Ψ_{{s1 s2 s1}}([b^{p},a^{q}])',
                      x, conjugate(expand(commutator(b ** p, a ** q)), half))


@check('C25', 'Brun_3 = Z_3 = [P_3,P_3] on samples', (3, 3))
def _brun3_is_z3(ctx: Checker):
    for index in range(SAMPLES):
        x = sample_brun3_alt(ctx.sampler(index))
        ctx.holds(f'[P_3,P_3] sample {index} is Brunnian', is_brunnian(x, ctx.limits), x)
        ctx.holds(f'[P_3,P_3] sample {index} is in Z_3', in_z(x, ctx.limits), x)
        y = sample_brun(3, ctx.sampler(index))
        ctx.holds(f'Brun sample {index} is in Z_3', in_z(y, ctx.limits), y)


@check('C26', 'automorphisms of P_3 preserve Z_3 on samples', (3, 3))
def _z3_characteristic(ctx: Checker):
    s1, s2 = sigma(1, 3), sigma(2, 3)
    elements = [expand(commutator(generator(1, 2, 3), generator(2, 3, 3)))]
    elements += [sample_brun3_alt(ctx.sampler(index)) for index in range(SAMPLES)]
    for index, x in enumerate(elements):
        images = {
            'w': expand(w_map(comb(x, ctx.limits))),
            'Ψ_s1': conjugate(x, s1),
            'Ψ_s1^-1': conjugate(x, ~s1),
            'Ψ_s2': conjugate(x, s2),
            'Ψ_s2^-1': conjugate(x, ~s2),
            'χ': reflect(x),
        }
        for name, image in images.items():
            ctx.holds(f'{name}(element {index}) is in Z_3', in_z(image, ctx.limits), image)
