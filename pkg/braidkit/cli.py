__all__ = (
    'cli', 'main', 'run',
)

import logging
import sys
from dataclasses import dataclass
from functools import wraps
from typing import Callable, List, Optional, Tuple, Union

import click

from . import maps
from .braid_core import BraidWord, perm, reflect
from .brunnian import SamplerParams, in_z, is_brunnian, sample_bd, sample_brun, sample_closure
from .config import DEFAULT_MAX_FREE_LEN, DEFAULT_MAX_STEPS, Limits
from .errors import BraidError, ResourceLimitError
from .expression import evaluate, evaluate_pure, parse
from .pure_braid import PureWord, abelianize, comb
from .report import dump_json, format_reports, summarize
from .verifier import CATALOG, run_all
from .word_oracle import equal, is_trivial, is_trivial_dehornoy

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class Session:
    # `check` 子命令中是股数的区间.
    n: Union[int, Tuple[int, ...]]
    limits: Limits
    params: SamplerParams
    fmt: str

    def braid(self, text: str) -> BraidWord:
        return evaluate(parse(text, self.n), self.n)

    def pure(self, text: str) -> PureWord:
        """不含 σ 字母的表达式直接得到 A 字, 否则先梳理."""
        expr = parse(text, self.n)
        word = evaluate_pure(expr, self.n)
        return comb(evaluate(expr, self.n), self.limits) if word is None else word

    def emit(self, command: str, text: str, result: object, payload: object = None):
        if self.fmt == 'json':
            data = {'command': command, 'n': self.n, 'input': text,
                    'result': result if payload is None else payload}
            click.echo(dump_json(data))
        else:
            click.echo(_text(result))


def _text(result: object) -> str:
    if isinstance(result, bool):
        return 'true' if result else 'false'
    return str(result)


class StrandRange(click.ParamType):
    """`3` 或者 `3..5`."""
    name = 'n-range'

    def convert(self, value, param, ctx) -> Tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        low, sep, high = str(value).partition('..')
        try:
            start = int(low)
            stop = int(high) if sep else start
        except ValueError:
            self.fail(f'{value!r} is not a strand count or a range like 3..5', param, ctx)
        if start < 1 or stop < start:
            self.fail(f'{value!r} is not a valid range', param, ctx)
        return tuple(range(start, stop + 1))


class MapSpec(click.ParamType):
    """theta | theta-inv | w | chi | del | d:<k> | conj:<expr>."""
    name = 'map'
    NAMES = ('theta', 'theta-inv', 'w', 'chi', 'del')

    def convert(self, value, param, ctx) -> Tuple[str, str]:
        if isinstance(value, tuple):
            return value
        if value in self.NAMES:
            return value, ''
        name, sep, arg = value.partition(':')
        if sep and name in ('d', 'conj') and arg:
            return name, arg
        self.fail(f'unknown map {value!r}', param, ctx)


class SampleSet(click.ParamType):
    """brun | bd | closure:<letter>."""
    name = 'set'

    def convert(self, value, param, ctx) -> Tuple[str, str]:
        if isinstance(value, tuple):
            return value
        if value in ('brun', 'bd'):
            return value, ''
        name, sep, arg = value.partition(':')
        if name == 'closure' and sep and arg:
            return name, arg
        self.fail(f'unknown sample set {value!r}', param, ctx)


def session_options(n_type: click.ParamType = click.IntRange(1, None)) -> Callable:
    """所有子命令共用的选项, 合并为 `session` 参数."""
    options = [
        click.option('--n', 'n', type=n_type, required=True, help='股数.'),
        click.option('--seed', type=int, default=0, show_default=True, help='随机数种子.'),
        click.option('--max-free-len', type=click.IntRange(1, None), default=DEFAULT_MAX_FREE_LEN,
                     show_default=True, help='自由群字长上限.'),
        click.option('--max-steps', type=click.IntRange(1, None), default=DEFAULT_MAX_STEPS,
                     show_default=True, help='柄约化步数上限.'),
        click.option('--max-conjugator-length', type=click.IntRange(0, None), default=4,
                     show_default=True, help='取样时共轭元的最大长度.'),
        click.option('--commutator-depth', type=click.IntRange(1, None), default=1,
                     show_default=True, help='取样时每个样本的交换子个数.'),
        click.option('--factors', type=click.IntRange(1, None), default=2,
                     show_default=True, help='正规闭包中每个元素的共轭因子数上限.'),
        click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text',
                     show_default=True),
    ]

    def deco(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(n, seed, max_free_len, max_steps, max_conjugator_length,
                    commutator_depth, factors, fmt, **kwargs):
            session = Session(
                n=n,
                limits=Limits(max_free_len, max_steps),
                params=SamplerParams(seed, max_conjugator_length, commutator_depth, factors),
                fmt=fmt,
            )
            logger.debug('command %s: n=%s seed=%s', func.__name__, n, seed)
            try:
                return func(session, **kwargs)
            except ResourceLimitError as e:
                click.echo(f'Error: {e}', err=True)
                return EXIT_RESOURCE
            except BraidError as e:
                raise click.UsageError(str(e))

        for option in reversed(options):
            wrapper = option(wrapper)
        return wrapper
    return deco


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='输出调试日志.')
def cli(verbose: bool):
    """辫子群计算与恒等式校验."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s %(name)s %(levelname)s %(message)s',
    )


@cli.command('eval')
@click.argument('expr')
@session_options()
def eval_command(session: Session, expr: str) -> int:
    """展开为 σ 字."""
    word = session.braid(expr)
    session.emit('eval', expr, str(word), {'word': str(word), 'letters': list(word.letters)})
    return EXIT_OK


@cli.command('equal')
@click.argument('left')
@click.argument('right')
@session_options()
def equal_command(session: Session, left: str, right: str) -> int:
    result = equal(session.braid(left), session.braid(right), session.limits)
    session.emit('equal', f'{left} ; {right}', result)
    return EXIT_OK


@cli.command('trivial')
@click.argument('expr')
@click.option('--oracle', type=click.Choice(['artin', 'dehornoy', 'both']), default='artin',
              show_default=True)
@session_options()
def trivial_command(session: Session, expr: str, oracle: str) -> int:
    word = session.braid(expr)
    if oracle == 'dehornoy':
        session.emit('trivial', expr, is_trivial_dehornoy(word, session.limits))
        return EXIT_OK
    result = is_trivial(word, session.limits)
    if oracle == 'both' and is_trivial_dehornoy(word, session.limits) != result:
        click.echo('Error: the Artin and Dehornoy oracles disagree', err=True)
        return EXIT_CHECK_FAILED
    session.emit('trivial', expr, result)
    return EXIT_OK


@cli.command('perm')
@click.argument('expr')
@session_options()
def perm_command(session: Session, expr: str) -> int:
    permutation = perm(session.braid(expr))
    session.emit('perm', expr, str(permutation), list(permutation.images))
    return EXIT_OK


@cli.command('brunnian')
@click.argument('expr')
@session_options()
def brunnian_command(session: Session, expr: str) -> int:
    session.emit('brunnian', expr, is_brunnian(session.braid(expr), session.limits))
    return EXIT_OK


@cli.command('in-z')
@click.argument('expr')
@session_options()
def in_z_command(session: Session, expr: str) -> int:
    session.emit('in-z', expr, in_z(session.braid(expr), session.limits))
    return EXIT_OK


@cli.command('comb')
@click.argument('expr')
@session_options()
def comb_command(session: Session, expr: str) -> int:
    """把纯辫子改写为 A[i,j] 的字."""
    session.emit('comb', expr, str(comb(session.braid(expr), session.limits)))
    return EXIT_OK


@cli.command('abelianize')
@click.argument('expr')
@session_options()
def abelianize_command(session: Session, expr: str) -> int:
    vector = abelianize(session.pure(expr))
    session.emit('abelianize', expr, str(vector), vector.as_dict())
    return EXIT_OK


@cli.command('apply')
@click.argument('expr')
@click.option('--map', 'spec', type=MapSpec(), required=True,
              help='theta | theta-inv | w | chi | del | d:<k> | conj:<expr>')
@session_options()
def apply_command(session: Session, expr: str, spec: Tuple[str, str]) -> int:
    name, arg = spec
    if name == 'theta':
        result = maps.theta(session.pure(expr))
    elif name == 'theta-inv':
        result = maps.theta_inv(session.pure(expr))
    elif name == 'w':
        result = maps.w_map(session.pure(expr))
    elif name == 'del':
        result = maps.boundary(session.pure(expr))
    elif name == 'chi':
        result = reflect(session.braid(expr))
    elif name == 'd':
        if not arg.isdigit():
            raise click.BadParameter(f'd:<k> needs a strand number, got {arg!r}', param_hint='--map')
        result = maps.delete_strand(session.braid(expr), int(arg))
    else:
        result = maps.conjugate(session.braid(expr), session.braid(arg))
    session.emit('apply', expr, str(result), {'map': ':'.join(filter(None, spec)),
                                              'strands': result.strands, 'word': str(result)})
    return EXIT_OK


@cli.command('sample')
@click.option('--set', 'kind', type=SampleSet(), required=True, help='brun | bd | closure:<letter>')
@session_options()
def sample_command(session: Session, kind: Tuple[str, str]) -> int:
    """按种子取一个随机样本."""
    name, arg = kind
    if name == 'brun':
        word = sample_brun(session.n, session.params)
    elif name == 'bd':
        word = sample_bd(session.n, session.params, session.limits)
    else:
        word = sample_closure(session.pure(arg), session.n, session.params)
    session.emit('sample', ':'.join(filter(None, kind)), str(word),
                 {'seed': session.params.seed, 'word': str(word)})
    return EXIT_OK


@cli.command('check')
@click.argument('ids', nargs=-1)
@click.option('--all', 'run_every', is_flag=True, help='运行整个目录.')
@click.option('--jobs', type=click.IntRange(1, None), default=1, show_default=True,
              help='并发的进程数.')
@session_options(StrandRange())
def check_command(session: Session, ids: Tuple[str, ...], run_every: bool, jobs: int) -> int:
    """运行恒等式校验, 例如 `check C11 --n 3..5`."""
    if not ids and not run_every:
        raise click.UsageError('give check ids or --all')
    check_ids = list(CATALOG) if run_every else list(ids)
    reports = run_all(session.n, session.params, session.limits, jobs=jobs, check_ids=check_ids)
    if session.fmt == 'json':
        click.echo(dump_json(summarize(reports)))
    else:
        click.echo(format_reports(reports))
    return EXIT_CHECK_FAILED if any(report.is_fail for report in reports) else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """命令行入口, 返回退出码."""
    try:
        rv = cli.main(args=argv, prog_name='braidkit', standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_CHECK_FAILED
    return rv if isinstance(rv, int) else EXIT_OK


def run():
    sys.exit(main())
