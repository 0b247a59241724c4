"""辫子表达式的文本语法.

    expr   := factor ('*'? factor)*
    factor := atom ('^' int)?
    atom   := 's'nat | 'A[' nat ',' nat ']' | 'z' | '1' | '(' expr ')' | '[' expr ',' expr ']'

`[x,y]` 表示 x^{-1} y^{-1} x y, `A[0,j]` 是派生字母, `z` 是 n 股的全扭转, `1` 是平凡辫子.
"""
__all__ = (
    'Commutator', 'Expression', 'Identity', 'Power', 'Product', 'Pure', 'Sigma', 'Twist',
    'evaluate', 'evaluate_pure', 'parse',
)

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from operator import mul
from typing import Optional, Tuple

import pyparsing as pp

from .braid_core import BraidWord, sigma
from .errors import ParseError
from .maps import commutator
from .pure_braid import PureLetter, PureWord, expand, full_twist


class Expression:
    """语法树节点的基类. `position` 是节点在原文中的起始位置, 用于报错."""
    position: int

    def validate(self, n: int):
        raise NotImplementedError

    def to_braid(self, n: int) -> BraidWord:
        raise NotImplementedError

    def to_pure(self, n: int) -> Optional[PureWord]:
        """不含 σ 字母时给出对应的 A 字, 否则为 None."""
        raise NotImplementedError


@dataclass(frozen=True)
class Sigma(Expression):
    k: int
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        if not 1 <= self.k <= n - 1:
            raise ParseError(f's{self.k} out of range for n={n}', self.position)

    def to_braid(self, n: int) -> BraidWord:
        return sigma(self.k, n)

    def to_pure(self, n: int) -> Optional[PureWord]:
        return None

    def __str__(self) -> str:
        return f's{self.k}'


@dataclass(frozen=True)
class Pure(Expression):
    i: int
    j: int
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        if self.i == self.j or max(self.i, self.j) > n:
            raise ParseError(f'A[{self.i},{self.j}] out of range for n={n}', self.position)

    def to_braid(self, n: int) -> BraidWord:
        return expand(self.to_pure(n))

    def to_pure(self, n: int) -> Optional[PureWord]:
        return PureWord(n, (PureLetter(self.i, self.j),))

    def __str__(self) -> str:
        return f'A[{self.i},{self.j}]'


@dataclass(frozen=True)
class Twist(Expression):
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        if n < 2:
            raise ParseError('z needs at least two strands', self.position)

    def to_braid(self, n: int) -> BraidWord:
        return expand(full_twist(n))

    def to_pure(self, n: int) -> Optional[PureWord]:
        return full_twist(n)

    def __str__(self) -> str:
        return 'z'


@dataclass(frozen=True)
class Identity(Expression):
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        pass

    def to_braid(self, n: int) -> BraidWord:
        return BraidWord.identity(n)

    def to_pure(self, n: int) -> Optional[PureWord]:
        return PureWord(n)

    def __str__(self) -> str:
        return '1'


@dataclass(frozen=True)
class Product(Expression):
    factors: Tuple[Expression, ...]
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        for factor in self.factors:
            factor.validate(n)

    def to_braid(self, n: int) -> BraidWord:
        return reduce(mul, (factor.to_braid(n) for factor in self.factors))

    def to_pure(self, n: int) -> Optional[PureWord]:
        parts = [factor.to_pure(n) for factor in self.factors]
        if any(part is None for part in parts):
            return None
        return reduce(mul, parts)

    def __str__(self) -> str:
        return ' '.join(map(str, self.factors))


@dataclass(frozen=True)
class Power(Expression):
    base: Expression
    exponent: int
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        self.base.validate(n)

    def to_braid(self, n: int) -> BraidWord:
        return self.base.to_braid(n) ** self.exponent

    def to_pure(self, n: int) -> Optional[PureWord]:
        base = self.base.to_pure(n)
        return None if base is None else base ** self.exponent

    def __str__(self) -> str:
        base = f'({self.base})' if isinstance(self.base, (Product, Power)) else str(self.base)
        return f'{base}^{self.exponent}'


@dataclass(frozen=True)
class Commutator(Expression):
    left: Expression
    right: Expression
    position: int = field(default=0, compare=False)

    def validate(self, n: int):
        self.left.validate(n)
        self.right.validate(n)

    def to_braid(self, n: int) -> BraidWord:
        return commutator(self.left.to_braid(n), self.right.to_braid(n))

    def to_pure(self, n: int) -> Optional[PureWord]:
        left, right = self.left.to_pure(n), self.right.to_pure(n)
        if left is None or right is None:
            return None
        return commutator(left, right)

    def __str__(self) -> str:
        return f'[{self.left}, {self.right}]'


def _product(s: str, loc: int, toks: pp.ParseResults) -> Expression:
    factors = tuple(toks)
    return factors[0] if len(factors) == 1 else Product(factors, loc)


def _power(s: str, loc: int, toks: pp.ParseResults) -> Expression:
    return toks[0] if len(toks) == 1 else Power(toks[0], toks[1], loc)


@lru_cache(maxsize=None)
def _grammar() -> pp.ParserElement:
    integer = pp.Regex(r'[+-]?\d+').setParseAction(lambda toks: int(toks[0]))
    natural = pp.Regex(r'\d+').setParseAction(lambda toks: int(toks[0]))
    expr = pp.Forward()

    sigma_atom = pp.Regex(r's\d+').setParseAction(lambda s, loc, toks: Sigma(int(toks[0][1:]), loc))
    pure_atom = (pp.Suppress('A[') + natural + pp.Suppress(',') + natural + pp.Suppress(']')
                 ).setParseAction(lambda s, loc, toks: Pure(toks[0], toks[1], loc))
    twist_atom = pp.Literal('z').setParseAction(lambda s, loc, toks: Twist(loc))
    identity_atom = pp.Regex(r'1(?!\d)').setParseAction(lambda s, loc, toks: Identity(loc))
    group = pp.Suppress('(') + expr + pp.Suppress(')')
    bracket = (pp.Suppress('[') + expr + pp.Suppress(',') + expr + pp.Suppress(']')
               ).setParseAction(lambda s, loc, toks: Commutator(toks[0], toks[1], loc))

    atom = sigma_atom | pure_atom | twist_atom | identity_atom | group | bracket
    factor = (atom + pp.Optional(pp.Suppress('^') + integer)).setParseAction(_power)
    expr <<= (factor + pp.ZeroOrMore(pp.Optional(pp.Suppress('*')) + factor)).setParseAction(_product)
    return expr


def parse(text: str, n: int) -> Expression:
    """解析表达式并检查所有下标对 `n` 股有效."""
    try:
        expr = _grammar().parseString(text, parseAll=True)[0]
    # pyparsing 的异常统一转换为 `ParseError`.
    except pp.ParseBaseException as e:
        raise ParseError(f'syntax error: {e.msg}', e.loc)
    expr.validate(n)
    return expr


def evaluate(expr: Expression, n: int) -> BraidWord:
    return expr.to_braid(n)


def evaluate_pure(expr: Expression, n: int) -> Optional[PureWord]:
    return expr.to_pure(n)
