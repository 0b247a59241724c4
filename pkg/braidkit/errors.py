__all__ = (
    'BraidError', 'IndexRangeError', 'NotPureError', 'ParseError',
    'ResourceLimitError', 'StrandMismatchError', 'UnknownCheckError',
)


class BraidError(ValueError):
    """所有输入错误的基类, 与 `ValueError` 兼容."""


class StrandMismatchError(BraidError):

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f'strand count mismatch: {left} != {right}')


class IndexRangeError(BraidError):
    """生成元下标越界, 或者 `A_{i,i}` 这类不存在的字母."""


class NotPureError(BraidError):
    """需要纯辫子的地方传入了非纯辫子."""


class ParseError(BraidError):
    """表达式语法错误.

    `position`: 出错位置, 从 0 开始的列号.
    """

    def __init__(self, message: str, position: int = 0):
        self.position = position
        super().__init__(f'{message} (at position {position})')


class UnknownCheckError(BraidError):

    def __init__(self, check_id: str):
        self.check_id = check_id
        super().__init__(f'unknown check: {check_id}')


class ResourceLimitError(RuntimeError):
    """自由群字长或柄约化步数超过上限.

    `limit`: 超出的限制名, `max_free_len` 或 `max_steps`.
    `value`: 限制的取值.
    """

    def __init__(self, limit: str, value: int):
        self.limit = limit
        self.value = value
        super().__init__(f'resource limit exceeded: {limit}={value}')
