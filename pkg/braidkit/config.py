__all__ = (
    'DEFAULT_LIMITS', 'DEFAULT_MAX_FREE_LEN', 'DEFAULT_MAX_STEPS', 'Limits',
)

from dataclasses import dataclass

DEFAULT_MAX_FREE_LEN = 10 ** 6
DEFAULT_MAX_STEPS = 10 ** 7


@dataclass(frozen=True)
class Limits:
    """单次调用的资源上限, 作为参数逐层传递, 不存在全局状态.

    `max_free_len`: Artin 作用中间结果 (自由群字) 的最大长度.
    `max_steps`: 柄约化的最大步数.
    """
    max_free_len: int = DEFAULT_MAX_FREE_LEN
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.max_free_len < 1 or self.max_steps < 1:
            raise ValueError('limits must be positive')


DEFAULT_LIMITS = Limits()
