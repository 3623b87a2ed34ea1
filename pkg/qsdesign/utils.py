"""
Utility functions.
"""

from collections import OrderedDict
from functools import reduce, wraps
from math import gcd
from typing import Any, Callable, Iterable, Optional, TypeVar

V = TypeVar('V')

__all__ = ('cached', 'lcm', 'lcm_all', 'ceil_div')

_MISSING = object()


def cached(capacity: Optional[int] = 256):
    """
    Memoize a function of hashable positional arguments.

    Once more than ``capacity`` results are stored, the least recently used
    one is dropped. A ``capacity`` of ``None`` keeps everything. The store is
    exposed as the ``cache`` attribute of the wrapped function.
    """

    def decorator(func: Callable[..., V]) -> Callable[..., V]:
        cache: 'OrderedDict[Any, V]' = OrderedDict()

        @wraps(func)
        def wrapper(*args):
            value = cache.get(args, _MISSING)
            if value is not _MISSING:
                cache.move_to_end(args)
                return value

            value = func(*args)
            cache[args] = value
            if capacity is not None and len(cache) > capacity:
                cache.popitem(last=False)
            return value

        wrapper.cache = cache  # type: ignore
        return wrapper

    return decorator


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def lcm_all(values: Iterable[int]) -> int:
    """
    Least common multiple of a collection of integers (1 if it is empty).
    """
    return reduce(lcm, values, 1)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
