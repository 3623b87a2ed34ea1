from math import gcd

import pytest  # type: ignore

from qsdesign.catalog import get_case
from qsdesign.sieve import DesignParams, SieveConfig


def _brute_force(v, y_values=tuple(range(2, 11))):
    found = set()
    w = v - 1
    for k in range(3, v - 1):
        # r = lambda * w / (k-1) is integral only for multiples of step
        step = (k - 1) // gcd(k - 1, w)
        for lam in range(step, k, step):
            r = lam * w // (k - 1)
            if r < 2 or (v * r) % k:
                continue
            num = (k - 1) * (lam - 1)
            if num % (r - 1):
                continue
            y = 1 + num // (r - 1)
            if y not in y_values:
                continue
            params = DesignParams(v=v, b=v * r // k, r=r, k=k, lam=lam, y=y)
            if params.is_valid:
                found.add(params)
    return found


@pytest.fixture
def brute_force():
    """
    Reference search over every ``(k, lambda)`` pair, with ``r`` and ``y``
    read off the design equations.
    """
    return _brute_force


@pytest.fixture
def f4_3d4():
    return get_case('F4:3D4')


@pytest.fixture
def small_config():
    return SieveConfig(q_max=64, suzuki_q_max=2 ** 9, ree_q_max=3 ** 5,
                       g2_q_max=2 ** 6)
