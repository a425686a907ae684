from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def naive_mul(p: int, modulus, a: list[int], b: list[int]) -> list[int]:
    """Schoolbook product of coefficient lists, reduced by repeated subtraction."""
    m = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(len(prod) - 1, m - 1, -1):
        c = prod[top]
        if c:
            for k in range(m + 1):
                prod[top - m + k] = (prod[top - m + k] - c * modulus[k]) % p
    return (prod + [0] * m)[:m]


def naive_weight_distance(p_mul, p_add, zero, G, scalars):
    """Minimum weight by brute force over all messages; tiny codes only."""
    r, n = len(G), len(G[0])
    best = n + 1
    for msg in itertools.product(scalars, repeat=r):
        if all(x == zero for x in msg):
            continue
        word = []
        for j in range(n):
            acc = zero
            for i in range(r):
                acc = p_add(acc, p_mul(msg[i], G[i][j]))
            word.append(acc)
        best = min(best, sum(1 for x in word if x != zero))
    return best


@pytest.fixture
def gf11():
    from qmds.field import field_create

    return field_create(11)


@pytest.fixture
def gf16():
    from qmds.field import field_create

    return field_create(2, 4)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
