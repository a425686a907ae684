"""Integer helpers: primality, factoring, totient and multiplicative order.

Everything here is trial division; the inputs we care about are lengths and
field orders well below 2**32.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import NotCoprime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    return dict(_factor(n))


def prime_factors(n: int) -> list[int]:
    return [f for f, _ in _factor(n)]


def totient(n: int) -> int:
    result = n
    for f in prime_factors(n):
        result -= result // f
    return result


def order_from_group_exponent(is_identity, exponent: int) -> int:
    """Smallest divisor e of ``exponent`` with ``is_identity(e)``.

    ``is_identity(e)`` must report whether x**e == 1 for the element under
    study, and ``exponent`` must be a multiple of the true order.
    """
    e = exponent
    for f in prime_factors(exponent):
        while e % f == 0 and is_identity(e // f):
            e //= f
    return e


def order_mod(t: int, v: int) -> int:
    """Multiplicative order of ``t`` modulo ``v``."""
    if v < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(t, v) != 1:
        raise NotCoprime(f"gcd({t}, {v}) != 1, no multiplicative order")
    t %= v
    return order_from_group_exponent(lambda e: pow(t, e, v) == 1, totient(v))


def primes_from(start: int):
    """Yield primes >= start in increasing order."""
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1
