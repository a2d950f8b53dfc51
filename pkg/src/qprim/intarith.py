"""Exact integer helpers: Kronecker symbol, valuations, divisors, CRT.

Everything works on plain Python ints, so products like 4*a1*a2 never
overflow regardless of input size.
"""

from __future__ import annotations

import math
from typing import NamedTuple


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (desk-scale inputs)."""
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


def primes_up_to(n: int) -> list[int]:
    """Primes <= n in increasing order."""
    return [p for p in range(2, n + 1) if is_prime(p)]


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization {p: exponent} of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"prime_factors requires n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _kronecker_prime(D: int, p: int) -> int:
    """Kronecker symbol (D/p) at a single prime p."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = D % p
    if r == 0:
        return 0
    # Euler's criterion; p odd prime
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def kronecker(D: int, k: int) -> int:
    """Kronecker symbol (D/k) for k >= 1, totally multiplicative in k.

    (D/1) = 1 and (D/2) is 0 for even D, +1 for D = +-1 (mod 8),
    -1 for D = +-3 (mod 8).
    """
    if k < 1:
        raise ValueError(f"kronecker requires k >= 1, got {k}")
    sign = 1
    for p, e in prime_factors(k).items():
        s = _kronecker_prime(D, p)
        if s == 0:
            return 0
        if s == -1 and e % 2 == 1:
            sign = -sign
    return sign


def valuation(q: int, n: int) -> int:
    """Largest e >= 0 with q**e dividing n; q must be prime and n nonzero."""
    if q < 2:
        raise ValueError(f"valuation requires q >= 2, got {q}")
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % q == 0:
        n //= q
        e += 1
    return e


class Valuation(NamedTuple):
    """A prime together with the exponent it carries in some integer."""

    prime: int
    exponent: int

    @classmethod
    def of(cls, prime: int, n: int) -> "Valuation":
        return cls(prime, valuation(prime, n))


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, sorted ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    divs = [1]
    for p, e in prime_factors(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Solve x = r1 (mod m1), x = r2 (mod m2); returns (x, lcm) with 0 <= x < lcm.

    Raises ValueError when the congruences are incompatible.
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("moduli must be positive")
    g, u, _ = ext_gcd(m1, m2)
    if (r2 - r1) % g != 0:
        raise ValueError("incompatible congruences")
    lcm = m1 // g * m2
    x = (r1 + (r2 - r1) // g * u % (m2 // g) * m1) % lcm
    return x, lcm


def is_square(n: int) -> bool:
    """True iff n is a perfect square (n < 0 gives False)."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n
