"""Representability of n as ab + ac + bc and Euler's idoneal numbers.

n is idoneal iff it has no representation n = ab + ac + bc with
0 < a < b < c. Euler found 65 such numbers, the largest being 1848, and no
further one is known; the scan here confirms there is none up to any
desk-scale limit.

The search bounds are part of the contract: a < sqrt(n/3) because
n = ab+ac+bc > 3a^2 for a < b < c, and for fixed a, b runs while
2ab + b^2 < n (equivalent to c > b), with c = (n - ab)/(a + b) accepted
when the division is exact.

theta_representations relaxes the strict ordering to 1 <= a <= b <= c with
at most one value equal to 1: exactly the parameter triples for which the
theta graph is simple.
"""

from __future__ import annotations

from typing import NamedTuple


class Representation(NamedTuple):
    a: int
    b: int
    c: int


#: Euler's 65 idoneal numbers.
EULER_IDONEAL_NUMBERS = frozenset(
    {
        1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16, 18, 21, 22, 24, 25,
        28, 30, 33, 37, 40, 42, 45, 48, 57, 58, 60, 70, 72, 78, 85, 88, 93,
        102, 105, 112, 120, 130, 133, 165, 168, 177, 190, 210, 232, 240,
        253, 273, 280, 312, 330, 345, 357, 385, 408, 462, 520, 760, 840,
        1320, 1365, 1848,
    }
)


def strict_representations(n: int) -> list[Representation]:
    """All (a, b, c) with 0 < a < b < c and ab + ac + bc = n, lex ordered."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    a = 1
    while 3 * a * a < n:
        b = a + 1
        while 2 * a * b + b * b < n:
            num = n - a * b
            den = a + b
            if num % den == 0:
                c = num // den
                if c > b:
                    out.append(Representation(a, b, c))
            b += 1
        a += 1
    return out


def is_idoneal(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return not strict_representations(n)


def theta_representations(n: int) -> list[Representation]:
    """All 1 <= a <= b <= c with at most one 1 and ab + ac + bc = n.

    Sorted by a + b + c ascending (then lexicographically), so the first
    entry gives the cheapest theta witness.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    out = []
    a = 1
    while 3 * a * a <= n:
        b = max(a, 2) if a == 1 else a  # a = b = 1 is excluded
        while 2 * a * b + b * b <= n:
            num = n - a * b
            den = a + b
            if num % den == 0:
                c = num // den
                if c >= b:
                    out.append(Representation(a, b, c))
            b += 1
        a += 1
    return sorted(out, key=lambda r: (r.a + r.b + r.c, r))


def representable_sieve(limit: int) -> bytearray:
    """sieve[n] = 1 iff n <= limit has a strict representation.

    Marks every n = ab + c(a+b) by walking c in arithmetic progressions of
    step a+b, which keeps the whole scan to 10**6 within seconds.
    """
    sieve = bytearray(limit + 1)
    a = 1
    while 3 * a * a < limit:
        b = a + 1
        while 2 * a * b + b * b < limit:
            step = a + b
            start = a * b + step * (b + 1)  # c = b + 1
            if start <= limit:
                count = (limit - start) // step + 1
                sieve[start : limit + 1 : step] = b"\x01" * count
            b += 1
        a += 1
    return sieve


def idoneal_numbers_up_to(limit: int) -> list[int]:
    """All representation-free n in 1..limit, via the sieve."""
    sieve = representable_sieve(limit)
    return [n for n in range(1, limit + 1) if not sieve[n]]
