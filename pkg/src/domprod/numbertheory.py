"""Number-theoretic support: factorization, multiplicative functions,
Jacobsthal's function, and Chinese-remainder solving.

Everything works on plain Python integers.  Inputs are human-scale, so
factorize() uses trial division; it rejects n above 2**63 - 1 so a
pathological input cannot wedge a scan.  Jacobsthal's function is computed
by a cyclic residue scan on the radical, which keeps it exact and fast for
n up to a few million.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterable, Iterator, NamedTuple

FACTOR_INPUT_LIMIT = 2**63 - 1


class Congruence(NamedTuple):
    """x = residue (mod modulus)."""

    residue: int
    modulus: int


class JacobsthalRun(NamedTuple):
    """g(n) together with the extremal coprime-free run of residues.

    `start` is the first residue of a longest cyclic run of residues not
    coprime to n (smallest start on ties) and `length` its length, so
    value == length + 1.
    """

    value: int
    start: int
    length: int


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as (prime, exponent) pairs, primes ascending.

    n = 1 gives the empty list.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n > FACTOR_INPUT_LIMIT:
        raise ValueError(f"factorize input {n} exceeds {FACTOR_INPUT_LIMIT}")
    out: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return out


def omega(n: int) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    return len(factorize(n))


def radical(n: int) -> int:
    """Product of the distinct prime factors; radical(1) = 1."""
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def euler_phi(n: int) -> int:
    """Euler's totient; phi(1) = 1."""
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_from(start: int) -> Iterator[int]:
    """Yield the primes >= start in increasing order."""
    p = max(start, 2)
    while True:
        if is_prime(p):
            yield p
        p += 1


def jacobsthal_run(n: int) -> JacobsthalRun:
    """Jacobsthal's g(n) with the extremal run that attains it.

    g(n) is the least m such that every m consecutive integers contain one
    coprime to n.  Computed as L + 1 where L is the longest cyclic run of
    residues mod n sharing a factor with n; only the radical matters, so
    the scan runs over radical(n) residues.
    """
    if n < 1:
        raise ValueError(f"jacobsthal needs n >= 1, got {n}")
    if n == 1:
        return JacobsthalRun(1, 0, 0)
    r = radical(n)
    coprime_positions = [i for i in range(r) if gcd(i, r) == 1]
    # 1 is always coprime, so the list is nonempty and every non-coprime
    # run lies between two coprime positions (cyclically).
    best_len = 0
    best_start = 0
    m = len(coprime_positions)
    for idx in range(m):
        cur = coprime_positions[idx]
        nxt = coprime_positions[(idx + 1) % m]
        length = (nxt - cur - 1) % r if m > 1 else r - 1
        start = (cur + 1) % r
        if length > best_len or (length == best_len and length > 0 and start < best_start):
            best_len = length
            best_start = start
    if best_len == 0:
        best_start = 0
    return JacobsthalRun(best_len + 1, best_start, best_len)


def jacobsthal(n: int) -> int:
    """Least m such that any m consecutive integers contain a coprime to n."""
    return jacobsthal_run(n).value


def crt_solve(congruences: Iterable[Congruence | tuple[int, int]]) -> Congruence:
    """Solve a system x = r_i (mod m_i) with pairwise coprime moduli.

    Returns the unique solution as a Congruence with modulus prod(m_i).
    Residues may be given outside [0, m_i); they are normalized.  Moduli
    that share a factor are rejected.
    """
    x, m = 0, 1
    for residue, modulus in congruences:
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        g = gcd(m, modulus)
        if g != 1:
            raise ValueError(
                f"moduli not pairwise coprime: gcd({m}, {modulus}) = {g}"
            )
        shift = (residue - x) % modulus
        x += m * (shift * pow(m, -1, modulus) % modulus)
        m *= modulus
    return Congruence(x % m, m)
