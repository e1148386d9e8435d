"""Square classes, Hilbert symbols and epsilon (Hasse) invariants over Q_p.

A place is either a prime ``p`` (an ``int``) or the real place ``INF``.
All arithmetic is exact; the numbers involved are tiny, so valuations use
trial division.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .core import DiagonalForm, det as gram_det, diagonalize

INF = "inf"
Place = Union[int, str]
Rational = Union[int, Fraction]


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


def check_place(v: Place) -> Place:
    if v == INF:
        return v
    if isinstance(v, bool) or not isinstance(v, int) or not is_prime(v):
        raise ValueError(f"not a place: {v!r}")
    return v


def prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def square_class(x: Rational) -> int:
    """Squarefree integer representing ``x`` modulo nonzero rational squares."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no square class")
    # a/b = ab / b^2
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    for p in prime_factors(n):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k % 2:
            out *= p
    return sign * out


def valuation(n: int, p: int) -> tuple[int, int]:
    """Split a nonzero integer as p^k * u with p not dividing u."""
    if n == 0:
        raise ValueError("valuation of zero")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def legendre(u: int, p: int) -> int:
    """Legendre symbol (u|p) for an odd prime p not dividing u."""
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a: Rational, b: Rational, v: Place) -> int:
    """Hilbert symbol (a, b)_v in {+1, -1}."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol of zero")
    v = check_place(v)
    if v == INF:
        return -1 if (a < 0 and b < 0) else 1
    p = v
    alpha, u = valuation(square_class(a), p)
    beta, w = valuation(square_class(b), p)
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * (p - 1) // 2) % 2 else 1
    if beta % 2:
        s *= legendre(u, p)
    if alpha % 2:
        s *= legendre(w, p)
    return s


def relevant_primes(d: Sequence[Rational]) -> list[int]:
    """2 together with every odd prime dividing a numerator or denominator of ``d``.

    At any other prime all entries are units, so every pairwise symbol is +1.
    """
    primes = {2}
    for x in d:
        x = Fraction(x)
        primes.update(prime_factors(x.numerator))
        primes.update(prime_factors(x.denominator))
    return sorted(primes)


def epsilon_invariant(d: Sequence[Rational], v: Place) -> int:
    """Product of (d_i, d_j)_v over i < j."""
    out = 1
    for x, y in combinations(d, 2):
        out *= hilbert_symbol(x, y, v)
    return out


@dataclass(frozen=True)
class LocalInvariantProfile:
    rank: int
    discriminant: int  # squarefree class of det
    epsilons: tuple[tuple[Place, int], ...]  # listed primes ascending, then INF

    def epsilon(self, v: Place) -> int:
        v = check_place(v)
        for place, e in self.epsilons:
            if place == v:
                return e
        if v == 2:
            raise AssertionError("profile always lists p = 2")
        return 1

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.epsilons if p != INF]


def profile_of_diagonal(d: DiagonalForm, extra_primes: Iterable[int] = ()) -> LocalInvariantProfile:
    primes = sorted(set(relevant_primes(d)) | set(extra_primes))
    disc = 1
    for x in d:
        disc *= x
    eps = tuple((p, epsilon_invariant(d, p)) for p in primes) + ((INF, epsilon_invariant(d, INF)),)
    return LocalInvariantProfile(rank=len(d), discriminant=square_class(disc), epsilons=eps)


def invariant_profile(g: Sequence[Sequence[int]], order: Sequence[int] | None = None) -> LocalInvariantProfile:
    """Discriminant class, rank and epsilon at every relevant place of a Gram matrix."""
    d = diagonalize(g, order)
    prof = profile_of_diagonal(d)
    assert prof.discriminant == square_class(gram_det(g))
    return prof
