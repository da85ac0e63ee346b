"""Base-p digit arithmetic and the exponent of a prime in n!.

e_p(n) denotes the exponent of the prime p in the factorization of n!,
with e_p(0) = 0 because 0! = 1.  Three classical identities compute it:

    e_p(n) = sum_{j>=1} floor(n / p^j)                      (floor sum)
           = sum_j n_j * (p^j - 1)/(p - 1)                  (digit weights)
           = (n - s_p(n)) / (p - 1)                         (digit sum)

where n = sum n_j p^j is the base-p expansion and s_p(n) = sum n_j.  The
library computes the floor sum; the test suite pins all three against
each other.  `exponent_range` is the vectorized workhorse behind the
scan harness, and `ExponentStream` advances e_p(n) -> e_p(n+1) in
amortized constant time via e_p(n+1) - e_p(n) = v_p(n+1).
"""

from dataclasses import dataclass

import numpy as np

from .primes import is_prime

_U63 = 1 << 63


def _require_base(p: int) -> None:
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")


@dataclass(frozen=True)
class DigitExpansion:
    """Digits of a nonnegative integer, least significant first.

    Canonical form: no most-significant zero digit, except that the
    value 0 is the single digit [0].
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        _require_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise ValueError("digit vector must be nonempty")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}: {self.digits}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("non-canonical expansion: most-significant digit is zero")

    def value(self) -> int:
        """Reconstruct the integer the digits encode."""
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc

    def __len__(self) -> int:
        return len(self.digits)


def base_digits(n: int, p: int) -> DigitExpansion:
    """Canonical base-p expansion of n >= 0, least significant digit first."""
    _require_base(p)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return DigitExpansion(p, (0,))
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitExpansion(p, tuple(digits))


def digit_sum(n: int, p: int) -> int:
    """Sum of the base-p digits of n."""
    _require_base(p)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    s = 0
    while n:
        s += n % p
        n //= p
    return s


def legendre_exponent(n: int, p: int) -> int:
    """e_p(n): the exponent of the prime p in n!, by the floor sum."""
    _require_prime(p)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    e = 0
    while n:
        n //= p
        e += n
    return e


def p_adic_valuation(m: int, p: int) -> int:
    """Largest j with p^j dividing m; rejects m = 0."""
    _require_prime(p)
    if m < 1:
        raise ValueError(f"valuation needs m >= 1, got {m}")
    j = 0
    while m % p == 0:
        m //= p
        j += 1
    return j


class ExponentStream:
    """Incremental tracker of e_p(n) over consecutive n.

    Each `advance` moves the cursor from n to n+1 and adds v_p(n+1) to
    the running exponent, so a scan over [a, b) costs one valuation per
    step instead of a from-scratch floor sum.  With a modulus the
    exponent is kept reduced, which is all the residue scans need.

    Streams are single-owner: share nothing, move freely.
    """

    __slots__ = ("prime", "modulus", "cursor", "current_exponent")

    def __init__(self, prime: int, start: int = 0, modulus: int | None = None):
        _require_prime(prime)
        if start < 0:
            raise ValueError(f"start must be nonnegative, got {start}")
        if modulus is not None and modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.prime = prime
        self.modulus = modulus
        self.cursor = start
        e = legendre_exponent(start, prime)
        self.current_exponent = e if modulus is None else e % modulus

    def advance(self) -> tuple[int, int]:
        """Step to n+1; return (n+1, e_p(n+1)) (reduced if a modulus is set)."""
        n = self.cursor + 1
        e = self.current_exponent + p_adic_valuation(n, self.prime)
        if self.modulus is not None:
            e %= self.modulus
        self.cursor = n
        self.current_exponent = e
        return n, e

    def __repr__(self) -> str:
        mod = f", mod {self.modulus}" if self.modulus is not None else ""
        return f"ExponentStream(p={self.prime}, n={self.cursor}, e={self.current_exponent}{mod})"


def exponent_range(start: int, stop: int, p: int, mod: int | None = None) -> np.ndarray:
    """e_p(n) for every n in [start, stop) as an int64 array.

    Vectorized floor sum; with `mod` the values come back reduced.  The
    range must sit below 2**63 so the intermediate quotients fit int64
    (e_p(n) < n, so the results always fit when the inputs do).
    """
    _require_prime(p)
    if mod is not None and mod < 2:
        raise ValueError(f"modulus must be >= 2, got {mod}")
    if start < 0 or stop < start:
        raise ValueError(f"bad range [{start}, {stop})")
    if stop >= _U63:
        raise ValueError(f"range end must stay below 2**63, got {stop}")
    ns = np.arange(start, stop, dtype=np.int64)
    acc = np.zeros(ns.shape, dtype=np.int64)
    pj = p
    while pj < stop:
        acc += ns // pj
        pj *= p
    if mod is not None:
        acc %= mod
    return acc
