"""Elementary modular arithmetic shared by every other module.

Covers multiplicative orders of 2, exact CRT over big integers, deterministic
factorization in the supported range, Euler phi, and the prime divisors of
2^d - 1 (backed by the compiled-in table in mersenne_table).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .mersenne_table import MAX_TABLE_D, MERSENNE_FACTORS

# Deterministic Miller-Rabin witness set for n < 3.317e24 (covers every
# prime in the Mersenne table; the largest is ~5.8e17).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_TRIAL_LIMIT = 10**7
_SMALL_PRIME_LIMIT = 10**5


@dataclass(frozen=True, order=True)
class CongruenceCondition:
    """A congruence class residue (mod modulus), normalized to 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} not reduced modulo {self.modulus}"
            )

    def contains(self, x: int) -> bool:
        return x % self.modulus == self.residue


def _check_odd_positive(n: int, what: str = "modulus") -> None:
    if n < 1:
        raise ValueError(f"{what} must be positive, got {n}")
    if n % 2 == 0:
        raise ValueError(f"{what} must be odd, got {n}")


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


_small_primes_cache: list[int] | None = None
_trial_primes_cache: list[int] | None = None


def _small_primes() -> list[int]:
    global _small_primes_cache
    if _small_primes_cache is None:
        _small_primes_cache = primes_up_to(_SMALL_PRIME_LIMIT)
    return _small_primes_cache


def _trial_primes() -> list[int]:
    global _trial_primes_cache
    if _trial_primes_cache is None:
        _trial_primes_cache = primes_up_to(_TRIAL_LIMIT)
    return _trial_primes_cache


def is_prime(n: int) -> bool:
    """Deterministic primality check for n < 3.317e24.

    Trial division by small primes, then Miller-Rabin with a witness set
    proven complete below that limit.  Larger inputs are out of scope and
    rejected rather than answered probabilistically.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"primality check unsupported for n >= {_MR_LIMIT}")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# Primes above the small-prime limit that appear in the Mersenne table;
# factorize tries these before grinding trial division to 10^7, because
# moduli in this codebase are mostly products of such primes.
_large_table_primes_cache: list[int] | None = None


def _large_table_primes() -> list[int]:
    global _large_table_primes_cache
    if _large_table_primes_cache is None:
        seen = set()
        for items in MERSENNE_FACTORS.values():
            for p, _ in items:
                if p > _SMALL_PRIME_LIMIT:
                    seen.add(p)
        _large_table_primes_cache = sorted(seen)
    return _large_table_primes_cache


def _certified_prime(n: int) -> bool:
    """is_prime, but False (rather than an error) beyond the proven range."""
    return n < _MR_LIMIT and is_prime(n)


def factorize(n: int) -> list[tuple[int, int]]:
    """Factor n >= 1 into [(prime, exponent), ...] with primes ascending.

    Deterministic: trial division (small primes first, then up to 10^7)
    plus the primes of the 2^d - 1 table for the large cofactors this
    project actually meets.  Raises ValueError when a cofactor cannot be
    resolved within that range.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if n == 1:
        return []
    factors: dict[int, int] = {}

    def strip(m: int, p: int) -> int:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        return m

    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            n = strip(n, p)
    if n == 1:
        return sorted(factors.items())
    if n < _SMALL_PRIME_LIMIT**2 or _certified_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return sorted(factors.items())
    for p in _large_table_primes():
        if p * p > n:
            break
        if n % p == 0:
            n = strip(n, p)
            if n == 1 or _certified_prime(n):
                break
    if n > 1 and not _certified_prime(n):
        for p in _trial_primes():
            if p <= _SMALL_PRIME_LIMIT:
                continue
            if p * p > n:
                break
            if n % p == 0:
                n = strip(n, p)
                if n == 1 or _certified_prime(n):
                    break
    if n > 1:
        if n < _TRIAL_LIMIT**2 or _certified_prime(n):
            factors[n] = factors.get(n, 0) + 1
        else:
            raise ValueError(f"cofactor {n} out of supported factorization range")
    return sorted(factors.items())


def euler_phi(n: int) -> int:
    """phi(n) = #{1 <= x <= n : gcd(x, n) = 1}, from the factorization."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def pow2_mod(k: int, m: int) -> int:
    """2^k mod m by square-and-multiply (k >= 0, m >= 1)."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    return pow(2, k, m)


# prime -> least d with p | 2^d - 1, read off the table; that least d is
# exactly ord_2(p) whenever ord_2(p) <= MAX_TABLE_D.
_table_order_cache: dict[int, int] | None = None


def _table_orders() -> dict[int, int]:
    global _table_order_cache
    if _table_order_cache is None:
        orders: dict[int, int] = {}
        for d in sorted(MERSENNE_FACTORS):
            for p, _ in MERSENNE_FACTORS[d]:
                orders.setdefault(p, d)
        _table_order_cache = orders
    return _table_order_cache


def _ord2_prime(p: int) -> int:
    """Order of 2 modulo an odd prime p."""
    table = _table_orders()
    if p in table:
        return table[p]
    # ord divides p - 1; shrink p - 1 by its prime factors.
    t = p - 1
    for q, _ in factorize(p - 1):
        while t % q == 0 and pow(2, t // q, p) == 1:
            t //= q
    return t


def ord2(n: int) -> int:
    """Least t >= 1 with 2^t = 1 (mod n), for odd n >= 1; ord2(1) = 1.

    Multiplicative over coprime parts: computed per prime power and
    combined by lcm.
    """
    _check_odd_positive(n)
    if n == 1:
        return 1
    result = 1
    for p, e in factorize(n):
        t = _ord2_prime(p)
        pe = p**e
        while pow(2, t, pe) != 1:
            t *= p
        result = math.lcm(result, t)
    return result


def crt_solve(conditions: list[CongruenceCondition]) -> CongruenceCondition:
    """Combine congruences with pairwise coprime moduli into one class.

    Returns the unique residue modulo the product; an empty list yields
    0 (mod 1).  Raises ValueError naming the first non-coprime pair.
    """
    conds = list(conditions)
    for i in range(len(conds)):
        for j in range(i + 1, len(conds)):
            g = math.gcd(conds[i].modulus, conds[j].modulus)
            if g != 1:
                raise ValueError(
                    f"moduli {conds[i].modulus} and {conds[j].modulus} "
                    f"share factor {g}"
                )
    x, m = 0, 1
    for cond in conds:
        # x' = x (mod m), x' = r (mod q); lift by the inverse of m mod q.
        q = cond.modulus
        inv = pow(m, -1, q) if q > 1 else 0
        x = x + m * ((cond.residue - x) * inv % q)
        m *= q
    return CongruenceCondition(x % m, m)


def mersenne_prime_divisors(d: int) -> list[int]:
    """Distinct prime divisors of 2^d - 1, ascending, for 2 <= d <= 80."""
    if not 2 <= d <= MAX_TABLE_D:
        raise ValueError(
            f"2^d - 1 factorizations available for 2 <= d <= {MAX_TABLE_D}, got d={d}"
        )
    return [p for p, _ in MERSENNE_FACTORS[d]]


def primitive_mersenne_divisors(d: int) -> list[int]:
    """Primes p | 2^d - 1 with ord_2(p) = d exactly.

    Nonempty for every 2 <= d <= 80 except d = 6 (Bang's theorem).
    """
    return [p for p in mersenne_prime_divisors(d) if _table_orders()[p] == d]


def lcm_all(values) -> int:
    return reduce(math.lcm, values, 1)
