"""Sieve verifying that every odd class mod b < 11184810 contains some p + 2^k.

For even b, an odd residue j provably contains a number p + 2^k as soon as
gcd(j - 2^k, b) = 1 for some k >= 1 (Dirichlet then supplies the prime).  So
start from the set of odd residues and strike out the shift R_b + 2^k of the
reduced residue system for k = 1, 2, ...; the moment the set empties, b is
cleared.  The shift values 2^k mod b eventually cycle (pre-period at most j,
period ord_2 of the odd part), so the strike-out loop stops at the first
repeated shift; whatever survives can never be removed.

Bitsets are plain Python ints, one bit per residue in [0, b): striking one
shift is a rotate-and-clear, word-level work rather than a per-residue loop.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .modcore import factorize, is_prime

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    _np = None

# below this, plain-int mask construction beats array round-trips
_NUMPY_MASK_MIN_B = 1 << 14


@dataclass(frozen=True)
class ModulusVerdict:
    """Outcome for one even modulus: covered (all odd classes cleared after
    m shifts) or not, with the surviving odd residues."""

    b: int
    covered: bool
    shifts_used: int
    leftover: tuple[int, ...] = ()

    def to_json(self) -> str:
        return json.dumps(
            {
                "b": self.b,
                "covered": self.covered,
                "m": self.shifts_used,
                "leftover": list(self.leftover),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ModulusVerdict":
        d = json.loads(text)
        return cls(d["b"], d["covered"], d["m"], tuple(d["leftover"]))


@dataclass
class ScanReport:
    b_lo: int
    b_hi: int
    uncovered_moduli: list[ModulusVerdict] = field(default_factory=list)
    elapsed: float = 0.0
    checkpoint: int = 0  # last completed b


def _multiples_pattern(q: int, b: int) -> int:
    """Bits at 0, q, 2q, ... below b, built by doubling replication."""
    pattern = 1
    width = q
    while width < b:
        pattern |= pattern << width
        width <<= 1
    return pattern & ((1 << b) - 1)


# byte-level multiples-of-q patterns (period q bytes = 8q bits), cached
_byte_patterns: dict[int, bytes] = {}
_PATTERN_Q_MAX = 2048


def _multiples_byte_pattern(q: int) -> bytes:
    pattern = _byte_patterns.get(q)
    if pattern is None:
        buf = bytearray(q)
        for j in range(0, 8 * q, q):
            buf[j >> 3] |= 1 << (j & 7)
        pattern = bytes(buf)
        _byte_patterns[q] = pattern
    return pattern


def _coprime_mask(b: int, odd_primes) -> int:
    """Bitmask of the reduced residue system mod b (b even)."""
    if _np is not None and b >= _NUMPY_MASK_MIN_B:
        nbytes = (b + 7) >> 3
        noncoprime = _np.frombuffer(b"\x55" * nbytes, dtype=_np.uint8).copy()
        for q in odd_primes:
            if q <= _PATTERN_Q_MAX:
                reps = -(-nbytes // q)
                tile = _np.frombuffer(
                    _multiples_byte_pattern(q) * reps, dtype=_np.uint8
                )[:nbytes]
                noncoprime |= tile
            else:
                # multiples land in distinct bytes once q > 8
                idx = _np.arange(0, b, q)
                noncoprime[idx >> 3] |= (1 << (idx & 7)).astype(_np.uint8)
        _np.invert(noncoprime, out=noncoprime)
        if b & 7:
            noncoprime[-1] &= (1 << (b & 7)) - 1  # zero tail bits past b
        return int.from_bytes(noncoprime.tobytes(), "little")
    full = (1 << b) - 1
    noncoprime = _multiples_pattern(2, b)
    for q in odd_primes:
        noncoprime |= _multiples_pattern(q, b)
    return full ^ noncoprime


def _rotate(mask: int, s: int, b: int, full: int) -> int:
    if s == 0:
        return mask
    return ((mask << s) & full) | (mask >> (b - s))


def check_even_modulus(b: int, odd_primes=None) -> ModulusVerdict:
    """Run the strike-out sieve for one even modulus.

    odd_primes may supply the distinct odd prime factors of b (as a scan
    sieve does); otherwise they are factored out here.
    """
    if b < 2 or b % 2 != 0:
        raise ValueError(f"modulus must be even and >= 2, got {b}")
    if odd_primes is None:
        odd_primes = [p for p, _ in factorize(b) if p != 2]
    coprime = _coprime_mask(b, odd_primes)
    full = (1 << b) - 1
    remaining = full // 3 << 1  # bits at the odd residues
    seen_shifts = set()
    shift = 1
    k = 0
    while True:
        shift = shift * 2 % b
        if shift in seen_shifts:
            # all distinct shift values exhausted; survivors are final
            leftover = []
            m = remaining
            while m:
                low = m & -m
                leftover.append(low.bit_length() - 1)
                m ^= low
            return ModulusVerdict(b, False, k, tuple(leftover))
        seen_shifts.add(shift)
        k += 1
        remaining &= ~_rotate(coprime, shift, b, full)
        if remaining == 0:
            return ModulusVerdict(b, True, k)


def residual_to_progressions(verdict: ModulusVerdict) -> list[tuple[int, int]]:
    """Surviving odd residues as candidate progressions (a, b) for the
    covering-system machinery to certify."""
    if verdict.covered:
        raise ValueError(f"b={verdict.b} is covered; no residual progressions")
    return [(a, verdict.b) for a in verdict.leftover]


def _chunk_odd_prime_factors(b_values: list[int]) -> dict[int, list[int]]:
    """Distinct odd prime factors for each b in a dense chunk, by sieving."""
    if not b_values:
        return {}
    lo, hi = b_values[0], b_values[-1]
    index = {b: i for i, b in enumerate(b_values)}
    factors: list[list[int]] = [[] for _ in b_values]
    residue: list[int] = list(b_values)
    for p in range(3, math.isqrt(hi) + 1, 2):
        if all(p % q for q in range(3, math.isqrt(p) + 1, 2)):
            start = -lo % p + lo
            for m in range(start, hi + 1, p):
                i = index.get(m)
                if i is not None:
                    factors[i].append(p)
                    while residue[i] % p == 0:
                        residue[i] //= p
    out = {}
    for b, i in index.items():
        rem = residue[i]
        while rem % 2 == 0:
            rem //= 2
        if rem > 1:
            factors[i].append(rem)  # the one prime factor above sqrt(hi)
        out[b] = factors[i]
    return out


def _scan_chunk(args) -> list[str]:
    b_values, = args
    fac = _chunk_odd_prime_factors(b_values)
    results = []
    for b in b_values:
        verdict = check_even_modulus(b, odd_primes=fac[b])
        if not verdict.covered:
            results.append(verdict.to_json())
    return results


def _write_checkpoint(path: str, last_b: int, uncovered: list[ModulusVerdict]):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"last_b={last_b}\n")
        for v in uncovered:
            fh.write(v.to_json() + "\n")
    os.replace(tmp, path)


def read_checkpoint(path: str) -> tuple[int, list[ModulusVerdict]]:
    """Returns (last completed b, uncovered verdicts so far)."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("last_b="):
        raise ValueError(f"malformed checkpoint file {path}")
    last_b = int(lines[0].split("=", 1)[1])
    uncovered = [ModulusVerdict.from_json(ln) for ln in lines[1:]]
    return last_b, uncovered


def scan_range(
    b_lo: int,
    b_hi: int,
    checkpoint_path: str | None = None,
    workers: int = 1,
    chunk_size: int = 2048,
    progress=None,
) -> ScanReport:
    """check_even_modulus for every even b in [b_lo, b_hi], resumably.

    A checkpoint file (one 'last_b=<n>' line plus a JSON line per uncovered
    verdict) is rewritten as contiguous chunks complete, so an interrupted
    scan restarts where it left off.  Chunks are independent; with workers
    > 1 they run in a process pool and merge order-independently.
    """
    if b_lo > b_hi:
        raise ValueError(f"empty range ({b_lo}, {b_hi})")
    start = max(2, b_lo + (b_lo % 2))
    stop = b_hi - (b_hi % 2)
    t0 = time.monotonic()
    uncovered: list[ModulusVerdict] = []
    resume_from = start
    if checkpoint_path and os.path.exists(checkpoint_path):
        last_b, uncovered = read_checkpoint(checkpoint_path)
        resume_from = max(start, last_b + 2)

    chunks = []
    b = resume_from
    while b <= stop:
        end = min(b + 2 * (chunk_size - 1), stop)
        chunks.append(list(range(b, end + 1, 2)))
        b = end + 2

    def finish_chunk(chunk, results):
        nonlocal uncovered
        uncovered.extend(ModulusVerdict.from_json(r) for r in results)
        if checkpoint_path:
            _write_checkpoint(checkpoint_path, chunk[-1], uncovered)
        if progress is not None:
            progress(chunk[-1], len(uncovered))

    if workers <= 1:
        for chunk in chunks:
            finish_chunk(chunk, _scan_chunk((chunk,)))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk, results in zip(
                chunks, pool.map(_scan_chunk, [(c,) for c in chunks])
            ):
                finish_chunk(chunk, results)

    uncovered.sort(key=lambda v: v.b)
    report = ScanReport(
        b_lo=start,
        b_hi=stop,
        uncovered_moduli=uncovered,
        elapsed=time.monotonic() - t0,
        checkpoint=stop if stop >= resume_from else resume_from - 2,
    )
    return report


def find_witness(
    b: int, j: int, prime_limit: int = 10**7, k_limit: int = 30
) -> tuple[int, int] | None:
    """An explicit (p, k) with p prime <= prime_limit, 1 <= k <= k_limit and
    p + 2^k = j (mod b); end-to-end evidence that the class j (mod b) meets
    the form p + 2^k.  Returns None if the search space is exhausted."""
    if b < 2 or b % 2 != 0:
        raise ValueError(f"modulus must be even and >= 2, got {b}")
    for k in range(1, k_limit + 1):
        t = (j - pow(2, k, b)) % b
        g = math.gcd(t, b)
        if g > 1:
            # every candidate in this class shares g except possibly t itself
            if t > 1 and t <= prime_limit and is_prime(t):
                return (t, k)
            continue
        p = t if t > 1 else t + b
        while p <= prime_limit:
            if is_prime(p):
                return (p, k)
            p += b
    return None
