"""Arithmetic progressions that avoid every number of the form p + 2^k.

A covering system {a_i (mod d_i)} with pairwise distinct primes p_i | 2^{d_i}-1
supports the progression x = 1 (mod 2), x = 2^{a_i} (mod p_i): for every k,
some p_i divides x - 2^k.  Such a progression contains no p + 2^k at all once
the finitely many candidate equalities x - 2^k = p_i are ruled out; the
exclusion check here does exactly that, working directly modulo M and using
that 2^k mod M is periodic in k >= 1 with period ord_2(M/2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .covering import (
    CoveringSystem,
    PrimeAssignment,
    cdl_progression_residue,
    is_covering,
    iter_prime_assignments,
)
from .modcore import is_prime, lcm_all, ord2


@dataclass(frozen=True)
class CdlProgression:
    """The progression a (mod M) supported by a covering system and its
    prime assignment (M = 2 * product of the assigned primes)."""

    residue: int
    modulus: int
    system: CoveringSystem
    assignment: PrimeAssignment

    def __post_init__(self):
        if not 0 < self.residue < self.modulus:
            raise ValueError(
                f"residue must lie in (0, M), got {self.residue} mod {self.modulus}"
            )
        if self.residue % 2 == 0:
            raise ValueError(f"residue must be odd, got {self.residue}")


@dataclass(frozen=True)
class ExclusionCertificate:
    """Outcome of checking that no assigned prime c has c + 2^k in the
    progression.  k = 0 needs no computation: c + 1 is even while every
    element of the progression is odd."""

    progression: CdlProgression
    checked_primes: tuple[int, ...]
    k_period: int
    verdict: bool
    witnesses: tuple[tuple[int, int], ...]
    k_zero_excluded_by_parity: bool = True

    def to_json(self) -> str:
        return json.dumps(
            {
                "a": self.progression.residue,
                "M": self.progression.modulus,
                "primes": list(self.checked_primes),
                "k_period": self.k_period,
                "verdict": self.verdict,
                "witnesses": [list(w) for w in self.witnesses],
            },
            indent=2,
        )


def derive_progression(
    system: CoveringSystem, assignment: PrimeAssignment
) -> CdlProgression:
    """CRT of {1 mod 2} and {2^{a_i} mod p_i} for the system's classes."""
    for p in assignment.primes:
        if p % 2 == 0:
            raise ValueError(f"assigned primes must be odd, got {p}")
    a, m = cdl_progression_residue(system, assignment)
    return CdlProgression(a, m, system, assignment)


def assignment_matching_modulus(moduli, target_modulus: int) -> PrimeAssignment:
    """The prime assignment whose progression modulus 2 * prod p_i equals
    target_modulus.  Used for published progressions where only the modulus
    is printed; it identifies the assignment uniquely in practice."""
    if target_modulus % 2 != 0:
        raise ValueError(f"progression modulus must be even, got {target_modulus}")
    for asg in iter_prime_assignments(moduli):
        prod = 1
        for p in asg.primes:
            prod *= p
        if 2 * prod == target_modulus:
            return asg
    raise ValueError(f"no assignment for {tuple(moduli)} gives modulus {target_modulus}")


def verify_excludes_primes(progression: CdlProgression) -> ExclusionCertificate:
    """Check c + 2^k != a (mod M) for every assigned prime c and every
    k in 1..ord_2(M/2); that range is exhaustive because 2^(k+T) = 2^k
    (mod M) for k >= 1 when T = ord_2(M/2) and M/2 is odd."""
    a = progression.residue
    m = progression.modulus
    primes = progression.assignment.primes
    period = lcm_all(ord2(p) for p in primes)
    witnesses = []
    power = 1
    for k in range(1, period + 1):
        power = power * 2 % m
        for c in primes:
            if (c + power) % m == a:
                witnesses.append((c, k))
    return ExclusionCertificate(
        progression=progression,
        checked_primes=primes,
        k_period=period,
        verdict=not witnesses,
        witnesses=tuple(witnesses),
    )


def membership_in_U_is_certified(progression: CdlProgression) -> bool:
    """Full sufficiency chain for the progression to avoid p + 2^k entirely:

    the source system covers Z, the assignment is valid (odd distinct primes
    p_i | 2^{d_i} - 1 matching the moduli), the residue is the CRT class of
    the defining congruences with M = 2 * prod p_i, and no assigned prime
    occurs as a - 2^k.  Each piece is re-checked here from scratch.
    """
    system = progression.system
    assignment = progression.assignment
    if assignment.moduli != system.moduli:
        return False
    primes = assignment.primes
    if len(set(primes)) != len(primes):
        return False
    if any(p % 2 == 0 or not is_prime(p) for p in primes):
        return False
    if any((2**d - 1) % p != 0 for d, p in assignment.pairs):
        return False
    if not is_covering(system):
        return False
    prod = 1
    for p in primes:
        prod *= p
    if progression.modulus != 2 * prod:
        return False
    a = progression.residue
    if a % 2 != 1:
        return False
    for cond, (_, p) in zip(system.classes, assignment.pairs):
        if a % p != pow(2, cond.residue, p):
            return False
    return verify_excludes_primes(progression).verdict


def pair_gcd_census(progressions) -> tuple[int, int]:
    """Over all unordered pairs of progressions sharing one modulus M,
    count how many satisfy gcd(M, a_i - a_j) = 2."""
    progs = list(progressions)
    if not progs:
        return (0, 0)
    m = progs[0].modulus if isinstance(progs[0], CdlProgression) else progs[0][1]
    residues = []
    for p in progs:
        if isinstance(p, CdlProgression):
            a, mm = p.residue, p.modulus
        else:
            a, mm = p
        if mm != m:
            raise ValueError(f"mixed moduli: {mm} != {m}")
        residues.append(a)
    total = 0
    hits = 0
    for i in range(len(residues)):
        for j in range(i + 1, len(residues)):
            total += 1
            if math.gcd(m, residues[i] - residues[j]) == 2:
                hits += 1
    return (total, hits)
