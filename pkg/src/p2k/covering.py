"""Covering systems with distinct moduli and their prime assignments.

A covering system here is a finite set of congruence classes a_i (mod d_i),
d_1 < d_2 < ... < d_n, whose union is all of Z.  When the d_i admit pairwise
distinct primes p_i with p_i | 2^{d_i} - 1, the system supports an arithmetic
progression all of whose elements avoid the form p + 2^k; this module finds
and checks such systems.  Everything works over Z/D (D = lcm of the moduli)
with D-bit masks: a class clears the bits of an arithmetic progression, and a
tuple of classes covers iff the mask empties.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .modcore import (
    CongruenceCondition,
    crt_solve,
    divisors,
    lcm_all,
    mersenne_prime_divisors,
    pow2_mod,
)


@dataclass(frozen=True)
class CoveringSystem:
    """Congruence classes with strictly increasing moduli, plus their lcm."""

    classes: tuple[CongruenceCondition, ...]
    lcm_D: int

    def __post_init__(self):
        mods = [c.modulus for c in self.classes]
        if any(m2 <= m1 for m1, m2 in zip(mods, mods[1:])):
            raise ValueError(f"moduli must be strictly increasing, got {mods}")
        if self.lcm_D != lcm_all(mods):
            raise ValueError(
                f"cached lcm {self.lcm_D} != lcm of moduli {lcm_all(mods)}"
            )

    @classmethod
    def from_pairs(cls, pairs) -> "CoveringSystem":
        """Build from (residue, modulus) pairs in any order."""
        conds = sorted(
            (CongruenceCondition(a % d, d) for a, d in pairs),
            key=lambda c: c.modulus,
        )
        return cls(tuple(conds), lcm_all(c.modulus for c in conds))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(c.modulus for c in self.classes)

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(c.residue for c in self.classes)


@dataclass(frozen=True)
class PrimeAssignment:
    """Injective map modulus -> prime with p | 2^d - 1 for every pair."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for _, p in self.pairs]
        if len(set(primes)) != len(primes):
            raise ValueError(f"assigned primes must be distinct, got {primes}")
        for d, p in self.pairs:
            if (2**d - 1) % p != 0:
                raise ValueError(f"{p} does not divide 2^{d} - 1")

    @classmethod
    def from_pairs(cls, pairs) -> "PrimeAssignment":
        return cls(tuple(sorted((d, p) for d, p in pairs)))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.pairs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for _, p in self.pairs)

    def prime_for(self, d: int) -> int:
        for dd, p in self.pairs:
            if dd == d:
                return p
        raise KeyError(d)


@dataclass(frozen=True)
class EnumerationReport:
    """All minimal CDL covering systems with lcm of moduli exactly D.

    Each entry carries the system, one canonical prime assignment, and the
    supported progression (a, M).  distinct_progression_count counts the
    distinct (a, M) values (two systems differing only in a modulus-3 vs
    modulus-6 class can support the same progression).
    """

    D: int
    systems: tuple[tuple[CoveringSystem, PrimeAssignment], ...]
    progressions: tuple[tuple[int, int], ...]  # (a, M) per system, same order
    distinct_progression_count: int
    skip_reason: str | None = None

    def to_json(self) -> str:
        payload = {
            "D": self.D,
            "systems": [
                {
                    "classes": [[c.residue, c.modulus] for c in sys.classes],
                    "assignment": [[d, p] for d, p in asg.pairs],
                    "progression": [a, m],
                }
                for (sys, asg), (a, m) in zip(self.systems, self.progressions)
            ],
            "distinct_progression_count": self.distinct_progression_count,
        }
        if self.skip_reason is not None:
            payload["skip_reason"] = self.skip_reason
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "EnumerationReport":
        data = json.loads(text)
        systems = []
        progressions = []
        for entry in data["systems"]:
            sys = CoveringSystem.from_pairs((a, d) for a, d in entry["classes"])
            asg = PrimeAssignment.from_pairs((d, p) for d, p in entry["assignment"])
            systems.append((sys, asg))
            progressions.append(tuple(entry["progression"]))
        return cls(
            D=data["D"],
            systems=tuple(systems),
            progressions=tuple(progressions),
            distinct_progression_count=data["distinct_progression_count"],
            skip_reason=data.get("skip_reason"),
        )

    def to_csv(self) -> str:
        """One column per covering-class modulus (ascending), final column
        the progression residue; systems grouped by shared modulus tuple."""
        out = io.StringIO()
        writer = csv.writer(out)
        by_moduli: dict[tuple[int, ...], list[int]] = {}
        for idx, (sys, _) in enumerate(self.systems):
            by_moduli.setdefault(sys.moduli, []).append(idx)
        first = True
        for moduli in sorted(by_moduli):
            if not first:
                writer.writerow([])
            first = False
            writer.writerow([f"mod_{d}" for d in moduli] + ["a"])
            for idx in by_moduli[moduli]:
                sys, _ = self.systems[idx]
                a, _m = self.progressions[idx]
                writer.writerow(list(sys.residues) + [a])
        return out.getvalue()


def _class_mask(residue: int, modulus: int, D: int) -> int:
    """Bits of {x in Z/D : x = residue (mod modulus)}."""
    mask = 0
    for x in range(residue % modulus, D, modulus):
        mask |= 1 << x
    return mask


def is_covering(c: CoveringSystem) -> bool:
    """True iff the classes cover every residue in Z/lcm_D (hence all of Z)."""
    D = c.lcm_D
    remaining = (1 << D) - 1
    for cond in c.classes:
        remaining &= ~_class_mask(cond.residue, cond.modulus, D)
        if remaining == 0:
            return True
    return remaining == 0


def is_minimal(c: CoveringSystem) -> bool:
    """True iff c covers and removing any single class breaks covering.

    Non-covering input is not minimal-covering, so it returns False.
    """
    D = c.lcm_D
    masks = [_class_mask(cond.residue, cond.modulus, D) for cond in c.classes]
    full = (1 << D) - 1
    union = 0
    for m in masks:
        union |= m
    if union != full:
        return False
    # class i is essential iff the union of the others misses something
    n = len(masks)
    prefix = [0] * (n + 1)
    for i in range(n):
        prefix[i + 1] = prefix[i] | masks[i]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    return all(prefix[i] | suffix[i + 1] != full for i in range(n))


def _assignment_exists(candidates: list[list[int]]) -> bool:
    """Bipartite matching feasibility: one distinct prime per modulus slot."""
    order = sorted(range(len(candidates)), key=lambda i: len(candidates[i]))
    match: dict[int, int] = {}  # prime -> slot

    def augment(slot: int, seen: set[int]) -> bool:
        for p in candidates[slot]:
            if p in seen:
                continue
            seen.add(p)
            if p not in match or augment(match[p], seen):
                match[p] = slot
                return True
        return False

    for slot in order:
        if not augment(slot, set()):
            return False
    return True


def iter_prime_assignments(moduli):
    """Yield every injective assignment d -> p | 2^d - 1 as a PrimeAssignment.

    Moduli must be distinct, each within the 2^d - 1 table range.
    """
    mods = list(moduli)
    if len(set(mods)) != len(mods):
        raise ValueError(f"moduli must be distinct, got {mods}")
    candidates = [mersenne_prime_divisors(d) for d in mods]
    order = sorted(range(len(mods)), key=lambda i: len(candidates[i]))
    chosen: dict[int, int] = {}
    used: set[int] = set()

    def rec(pos: int):
        if pos == len(order):
            yield PrimeAssignment.from_pairs(
                (mods[i], chosen[i]) for i in range(len(mods))
            )
            return
        i = order[pos]
        for p in candidates[i]:
            if p in used:
                continue
            used.add(p)
            chosen[i] = p
            yield from rec(pos + 1)
            used.discard(p)
            del chosen[i]

    yield from rec(0)


def find_prime_assignments(moduli) -> list[PrimeAssignment]:
    """All injective assignments for the given distinct moduli (may be empty)."""
    return list(iter_prime_assignments(moduli))


def canonical_assignment(moduli) -> PrimeAssignment | None:
    """Lexicographically smallest assignment by (modulus, prime), or None.

    Greedy: for each modulus in ascending order take the smallest unused
    candidate prime that still leaves the rest matchable.
    """
    mods = sorted(moduli)
    candidates = {d: mersenne_prime_divisors(d) for d in mods}
    used: set[int] = set()
    pairs = []
    for i, d in enumerate(mods):
        rest = mods[i + 1 :]
        found = None
        for p in candidates[d]:
            if p in used:
                continue
            remaining = [
                [q for q in candidates[dd] if q not in used and q != p]
                for dd in rest
            ]
            if _assignment_exists(remaining):
                found = p
                break
        if found is None:
            return None
        used.add(found)
        pairs.append((d, found))
    return PrimeAssignment.from_pairs(pairs)


def cdl_progression_residue(system: CoveringSystem, assignment: PrimeAssignment) -> tuple[int, int]:
    """The progression (a, M) supported by a CDL system: the CRT class
    x = 1 (mod 2), x = 2^{a_i} (mod p_i), with M = 2 * prod p_i."""
    if assignment.moduli != system.moduli:
        raise ValueError(
            f"assignment moduli {assignment.moduli} do not match "
            f"system moduli {system.moduli}"
        )
    conds = [CongruenceCondition(1, 2)]
    for cond, (_, p) in zip(system.classes, assignment.pairs):
        conds.append(CongruenceCondition(pow2_mod(cond.residue, p), p))
    combined = crt_solve(conds)
    return combined.residue, combined.modulus


def _divisor_harmonic_exceeds_two(D: int) -> bool:
    # sum over d | D of 1/d > 2, exactly: sum of D/d > 2D, i.e. sigma(D) > 2D
    return sum(D // d for d in divisors(D)) > 2 * D


def enumerate_cdl_systems(D: int, progress=None) -> EnumerationReport:
    """All minimal CDL covering systems whose moduli have lcm exactly D.

    Screens D by the divisor-density necessary condition (sum of 1/d over
    d | D must exceed 2), selects modulus tuples from the divisors of D
    with density sum > 1, lcm exactly D, and an existing distinct-prime
    assignment, then exhausts residue tuples depth-first with a D-bit
    elimination mask, pruning branches whose remaining classes cannot
    cover the leftover residues.  Found coverings are filtered to minimal
    ones; each is recorded with its canonical prime assignment.
    """
    if D > 2**20:
        raise ValueError(f"D={D} out of supported enumeration range")
    if not _divisor_harmonic_exceeds_two(D):
        return EnumerationReport(
            D=D,
            systems=(),
            progressions=(),
            distinct_progression_count=0,
            skip_reason=f"sum of 1/d over divisors of {D} does not exceed 2",
        )
    divs = [d for d in divisors(D) if d >= 2]
    mersenne_prime_divisors(max(divs))  # raise early if out of table range

    # modulus tuples: subsets with sum 1/d > 1, lcm exactly D, assignment ok
    tuples: list[tuple[int, ...]] = []

    def pick(idx: int, subset: list[int], weight: int, rest_weight: int, lcm: int):
        # weight counts sum of D/d so far; need strict > D at the end
        if idx == len(divs):
            if weight > D and lcm == D:
                subset_t = tuple(subset)
                cands = [mersenne_prime_divisors(d) for d in subset_t]
                if _assignment_exists(cands):
                    tuples.append(subset_t)
            return
        if weight + rest_weight <= D:
            return  # cannot reach density 1 even taking everything
        d = divs[idx]
        pick(idx + 1, subset, weight, rest_weight - D // d, lcm)
        subset.append(d)
        pick(idx + 1, subset, weight + D // d, rest_weight - D // d, math.lcm(lcm, d))
        subset.pop()

    total_rest = sum(D // d for d in divs)
    pick(0, [], 0, total_rest, 1)

    full = (1 << D) - 1
    found: list[CoveringSystem] = []
    for mods in sorted(tuples):
        masks_per_mod = [
            [_class_mask(a, d, D) for a in range(d)] for d in mods
        ]
        counts_per_mod = [D // d for d in mods]
        residues = [0] * len(mods)

        def search(depth: int, remaining: int, budget: int):
            # budget = max residues clearable by the classes not yet placed
            if remaining == 0:
                # early cover: deeper classes cannot be redundant-free
                if depth == len(mods):
                    found.append(
                        CoveringSystem.from_pairs(
                            (residues[i], mods[i]) for i in range(len(mods))
                        )
                    )
                return
            if depth == len(mods):
                return
            if remaining.bit_count() > budget:
                return
            next_budget = budget - counts_per_mod[depth]
            for a in range(mods[depth]):
                residues[depth] = a
                search(depth + 1, remaining & ~masks_per_mod[depth][a], next_budget)

        search(0, full, sum(counts_per_mod))
        if progress is not None:
            progress(mods, len(found))

    minimal = [c for c in found if is_minimal(c)]
    systems = []
    progressions = []
    for c in sorted(minimal, key=lambda c: (c.moduli, c.residues)):
        asg = canonical_assignment(c.moduli)
        assert asg is not None  # subset was pre-screened for matchability
        systems.append((c, asg))
        progressions.append(cdl_progression_residue(c, asg))
    return EnumerationReport(
        D=D,
        systems=tuple(systems),
        progressions=tuple(progressions),
        distinct_progression_count=len(set(progressions)),
    )


def double_cover(c: CoveringSystem) -> CoveringSystem:
    """{1 mod 2} together with {2 a_i mod 2 d_i}: a minimal CDL covering
    system with lcm doubled, for any minimal covering input with distinct
    moduli >= 2."""
    if any(cond.modulus == 1 for cond in c.classes):
        raise ValueError("doubling a system with modulus 1 repeats modulus 2")
    if not is_covering(c):
        raise ValueError("input system is not covering")
    if not is_minimal(c):
        raise ValueError("input system is not minimal")
    pairs = [(1, 2)] + [(2 * cond.residue, 2 * cond.modulus) for cond in c.classes]
    return CoveringSystem.from_pairs(pairs)
