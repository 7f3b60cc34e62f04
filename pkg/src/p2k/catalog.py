"""Published covering systems and progressions used as golden fixtures.

The three D = 24 systems below (Erdos's and Chen's two) support the
progressions 7629217, 992077, and 3292241 modulo 11184810.  The larger
constructions carry only their printed progression; the matching prime
assignment is recovered by assignment_matching_modulus.
"""

from .covering import CoveringSystem, PrimeAssignment

ERDOS_SYSTEM = CoveringSystem.from_pairs(
    [(0, 2), (0, 3), (1, 4), (3, 8), (7, 12), (23, 24)]
)
ERDOS_ASSIGNMENT = PrimeAssignment.from_pairs(
    [(2, 3), (3, 7), (4, 5), (8, 17), (12, 13), (24, 241)]
)
ERDOS_PROGRESSION = (7629217, 11184810)

CHEN_SYSTEM_1 = CoveringSystem.from_pairs(
    [(0, 2), (1, 3), (1, 4), (3, 8), (3, 12), (23, 24)]
)
CHEN_PROGRESSION_1 = (992077, 11184810)

CHEN_SYSTEM_2 = CoveringSystem.from_pairs(
    [(1, 2), (0, 3), (0, 4), (2, 8), (2, 12), (22, 24)]
)
CHEN_PROGRESSION_2 = (3292241, 11184810)

# Larger minimal CDL covering systems: (D, moduli, residues, progression a, M)
LARGE_CONSTRUCTIONS = [
    (
        36,
        (2, 3, 4, 9, 12, 18, 36),
        (1, 2, 3, 8, 11, 17, 35),
        309547193,
        412729590,
    ),
    (
        48,
        (2, 4, 6, 8, 16, 24, 48),
        (1, 2, 0, 0, 4, 4, 44),
        13982215829,
        21448163730,
    ),
    (
        60,
        (2, 3, 4, 5, 10, 12, 15, 20, 30, 60),
        (0, 1, 3, 3, 5, 9, 11, 17, 29, 59),
        520864019678683,
        2520047004605130,
    ),
    (
        72,
        (2, 4, 6, 8, 18, 24, 36, 72),
        (1, 2, 4, 6, 16, 22, 34, 70),
        12878054009,
        44153328030,
    ),
    (
        80,
        (2, 4, 5, 8, 10, 16, 20, 40, 80),
        (0, 1, 3, 3, 7, 7, 15, 31, 79),
        154854279578189723614177,
        483570327845851669882470,
    ),
]
