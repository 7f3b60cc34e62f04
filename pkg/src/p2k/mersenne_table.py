"""Full factorizations of 2^d - 1 for 2 <= d <= 80.

Precomputed offline (see tools/gen_mersenne_table.py); every listed factor
was primality-checked and every product reassembles to 2^d - 1.  The largest
prime in the table is below 2^64, so the deterministic Miller-Rabin check in
modcore re-verifies all of them.
"""

MAX_TABLE_D = 80

# d -> tuple of (prime, exponent), primes ascending
MERSENNE_FACTORS = {
    2: ((3, 1),),
    3: ((7, 1),),
    4: ((3, 1), (5, 1),),
    5: ((31, 1),),
    6: ((3, 2), (7, 1),),
    7: ((127, 1),),
    8: ((3, 1), (5, 1), (17, 1),),
    9: ((7, 1), (73, 1),),
    10: ((3, 1), (11, 1), (31, 1),),
    11: ((23, 1), (89, 1),),
    12: ((3, 2), (5, 1), (7, 1), (13, 1),),
    13: ((8191, 1),),
    14: ((3, 1), (43, 1), (127, 1),),
    15: ((7, 1), (31, 1), (151, 1),),
    16: ((3, 1), (5, 1), (17, 1), (257, 1),),
    17: ((131071, 1),),
    18: ((3, 3), (7, 1), (19, 1), (73, 1),),
    19: ((524287, 1),),
    20: ((3, 1), (5, 2), (11, 1), (31, 1), (41, 1),),
    21: ((7, 2), (127, 1), (337, 1),),
    22: ((3, 1), (23, 1), (89, 1), (683, 1),),
    23: ((47, 1), (178481, 1),),
    24: ((3, 2), (5, 1), (7, 1), (13, 1), (17, 1), (241, 1),),
    25: ((31, 1), (601, 1), (1801, 1),),
    26: ((3, 1), (2731, 1), (8191, 1),),
    27: ((7, 1), (73, 1), (262657, 1),),
    28: ((3, 1), (5, 1), (29, 1), (43, 1), (113, 1), (127, 1),),
    29: ((233, 1), (1103, 1), (2089, 1),),
    30: ((3, 2), (7, 1), (11, 1), (31, 1), (151, 1), (331, 1),),
    31: ((2147483647, 1),),
    32: ((3, 1), (5, 1), (17, 1), (257, 1), (65537, 1),),
    33: ((7, 1), (23, 1), (89, 1), (599479, 1),),
    34: ((3, 1), (43691, 1), (131071, 1),),
    35: ((31, 1), (71, 1), (127, 1), (122921, 1),),
    36: ((3, 3), (5, 1), (7, 1), (13, 1), (19, 1), (37, 1), (73, 1), (109, 1),),
    37: ((223, 1), (616318177, 1),),
    38: ((3, 1), (174763, 1), (524287, 1),),
    39: ((7, 1), (79, 1), (8191, 1), (121369, 1),),
    40: ((3, 1), (5, 2), (11, 1), (17, 1), (31, 1), (41, 1), (61681, 1),),
    41: ((13367, 1), (164511353, 1),),
    42: ((3, 2), (7, 2), (43, 1), (127, 1), (337, 1), (5419, 1),),
    43: ((431, 1), (9719, 1), (2099863, 1),),
    44: ((3, 1), (5, 1), (23, 1), (89, 1), (397, 1), (683, 1), (2113, 1),),
    45: ((7, 1), (31, 1), (73, 1), (151, 1), (631, 1), (23311, 1),),
    46: ((3, 1), (47, 1), (178481, 1), (2796203, 1),),
    47: ((2351, 1), (4513, 1), (13264529, 1),),
    48: ((3, 2), (5, 1), (7, 1), (13, 1), (17, 1), (97, 1), (241, 1), (257, 1), (673, 1),),
    49: ((127, 1), (4432676798593, 1),),
    50: ((3, 1), (11, 1), (31, 1), (251, 1), (601, 1), (1801, 1), (4051, 1),),
    51: ((7, 1), (103, 1), (2143, 1), (11119, 1), (131071, 1),),
    52: ((3, 1), (5, 1), (53, 1), (157, 1), (1613, 1), (2731, 1), (8191, 1),),
    53: ((6361, 1), (69431, 1), (20394401, 1),),
    54: ((3, 4), (7, 1), (19, 1), (73, 1), (87211, 1), (262657, 1),),
    55: ((23, 1), (31, 1), (89, 1), (881, 1), (3191, 1), (201961, 1),),
    56: ((3, 1), (5, 1), (17, 1), (29, 1), (43, 1), (113, 1), (127, 1), (15790321, 1),),
    57: ((7, 1), (32377, 1), (524287, 1), (1212847, 1),),
    58: ((3, 1), (59, 1), (233, 1), (1103, 1), (2089, 1), (3033169, 1),),
    59: ((179951, 1), (3203431780337, 1),),
    60: ((3, 2), (5, 2), (7, 1), (11, 1), (13, 1), (31, 1), (41, 1), (61, 1), (151, 1), (331, 1), (1321, 1),),
    61: ((2305843009213693951, 1),),
    62: ((3, 1), (715827883, 1), (2147483647, 1),),
    63: ((7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1),),
    64: ((3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1),),
    65: ((31, 1), (8191, 1), (145295143558111, 1),),
    66: ((3, 2), (7, 1), (23, 1), (67, 1), (89, 1), (683, 1), (20857, 1), (599479, 1),),
    67: ((193707721, 1), (761838257287, 1),),
    68: ((3, 1), (5, 1), (137, 1), (953, 1), (26317, 1), (43691, 1), (131071, 1),),
    69: ((7, 1), (47, 1), (178481, 1), (10052678938039, 1),),
    70: ((3, 1), (11, 1), (31, 1), (43, 1), (71, 1), (127, 1), (281, 1), (86171, 1), (122921, 1),),
    71: ((228479, 1), (48544121, 1), (212885833, 1),),
    72: ((3, 3), (5, 1), (7, 1), (13, 1), (17, 1), (19, 1), (37, 1), (73, 1), (109, 1), (241, 1), (433, 1), (38737, 1),),
    73: ((439, 1), (2298041, 1), (9361973132609, 1),),
    74: ((3, 1), (223, 1), (1777, 1), (25781083, 1), (616318177, 1),),
    75: ((7, 1), (31, 1), (151, 1), (601, 1), (1801, 1), (100801, 1), (10567201, 1),),
    76: ((3, 1), (5, 1), (229, 1), (457, 1), (174763, 1), (524287, 1), (525313, 1),),
    77: ((23, 1), (89, 1), (127, 1), (581283643249112959, 1),),
    78: ((3, 2), (7, 1), (79, 1), (2731, 1), (8191, 1), (121369, 1), (22366891, 1),),
    79: ((2687, 1), (202029703, 1), (1113491139767, 1),),
    80: ((3, 1), (5, 2), (11, 1), (17, 1), (31, 1), (41, 1), (257, 1), (61681, 1), (4278255361, 1),),
}
