"""Shared golden data: the 48 published progressions mod 11184810 with their
covering systems (in both the modulus-3 and modulus-6 presentations), and the
five larger published constructions."""

import pytest

M48 = 11184810

# (residues for moduli 2,3,4,8,12,24) -> progression residue
TABLE_MOD3_ROWS = [
    ((0, 0, 1, 3, 7, 23), 7629217),
    ((0, 1, 1, 3, 3, 23), 992077),
    ((1, 2, 0, 2, 6, 22), 6610811),
    ((1, 0, 0, 2, 2, 22), 3292241),
    ((0, 1, 3, 1, 5, 21), 509203),
    ((0, 2, 3, 1, 1, 21), 4442323),
    ((1, 0, 2, 0, 4, 20), 8643209),
    ((1, 1, 2, 0, 0, 20), 10609769),
    ((0, 0, 1, 7, 11, 19), 8101087),
    ((0, 2, 1, 7, 3, 19), 7117807),
    ((1, 2, 0, 6, 10, 18), 1254341),
    ((1, 1, 0, 6, 2, 18), 762701),
    ((0, 1, 3, 5, 9, 17), 3423373),
    ((0, 0, 3, 5, 1, 17), 3177553),
    ((1, 0, 2, 4, 8, 16), 4507889),
    ((1, 2, 2, 4, 0, 16), 4384979),
    ((0, 1, 1, 3, 11, 15), 10581097),
    ((0, 2, 1, 3, 7, 15), 5050147),
    ((1, 0, 0, 2, 10, 14), 8086751),
    ((1, 1, 0, 2, 6, 14), 10913681),
    ((0, 2, 3, 1, 9, 13), 1247173),
    ((0, 0, 3, 1, 5, 13), 8253043),
    ((1, 1, 2, 0, 8, 12), 3419789),
    ((1, 2, 2, 0, 4, 12), 1330319),
    ((0, 0, 1, 7, 7, 11), 4506097),
    ((0, 1, 1, 7, 3, 11), 9053767),
    ((1, 2, 0, 6, 6, 10), 5049251),
    ((1, 0, 0, 6, 2, 10), 1730681),
    ((0, 1, 3, 5, 5, 9), 10913233),
    ((0, 2, 3, 5, 1, 9), 3661543),
    ((1, 0, 2, 4, 4, 8), 8252819),
    ((1, 1, 2, 4, 0, 8), 10219379),
    ((0, 0, 1, 3, 11, 7), 2313487),
    ((0, 2, 1, 3, 3, 7), 1330207),
    ((1, 2, 0, 2, 10, 6), 9545351),
    ((1, 1, 0, 2, 2, 6), 9053711),
    ((0, 1, 3, 1, 9, 5), 1976473),
    ((0, 0, 3, 1, 1, 5), 1730653),
    ((1, 0, 2, 0, 8, 4), 3784439),
    ((1, 2, 2, 0, 0, 4), 3661529),
    ((0, 1, 1, 7, 11, 3), 4626967),
    ((0, 2, 1, 7, 7, 3), 10280827),
    ((1, 0, 0, 6, 10, 2), 10702091),
    ((1, 1, 0, 6, 6, 2), 2344211),
    ((0, 2, 3, 5, 9, 1), 2554843),
    ((0, 0, 3, 5, 5, 1), 9560713),
    ((1, 1, 2, 4, 8, 0), 9666029),
    ((1, 2, 2, 4, 4, 0), 7576559),
]

# (residues for moduli 2,6,4,8,12,24) -> same 48 progressions
TABLE_MOD6_ROWS = [
    ((0, 3, 1, 3, 7, 23), 7629217),
    ((0, 1, 1, 3, 3, 23), 992077),
    ((1, 2, 0, 2, 6, 22), 6610811),
    ((1, 0, 0, 2, 2, 22), 3292241),
    ((0, 1, 3, 1, 5, 21), 509203),
    ((0, 5, 3, 1, 1, 21), 4442323),
    ((1, 0, 2, 0, 4, 20), 8643209),
    ((1, 4, 2, 0, 0, 20), 10609769),
    ((0, 3, 1, 7, 11, 19), 8101087),
    ((0, 5, 1, 7, 3, 19), 7117807),
    ((1, 2, 0, 6, 10, 18), 1254341),
    ((1, 4, 0, 6, 2, 18), 762701),
    ((0, 1, 3, 5, 9, 17), 3423373),
    ((0, 3, 3, 5, 1, 17), 3177553),
    ((1, 0, 2, 4, 8, 16), 4507889),
    ((1, 2, 2, 4, 0, 16), 4384979),
    ((0, 1, 1, 3, 11, 15), 10581097),
    ((0, 5, 1, 3, 7, 15), 5050147),
    ((1, 0, 0, 2, 10, 14), 8086751),
    ((1, 4, 0, 2, 6, 14), 10913681),
    ((0, 5, 3, 1, 9, 13), 1247173),
    ((0, 3, 3, 1, 5, 13), 8253043),
    ((1, 4, 2, 0, 8, 12), 3419789),
    ((1, 2, 2, 0, 4, 12), 1330319),
    ((0, 3, 1, 7, 7, 11), 4506097),
    ((0, 1, 1, 7, 3, 11), 9053767),
    ((1, 2, 0, 6, 6, 10), 5049251),
    ((1, 0, 0, 6, 2, 10), 1730681),
    ((0, 1, 3, 5, 5, 9), 10913233),
    ((0, 5, 3, 5, 1, 9), 3661543),
    ((1, 0, 2, 4, 4, 8), 8252819),
    ((1, 4, 2, 4, 0, 8), 10219379),
    ((0, 3, 1, 3, 11, 7), 2313487),
    ((0, 5, 1, 3, 3, 7), 1330207),
    ((1, 2, 0, 2, 10, 6), 9545351),
    ((1, 4, 0, 2, 2, 6), 9053711),
    ((0, 1, 3, 1, 9, 5), 1976473),
    ((0, 3, 3, 1, 1, 5), 1730653),
    ((1, 0, 2, 0, 8, 4), 3784439),
    ((1, 2, 2, 0, 0, 4), 3661529),
    ((0, 1, 1, 7, 11, 3), 4626967),
    ((0, 5, 1, 7, 7, 3), 10280827),
    ((1, 0, 0, 6, 10, 2), 10702091),
    ((1, 4, 0, 6, 6, 2), 2344211),
    ((0, 5, 3, 5, 9, 1), 2554843),
    ((0, 3, 3, 5, 5, 1), 9560713),
    ((1, 4, 2, 4, 8, 0), 9666029),
    ((1, 2, 2, 4, 4, 0), 7576559),
]

MOD3_MODULI = (2, 3, 4, 8, 12, 24)
MOD6_MODULI = (2, 6, 4, 8, 12, 24)

RESIDUES_48 = [a for _, a in TABLE_MOD3_ROWS]


@pytest.fixture(scope="session")
def residues_48():
    assert len(set(RESIDUES_48)) == 48
    return list(RESIDUES_48)


@pytest.fixture(scope="session")
def enumeration_24():
    from p2k.covering import enumerate_cdl_systems

    return enumerate_cdl_systems(24)


@pytest.fixture(scope="session")
def big_modulus_verdict():
    from p2k.chenscan import check_even_modulus

    return check_even_modulus(M48)
