"""Published reference values the suite checks against.

Everything here was transcribed once from the source tables and is treated
as immutable oracle data by the tests.
"""

B_VALUES = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168, 5: 7581, 6: 7828354}
B7 = 2414682040998

BM_COLUMN = {2: 2, 3: 9, 4: 114, 5: 6894, 6: 7785062}
BMM_COLUMN = {3: 1, 4: 64, 5: 6212, 6: 7741776}

NU_ROW = (388, 290, 195, 70, 40, 30, 0, 10, 0, 0, 1)

GAMMA_COLUMNS = (
    (0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 6),
    (1, 0), (1, 2), (1, 5), (2, 2), (3, 3), (6, 0),
)
GAMMA_ROWS = (
    (5, 6, 0, 4, 0, 1, 0, 0, 0, 0, 0, 0),
    (5, 6, 0, 4, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 5, 5, 0, 2, 0, 1, 2, 1, 0, 0, 0),
    (0, 0, 0, 5, 3, 1, 0, 3, 0, 3, 1, 0),
    (0, 0, 0, 0, 0, 5, 0, 0, 6, 0, 4, 1),
)

MU_GRID = (
    (165980, 152265, 86130, 43385, 17700, 7569, 2895, 1350, 420, 160, 90, 0, 20, 0, 0, 1),
    (152265, 103500, 43080, 16320, 4410, 1560, 420, 180, 0, 15, 0, 0, 0, 0, 0, 0),
    (86130, 43080, 13260, 3660, 585, 180, 60, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (43385, 16320, 3660, 800, 0, 60, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (17700, 4410, 585, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (7569, 1560, 180, 60, 0, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (2895, 420, 60, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1350, 180, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (420, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (160, 15, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (90, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0,) * 16,
    (20, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0,) * 16,
    (0,) * 16,
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

# columns: iota, delta, t, sigma, down-sets contained in R, inner sum
CATALOGUE = (
    ("0-000", 1, 10, 0, 32, 1, 173433),
    ("1-300", 10, 7, 0, 76, 9, 42075),
    ("2-600", 15, 4, 0, 221, 81, 10821),
    ("2-410", 30, 5, 0, 166, 41, 17711),
    ("3-710", 30, 2, 0, 644, 369, 4791),
    ("3-520", 60, 3, 0, 387, 187, 7621),
    ("3-601", 10, 3, 0, 403, 189, 7738),
    ("3-330", 20, 4, 0, 294, 95, 12481),
    ("4-901", 10, 0, 0, 2201, 1701, 2201),
    ("4-630", 60, 1, 0, 1227, 853, 3433),
    ("4-440-0", 60, 2, 0, 728, 434, 5462),
    ("4-440-1", 15, 2, 0, 697, 433, 5413),
    ("4-521", 60, 2, 0, 736, 439, 5519),
    ("4-060", 5, 4, 1, 332, 113, 14297),
    ("5-550", 12, 0, 0, 2496, 1975, 2496),
    ("5-631", 60, 0, 0, 2530, 2006, 2530),
    ("5-360", 60, 1, 0, 1400, 1007, 3938),
    ("5-441", 60, 1, 0, 1423, 1022, 3994),
    ("5-522", 30, 1, 0, 1437, 1035, 4036),
    ("5-251", 30, 2, 1, 842, 524, 6378),
    ("6-361", 60, 0, 0, 2925, 2377, 2925),
    ("6-442-0", 15, 0, 1, 2984, 2431, 2984),
    ("6-442-1", 60, 0, 0, 2967, 2416, 2967),
    ("6-604", 5, 0, 0, 3045, 2489, 3045),
    ("6-090", 10, 1, 0, 1607, 1195, 4545),
    ("6-252", 60, 1, 1, 1666, 1241, 4704),
    ("7-172", 30, 0, 0, 3456, 2881, 3456),
    ("7-253", 60, 0, 1, 3529, 2949, 3529),
    ("7-334", 20, 0, 1, 3584, 3001, 3584),
    ("7-063", 10, 1, 2, 1968, 1519, 5591),
    ("8-064", 15, 0, 1, 4214, 3607, 4214),
    ("8-145", 30, 0, 2, 4310, 3698, 4310),
    ("9-037", 10, 0, 3, 5337, 4693, 5337),
    ("10-0010", 1, 0, 5, 6893, 6212, 6893),
)

BMM5 = 6212
BMM6 = 7741776
PRODUCT_COUNT = 3933651
