"""Published reference data the suite checks against.

Census tables, orbit tables, and rank ladders for the 3x3x2 and 4x4x2
computations, plus the small worked examples.  Orbit ids are 1-based in
sweep order (ascending minimal representative), matching the published
numbering.
"""

# Degree-6 (3,3,2): orbit sizes and minimal representatives, in order.
LEMMA11_ORBITS = [
    (36, "[ 0 0 0 | 0 0 2 ]\n[ 0 1 0 | 0 1 0 ]\n[ 2 0 0 | 0 0 0 ]"),
    (72, "[ 0 0 0 | 0 0 2 ]\n[ 0 1 0 | 1 0 0 ]\n[ 1 1 0 | 0 0 0 ]"),
    (6, "[ 0 0 1 | 0 0 1 ]\n[ 0 1 0 | 0 1 0 ]\n[ 1 0 0 | 1 0 0 ]"),
    (36, "[ 0 0 1 | 0 0 1 ]\n[ 0 0 0 | 1 1 0 ]\n[ 1 1 0 | 0 0 0 ]"),
    (18, "[ 0 0 1 | 0 0 1 ]\n[ 0 1 0 | 1 0 0 ]\n[ 1 0 0 | 0 1 0 ]"),
    (72, "[ 0 0 0 | 0 1 1 ]\n[ 0 0 1 | 1 0 0 ]\n[ 1 1 0 | 0 0 0 ]"),
    (36, "[ 0 0 0 | 0 1 1 ]\n[ 1 0 0 | 0 0 1 ]\n[ 1 1 0 | 0 0 0 ]"),
    (12, "[ 0 0 1 | 0 1 0 ]\n[ 0 1 0 | 1 0 0 ]\n[ 1 0 0 | 0 0 1 ]"),
]

# Degree-6 (3,3,2): the five higher weights hit by the raising operators,
# their weight-space sizes, and minimal representatives.
LEMMA12_WEIGHTS = [
    (
        (2, -1, 0, 0, 0),
        204,
        "[ 0 0 0 | 0 1 2 ]\n[ 0 1 0 | 0 0 0 ]\n[ 2 0 0 | 0 0 0 ]",
    ),
    (
        (-1, 2, 0, 0, 0),
        204,
        "[ 0 0 0 | 0 0 2 ]\n[ 0 2 0 | 1 0 0 ]\n[ 1 0 0 | 0 0 0 ]",
    ),
    (
        (0, 0, 2, -1, 0),
        204,
        "[ 0 0 0 | 0 0 2 ]\n[ 0 1 0 | 1 0 0 ]\n[ 2 0 0 | 0 0 0 ]",
    ),
    (
        (0, 0, -1, 2, 0),
        204,
        "[ 0 0 0 | 0 1 1 ]\n[ 0 1 0 | 0 1 0 ]\n[ 2 0 0 | 0 0 0 ]",
    ),
    (
        (0, 0, 0, 0, 2),
        225,
        "[ 0 0 0 | 0 0 2 ]\n[ 0 2 0 | 0 0 0 ]\n[ 2 0 0 | 0 0 0 ]",
    ),
]

RANK_LADDER_D6 = (204, 277, 283, 286, 288)
CODOMAINS_D6 = (204, 204, 204, 204, 225)

RANK_LADDER_D12 = (14442, 16673, 16727, 16744, 16748)
CODOMAINS_D12 = (14442, 14442, 14442, 14442, 15039)

RANK_LADDER_442_D8 = (9912, 13576, 14104, 14126, 14140, 14145, 14147)
CODOMAINS_442_D8 = (9912, 9912, 9912, 9912, 9912, 9912, 11520)

# Degree-12 (3,3,2) hyperdeterminant census:
# (coefficient, multiplicity, orbit ids).
CENSUS_D12 = [
    (-104, 18, (153,)),
    (-68, 36, (150,)),
    (-62, 36, (100,)),
    (-38, 36, (92,)),
    (-36, 72, (171,)),
    (-34, 144, (86,)),
    (-32, 72, (175,)),
    (-30, 24, (173, 178)),
    (-27, 12, (146,)),
    (-26, 252, (89, 134, 141, 147)),
    (-24, 168, (85, 93, 144)),
    (-22, 288, (108, 164)),
    (-20, 432, (71, 121, 129)),
    (-18, 144, (111,)),
    (-16, 369, (28, 39, 158, 174)),
    (-12, 648, (32, 95, 97, 130, 136)),
    (-10, 1116, (9, 17, 58, 60, 79, 82, 101, 102, 118, 127, 137)),
    (-8, 1098, (13, 21, 27, 42, 45, 48, 50, 64, 73, 160, 165)),
    (-6, 942, (14, 19, 56, 65, 72, 76, 90, 94, 132)),
    (-4, 1224, (20, 26, 35, 46, 47, 54, 106, 154, 156, 159, 166)),
    (-2, 1224, (2, 3, 6, 36, 37, 53, 55, 57, 91, 155, 162, 170)),
    (1, 216, (1, 5, 114, 122)),
    (2, 1656, (10, 16, 22, 30, 33, 34, 41, 67, 68, 83, 87, 96, 104, 138)),
    (4, 1332, (4, 8, 12, 18, 29, 38, 40, 62, 77, 78, 84, 115, 116, 117,
               123, 124, 125, 126, 143)),
    (6, 972, (11, 24, 31, 43, 44, 63, 99, 110, 168)),
    (8, 540, (7, 15, 66, 119, 128)),
    (10, 612, (25, 51, 52, 105, 169, 177)),
    (12, 288, (107, 109, 172)),
    (16, 648, (69, 70, 80, 120, 140, 148)),
    (18, 792, (61, 81, 88, 112, 133, 139, 142, 145)),
    (20, 252, (23, 49, 59)),
    (22, 288, (75, 131)),
    (24, 144, (161,)),
    (26, 144, (113, 157)),
    (30, 72, (135,)),
    (36, 150, (74, 98, 151, 152)),
    (38, 72, (167,)),
    (44, 72, (149,)),
    (50, 72, (103,)),
    (54, 36, (163,)),
    (76, 36, (176,)),
]

# Spot rows of the published degree-12 orbit table (orbits 161-178):
# orbit id -> (coefficient, size, representative).
ORBIT_TABLE_D12_SPOT = {
    161: (24, 144,
          "[ 0 0 0 | 1 1 2 ]\n[ 1 1 1 | 0 1 0 ]\n[ 2 1 0 | 0 0 1 ]"),
    163: (54, 36,
          "[ 0 0 1 | 1 1 1 ]\n[ 0 1 1 | 1 1 0 ]\n[ 1 1 1 | 1 0 0 ]"),
    173: (-30, 12,
          "[ 0 0 2 | 1 1 0 ]\n[ 0 2 0 | 1 0 1 ]\n[ 2 0 0 | 0 1 1 ]"),
    176: (76, 36,
          "[ 0 0 2 | 1 1 0 ]\n[ 1 1 0 | 0 1 1 ]\n[ 1 1 0 | 1 0 1 ]"),
    178: (-30, 12,
          "[ 0 1 1 | 1 0 1 ]\n[ 1 1 0 | 0 1 1 ]\n[ 1 0 1 | 1 1 0 ]"),
}

# Degree-8 (4,4,2): orbit id -> (coefficient, size).  The published
# representatives are corrupt in places, but these triples are legible
# for all 28 rows and cross-check the census aggregates completely.
ORBIT_TABLE_442_D8 = {
    1: (1, 144),
    2: (-2, 144),
    3: (-1, 288),
    4: (1, 1152),
    5: (-2, 576),
    6: (3, 288),
    7: (2, 1152),
    8: (2, 576),
    9: (-3, 1152),
    10: (6, 24),
    11: (2, 288),
    12: (-8, 144),
    13: (-1, 1152),
    14: (-1, 576),
    15: (9, 192),
    16: (4, 36),
    17: (-1, 576),
    18: (4, 144),
    19: (4, 144),
    20: (-6, 288),
    21: (-2, 576),
    22: (-2, 576),
    23: (3, 1152),
    24: (3, 1152),
    25: (-2, 1152),
    26: (-2, 288),
    27: (14, 72),
    28: (-12, 144),
}

# The 2x2x2 hyperdeterminant, canonical terms (flat order, ascending).
HYPERDET_222_TERMS = [
    (1, (0, 0, 0, 2, 2, 0, 0, 0)),
    (-2, (0, 0, 1, 1, 1, 1, 0, 0)),
    (1, (0, 0, 2, 0, 0, 2, 0, 0)),
    (-2, (0, 1, 0, 1, 1, 0, 1, 0)),
    (-2, (0, 1, 1, 0, 0, 1, 1, 0)),
    (4, (0, 1, 1, 0, 1, 0, 0, 1)),
    (1, (0, 2, 0, 0, 0, 0, 2, 0)),
    (4, (1, 0, 0, 1, 0, 1, 1, 0)),
    (-2, (1, 0, 0, 1, 1, 0, 0, 1)),
    (-2, (1, 0, 1, 0, 0, 1, 0, 1)),
    (-2, (1, 1, 0, 0, 0, 0, 1, 1)),
    (1, (2, 0, 0, 0, 0, 0, 0, 2)),
]

WEIGHT_ZERO_COUNTS = {
    ((3, 3, 2), 0): 1,
    ((3, 3, 2), 6): 288,
    ((3, 3, 2), 7): 0,
    ((3, 3, 2), 12): 16749,
    ((4, 4, 2), 4): 144,
    ((4, 4, 2), 8): 14148,
    ((2, 2, 2), 4): 12,
}

# Long-running, opt-in only.
WEIGHT_ZERO_442_D12 = 677232

DEGREE_INFO = {
    (3, 3, 2): (6, 12),
    (4, 4, 2): (4, 24),
    (2, 2, 2): (2, 4),
    (2, 2, 3): (6, None),
}
