"""Fixed data for the two pg(4,6,3) geometries on 45 points (1-based, as printed)."""

# point permutation of order 9: five 9-cycles
G1_CYCLES = [list(range(9 * i + 1, 9 * i + 10)) for i in range(5)]

# one representative per line orbit; every orbit has length 9
G1_REPRESENTATIVES = [
    (9, 11, 22, 34, 42),
    (1, 2, 18, 22, 30),
    (1, 3, 15, 27, 42),
    (11, 12, 14, 19, 30),
    (10, 19, 40, 42, 45),
    (1, 5, 19, 32, 41),
    (19, 28, 29, 34, 44),
]
G1_ORBIT_LENGTHS = [9] * 7

G1_PARALLEL_CLASSES = [
    (7, 10, 13, 17, 36, 41, 42, 48, 62),
    (2, 12, 14, 17, 31, 37, 45, 52, 57),
    (3, 13, 15, 18, 32, 37, 38, 53, 58),
    (5, 26, 28, 33, 45, 47, 48, 50, 58),
    (2, 23, 30, 34, 42, 47, 53, 54, 55),
    (6, 12, 16, 18, 35, 40, 41, 47, 61),
    (3, 17, 19, 22, 23, 28, 44, 59, 61),
    (2, 16, 21, 22, 27, 36, 43, 58, 60),
    (6, 11, 22, 25, 26, 31, 38, 55, 62),
    (9, 14, 19, 20, 25, 34, 41, 56, 58),
    (9, 10, 12, 15, 29, 43, 44, 50, 55),
    (9, 21, 28, 32, 40, 51, 52, 54, 62),
    (4, 25, 32, 36, 44, 46, 47, 49, 57),
    (6, 27, 29, 34, 37, 48, 49, 51, 59),
    (7, 19, 30, 35, 38, 49, 50, 52, 60),
    (8, 11, 14, 18, 28, 42, 43, 49, 63),
    (7, 12, 23, 26, 27, 32, 39, 56, 63),
    (5, 11, 15, 17, 34, 39, 40, 46, 60),
    (8, 20, 31, 36, 39, 50, 51, 53, 61),
    (4, 10, 14, 16, 33, 38, 39, 54, 59),
    (5, 10, 21, 24, 25, 30, 37, 61, 63),
    (4, 18, 20, 23, 24, 29, 45, 60, 62),
    (3, 24, 31, 35, 43, 46, 48, 54, 56),
    (8, 13, 19, 24, 27, 33, 40, 55, 57),
    (1, 2, 3, 4, 5, 6, 7, 8, 9),
    (1, 22, 29, 33, 41, 46, 52, 53, 63),
    (1, 15, 20, 21, 26, 35, 42, 57, 59),
    (1, 11, 13, 16, 30, 44, 45, 51, 56),
]

# dual classes: each entry is a set of points of G1 (lines of the dual)
G1_DUAL_PARALLEL_CLASSES = [
    (19, 20, 21, 22, 23, 24, 25, 26, 27),
    (6, 9, 10, 15, 25, 30, 32, 43, 44),
    (4, 7, 13, 17, 23, 28, 30, 41, 42),
    (2, 8, 12, 17, 27, 32, 34, 37, 45),
    (2, 5, 11, 15, 21, 28, 35, 39, 40),
    (5, 8, 14, 18, 24, 29, 31, 42, 43),
    (3, 9, 13, 18, 19, 33, 35, 37, 38),
    (3, 6, 12, 16, 22, 29, 36, 40, 41),
    (1, 4, 10, 14, 20, 34, 36, 38, 39),
    (1, 7, 11, 16, 26, 31, 33, 44, 45),
]

# point permutation of order 6 with cycle type 6^6 3 2^2 1^2
G2_CYCLES = [list(range(6 * i + 1, 6 * i + 7)) for i in range(6)] + [
    [37, 38, 39],
    [40, 41],
    [42, 43],
    [44],
    [45],
]

G2_REPRESENTATIVES = [
    (14, 22, 30, 35, 40),
    (12, 25, 34, 38, 40),
    (1, 21, 28, 35, 45),
    (1, 13, 26, 27, 43),
    (1, 9, 18, 30, 34),
    (1, 8, 23, 39, 42),
    (1, 11, 12, 22, 32),
    (1, 16, 17, 36, 38),
    (1, 10, 15, 24, 33),
    (7, 10, 27, 30, 44),
    (13, 16, 20, 23, 44),
    (19, 21, 23, 40, 43),
    (37, 38, 39, 44, 45),
]
# line orbit lengths read off the cycle structure of the induced line permutation
G2_ORBIT_LENGTHS = [6] * 9 + [3, 3, 2, 1]

G2_PARALLEL_CLASS = (25, 26, 27, 28, 29, 30, 61, 62, 63)

G2_PARALLEL_CLASS_LINES = [
    (1, 9, 18, 30, 34),
    (2, 10, 13, 25, 35),
    (3, 11, 14, 26, 36),
    (4, 12, 15, 27, 31),
    (5, 7, 16, 28, 32),
    (6, 8, 17, 29, 33),
    (19, 21, 23, 40, 43),
    (20, 22, 24, 41, 42),
    (37, 38, 39, 44, 45),
]

G2_DUAL_PARALLEL_CLASSES = [
    (31, 32, 33, 34, 35, 36, 42, 43, 44),
    (2, 8, 15, 20, 21, 26, 30, 32, 38),
    (5, 11, 18, 23, 24, 27, 29, 35, 38),
    (6, 12, 13, 19, 24, 28, 30, 36, 39),
    (4, 10, 17, 22, 23, 26, 28, 34, 37),
    (8, 10, 12, 14, 16, 18, 41, 43, 45),
    (1, 7, 14, 19, 20, 25, 29, 31, 37),
    (7, 9, 11, 13, 15, 17, 40, 42, 45),
    (1, 2, 3, 4, 5, 6, 40, 41, 44),
    (3, 9, 16, 21, 22, 25, 27, 33, 39),
]
