"""Shared golden data: frozen reference counts for n = 0..11.

TABLE1_SW / TABLE1_SCW hold smooth-word and smooth-cyclic-word counts for
alphabets k = 3..7; TABLE2_SN holds smooth-necklace counts for k = 1..7.
Every cell is small enough for the brute-force oracle, which re-derives
the full grids in test_transfer.py; the faster pipelines are then held to
these rows exactly.
"""

TABLE1_SW = {
    3: [1, 3, 7, 17, 41, 99, 239, 577, 1393, 3363, 8119, 19601],
    4: [1, 4, 10, 26, 68, 178, 466, 1220, 3194, 8362, 21892, 57314],
    5: [1, 5, 13, 35, 95, 259, 707, 1931, 5275, 14411, 39371, 107563],
    6: [1, 6, 16, 44, 122, 340, 950, 2658, 7442, 20844, 58392, 163594],
    7: [1, 7, 19, 53, 149, 421, 1193, 3387, 9627, 27383, 77923, 221805],
}

TABLE1_SCW = {
    3: [1, 3, 7, 15, 35, 83, 199, 479, 1155, 2787, 6727, 16239],
    4: [1, 4, 10, 22, 54, 134, 340, 872, 2254, 5854, 15250, 39802],
    5: [1, 5, 13, 29, 73, 185, 481, 1265, 3361, 8993, 24193, 65345],
    6: [1, 6, 16, 36, 92, 236, 622, 1658, 4468, 12132, 33146, 90998],
    7: [1, 7, 19, 43, 111, 287, 763, 2051, 5575, 15271, 42099, 116651],
}

TABLE2_SN = {
    1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    2: [1, 2, 3, 4, 6, 8, 14, 20, 36, 60, 108, 188],
    3: [1, 3, 5, 7, 12, 19, 39, 71, 152, 315, 685, 1479],
    4: [1, 4, 7, 10, 18, 30, 65, 128, 293, 658, 1544, 3622],
    5: [1, 5, 9, 13, 24, 41, 91, 185, 435, 1009, 2445, 5945],
    6: [1, 6, 11, 16, 30, 52, 117, 242, 577, 1360, 3347, 8278],
    7: [1, 7, 13, 19, 36, 63, 143, 299, 719, 1711, 4249, 10611],
}
