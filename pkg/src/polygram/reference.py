"""Published reference values used by the verification suite.

Tables are keyed (k, n) and hold rows n = 1..10 transcribed as printed.
"""

TABLE1_PRINTED_ROWS = {
    1: (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    3: (1, 2, 1, 0, 0, 0, 0, 0, 0, 0),
    4: (1, 4, 3, 1, 0, 0, 0, 0, 0, 0),
    5: (1, 6, 8, 4, 1, 0, 0, 0, 0, 0),
    6: (1, 9, 17, 13, 5, 1, 0, 0, 0, 0),
    7: (1, 12, 32, 34, 19, 6, 1, 0, 0, 0),
    8: (1, 16, 551, 78, 58, 26, 7, 1, 0, 0),
    9: (1, 20, 89, 160, 154, 90, 34, 8, 1, 0),
    10: (1, 25, 136, 305, 365, 269, 131, 43, 9, 1),
}

TABLE2_PRINTED_ROWS = {
    1: (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (2, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    3: (2, 4, 1, 0, 0, 0, 0, 0, 0, 0),
    4: (3, 10, 6, 1, 0, 0, 0, 0, 0, 0),
    5: (2, 18, 22, 8, 1, 0, 0, 0, 0, 0),
    6: (4, 32, 59, 38, 10, 1, 0, 0, 0, 0),
    7: (2, 44, 132, 132, 58, 12, 1, 0, 0, 0),
    8: (4, 70, 264, 374, 245, 82, 14, 1, 0, 0),
    9: (3, 84, 469, 916, 836, 406, 110, 16, 1, 0),
    10: (4, 126, 808, 2015, 2438, 1614, 623, 142, 18, 1),
}


def _by_cell(rows_by_n):
    return {(k, n): row[k - 1] for n, row in rows_by_n.items() for k in range(1, len(row) + 1)}


TABLE1_PRINTED = _by_cell(TABLE1_PRINTED_ROWS)
TABLE1 = dict(TABLE1_PRINTED)
TABLE1[(3, 8)] = 55  # misprint
TABLE2 = _by_cell(TABLE2_PRINTED_ROWS)

A006958_START = (1, 2, 4, 9, 20, 46, 105, 242, 557, 1285)

# V_2, V_3, V_4 listings as printed, in this package's rendering.
V2_PRINTED = ("zeta(x1, x2-1)", "zeta(x2, x1-1)", "zeta(x1+x2-1)")

V3_PRINTED = (
    "zeta(x1, x2-1, x3-1)", "zeta(x1, x3, x2-2)", "zeta(x2, x1-1, x3-1)",
    "zeta(x2, x3-1, x1-1)", "zeta(x3, x1, x2-2)", "zeta(x3, x2-1, x1-1)",
    "zeta(x1+x2-1, x3-1)", "zeta(x1+x2, x3-2)", "zeta(x2+x3-1, x1-1)",
    "zeta(x3, x1+x2-2)", "zeta(x2, x1+x2-2)", "zeta(x1, x2+x3-2)",
    "zeta(x1+x2+x3-2)",
)

V4_PRINTED = (
    "zeta(x1, x2-1, x3-1, x4-1)", "zeta(x1, x2-1, x4, x3-2)",
    "zeta(x1, x3, x2-2, x4-1)", "zeta(x1, x3, x4-1, x2-2)",
    "zeta(x1, x4, x2-1, x3-2)", "zeta(x1, x4, x3-1, x2-2)",
    "zeta(x2, x1-1, x3-1, x4-1)", "zeta(x2, x1-1, x4, x3-2)",
    "zeta(x2, x3-1, x1-1, x4-1)", "zeta(x2-1, x3-1, x4-1, x1-1)",
    "zeta(x2, x4, x1-1, x3-2)", "zeta(x2, x4, x3-2, x1-1)",
    "zeta(x3, x2-1, x1-1, x4-1)", "zeta(x3, x2-1, x4-1, x1-1)",
    "zeta(x3, x1, x2-2, x4-1)", "zeta(x3, x1, x4-1, x2-2)",
    "zeta(x3, x4-1, x2-1, x1-1)", "zeta(x3, x4-1, x1, x2-2)",
    "zeta(x4, x2, x3-2, x1-1)", "zeta(x4, x2, x1-1, x3-2)",
    "zeta(x4, x3-1, x2-1, x1-1)", "zeta(x4, x3-1, x1, x2-2)",
    "zeta(x4, x1, x2-1, x3-2)", "zeta(x4, x1, x3-1, x2-2)",
    "zeta(x1+x2-1, x3-1, x4-1)", "zeta(x1+x2-1, x4, x3-2)",
    "zeta(x3, x1+x2-2, x4-1)", "zeta(x4, x1+x2-1, x3-2)",
    "zeta(x3, x4-1, x1+x2-2)", "zeta(x4, x3-1, x1+x2-2)",
    "zeta(x1+x3, x2-2, x4-1)", "zeta(x1+x3, x4-1, x2-2)",
    "zeta(x2, x1+x3-2, x4-1)", "zeta(x4, x1+x3-1, x2-2)",
    "zeta(x2, x4, x1+x3-3)", "zeta(x4, x2, x1+x3-3)",
    "zeta(x1+x4, x2-1, x3-2)", "zeta(x1+x4, x3-1, x2-2)",
    "zeta(x2, x1+x4-1, x3-2)", "zeta(x3, x1+x4-1, x2-2)",
    "zeta(x2, x3-1, x1+x4-2)", "zeta(x3, x2-1, x1+x4-2)",
    "zeta(x2+x3-1, x1-1, x4-1)", "zeta(x2+x3-1, x4-1, x1-1)",
    "zeta(x1, x2+x3-2, x4-1)", "zeta(x4, x2+x3-2, x1-1)",
    "zeta(x1, x4, x2+x3-3)", "zeta(x4, x1, x2+x3-3)",
    "zeta(x2+x4, x1-1, x3-2)", "zeta(x2+x4, x3-2, x1-1)",
    "zeta(x1, x2+x4-1, x3-2)", "zeta(x3, x2+x4-2, x1-1)",
    "zeta(x1, x3, x2+x4-3)", "zeta(x3, x1, x2+x4-3)",
    "zeta(x3+x4-1, x1, x2-2)", "zeta(x3+x4-1, x2-1, x1-1)",
    "zeta(x1, x3+x4-1, x2-2)", "zeta(x2, x3+x4-2, x1-1)",
    "zeta(x1, x2-1, x3+x4-2)", "zeta(x2, x1-1, x3+x4-2)",
    "zeta(x1+x2-1, x3+x4-2)", "zeta(x3+x4-1, x1+x2-2)",
    "zeta(x1+x3, x2+x4-3)", "zeta(x2+x4, x1+x3-3)",
    "zeta(x1+x4, x2+x3-3)", "zeta(x2+x3-1, x1+x4-2)",
    "zeta(x1+x2+x3-2, x4-1)", "zeta(x4, x1+x2+x3-3)",
    "zeta(x1+x2+x4-1, x3-2)", "zeta(x3, x1+x2+x4-3)",
    "zeta(x1+x3+x4-1, x2-2)", "zeta(x2, x1+x3+x4-3)",
    "zeta(x2+x3+x4-2, x1-1)", "zeta(x1, x2+x3+x4-3)",
    "zeta(x1+x2+x3+x4-3)",
)
