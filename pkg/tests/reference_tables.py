"""Published reference values the suite checks against.

Compact matching rows use the same rendering as
:func:`unknotone.matching.format_compact`: the first (D+1)/2 entries with
leading and trailing zero runs removed and the quarter-point entry in
brackets.  ``EVEN_POSITIVE_ROWS`` lists, per knot, the determinant and the
complete set of even positive matchings; ``EVEN_ROWS_NOT_POSITIVE`` the
knots whose only even matchings fail positivity; ``NO_EVEN_MATCHING`` the
knots with no even matching at all.
"""

# --- knots whose unique even positive matchings are published ------------

EVEN_POSITIVE_ROWS: dict[str, tuple[int, list[str]]] = {
    # eight- and nine-crossing knots
    "8_3": (17, ["2, [2]"]),
    "8_4": (19, ["2, [2], 2, 2"]),
    "8_6": (23, ["2, [2], 2, 2"]),
    "8_10": (27, ["2, 2, [4], 2, 2, 2"]),
    "8_12": (29, ["2, 2, 2, [4], 2, 2"]),
    "9_8": (31, ["2, 2, 2, [4], 4, 2, 2, 2"]),
    "9_25": (47, ["2, 2, 2, 4, 4, [6], 4, 4, 4, 2, 2, 2"]),
    "9_29": (51, ["2, 2, 2, 2, 4, 4, 6, [6], 6, 4, 4, 4, 2, 2, 2, 2"]),
    "9_32": (59, ["2, 2, 2, 2, 4, 4, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2, 2"]),
    "9_33": (
        61,
        [
            "2, 2, 2, 2, 4, 4, 4, 6, 6, [8], 6, 6, 4, 4, 2, 2, 2, 2",
            "2, 2, 2, 2, 4, 4, 4, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2, 2",
        ],
    ),
    # ten-crossing alternating knots; 10_58 and 10_77 have two rows each
    "10_48": (49, ["2, 2, 2, 2, 4, 4, 4, [6], 6, 4, 2, 2, 2, 2"]),
    "10_51": (67, ["2, 2, 2, 4, 4, 4, 6, 6, 8, [8], 6, 6, 6, 4, 4, 4, 2, 2, 2, 2, 2"]),
    "10_52": (59, ["2, 2, 2, 2, 4, 4, 4, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2, 2, 0, 2"]),
    "10_54": (47, ["2, 2, 2, 4, 4, 6, [6], 4, 4, 4, 2, 2, 2, 2, 2"]),
    "10_57": (
        79,
        ["2, 2, 2, 2, 2, 4, 4, 6, 6, 6, 8, 8, [10], 8, 8, 8, 6, 6, 4, 4, 4, 2, 2, 2, 2, 2"],
    ),
    "10_58": (
        65,
        [
            "2, 2, 2, 4, 4, 4, 6, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2",
            "2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 6, [8], 8, 6, 6, 4, 4, 4, 2, 2, 2",
        ],
    ),
    "10_64": (51, ["2, 2, 4, 4, 4, 6, [6], 6, 4, 4, 2, 2, 2, 2, 2"]),
    "10_70": (
        67,
        ["2, 2, 2, 2, 4, 4, 4, 6, 6, 8, [8], 8, 6, 6, 4, 4, 4, 2, 2, 2, 2, 0, 2"],
    ),
    "10_77": (
        63,
        [
            "2, 2, 2, 4, 4, 6, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2, 2, 2",
            "2, 2, 2, 4, 4, 4, 6, 6, [8], 6, 6, 6, 4, 4, 4, 2, 2, 2",
        ],
    ),
    "10_79": (61, ["2, 0, 2, 2, 2, 4, 4, 4, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2"]),
    "10_81": (
        85,
        [
            "2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6, 8, 8, 10, [10], 10, 8, 8, 6, 6, 4, 4, 4, 4, "
            "2, 2, 2, 2"
        ],
    ),
    "10_83": (
        83,
        [
            "2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 8, 8, 8, [10], 10, 8, 8, 6, 6, 6, 4, 4, 4, 2, "
            "2, 2, 2, 2"
        ],
    ),
    "10_87": (
        81,
        [
            "2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 6, 8, 8, 10, [10], 8, 8, 8, 6, 6, 4, 4, 4, 2, "
            "2, 2, 2, 2"
        ],
    ),
    "10_90": (
        77,
        [
            "2, 0, 2, 2, 2, 2, 4, 4, 4, 6, 6, 6, 8, 8, [10], 8, 8, 6, 6, 6, 4, 4, 4, 2, "
            "2, 2, 2"
        ],
    ),
    "10_93": (67, ["2, 2, 2, 2, 4, 4, 6, 6, 6, 8, [8], 8, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2, 2"]),
    "10_94": (71, ["2, 2, 2, 4, 4, 4, 6, 6, 8, 8, [8], 8, 6, 6, 6, 4, 4, 4, 2, 2, 2, 2, 2"]),
    "10_96": (
        93,
        [
            "2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 6, 8, 8, 10, 10, [12], 10, 10, 8, 8, 6, 6, 4, "
            "4, 4, 4, 2, 2, 2, 2"
        ],
    ),
    "10_110": (
        83,
        [
            "2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 8, 8, 10, [10], 10, 8, 8, 6, 6, 6, 4, 4, 4, 4, "
            "2, 2, 2, 2"
        ],
    ),
    "10_112": (
        87,
        [
            "2, 2, 2, 2, 2, 4, 4, 4, 6, 6, 8, 8, 8, 10, [10], 10, 10, 8, 8, 6, 6, 6, 4, 4, "
            "4, 2, 2, 2, 2, 2"
        ],
    ),
    "10_117": (
        103,
        [
            "2, 2, 2, 2, 2, 4, 4, 4, 4, 6, 6, 8, 8, 8, 10, 10, 12, [12], 12, 10, 10, 10, "
            "8, 8, 6, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2, 2"
        ],
    ),
    # non-alternating ten-crossing knots with certified plumbing forms
    "10_125": (11, ["[2], 2"]),
    "10_126": (19, ["[2], 2"]),
    "10_130": (17, ["2, 2, [2], 2"]),
    "10_135": (37, ["2, 2, 2, 4, [4], 4, 2, 2", "2, 2, 2, 2, 4, [4], 4, 2, 2, 2"]),
    "10_138": (35, ["2, 2, 2, 4, [4], 4, 2, 2, 2, 2"]),
    "10_148": (31, ["2, 2, [4], 2, 2, 2"]),
    "10_151": (43, ["2, 2, 2, 4, 4, [6], 4, 4, 2, 2, 2, 2"]),
    "10_158": (45, ["2, 2, 2, 2, 4, 4, [6], 4, 4, 2, 2, 2"]),
    "10_162": (35, ["2, 2, 4, [4], 4, 2, 2, 2"]),
}

# --- knots whose even matchings all fail positivity ----------------------

EVEN_ROWS_NOT_POSITIVE: dict[str, tuple[int, list[str]]] = {
    "9_5": (23, ["-2, 0, 0, 0, 2, [2], 2"]),
    "10_68": (57, ["2, 2, 2, 4, 4, 4, 6, [6], 6, 4, 4, 4, 2, 2, 2, 0, 0, 0, 0, 0, -2"]),
}

# --- knots with no even matching at all ----------------------------------

NO_EVEN_MATCHING: dict[str, int | None] = {
    "7_4": 15,
    "8_8": 25,
    "8_16": 35,
    "9_15": 39,
    "9_17": 39,
    "9_31": 55,
    "10_67": 63,
    "10_86": 71,
    "10_105": 91,
    "10_106": 75,
    "10_109": 85,
    "10_116": 95,
    "10_121": 115,
}

# Of the obstructed ten-crossing alternating knots, these four have no
# published two-step unknotting; the other twenty-four are unknotting
# number two exactly.
UNKNOTTING_TWO_OR_THREE = ["10_51", "10_54", "10_77", "10_79"]

UNKNOTTING_TWO = [
    "10_48", "10_52", "10_57", "10_58", "10_64", "10_67", "10_68", "10_70",
    "10_81", "10_83", "10_86", "10_87", "10_90", "10_93", "10_94", "10_96",
    "10_105", "10_106", "10_109", "10_110", "10_112", "10_116", "10_117",
    "10_121",
]

# The worked sign-refined example: determinant, signature, the symmetric
# row (only one crossing sign admits it), the torsion sequence it carries,
# and the companion polynomial, which is the (7,4) torus knot polynomial.
SIGN_REFINED_EXAMPLE = {
    "knot": "9_33",
    "signature": 0,
    "symmetric_row": "2, 2, 2, 2, 4, 4, 4, 6, 6, [8], 6, 6, 4, 4, 4, 2, 2, 2, 2",
    "torsion": (4, 3, 2, 2, 2, 1, 1, 1, 1, 0),
    "alexander_a0": -1,
    "alexander_higher": (0, 1, 0, -1, 1, 0, 0, -1, 1),
}


def parse_compact(text: str) -> tuple[list[int], int]:
    """Split a compact row into its values and the bracket position."""
    values, bold = [], None
    for i, token in enumerate(token.strip() for token in text.split(",")):
        if token.startswith("["):
            bold = i
            token = token[1:-1]
        values.append(int(token))
    assert bold is not None, text
    return values, bold
