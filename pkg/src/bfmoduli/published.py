"""Reference values as printed in the source tables and sequence.

Values are in units of dim G.  ``EMPTY`` marks a negative virtual dimension.
Each table entry is a list of pieces ``(lo, hi, value, text)`` valid for
``lo <= param <= hi`` (``None`` = unbounded); ``value`` is either ``EMPTY``
or a tuple of polynomial coefficients in the family parameter, constant
term first.  Transcribed verbatim, typos included.
"""
from fractions import Fraction as F

EMPTY = "empty"

_FIXED = lambda v, text=None: [(None, None, (F(v),), text or str(v))]  # noqa: E731

TABLES = {
    3: {
        "S4": [(None, None, EMPTY, "∅")],
        "CP2": _FIXED(0),
        "S2xSigma_g": [(0, 0, EMPTY, "∅"), (1, None, (F(-2), F(2)), "2(g-1)")],
        "K3": _FIXED(12),
        "K3_Z2": _FIXED(6),
        "K3_Z2xZ2": _FIXED(3),
        "E(n)": [(1, None, (F(0), F(6)), "6n")],
        "S_d": [(1, 1, (F(0),), "0"), (2, 2, EMPTY, "∅"),
                (3, None, (F(0), F(-5), F(2)), "d(2d-5)")],
    },
    6: {
        "S4": [(None, None, EMPTY, "∅")],
        "CP2": _FIXED(1),
        "S2xSigma_g": [(0, 0, EMPTY, "∅"), (1, None, (F(-4, 3), F(4, 3)), "4/3(g-1)")],
        "K3": _FIXED(24),
        "K3_Z2": _FIXED(12),
        "K3_Z2xZ2": _FIXED(4),
        "E(n)": [(1, None, (F(0), F(12)), "12n")],
        "S_d": [(1, 1, (F(1),), "1"), (2, 2, EMPTY, "∅"),
                (3, None, (F(0), F(-4), F(4, 3), F(1, 3)), "1/3 d[d^2+4(d-3)]")],
    },
    15: {
        "S4": [(None, None, EMPTY, "∅")],
        "CP2": _FIXED(2),
        "S2xSigma_g": [(0, 0, EMPTY, "∅"), (1, None, (F(-2, 3), F(2, 3)), "2/3(g-1)")],
        "K3": _FIXED(36),
        "K3_Z2": _FIXED(18),
        "K3_Z2xZ2": _FIXED(9),
        "E(n)": [(1, None, (F(0), F(18)), "18n")],
        "S_d": [(1, 1, (F(2),), "2"), (2, 2, EMPTY, "∅"),
                (3, None, (F(0), F(-13, 3), F(2, 3), F(2, 3)), "1/3 d[2d(d+1)-13]")],
    },
}

# (n, printed m) for h1 = n * 3 dim G on CP2; n = 1 sits at infinity.
SEQUENCE_TEXT = (
    "inf -9 -6 -5 -9/2 -21/5 -4 -27/7 -15/4 -11/3 "
    "-18/5 -39/11 -7/2 -45/3 -24/7 -17/5 -27/8 -57/17 -10/3 -63/19 "
    "-33/10 -23/7 -36/11 -75/23 -13/4 -81/25 -42/13 -29/9 -45/14 -93/29 "
    "-16/5 -99/31 -51/16 -35/11 -54/17 -111/35 -19/6 -117/37 -60/19 -41/13 "
    "-63/20 -129/41 -22/27 -135/43 -69/22 -47/15 -72/23 -147/47 -25/8 -153/49"
).split()
SEQUENCE = {n: text for n, text in enumerate(SEQUENCE_TEXT, start=1)}

# Printed closed forms that conflict with consistency checks elsewhere.
S_D_CHI_TEXT = "d(6-d+d^2)"
S_D_CHI_POLY = (F(0), F(6), F(-1), F(1))
LAMBDA_OF_M_TEXT = "m/(9+3m)"
SEQUENCE_UNITS_TEXT = "h1 = n in [dimG/3] units"
# Range quoted for CP2 next to the global curve plot; semantics unclear.
CP2_RANGE_TEXT = "{-21, 15}"
