"""Published values the computations are checked against."""

from fractions import Fraction as Fr

GROUP_ORDERS = {"H": 32, "G6": 288, "G8": 1152, "G12": 7200}

# group generated by G and extra printed matrices -> order
EXTENSION_ORDERS = {("G6", ("C",)): 576, ("G6", ("C", "C'")): 1152, ("G12", ("C",)): 14400}

# Poincare series coefficients at t^0, t^2, ..., t^14
MOLIEN_EVEN = {
    "H": [1, 1, 5, 6, 15, 19, 35, 44],
    "G6": [1, 1, 1, 2, 3, 3, 7, 8],
    "G8": [1, 1, 1, 1, 2, 2, 3, 3],
    "G12": [1, 1, 1, 1, 1, 1, 2, 2],
}

GL4_CLASS_SIZES_H = [1, 1, 12, 18]

# lambda -> number of nodes on S_n + lambda Q^(n/2)
SINGULAR_MEMBERS = {
    6: {Fr(-1): 12, Fr(-2, 3): 48, Fr(-7, 12): 48, Fr(-1, 4): 12},
    8: {Fr(-1): 24, Fr(-3, 4): 72, Fr(-9, 16): 144, Fr(-5, 9): 96},
    12: {Fr(-3, 32): 300, Fr(-22, 243): 600, Fr(-2, 25): 360, Fr(0): 60},
}

# number of distinct fix lines per class.  The G8 entry printed as
# "pi3pi4sigma4, sigma2pi3'pi4', 36" is read as 36 lines for each class.
FIX_LINE_COUNTS = {
    "G6": {"sigma24": 18, "pi3pi3'": 16, "pi3pi3'^2": 16},
    "G8": {"sigma24": 18, "pi3pi3'": 32, "pi3pi4pi3'pi4'": 72, "pi3pi4sigma4": 36, "sigma2pi3'pi4'": 36},
    "G12": {"sigma24": 450, "pi3pi3'": 200, "pi5pi5'": 72},
}

# (class label, n, lambda) -> (lines l, points per line pi, points p, lines per point)
CONFIGURATIONS = {
    ("sigma24", 6, Fr(-1)): (18, 2, 12, 3),
    ("sigma24", 6, Fr(-1, 4)): (18, 2, 12, 3),
    ("sigma24", 8, Fr(-1)): (18, 4, 24, 3),
    ("sigma24", 8, Fr(-3, 4)): (18, 4, 72, 1),
    ("sigma24", 12, Fr(-3, 32)): (450, 2, 300, 3),
    ("sigma24", 12, Fr(-22, 243)): (450, 4, 600, 3),
    ("sigma24", 12, Fr(-2, 25)): (450, 4, 360, 5),
    ("sigma24", 12, Fr(0)): (450, 2, 60, 15),
    ("pi3pi3'", 6, Fr(-1)): (16, 3, 12, 4),
    ("pi3pi3'", 6, Fr(-2, 3)): (16, 3, 48, 1),
    ("pi3pi3'", 8, Fr(-1)): (32, 3, 24, 4),
    ("pi3pi3'", 8, Fr(-5, 9)): (32, 3, 96, 1),
    ("pi3pi3'", 12, Fr(-3, 32)): (200, 6, 300, 4),
    ("pi3pi3'", 12, Fr(-22, 243)): (200, 3, 600, 1),
    ("pi3pi3'", 12, Fr(0)): (200, 3, 60, 10),
    ("pi3pi3'^2", 6, Fr(-7, 12)): (16, 3, 48, 1),
    ("pi3pi3'^2", 6, Fr(-1, 4)): (16, 3, 12, 4),
    ("pi3pi4sigma4", 8, Fr(-3, 4)): (36, 4, 72, 2),
    ("pi3pi4sigma4", 8, Fr(-9, 16)): (36, 4, 144, 1),
    ("pi3pi4pi3'pi4'", 8, Fr(-1)): (72, 2, 24, 6),
    ("pi3pi4pi3'pi4'", 8, Fr(-9, 16)): (72, 2, 144, 1),
    ("pi3pi4pi3'pi4'", 8, Fr(-5, 9)): (72, 4, 96, 3),
    ("pi5pi5'", 12, Fr(-2, 25)): (72, 5, 360, 1),
    ("pi5pi5'", 12, Fr(0)): (72, 5, 60, 6),
}

BOUNDS = {6: (75, 144), 8: (196, 576), 12: (726, 3600)}
MU12_CONTEXT = "600 ≤ μ(12) ≤ 645"
