"""Reference data transcribed from the published classification tables."""

# Types excluded by the square test, with |det R| * K^2 as printed (factorised).
SQUARE_EXCLUDED = {
    "A6+A2": 3 * 7,
    "A6+2A1": 2**2 * 7,
    "A5+A3": 2**3 * 3,
    "A5+3A1": 2**4 * 3,
    "A4+A3+A1": 2**3 * 5,
    "A4+2A2": 3**2 * 5,
    "A4+A2+2A1": 2**2 * 3 * 5,
    "2A3+A2": 2**4 * 3,
    "A3+2A2+A1": 2**3 * 3**2,
    "A6+A1": 2**2 * 7,
    "A5+2A1": 2**4 * 3,
    "A4+A3": 2**3 * 5,
    "A4+A2+A1": 2**2 * 3 * 5,
    "A4+3A1": 2**4 * 5,
    "A3+2A2": 2**3 * 3**2,
    "A3+A2+2A1": 2**5 * 3,
    "3A2+A1": 2**2 * 3**3,
    "A6": 3 * 7,
    "A4+A2": 3**2 * 5,
    "A4+2A1": 2**2 * 3 * 5,
    "2A3": 2**4 * 3,
    "A3+A2+A1": 2**3 * 3**2,
    "A3+3A1": 2**5 * 3,
    "2A2+2A1": 2**2 * 3**3,
    "A5": 2**3 * 3,
    "A4+A1": 2**3 * 5,
    "A3+A2": 2**4 * 3,
    "2A2+A1": 2**3 * 3**2,
    "A2+3A1": 2**5 * 3,
    "A3+A1": 2**3 * 5,
    "2A2": 3**2 * 5,
    "A2+2A1": 2**2 * 3 * 5,
    "4A1": 2**4 * 5,
    "A3": 2**3 * 3,
    "3A1": 2**4 * 3,
    "A2": 3 * 7,
    "2A1": 2**2 * 7,
    "E6+2A1": 2**2 * 3,
    "D7+A1": 2**3,
    "D6+A2": 2**2 * 3,
    "D5+A2+A1": 2**3 * 3,
    "D5+3A1": 2**5,
    "D4+A4": 2**2 * 5,
    "D4+A3+A1": 2**5,
    "D4+A2+2A1": 2**4 * 3,
    "E6+A1": 2**2 * 3,
    "D7": 2**3,
    "D5+A2": 2**3 * 3,
    "D5+2A1": 2**5,
    "D4+A3": 2**5,
    "D4+A2+A1": 2**4 * 3,
    "D6": 2**2 * 3,
    "D5+A1": 2**3 * 3,
    "D4+2A1": 2**4 * 3,
    "D4+A1": 2**5,
    "D4": 2**2 * 5,
}

# Rank-9 types ruled out inside H + E8, in the order of the proof, with the prime used.
EVEN_OBSTRUCTED = [
    ("A6+A3", 7),
    ("A6+3A1", 7),
    ("A4+A3+A2", 5),
    ("A4+2A2+A1", 3),
    ("D7+A2", 3),
    ("D5+2A2", 3),
    ("D5+A2+2A1", 3),
    ("D4+A5", 3),
    ("D4+A4+A1", 5),
    ("D4+A3+A2", 3),
    ("D4+2A2+A1", 3),
    ("E6+3A1", 3),
]

# Rank < 9 types ruled out inside I_{1,L}.
ODD_OBSTRUCTED = [("D4+A2", 3), ("D4+2A2", 3)]

K_NEGATIVE = [
    "A8", "A7+A1", "A5+A2+A1", "2A4", "2A3+2A1", "4A2", "E8", "E7+A1", "E6+A2",
    "D8", "D6+2A1", "D5+A3", "2D4", "A7", "A5+A2", "2A3+A1", "E7", "D6+A1",
    "D4+3A1", "A5+A1", "3A2", "E6", "A3+2A1", "D5", "A4", "A2+A1", "A1",
]

K_TRIVIAL = [
    "A9", "A8+A1", "A7+A2", "A7+2A1", "A6+A2+A1", "A5+A4", "A5+A3+A1", "A5+2A2",
    "A5+A2+2A1", "2A4+A1", "A4+A3+2A1", "3A3", "2A3+3A1",
    "D9", "D8+A1", "D7+2A1", "D6+A3", "D6+A2+A1", "D6+3A1", "D5+A4", "D5+A3+A1",
    "D5+D4", "D4+A3+2A1", "2D4+A1",
    "E8+A1", "E7+A2", "E7+2A1", "E6+A3", "E6+A2+A1", "2A3+A2+A1", "A3+3A2",
]

UNKNOWN_REALIZATION = ["2A3+A2+A1", "A3+3A2"]

# Hilbert symbols evaluated in the published embedding argument.
HILBERT_VALUES = [
    ((7, -1), 7, -1),
    ((7, -2), 7, -1),
    ((-14, 1), 7, 1),
    ((5, -1), 5, 1),
    ((-5, 3), 5, -1),
    ((5, -2), 3, 1),
    ((-1, 3), 3, -1),
    ((-1, 1), 3, 1),
    ((-2, -2), 3, 1),
    ((1, -6), 3, 1),
    ((1, 5), 5, 1),
    ((5, -2), 5, -1),
    ((1, -3), 3, 1),
    ((3, -1), 3, -1),
    ((3, -2), 3, 1),
    ((-6, 1), 3, 1),
    ((3, 3), 3, -1),
    ((1, 1), 3, 1),
]

# Epsilon invariants quoted in the same proof: (type, prime, value).
EPSILON_VALUES = [
    ("A6", 7, 1), ("A3", 7, 1), ("A6+A1", 7, -1), ("2A1", 7, 1), ("A6+3A1", 7, -1),
    ("A6+A3", 7, -1),
    ("A4", 5, 1), ("A3", 5, 1), ("A4+A3", 5, 1), ("A2", 5, 1), ("A4+A3+A2", 5, -1),
    ("A4", 3, 1), ("A1", 3, 1), ("A4+A1", 3, 1), ("2A2", 3, -1), ("A4+2A2+A1", 3, -1),
    ("D7", 3, 1), ("A2", 3, 1), ("D7+A2", 3, -1),
    ("D5", 3, 1), ("D5+2A2", 3, -1),
    ("D5+A2", 3, -1), ("2A1", 3, 1), ("D5+A2+2A1", 3, -1),
    ("D4", 3, 1), ("A5", 3, -1), ("D4+A5", 3, -1),
    ("D4", 5, 1), ("D4+A4", 5, 1), ("A1", 5, 1), ("D4+A4+A1", 5, -1),
    ("D4+A2", 3, 1), ("A3", 3, 1), ("D4+A3+A2", 3, -1),
    ("D4+A1", 3, 1), ("D4+2A2+A1", 3, -1),
    ("E6", 3, -1), ("E6+A1", 3, -1), ("E6+3A1", 3, -1),
    ("D4+2A2", 3, -1),
]

# Discriminant square classes as used in the proof.
DISCRIMINANTS = {
    "A6": 7, "A3": -1, "A1": -2, "A4": 5, "A2": 3, "E6": 3, "D4": 1, "D5": -1,
    "D7": -1, "A5": -6, "A6+A1": -14, "2A1": 1, "A4+A3": -5, "D4+A4": 5,
    "E6+A1": -6, "D4+A2": 3, "2A2": 1, "D4+A1": -2, "A4+A1": -10,
}
