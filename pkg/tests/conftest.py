import numpy as np
import pytest

from textspace.corpus import TermDocMatrix, build_matrix

WOODCHUCK_SENTENCES = [
    "How much wood would a woodchuck chuck if a woodchuck could chuck wood?",
    "Woodchuck would chuck as much wood as a woodchuck could chuck if a "
    "woodchuck could chuck wood.",
    "Could woodchuck chuck 35 cubic feet of dirt?",
    "If a woodchuck could chuck wood woodchuck would chuck 700 pounds of wood.",
]

# the reference matrix omits "as", so the fixture excludes it explicitly
WOODCHUCK_EXCLUDE = frozenset({"as"})

WOODCHUCK_VOCAB = (
    "how", "much", "wood", "would", "a", "woodchuck", "chuck", "if", "could",
    "35", "cubic", "feet", "of", "dirt", "700", "pounds",
)

WOODCHUCK_A0 = np.array([
    [1, 0, 0, 0],
    [1, 1, 0, 0],
    [2, 2, 0, 2],
    [1, 1, 0, 1],
    [2, 2, 0, 1],
    [2, 3, 1, 2],
    [2, 3, 1, 2],
    [1, 1, 0, 1],
    [1, 2, 1, 1],
    [0, 0, 1, 0],
    [0, 0, 1, 0],
    [0, 0, 1, 0],
    [0, 0, 1, 1],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 0, 1],
], dtype=float)

REFERENCE_SINGULARS = (8.38, 2.52, 1.79, 1.04)

# reference rank-1 reduced matrix as printed (2-decimal precision)
REFERENCE_A1 = np.array([
    [0.26, 0.33, 0.08, 0.24],
    [0.61, 0.78, 0.19, 0.56],
    [1.74, 2.24, 0.56, 1.60],
    [0.87, 1.12, 0.28, 0.80],
    [1.48, 1.90, 0.48, 1.36],
    [2.17, 2.80, 0.71, 2.01],
    [2.17, 2.80, 0.71, 2.01],
    [0.87, 1.12, 0.28, 0.80],
    [1.30, 1.68, 0.42, 1.20],
    [0.08, 0.11, 0.02, 0.08],
    [0.08, 0.11, 0.02, 0.08],
    [0.08, 0.11, 0.02, 0.08],
    [0.30, 0.39, 0.09, 0.28],
    [0.08, 0.11, 0.02, 0.08],
    [0.21, 0.28, 0.07, 0.20],
    [0.21, 0.28, 0.07, 0.20],
])

# first row of the reference V (the dominant right singular vector), 2-decimal
REFERENCE_V1 = np.array([-0.52, -0.67, -0.17, -0.48])


@pytest.fixture(scope="session")
def woodchuck() -> TermDocMatrix:
    return build_matrix(WOODCHUCK_SENTENCES, exclude=WOODCHUCK_EXCLUDE)
