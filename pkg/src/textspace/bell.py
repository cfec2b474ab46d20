"""CHSH correlation analysis of 16-letter texts.

A pair measurement record (two detector settings, two binary outcomes) maps to
one of 16 letters 'a'..'p': the letter's row (blocks a-d, e-h, i-l, m-p) fixes
which settings were used, the position within the row fixes the outcome bits.
Texts regroup into quadruples drawing one letter per row, each quadruple is
scored by G = F(x1) + F(x2) + F(x3) - F(x4), and the running average <G>
separates classical sources (|<G>| <= 2) from quantum ones (up to 2*sqrt(2)).

Randomness contract: both simulators use numpy's default_rng (PCG64) seeded
with the given integer, drawing one array of group choices per setting pair in
row order; identical (seed, n_groups) always reproduces the same records.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TextspaceError

UNPRIMED = "unprimed"
PRIMED = "primed"

ALPHABET = "abcdefghijklmnop"

# quadruples visit the setting pairs in this fixed row order
SETTING_PAIRS = (
    (UNPRIMED, UNPRIMED),
    (UNPRIMED, PRIMED),
    (PRIMED, UNPRIMED),
    (PRIMED, PRIMED),
)

# measurement angles realizing the CHSH-optimal correlations cos(45 deg)
_ANGLES_A = {UNPRIMED: 0.0, PRIMED: math.pi / 2}
_ANGLES_B = {UNPRIMED: math.pi / 4, PRIMED: -math.pi / 4}

_OUTCOME_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


class InvalidLetter(TextspaceError):
    """Character outside 'a'..'p'."""


class InvalidCharacter(TextspaceError):
    """Text contains a character outside the alphabet."""

    def __init__(self, position: int, char: str):
        super().__init__(f"invalid character {char!r} at position {position}")
        self.position = position
        self.char = char


class NotInQ(TextspaceError):
    """String is not a row-ordered quadruple."""


class NoQuadruples(TextspaceError):
    """Regrouping produced no quadruples to score."""


class GroupSizeNot4(TextspaceError):
    """An encoding group does not hold exactly four records."""


class WrongGroupOrder(TextspaceError):
    """Records within a group are not in the fixed setting-pair order."""


@dataclass(frozen=True)
class PairRecord:
    """One joint measurement: settings on each side plus +/-1 outcomes."""

    setting_a: str
    setting_b: str
    outcome_a: int
    outcome_b: int


@dataclass(frozen=True)
class QuadrupleText:
    """A raw a-p string with its greedy parse into row-ordered quadruples."""

    raw: str
    quadruples: tuple[str, ...]
    skipped: int


def letter_row(letter: str) -> int:
    """Row 0-3 of the alphabet matrix: which setting pair the letter encodes."""
    pos = ALPHABET.find(letter)
    if pos < 0:
        raise InvalidLetter(f"{letter!r} is not in 'a'..'p'")
    return pos // 4


def letter_for(record: PairRecord) -> str:
    row = 2 * (record.setting_a == PRIMED) + (record.setting_b == PRIMED)
    col = 2 * (record.outcome_a == -1) + (record.outcome_b == -1)
    return ALPHABET[4 * row + col]


def record_for(letter: str) -> PairRecord:
    pos = ALPHABET.find(letter)
    if pos < 0:
        raise InvalidLetter(f"{letter!r} is not in 'a'..'p'")
    row, col = divmod(pos, 4)
    return PairRecord(
        setting_a=PRIMED if row & 2 else UNPRIMED,
        setting_b=PRIMED if row & 1 else UNPRIMED,
        outcome_a=-1 if col & 2 else 1,
        outcome_b=-1 if col & 1 else 1,
    )


def f_value(letter: str) -> int:
    """+1 when the two outcome bits agree, -1 when they differ."""
    record = record_for(letter)
    return 1 if record.outcome_a == record.outcome_b else -1


def g_value(quad: str) -> int:
    """F(x1) + F(x2) + F(x3) - F(x4) for a row-ordered quadruple."""
    if len(quad) != 4 or any(letter_row(c) != i for i, c in enumerate(quad)):
        raise NotInQ(f"{quad!r} does not draw one letter from each row in order")
    values = [f_value(c) for c in quad]
    return values[0] + values[1] + values[2] - values[3]


def _is_quadruple(window: str) -> bool:
    return all(letter_row(c) == i for i, c in enumerate(window))


def regroup(text: str) -> QuadrupleText:
    """Greedy left-to-right scan: consume a 4-letter window when it is row-ordered,
    otherwise skip one character and resync."""
    for pos, char in enumerate(text):
        if char not in ALPHABET:
            raise InvalidCharacter(pos, char)
    quadruples: list[str] = []
    skipped = 0
    cursor = 0
    while cursor < len(text):
        window = text[cursor:cursor + 4]
        if len(window) == 4 and _is_quadruple(window):
            quadruples.append(window)
            cursor += 4
        else:
            skipped += 1
            cursor += 1
    return QuadrupleText(raw=text, quadruples=tuple(quadruples), skipped=skipped)


def chsh_score(text: str) -> tuple[float, int, int]:
    """Average G over the regrouped quadruples of `text`."""
    parsed = regroup(text)
    if not parsed.quadruples:
        raise NoQuadruples("text regroups into zero quadruples")
    mean_g = sum(g_value(q) for q in parsed.quadruples) / len(parsed.quadruples)
    return mean_g, len(parsed.quadruples), parsed.skipped


def encode_pairs(groups: list[list[PairRecord]]) -> str:
    """Encode groups of four records (one per setting pair, in row order)."""
    letters: list[str] = []
    for g, group in enumerate(groups):
        if len(group) != 4:
            raise GroupSizeNot4(f"group {g} has {len(group)} records")
        for record, expected in zip(group, SETTING_PAIRS):
            if (record.setting_a, record.setting_b) != expected:
                raise WrongGroupOrder(
                    f"group {g}: got ({record.setting_a}, {record.setting_b}), "
                    f"expected {expected}"
                )
            letters.append(letter_for(record))
    return "".join(letters)


def decode_pairs(text: str) -> list[list[PairRecord]]:
    """Inverse of encode_pairs on texts that regroup with nothing skipped."""
    parsed = regroup(text)
    if parsed.skipped:
        raise NotInQ(f"{parsed.skipped} characters could not be decoded")
    return [[record_for(c) for c in quad] for quad in parsed.quadruples]


def simulate_quantum(n_groups: int, seed: int) -> list[list[PairRecord]]:
    """Sample groups from the singlet-like joint law p(o1, o2) = (1 + o1*o2*E)/4
    with E = cos(angle_a - angle_b) per setting pair."""
    if n_groups < 1:
        raise TextspaceError("n_groups must be >= 1")
    rng = np.random.default_rng(seed)
    per_setting: list[np.ndarray] = []
    for sa, sb in SETTING_PAIRS:
        corr = math.cos(_ANGLES_A[sa] - _ANGLES_B[sb])
        probs = np.array([1 + corr, 1 - corr, 1 - corr, 1 + corr]) / 4.0
        per_setting.append(rng.choice(4, size=n_groups, p=probs))
    groups: list[list[PairRecord]] = []
    for g in range(n_groups):
        group = []
        for (sa, sb), choices in zip(SETTING_PAIRS, per_setting):
            o1, o2 = _OUTCOME_PAIRS[choices[g]]
            group.append(PairRecord(sa, sb, o1, o2))
        groups.append(group)
    return groups


def simulate_classical(
    n_groups: int,
    seed: int,
    strategy: tuple[int, int, int, int] | None = None,
) -> list[list[PairRecord]]:
    """Local-hidden-variable source: outcomes are preassigned per setting.

    `strategy` is (a, a', b, b') with entries +/-1; None draws a fresh uniform
    strategy per group from the seeded generator. Every quadruple scores
    G = +/-2, so |<G>| <= 2 always.
    """
    if n_groups < 1:
        raise TextspaceError("n_groups must be >= 1")
    if strategy is not None and any(v not in (1, -1) for v in strategy):
        raise TextspaceError("strategy entries must be +1 or -1")
    rng = np.random.default_rng(seed)
    if strategy is None:
        tables = 2 * rng.integers(0, 2, size=(n_groups, 4)) - 1
    else:
        tables = np.tile(np.asarray(strategy), (n_groups, 1))
    groups: list[list[PairRecord]] = []
    for g in range(n_groups):
        a_u, a_p, b_u, b_p = (int(v) for v in tables[g])
        local_a = {UNPRIMED: a_u, PRIMED: a_p}
        local_b = {UNPRIMED: b_u, PRIMED: b_p}
        groups.append([
            PairRecord(sa, sb, local_a[sa], local_b[sb])
            for sa, sb in SETTING_PAIRS
        ])
    return groups


def read_bell_text(path: str) -> str:
    """Raw a-p text file; newlines are ignored."""
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read().replace("\n", "")
