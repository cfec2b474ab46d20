import itertools
import math

import numpy as np
import pytest

from textspace.bell import (
    ALPHABET,
    PRIMED,
    SETTING_PAIRS,
    UNPRIMED,
    GroupSizeNot4,
    InvalidCharacter,
    InvalidLetter,
    NoQuadruples,
    NotInQ,
    PairRecord,
    WrongGroupOrder,
    chsh_score,
    decode_pairs,
    encode_pairs,
    f_value,
    g_value,
    letter_for,
    record_for,
    regroup,
    simulate_classical,
    simulate_quantum,
)

ROOT2 = math.sqrt(2.0)


class TestLetters:
    def test_f_table(self):
        plus = "adehilmp"
        for letter in ALPHABET:
            assert f_value(letter) == (1 if letter in plus else -1)

    def test_f_equals_bit_agreement_on_all_16(self):
        for letter in ALPHABET:
            record = record_for(letter)
            expected = 1 if record.outcome_a == record.outcome_b else -1
            assert f_value(letter) == expected

    def test_letter_f_is_primed_second_with_mismatch(self):
        assert record_for("f") == PairRecord(UNPRIMED, PRIMED, 1, -1)

    def test_letter_round_trip(self):
        for letter in ALPHABET:
            assert letter_for(record_for(letter)) == letter

    def test_invalid_letter(self):
        with pytest.raises(InvalidLetter):
            f_value("q")


class TestGValue:
    @pytest.mark.parametrize("quad,expected", [
        ("aeim", 2),
        ("bfjn", -2),
        ("aeip", 2),
        ("aein", 4),
    ])
    def test_paper_arithmetic(self, quad, expected):
        assert g_value(quad) == expected

    def test_values_in_even_range(self):
        for quad in itertools.product(*("abcd", "efgh", "ijkl", "mnop")):
            assert g_value("".join(quad)) in (-4, -2, 0, 2, 4)

    def test_not_in_q(self):
        with pytest.raises(NotInQ):
            g_value("aaim")


class TestRegroup:
    def test_pure_stream(self):
        parsed = regroup("aeim" * 5)
        assert len(parsed.quadruples) == 5
        assert parsed.skipped == 0

    def test_invalid_character_position(self):
        with pytest.raises(InvalidCharacter) as exc:
            regroup("xaeim")
        assert exc.value.position == 0

    def test_leading_stray_letter_is_skipped(self):
        parsed = regroup("aaeim")
        assert parsed.quadruples == ("aeim",)
        assert parsed.skipped == 1

    def test_accounting_invariant(self):
        for text in ("", "abc", "aeimbb", "aaeimaeim", "mmmm"):
            parsed = regroup(text)
            assert 4 * len(parsed.quadruples) + parsed.skipped == len(text)


class TestChshScore:
    def test_constant_stream(self):
        mean_g, n_quads, skipped = chsh_score("aeim" * 1000)
        assert mean_g == 2.0
        assert n_quads == 1000
        assert skipped == 0

    def test_alternating_stream(self):
        mean_g, _, _ = chsh_score("aeimaein" * 500)
        assert mean_g == 3.0

    def test_no_quadruples(self):
        with pytest.raises(NoQuadruples):
            chsh_score("aab")


class TestCodec:
    def test_all_plus_group(self):
        group = [PairRecord(sa, sb, 1, 1) for sa, sb in SETTING_PAIRS]
        assert encode_pairs([group]) == "aeim"

    def test_round_trip_random_groups(self):
        rng = np.random.default_rng(51)
        groups = []
        for _ in range(1000):
            groups.append([
                PairRecord(sa, sb, int(1 - 2 * rng.integers(0, 2)),
                           int(1 - 2 * rng.integers(0, 2)))
                for sa, sb in SETTING_PAIRS
            ])
        text = encode_pairs(groups)
        assert regroup(text).skipped == 0
        assert decode_pairs(text) == groups

    def test_group_size_checked(self):
        with pytest.raises(GroupSizeNot4):
            encode_pairs([[PairRecord(UNPRIMED, UNPRIMED, 1, 1)]])

    def test_group_order_checked(self):
        group = [PairRecord(sa, sb, 1, 1) for sa, sb in reversed(SETTING_PAIRS)]
        with pytest.raises(WrongGroupOrder):
            encode_pairs([group])


@pytest.fixture(scope="module")
def groups():
    return simulate_quantum(100_000, seed=42)


class TestQuantumSimulation:
    def test_marginals_are_uniform(self, groups):
        outcomes = [g[0].outcome_a for g in groups]
        assert abs(np.mean(outcomes)) < 0.02

    def test_per_setting_correlations(self, groups):
        expected = (ROOT2 / 2, ROOT2 / 2, ROOT2 / 2, -ROOT2 / 2)
        for i, target in enumerate(expected):
            corr = np.mean([g[i].outcome_a * g[i].outcome_b for g in groups])
            assert corr == pytest.approx(target, abs=0.02)

    def test_chsh_score_near_tsirelson(self, groups):
        mean_g, n_quads, skipped = chsh_score(encode_pairs(groups))
        assert n_quads == 100_000
        assert skipped == 0
        assert mean_g == pytest.approx(2 * ROOT2, abs=0.05)

    def test_deterministic_given_seed(self):
        assert simulate_quantum(50, seed=7) == simulate_quantum(50, seed=7)
        assert simulate_quantum(50, seed=7) != simulate_quantum(50, seed=8)


class TestClassicalSimulation:
    def test_all_plus_strategy(self):
        groups = simulate_classical(100, seed=0, strategy=(1, 1, 1, 1))
        text = encode_pairs(groups)
        assert regroup(text).quadruples == ("aeim",) * 100
        assert chsh_score(text)[0] == 2.0

    def test_mixed_sign_strategy(self):
        groups = simulate_classical(10, seed=0, strategy=(1, 1, 1, -1))
        for group in groups:
            quad = "".join(letter_for(r) for r in group)
            assert g_value(quad) == 2

    def test_all_16_deterministic_strategies_bounded(self):
        for strategy in itertools.product((1, -1), repeat=4):
            group = simulate_classical(1, seed=0, strategy=strategy)[0]
            quad = "".join(letter_for(r) for r in group)
            assert g_value(quad) in (-2, 2)

    def test_random_mixture_respects_bell_bound(self):
        groups = simulate_classical(100_000, seed=13)
        parsed = regroup(encode_pairs(groups))
        values = [g_value(q) for q in parsed.quadruples]
        assert set(values) <= {-2, 2}
        assert abs(np.mean(values)) <= 2.0
