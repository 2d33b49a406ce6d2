import pytest

from talkmeter.errors import EmptyInput
from talkmeter.meta import load_meta
from talkmeter.turns import (
    FIRST_HALF,
    SECOND_HALF,
    build_turns,
    split_halves,
    split_point,
    whole_segment,
)
from talkmeter.vtt import Utterance

from oracle import oracle_turns


def utt(index, speaker, start, end):
    return Utterance(index=index, speaker_id=speaker, start_s=start,
                     end_s=end, text=f"u{index}")


def seq(*items):
    return [utt(i, s, a, b) for i, (s, a, b) in enumerate(items)]


class TestBuildTurns:
    def test_merges_same_speaker_runs(self):
        utterances = seq(("A", 0, 2), ("A", 2, 5), ("B", 5, 7), ("A", 7, 9))
        turns = build_turns(utterances)
        assert [(t.speaker_id, t.start_s, t.end_s) for t in turns] == [
            ("A", 0, 5), ("B", 5, 7), ("A", 7, 9)]
        assert turns[0].utterance_indices == (0, 1)
        assert turns[0].summed_duration_s == 5.0

    def test_span_covers_max_member_end(self):
        # second utterance is contained in the first; span keeps max end
        utterances = seq(("A", 0, 10), ("A", 2, 4), ("B", 10, 12))
        turns = build_turns(utterances)
        assert turns[0].end_s == 10
        assert turns[0].duration_s == 10.0
        assert turns[0].summed_duration_s == 12.0

    def test_gap_break_splits_runs(self):
        utterances = seq(("A", 0, 2), ("A", 8, 10))
        assert len(build_turns(utterances)) == 1
        assert len(build_turns(utterances, gap_break_s=5.0)) == 2
        assert len(build_turns(utterances, gap_break_s=6.0)) == 1

    def test_adjacent_speakers_always_differ_without_gap_break(self):
        utterances = seq(("A", 0, 1), ("B", 1, 2), ("B", 2, 3), ("A", 3, 4))
        turns = build_turns(utterances)
        for a, b in zip(turns, turns[1:]):
            assert a.speaker_id != b.speaker_id

    def test_matches_oracle_on_random_sequences(self):
        import random
        rng = random.Random(42)
        for _ in range(200):
            t = 0.0
            items = []
            for i in range(rng.randint(1, 30)):
                d = rng.uniform(0.2, 8.0)
                items.append((rng.choice("ABC"), t, t + d))
                t += d + rng.choice([0.0, 0.0, 3.0])
            utterances = seq(*items)
            gap = rng.choice([None, 2.0])
            got = [
                (t.speaker_id, t.start_s, t.end_s, len(t.members))
                for t in build_turns(utterances, gap)
            ]
            assert got == oracle_turns(items, gap)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            build_turns([])


class TestSplitPoint:
    def test_changeover_wins(self):
        meta = load_meta({"meeting_id": "m", "recorded_duration_s": 600,
                          "changeover_s": 200})
        assert split_point(meta, seq(("A", 0, 500))) == 200

    def test_recorded_duration_midpoint(self):
        meta = load_meta({"meeting_id": "m", "recorded_duration_s": 600})
        assert split_point(meta, seq(("A", 0, 500))) == 300

    def test_observed_span_midpoint_fallback(self):
        meta = load_meta({"meeting_id": "m"})
        assert split_point(meta, seq(("A", 0, 100), ("B", 100, 500))) == 250


class TestSplitHalves:
    def test_bisected_turn_falls_first(self):
        # turn midpoint exactly on the split -> FIRST_HALF
        turns = build_turns(seq(("A", 0, 100), ("B", 100, 300), ("A", 300, 400)))
        first, second = split_halves(turns, 200.0, "fr", "en")
        assert [t.speaker_id for t in first.turns] == ["A", "B"]
        assert [t.speaker_id for t in second.turns] == ["A"]
        assert first.label == FIRST_HALF and second.label == SECOND_HALF
        assert first.language == "fr" and second.language == "en"

    def test_spans_meet_at_split(self):
        turns = build_turns(seq(("A", 0, 100), ("B", 100, 400)))
        first, second = split_halves(turns, 150.0, "fr", "en")
        assert (first.span_start_s, first.span_end_s) == (0.0, 150.0)
        assert (second.span_start_s, second.span_end_s) == (150.0, 400.0)

    def test_all_turns_one_side(self):
        turns = build_turns(seq(("A", 0, 10), ("B", 10, 20)))
        first, second = split_halves(turns, 100.0, "fr", "en")
        assert len(first.turns) == 2
        assert second.turns == ()
        # empty half still spans [split, split]
        assert (second.span_start_s, second.span_end_s) == (100.0, 100.0)

    def test_concatenated_halves_restore_order(self):
        utterances = seq(*[("AB"[i % 2], i * 10.0, i * 10.0 + 10.0)
                           for i in range(12)])
        turns = build_turns(utterances)
        first, second = split_halves(turns, 55.0, "fr", "en")
        assert list(first.turns) + list(second.turns) == list(turns)

    def test_translation_shifts_boundaries_exactly(self):
        base = seq(("A", 0, 30), ("B", 30, 70), ("A", 70, 120))
        delta = 1000.0
        shifted = [
            Utterance(u.index, u.speaker_id, u.start_s + delta,
                      u.end_s + delta, u.text)
            for u in base
        ]
        f0, s0 = split_halves(build_turns(base), 60.0, "fr", "en")
        f1, s1 = split_halves(build_turns(shifted), 60.0 + delta, "fr", "en")
        assert f1.span_start_s == f0.span_start_s + delta
        assert f1.span_end_s == f0.span_end_s + delta
        assert s1.span_start_s == s0.span_start_s + delta
        assert s1.span_end_s == s0.span_end_s + delta
        assert len(f1.turns) == len(f0.turns)


class TestWholeSegment:
    def test_span_is_data_extent(self):
        turns = build_turns(seq(("A", 5, 10), ("B", 10, 42)))
        seg = whole_segment(turns)
        assert (seg.span_start_s, seg.span_end_s) == (5.0, 42.0)
        assert seg.span_minutes == pytest.approx(37.0 / 60.0)

    def test_empty_raises(self):
        with pytest.raises(EmptyInput):
            whole_segment([])
