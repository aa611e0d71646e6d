import itertools

import pytest

from prosodeme.ingest import default_table, parse_upf
from prosodeme.syllabifier import Syllable, SyllabifiedWord, parse_bracketed, syllabify
from prosodeme.ingest import UPFWord
from prosodeme.weight import LabelingMachine, Weight, label_syllable, label_word, mora_count, weight_for

table = default_table()


def one(text):
    return parse_bracketed(f"[{text}]").syllables[0]


@pytest.mark.parametrize("text, moras", [("ki", 1), ("ga:l", 3), ("m@n", 2), ("de:v", 3), ("a:", 2), ("b_ha:", 2)])
def test_mora_count(text, moras):
    assert mora_count(one(text)) == moras


@pytest.mark.parametrize(
    "bracketed, labels",
    [
        ("[ki]", "w"),
        ("[m@n]", "h"),
        ("[ga:l]", "sh"),
        ("[k@][l@m]", "w h"),
        ("[re:][s@m]", "h h"),
        ("[a:][ra:m]", "h sh"),
        ("[de:v][na:r]", "sh sh"),
        ("[mri][tjun][dZ@j]", "w h h"),
        ("[a:]", "h"),
    ],
)
def test_label_word(bracketed, labels):
    lw = label_word(parse_bracketed(bracketed))
    assert lw.label_string() == labels
    assert len(lw.moras) == len(lw.labels) == len(lw.syllables)


def test_four_moras_is_superheavy():
    assert label_syllable(one("ra:st")) == Weight.SH
    assert weight_for(4) == Weight.SH
    with pytest.raises(ValueError):
        weight_for(0)


def _shapes():
    k, i, i_long = table.phoneme("k"), table.phoneme("i"), table.phoneme("i:")
    for onset, nucleus, coda in itertools.product(range(4), (i, i_long), range(4)):
        yield Syllable((k,) * onset, nucleus, (k,) * coda)


def test_machine_matches_mora_rule():
    machine = LabelingMachine()
    for s in _shapes():
        word = SyllabifiedWord(UPFWord("", s.phonemes), (s,))
        assert machine.label(word) == [label_syllable(s)]


def test_machine_pattern_sets():
    m = LabelingMachine()
    cases = {
        "v_s b": "w", "c v_s b": "w", "c c v_s b": "w", "c c c c v_s b": "w",
        "v_s c b": "h", "c c v_s c b": "h", "v_l b": "h", "c c v_l b": "h",
        "c v_s c c b": "sh", "c v_l c b": "sh", "v_l c c b": "sh",
    }
    for seq, label in cases.items():
        assert [w.value for w in m.run(seq.split())] == [label]


def test_machine_states():
    states = {s for s, _ in LabelingMachine.TRANSITIONS} | set(LabelingMachine.TRANSITIONS.values())
    finals = set(LabelingMachine.FINALS)
    assert len(finals) == 3
    assert len(states - finals - {LabelingMachine.INITIAL}) == 7


def test_machine_rejects_bad_input():
    with pytest.raises(ValueError):
        LabelingMachine().run(["c", "b"])
    with pytest.raises(ValueError):
        LabelingMachine().run(["c", "v_s"])


def test_monotone_in_coda():
    for s in _shapes():
        longer = Syllable(s.onset, s.nucleus, s.coda + (table.phoneme("t"),))
        assert mora_count(longer) == mora_count(s) + 1
        assert mora_count(s) >= 1


def test_labels_are_local():
    a = label_word(syllabify(parse_upf("k@m@la:")))
    b = label_word(syllabify(parse_upf("la:k@m@")))
    assert sorted(a.labels) == sorted(b.labels)
