import pytest
from hypothesis import given
from hypothesis import strategies as st

from prosodeme.errors import NoNucleus
from prosodeme.ingest import default_table, grapheme_to_upf, normalize, parse_upf
from prosodeme.syllabifier import parse_bracketed, symbolize, syllabify

from oracles import compliant_parses
from wordgen import corpus

table = default_table()


def syl(text):
    return syllabify(parse_upf(text)).bracketed()


@pytest.mark.parametrize(
    "upf, expected",
    [
        ("k @ m @ l", "c1 v c v c2"),
        ("a:", "v"),
        ("m r i t j u n dZ @ j", "c c2 v c1 c2 v c c v c2"),
    ],
)
def test_symbolize(upf, expected):
    assert " ".join(symbolize(parse_upf(upf))) == expected


@pytest.mark.parametrize(
    "upf, expected",
    [
        ("mritjundZ@j", "[mri][tjun][dZ@j]"),
        ("@d_higr@h@n", "[@][d_hi][gr@][h@n]"),
        ("k@m@l", "[k@][m@l]"),
        ("a:", "[a:]"),
        ("a:i:", "[a:][i:]"),             # vv
        ("p@kka:", "[p@k][ka:]"),         # geminate stop
        ("@lla:", "[@l][la:]"),           # geminate semivowel
        ("s@ptm@", "[s@p][tm@]"),         # three consonants: one coda, two onset
        ("@str@", "[@s][tr@]"),
        ("@rk@", "[@r][k@]"),             # semivowel + stop splits
        ("n@mr@", "[n@m][r@]"),           # other + semivowel splits
        ("ri:rkstri:", "[ri:rks][tri:]"), # longer clusters keep a two-consonant onset
        ("@kstr@", "[@ks][tr@]"),
        ("stri:", "[stri:]"),             # word-initial cluster stays whole
    ],
)
def test_syllabify(upf, expected):
    assert syl(upf) == expected


def test_no_nucleus():
    with pytest.raises(NoNucleus):
        syllabify(parse_upf("kt"))


def test_starred_parses_not_produced():
    assert syl("mritjundZ@j") not in ("[mrit][jun][dZ@j]", "[mrit][jundZ][@j]")
    assert syl("@d_higr@h@n") not in ("[@][d_hig][r@][h@n]", "[@d_h][ig][r@][h@n]")


def test_oracle_agrees_on_examples():
    for text in ("mritjundZ@j", "@d_higr@h@n", "k@m@l", "ri:rkstri:"):
        w = parse_upf(text)
        parses = compliant_parses(w.phonemes)
        assert len(parses) == 1
        assert "".join(f"[{s}]" for s in parses[0]) == syl(text)


def test_oracle_on_corpus():
    for word in corpus(1500, seed=3, max_aksharas=5):
        w = grapheme_to_upf(normalize(word))
        ours = [s.text for s in syllabify(w).syllables]
        if len(ours) > 5:
            continue
        assert compliant_parses(w.phonemes) == [ours], word


_phoneme = st.sampled_from(sorted(table.inventory))


@given(st.lists(_phoneme, min_size=1, max_size=14))
def test_round_trip_and_shape(symbols):
    w = parse_upf(" ".join(symbols))
    if not any(p.is_vowel for p in w.phonemes):
        with pytest.raises(NoNucleus):
            syllabify(w)
        return
    s = syllabify(w)
    assert s.phonemes == w.phonemes
    assert len(s) == sum(p.is_vowel for p in w.phonemes)
    for x in s.syllables:
        assert x.nucleus.is_vowel
        assert all(not p.is_vowel for p in x.onset + x.coda)
    # inner onsets never exceed two consonants
    assert all(len(x.onset) <= 2 for x in s.syllables[1:])
    assert syllabify(w) == s


def test_parse_bracketed_round_trip():
    s = syllabify(parse_upf("lo:k@s@b_ha:"))
    assert parse_bracketed(s.bracketed()).syllables == s.syllables
    with pytest.raises(ValueError):
        parse_bracketed("[k@m")
    with pytest.raises(ValueError):
        parse_bracketed("[km]")
