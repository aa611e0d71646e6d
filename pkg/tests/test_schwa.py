import pytest

from prosodeme.errors import LexiconDirectiveMismatch, NoPrecedingSyllable, UnmappableCharacter
from prosodeme.feet import Directive, ExceptionLexicon, build_feet
from prosodeme.ingest import parse_upf
from prosodeme.schwa import convert, delete_schwa, prosodify, resyllabify
from prosodeme.syllabifier import parse_bracketed, syllabify
from prosodeme.weight import label_word, mora_count

from wordgen import corpus

SURFACES = [
    ("कमला", "[k@m][la:]", "11"),
    ("लड़कपन", "[l@][r@k][p@n]", "011"),
    ("कामना", "[ka:m][na:]", "11"),
    ("लोकसभा", "[lo:k][s@][b_ha:]", "101"),
    ("सफलता", "[s@][p_h@l][ta:]", "011"),
]


def from_upf(text, **kw):
    return prosodify(parse_upf(text), **kw)


@pytest.mark.parametrize("word, surface, stress", SURFACES)
def test_surface_examples(word, surface, stress):
    record = convert(word)
    assert record.surface.bracketed() == surface
    assert record.stress_string() == stress


@pytest.mark.parametrize("upf", ["re:s@m", "@d_higr@h@n", "mritjundZ@j"])
def test_no_deletion(upf):
    record = from_upf(upf)
    assert record.deleted_sites == ()
    assert record.surface == record.i_level.syllables


def test_closed_schwa_is_kept():
    # the right member of k@ + m@l is closed
    assert from_upf("k@m@l").deleted_sites == ()


def test_cluster_onset_blocks():
    # [k@][pr@][ta:]: the weak schwa syllable has a two-consonant onset
    record = from_upf("k@pr@ta:")
    assert record.i_level.syllables.bracketed() == "[k@][pr@][ta:]"
    assert record.deleted_sites == ()


def test_word_keeps_a_vowel():
    lw = label_word(parse_bracketed("[k@][m@]"))
    phonemes, sites = delete_schwa(build_feet(lw))
    assert sites == (1,)
    assert sum(p.is_vowel for p in phonemes) == 1


def test_switch_off():
    record = convert("कमला", delete=False)
    assert record.deleted_sites == ()
    assert record.surface.bracketed() == "[k@][m@][la:]"
    assert record.prosodic_label_string() == "w w h"


def test_resyllabify_moves_onset_to_coda():
    word = syllabify(parse_upf("k@m@la:"))
    phonemes = tuple(p for k, p in enumerate(word.phonemes) if k != 3)
    out = resyllabify(phonemes, (1,), word)
    assert out.bracketed() == "[k@m][la:]"


def test_resyllabify_needs_a_preceding_syllable():
    word = syllabify(parse_upf("k@ta:"))
    with pytest.raises(NoPrecedingSyllable):
        resyllabify(word.phonemes[:1] + word.phonemes[2:], (0,), word)


def test_stress_follows_prosodic_labels():
    record = convert("लोकसभा")
    assert record.prosodic_label_string() == "sh w h"
    assert record.stress == (True, False, True)


class TestLexiconOverride:
    def test_forced_sites(self):
        lex = ExceptionLexicon({"k@m@la:": Directive(deletions=())})
        assert from_upf("k@m@la:", lex=lex).deleted_sites == ()
        lex = ExceptionLexicon({"s@p_h@l@ta:": Directive(deletions=(1, 2))})
        record = from_upf("s@p_h@l@ta:", lex=lex)
        assert record.surface.bracketed() == "[s@p_hl][ta:]"

    def test_bad_site(self):
        lex = ExceptionLexicon({"k@ma:l": Directive(deletions=(1,))})
        with pytest.raises(LexiconDirectiveMismatch) as err:
            from_upf("k@ma:l", lex=lex)
        assert err.value.stage == "schwa"


def test_errors_carry_stage():
    with pytest.raises(UnmappableCharacter) as err:
        convert("ाक")
    assert err.value.stage == "grapheme_to_upf"


def test_properties_on_corpus():
    for word in corpus(3000, seed=3):
        try:
            r = convert(word)
        except NoPrecedingSyllable:
            continue
        under = r.i_level.syllables
        # only schwas disappear, and only at reported sites
        kept = [p for k, s in enumerate(under.syllables) for p in s.phonemes if not (k in r.deleted_sites and p.is_vowel)]
        assert list(r.surface.phonemes) == kept
        assert all(under.syllables[j].nucleus.is_schwa for j in r.deleted_sites)
        # deleting a schwa costs one mora and the resyllabified onset gains one back
        assert sum(r.i_level.moras) == sum(mora_count(s) for s in r.surface.syllables)
        assert len(r.surface) == len(under) - len(r.deleted_sites) >= 1
        assert len(r.stress) == len(r.prosodic_labels) == len(r.surface)


@pytest.mark.parametrize("word", [w for w, _, _ in SURFACES])
def test_surface_is_a_fixpoint(word):
    again = prosodify(convert(word).surface.source)
    assert again.deleted_sites == ()
