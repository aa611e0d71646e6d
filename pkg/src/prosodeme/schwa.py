"""Schwa deletion inside feet, re-syllabification, prosodic labels and stress.

A schwa is deleted when its syllable is the weak right-hand member of a
binary foot, is open, has a single onset consonant and is not the last
vowel left in the word. The stranded onset consonant becomes a coda of the
preceding syllable. The surface syllables are labeled again; those labels
are the prosodic labels, and h / sh syllables carry stress.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LexiconDirectiveMismatch, NoPrecedingSyllable, ProsodemeError
from .feet import BINARY, ExceptionLexicon, FootParse, build_feet
from .ingest import Phoneme, PhonemeTable, UPFWord, grapheme_to_upf, normalize
from .syllabifier import Syllable, SyllabifiedWord, syllabify
from .weight import LabeledWord, Weight, label_word

STRESSED = (Weight.H, Weight.SH)


@dataclass(frozen=True)
class ProsodemeRecord:
    source: str
    upf: UPFWord
    i_level: LabeledWord
    feet: FootParse
    deleted_sites: tuple[int, ...]
    surface: SyllabifiedWord
    prosodic_labels: tuple[Weight, ...]
    stress: tuple[bool, ...]

    @property
    def surface_text(self) -> str:
        return "".join(p.text for p in self.surface.phonemes)

    def stress_string(self) -> str:
        return "".join("1" if s else "0" for s in self.stress)

    def prosodic_label_string(self) -> str:
        return " ".join(w.value for w in self.prosodic_labels)


def deletable(parse: FootParse, j: int, vowels_left: int) -> bool:
    syl = parse.word.syllables.syllables[j]
    return (
        parse.effective_labels[j] == Weight.W
        and syl.nucleus.is_schwa
        and not syl.coda
        and len(syl.onset) == 1
        and vowels_left > 1
    )


def delete_schwa(parse: FootParse) -> tuple[tuple[Phoneme, ...], tuple[int, ...]]:
    syllables = parse.word.syllables.syllables
    if parse.deletion_override is not None:
        sites = tuple(sorted(set(parse.deletion_override)))
        for j in sites:
            if not 0 < j < len(syllables) or not syllables[j].nucleus.is_schwa:
                raise LexiconDirectiveMismatch(f"deletion site {j + 1} is not a non-initial schwa syllable")
    else:
        vowels_left = len(syllables)
        found = []
        for leaf in parse.leaves():
            if leaf.kind != BINARY:
                continue
            j = leaf.children[1]
            if deletable(parse, j, vowels_left):
                found.append(j)
                vowels_left -= 1
        sites = tuple(sorted(found))
    phonemes = tuple(
        p for k, s in enumerate(syllables) for p in s.phonemes if not (k in sites and p.is_vowel)
    )
    return phonemes, sites


def resyllabify(
    phonemes: tuple[Phoneme, ...], deleted_sites, original: SyllabifiedWord
) -> SyllabifiedWord:
    if not deleted_sites:
        return original
    out: list[Syllable] = []
    for k, syl in enumerate(original.syllables):
        if k not in deleted_sites:
            out.append(syl)
            continue
        if not out:
            raise NoPrecedingSyllable(f"syllable {k + 1} of {original} lost its vowel with nothing before it")
        prev = out[-1]
        out[-1] = Syllable(prev.onset, prev.nucleus, prev.coda + syl.onset + syl.coda)
    return SyllabifiedWord(UPFWord(original.source.source, tuple(phonemes)), tuple(out))


def prosodic_label_and_stress(surface: SyllabifiedWord) -> tuple[tuple[Weight, ...], tuple[bool, ...]]:
    labels = label_word(surface).labels
    return labels, tuple(w in STRESSED for w in labels)


def _staged(stage, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ProsodemeError as exc:
        if exc.stage is None:
            exc.stage = stage
        raise


def prosodify(upf: UPFWord, lex: ExceptionLexicon | None = None, delete: bool = True, source: str | None = None) -> ProsodemeRecord:
    """Run everything after the grapheme mapping on an underlying form."""
    syllables = _staged("syllabify", syllabify, upf)
    labeled = _staged("label", label_word, syllables)
    parse = _staged("feet", build_feet, labeled, lex)
    if delete:
        phonemes, sites = _staged("schwa", delete_schwa, parse)
        surface = _staged("resyllabify", resyllabify, phonemes, sites, syllables)
    else:
        sites, surface = (), syllables
    labels, stress = prosodic_label_and_stress(surface)
    return ProsodemeRecord(
        source=upf.source if source is None else source,
        upf=upf,
        i_level=labeled,
        feet=parse,
        deleted_sites=sites,
        surface=surface,
        prosodic_labels=labels,
        stress=stress,
    )


def convert(
    word: str,
    lex: ExceptionLexicon | None = None,
    delete: bool = True,
    table: PhonemeTable | None = None,
) -> ProsodemeRecord:
    """Convert one Devanagari word into its prosodeme record.

    Errors keep their own class and carry the failing step in ``.stage``.
    """
    clean = _staged("normalize", normalize, word)
    upf = _staged("grapheme_to_upf", grapheme_to_upf, clean, table)
    return prosodify(upf, lex, delete, source=word)
