"""I-level syllabification by maximal onset over intervocalic consonant clusters.

Phonemes are first reduced to the rule alphabet ``v`` (vowel), ``c1`` (stop),
``c2`` (semivowel r, l, v, j) and ``c`` (any other consonant). Each
intervocalic cluster is then split between the coda of the left syllable and
the onset of the right one:

    vv      -> [v][v]
    vcv     -> [v][cv]          any single consonant
    vc1c2v  -> [v][c1c2v]       stop + semivowel is a legal onset
    vXYv    -> [vX][Yv]         every other pair, geminates included
    vXYZv   -> [vX][YZv]
    vW..YZv -> [vW..][YZv]      longer clusters keep two onset consonants

Word-initial consonants all go to the first onset, word-final ones to the
last coda.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NoNucleus
from .ingest import SEMIVOWEL, STOP, Phoneme, PhonemeTable, UPFWord, default_table, parse_upf

V, C1, C2, C = "v", "c1", "c2", "c"


@dataclass(frozen=True)
class Syllable:
    onset: tuple[Phoneme, ...]
    nucleus: Phoneme
    coda: tuple[Phoneme, ...] = ()

    def __post_init__(self):
        if not self.nucleus.is_vowel:
            raise ValueError(f"nucleus {self.nucleus.symbol!r} is not a vowel")
        if any(p.is_vowel for p in self.onset + self.coda):
            raise ValueError("onset and coda must be consonants")

    @property
    def phonemes(self) -> tuple[Phoneme, ...]:
        return self.onset + (self.nucleus,) + self.coda

    @property
    def text(self) -> str:
        return "".join(p.text for p in self.phonemes)

    def __str__(self):
        return f"[{self.text}]"


@dataclass(frozen=True)
class SyllabifiedWord:
    source: UPFWord
    syllables: tuple[Syllable, ...]

    def __post_init__(self):
        if not self.syllables:
            raise ValueError("a word has at least one syllable")
        if self.phonemes != self.source.phonemes:
            raise ValueError("syllables do not reproduce the source phonemes")

    @property
    def phonemes(self) -> tuple[Phoneme, ...]:
        return tuple(p for s in self.syllables for p in s.phonemes)

    def bracketed(self) -> str:
        return "".join(str(s) for s in self.syllables)

    def __str__(self):
        return self.bracketed()

    def __len__(self):
        return len(self.syllables)


def symbol_of(p: Phoneme) -> str:
    if p.is_vowel:
        return V
    if p.consonant_class == STOP:
        return C1
    if p.consonant_class == SEMIVOWEL:
        return C2
    return C


def symbolize(word: UPFWord) -> list[str]:
    return [symbol_of(p) for p in word.phonemes]


def onset_size(cluster: list[str]) -> int:
    """How many consonants of an intervocalic cluster go to the next onset."""
    n = len(cluster)
    if n <= 1:
        return n
    if n == 2:
        return 2 if cluster == [C1, C2] else 1
    return 2


def syllabify(word: UPFWord) -> SyllabifiedWord:
    phonemes = word.phonemes
    nuclei = [i for i, p in enumerate(phonemes) if p.is_vowel]
    if not nuclei:
        raise NoNucleus(f"no vowel in /{word.text}/")

    # start index of each syllable
    starts = [0]
    for left, right in zip(nuclei, nuclei[1:]):
        cluster = [symbol_of(p) for p in phonemes[left + 1:right]]
        starts.append(right - onset_size(cluster))

    syllables = []
    for k, nuc in enumerate(nuclei):
        end = starts[k + 1] if k + 1 < len(nuclei) else len(phonemes)
        syllables.append(Syllable(phonemes[starts[k]:nuc], phonemes[nuc], phonemes[nuc + 1:end]))
    return SyllabifiedWord(word, tuple(syllables))


_BRACKETS = re.compile(r"\[([^\[\]]*)\]")


def parse_bracketed(text: str, table: PhonemeTable | None = None, source: str = "") -> SyllabifiedWord:
    """Read ``[k@][m@l]`` back into a SyllabifiedWord, keeping the given boundaries."""
    table = table or default_table()
    text = text.strip()
    parts = _BRACKETS.findall(text)
    if not parts or "".join(f"[{p}]" for p in parts) != text:
        raise ValueError(f"not a bracketed syllable string: {text!r}")
    syllables = []
    for part in parts:
        phs = parse_upf(part, table).phonemes
        vowels = [i for i, p in enumerate(phs) if p.is_vowel]
        if len(vowels) != 1:
            raise ValueError(f"syllable [{part}] needs exactly one vowel")
        v = vowels[0]
        syllables.append(Syllable(phs[:v], phs[v], phs[v + 1:]))
    flat = tuple(p for s in syllables for p in s.phonemes)
    return SyllabifiedWord(UPFWord(source, flat), tuple(syllables))
