"""Moraic weight: mora counts and the w / h / sh syllable labels.

A short vowel and each coda consonant are worth one mora, a long vowel two;
onsets are weightless. One mora is weak (w), two heavy (h), three or more
superheavy (sh).

``LabelingMachine`` is the same function written as a finite state
transducer over the alphabet ``c`` / ``v_s`` / ``v_l`` / ``b`` (b = syllable
boundary). It has one initial state, seven non-final states and three final
states, and writes a label each time a syllable is closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .syllabifier import Syllable, SyllabifiedWord


class Weight(str, Enum):
    W = "w"
    H = "h"
    SH = "sh"

    def __str__(self):
        return self.value


def mora_count(s: Syllable) -> int:
    return (1 if s.nucleus.is_short else 2) + len(s.coda)


def weight_for(moras: int) -> Weight:
    if moras < 1:
        raise ValueError("a syllable has at least one mora")
    if moras == 1:
        return Weight.W
    if moras == 2:
        return Weight.H
    return Weight.SH


def label_syllable(s: Syllable) -> Weight:
    return weight_for(mora_count(s))


@dataclass(frozen=True)
class LabeledWord:
    syllables: SyllabifiedWord
    labels: tuple[Weight, ...]
    moras: tuple[int, ...]

    def __post_init__(self):
        if not len(self.labels) == len(self.moras) == len(self.syllables):
            raise ValueError("one label and one mora count per syllable")

    def __len__(self):
        return len(self.labels)

    def label_string(self) -> str:
        return " ".join(w.value for w in self.labels)

    def __str__(self):
        return "".join(f"{s}^{w}" for s, w in zip(self.syllables.syllables, self.labels))


def label_word(w: SyllabifiedWord) -> LabeledWord:
    moras = tuple(mora_count(s) for s in w.syllables)
    return LabeledWord(w, tuple(weight_for(m) for m in moras), moras)


class LabelingMachine:
    """Deterministic transducer for syllable labeling.

    Reaching a final state emits its label; F1/F2/F3 then return to I on an
    empty transition.
    """

    INITIAL = "I"
    FINALS = {"F1": Weight.W, "F2": Weight.H, "F3": Weight.SH}

    # onset consonants loop in O; S* follow a short nucleus, L* a long one
    TRANSITIONS = {
        ("I", "c"): "O",
        ("I", "v_s"): "S",
        ("I", "v_l"): "L",
        ("O", "c"): "O",
        ("O", "v_s"): "S",
        ("O", "v_l"): "L",
        ("S", "c"): "SC",
        ("S", "b"): "F1",
        ("SC", "c"): "SCC",
        ("SC", "b"): "F2",
        ("SCC", "c"): "SCC",
        ("SCC", "b"): "F3",
        ("L", "c"): "LC",
        ("L", "b"): "F2",
        ("LC", "c"): "LCC",
        ("LC", "b"): "F3",
        ("LCC", "c"): "LCC",
        ("LCC", "b"): "F3",
    }

    def run(self, symbols) -> list[Weight]:
        state = self.INITIAL
        labels = []
        for sym in symbols:
            try:
                state = self.TRANSITIONS[state, sym]
            except KeyError:
                raise ValueError(f"no transition from {state} on {sym!r}") from None
            if state in self.FINALS:
                labels.append(self.FINALS[state])
                state = self.INITIAL
        if state != self.INITIAL:
            raise ValueError("input ended inside a syllable")
        return labels

    @staticmethod
    def encode(w: SyllabifiedWord) -> list[str]:
        out = []
        for s in w.syllables:
            out.extend("c" for _ in s.onset)
            out.append("v_s" if s.nucleus.is_short else "v_l")
            out.extend("c" for _ in s.coda)
            out.append("b")
        return out

    def label(self, w: SyllabifiedWord) -> list[Weight]:
        return self.run(self.encode(w))
