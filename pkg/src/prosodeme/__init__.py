"""Hindi Devanagari to prosodeme conversion.

    >>> from prosodeme import convert
    >>> convert("कमला").surface.bracketed()
    '[k@m][la:]'
"""

from .errors import (
    EmptyInput,
    LexiconDirectiveMismatch,
    MissingGold,
    NoNucleus,
    NonDevanagari,
    ProsodemeError,
    UnmappableCharacter,
)
from .feet import ExceptionLexicon, FootNode, FootParse, build_feet, lookup_exception
from .harness import AccuracyReport, GoldEntry, run_convert, run_eval
from .ingest import Phoneme, UPFWord, grapheme_to_upf, normalize, parse_upf
from .schwa import ProsodemeRecord, convert, delete_schwa, prosodic_label_and_stress, prosodify, resyllabify
from .syllabifier import Syllable, SyllabifiedWord, symbolize, syllabify
from .weight import LabeledWord, Weight, label_syllable, label_word, mora_count

__version__ = "0.1.0"
