"""Devanagari normalization and the orthography to underlying phonemic form mapping.

The phoneme inventory and the grapheme table live in ``data/phonemes.tsv``.
Symbols are ASCII: ``:`` marks a long vowel, ``_h`` aspiration, ``@`` schwa,
and a trailing ``~`` on a rendered vowel marks nasalization.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import EmptyInput, NonDevanagari, TableError, UnmappableCharacter

CONSONANT = "consonant"
VOWEL = "vowel"

STOP = "stop"
SEMIVOWEL = "semivowel"
OTHER = "other"
NONE = "none"

SHORT = "short"
LONG = "long"

SCHWA = "@"
NASAL_MARK = "~"

# word-final short vowel -> long counterpart
LENGTHEN = {"i": "i:", "u": "u:", "e": "e:", "o": "o:", SCHWA: "a:"}

# anusvara before a plosive or affricate surfaces as the homorganic nasal;
# palatal and retroflex places collapse to n as in broad Hindi transcription
HOMORGANIC_NASAL = {
    "k": "N", "k_h": "N", "g": "N", "g_h": "N",
    "tS": "n", "tS_h": "n", "dZ": "n", "dZ_h": "n",
    "T": "n", "T_h": "n", "D": "n", "D_h": "n",
    "t": "n", "t_h": "n", "d": "n", "d_h": "n",
    "p": "m", "p_h": "m", "b": "m", "b_h": "m",
}

DEVANAGARI_BLOCK = range(0x0900, 0x0980)


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    category: str
    consonant_class: str = NONE
    vowel_length: str = NONE
    nasalized: bool = False

    def __post_init__(self):
        if self.category == VOWEL:
            if self.consonant_class != NONE or self.vowel_length not in (SHORT, LONG):
                raise TableError(f"bad vowel {self.symbol!r}")
        elif self.category == CONSONANT:
            if self.consonant_class not in (STOP, SEMIVOWEL, OTHER) or self.vowel_length != NONE:
                raise TableError(f"bad consonant {self.symbol!r}")
            if self.nasalized:
                raise TableError(f"consonant {self.symbol!r} cannot be nasalized")
        else:
            raise TableError(f"unknown category {self.category!r}")

    @property
    def is_vowel(self) -> bool:
        return self.category == VOWEL

    @property
    def is_schwa(self) -> bool:
        return self.symbol == SCHWA

    @property
    def is_short(self) -> bool:
        return self.vowel_length == SHORT

    @property
    def text(self) -> str:
        return self.symbol + NASAL_MARK if self.nasalized else self.symbol

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class UPFWord:
    source: str
    phonemes: tuple[Phoneme, ...]

    @property
    def text(self) -> str:
        """Phoneme symbols run together, e.g. ``k@m@l``."""
        return "".join(p.text for p in self.phonemes)

    def spaced(self) -> str:
        return " ".join(p.text for p in self.phonemes)

    def __str__(self):
        return self.text

    def __len__(self):
        return len(self.phonemes)


# character roles, derived from Unicode character names
ROLE_CONSONANT = "consonant"
ROLE_VOWEL = "vowel"
ROLE_MATRA = "matra"
ROLE_VIRAMA = "virama"
ROLE_NUKTA = "nukta"
ROLE_ANUSVARA = "anusvara"
ROLE_CANDRABINDU = "candrabindu"
ROLE_VISARGA = "visarga"

_SIGN_ROLES = {
    "DEVANAGARI SIGN VIRAMA": ROLE_VIRAMA,
    "DEVANAGARI SIGN NUKTA": ROLE_NUKTA,
    "DEVANAGARI SIGN ANUSVARA": ROLE_ANUSVARA,
    "DEVANAGARI SIGN CANDRABINDU": ROLE_CANDRABINDU,
    "DEVANAGARI SIGN VISARGA": ROLE_VISARGA,
}


def _role(char: str, symbols: tuple[Phoneme, ...]) -> str:
    name = unicodedata.name(char, "")
    if name in _SIGN_ROLES:
        return _SIGN_ROLES[name]
    if name.startswith("DEVANAGARI VOWEL SIGN"):
        return ROLE_MATRA
    if name.startswith("DEVANAGARI LETTER"):
        return ROLE_CONSONANT if symbols and symbols[0].category == CONSONANT and len(symbols) == 1 else ROLE_VOWEL
    raise TableError(f"no role for U+{ord(char):04X}")


class PhonemeTable:
    """Read-only grapheme -> phoneme mapping plus the phoneme inventory."""

    def __init__(self, rows):
        self.inventory: dict[str, Phoneme] = {}
        self.graphemes: dict[str, tuple[Phoneme, ...]] = {}
        self.roles: dict[str, str] = {}
        sequences = []
        signs = []
        for key, symbol, category, cls, length in rows:
            if category == "sign":
                signs.append(key)
            elif category == "-":
                sequences.append((key, symbol.split()))
            else:
                ph = Phoneme(symbol, category, cls, length)
                known = self.inventory.setdefault(symbol, ph)
                if known != ph:
                    raise TableError(f"conflicting rows for {symbol!r}")
                self.graphemes[key] = (ph,)
        for key, symbols in sequences:
            try:
                self.graphemes[key] = tuple(self.inventory[s] for s in symbols)
            except KeyError as exc:
                raise TableError(f"undefined symbol {exc.args[0]!r} for {key!r}") from None
        for key in signs:
            self.roles[key] = _role(key, ())
        for key, phs in self.graphemes.items():
            self.roles[key] = _role(key, phs)
        for symbol in LENGTHEN.values():
            if symbol not in self.inventory:
                raise TableError(f"inventory lacks long vowel {symbol!r}")
        self._by_length = sorted(self.inventory, key=len, reverse=True)

    @classmethod
    def load(cls, path: str | Path | None = None) -> "PhonemeTable":
        if path is None:
            text = resources.files(__package__).joinpath("data/phonemes.tsv").read_text(encoding="utf-8")
        else:
            text = Path(path).read_text(encoding="utf-8")
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = [f.strip() for f in line.split("\t")]
            while fields and fields[-1].startswith("#"):
                fields.pop()
            if len(fields) != 5:
                raise TableError(f"line {lineno}: expected 5 columns, got {len(fields)}")
            try:
                key = "".join(chr(int(cp.removeprefix("U+"), 16)) for cp in fields[0].split())
            except ValueError:
                raise TableError(f"line {lineno}: bad code point {fields[0]!r}") from None
            rows.append((key, *fields[1:]))
        return cls(rows)

    def phoneme(self, symbol: str) -> Phoneme:
        return self.inventory[symbol]

    def split_symbols(self, text: str) -> list[str]:
        """Greedy longest-match tokenization of run-together symbols.

        Ambiguous runs (``tS`` vs ``t`` + ``S``) resolve to the longer symbol;
        use whitespace-separated input to force a split.
        """
        out = []
        pos = 0
        while pos < len(text):
            if text[pos] == NASAL_MARK:
                out.append(NASAL_MARK)
                pos += 1
                continue
            for sym in self._by_length:
                if text.startswith(sym, pos):
                    out.append(sym)
                    pos += len(sym)
                    break
            else:
                raise UnmappableCharacter(text[pos], text)
        return out


@lru_cache(maxsize=1)
def default_table() -> PhonemeTable:
    return PhonemeTable.load()


def _nukta_compositions() -> dict[str, str]:
    # precomposed nukta letters are composition exclusions, so NFC leaves them split
    table = {}
    for cp in DEVANAGARI_BLOCK:
        parts = unicodedata.decomposition(chr(cp)).split()
        if len(parts) == 2 and parts[1] == "093C":
            table[chr(int(parts[0], 16)) + "़"] = chr(cp)
    return table


_NUKTA = _nukta_compositions()


def compose_nukta(text: str) -> str:
    for pair, single in _NUKTA.items():
        if pair in text:
            text = text.replace(pair, single)
    return text


def normalize(raw: str) -> str:
    """Return the cleaned, canonically composed Devanagari form of one word token.

    Whitespace, digits, punctuation, symbols and format characters are dropped
    wherever they occur; nukta letters come back precomposed.
    """
    text = compose_nukta(unicodedata.normalize("NFC", raw))
    kept = "".join(ch for ch in text if unicodedata.category(ch)[0] not in "ZNPSC")
    if not kept:
        raise EmptyInput(f"nothing left of {raw!r} after cleaning")
    foreign = [ch for ch in kept if ord(ch) not in DEVANAGARI_BLOCK]
    if foreign:
        raise NonDevanagari(f"{raw!r} contains non-Devanagari letter(s) {''.join(foreign)!r}")
    return kept


def _nasalize(out: list[Phoneme], char: str, word: str):
    if not out or not out[-1].is_vowel:
        raise UnmappableCharacter(char, word)
    out[-1] = replace(out[-1], nasalized=True)


def grapheme_to_upf(word: str, table: PhonemeTable | None = None, anusvara_coda: bool = True) -> UPFWord:
    """Map a normalized Devanagari word to its underlying phonemic form.

    A consonant letter carries an inherent schwa unless a vowel sign or virama
    follows it or it ends the word. A word-final short vowel is lengthened.
    With ``anusvara_coda`` an anusvara before a plosive or affricate becomes
    the homorganic nasal consonant; otherwise (and always for candrabindu) it nasalizes the
    preceding vowel and adds no segment.
    """
    table = table or default_table()
    word = compose_nukta(word)
    chars = list(word)
    roles = table.roles
    schwa = table.phoneme(SCHWA)
    out: list[Phoneme] = []
    i = 0
    while i < len(chars):
        ch = chars[i]
        role = roles.get(ch)
        nxt = chars[i + 1] if i + 1 < len(chars) else None
        nrole = roles.get(nxt) if nxt is not None else None
        if role == ROLE_CONSONANT:
            out.extend(table.graphemes[ch])
            if nrole == ROLE_MATRA:
                out.extend(table.graphemes[nxt])
                i += 2
                continue
            if nrole == ROLE_VIRAMA:
                i += 2
                continue
            if nxt is not None:
                out.append(schwa)
        elif role == ROLE_VOWEL:
            out.extend(table.graphemes[ch])
        elif role == ROLE_ANUSVARA:
            following = table.graphemes.get(nxt, ()) if nrole == ROLE_CONSONANT else ()
            if anusvara_coda and following and following[0].symbol in HOMORGANIC_NASAL:
                if not out or not out[-1].is_vowel:
                    raise UnmappableCharacter(ch, word)
                out.append(table.phoneme(HOMORGANIC_NASAL[following[0].symbol]))
            else:
                _nasalize(out, ch, word)
        elif role == ROLE_CANDRABINDU:
            _nasalize(out, ch, word)
        elif role == ROLE_VISARGA:
            if not out or not out[-1].is_vowel:
                raise UnmappableCharacter(ch, word)
            out.extend(table.graphemes[ch])
        else:
            # stray matra, virama or nukta, or a code point missing from the table
            raise UnmappableCharacter(ch, word)
        i += 1

    if not out:
        raise EmptyInput(f"no phonemes in {word!r}")
    last = out[-1]
    if last.is_vowel and last.is_short:
        out[-1] = replace(table.phoneme(LENGTHEN[last.symbol]), nasalized=last.nasalized)
    return UPFWord(word, tuple(out))


def parse_upf(text: str, table: PhonemeTable | None = None, source: str | None = None) -> UPFWord:
    """Build a UPFWord from romanized symbols, e.g. ``"k@m@l"`` or ``"k @ m @ l"``.

    No lengthening or other rewriting is applied.
    """
    table = table or default_table()
    tokens = []
    for chunk in text.split():
        tokens.extend(table.split_symbols(chunk))
    phonemes: list[Phoneme] = []
    for tok in tokens:
        if tok == NASAL_MARK:
            _nasalize(phonemes, NASAL_MARK, text)
        else:
            phonemes.append(table.phoneme(tok))
    if not phonemes:
        raise EmptyInput(f"no phonemes in {text!r}")
    return UPFWord(text if source is None else source, tuple(phonemes))
