"""Batch conversion and four-level evaluation against a gold lexicon.

Conversion output is one line per input word. In TSV form the columns are

    grapheme  upf  syllables  labels  feet  surface  prosodic_labels  stress

e.g. ``कमला  k@m@la:  [k@][m@][la:]  w w h  <1-2:WWAR>;3:DEGEN  [k@m][la:]  h h  11``.
``--stage upf`` keeps the first two columns, ``--stage ilevel`` the first
four. The ``records`` format writes the same fields as one JSON object per
line.

A gold file is either full TSV conversion output, a five-column TSV
(grapheme, syllables, labels, surface, stress), or JSON records. Words are
scored whole: a word is wrong at a level if that level's field differs
from gold in any way.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import MalformedGold, MissingGold, ProsodemeError
from .feet import ExceptionLexicon
from .ingest import PhonemeTable, normalize
from .schwa import ProsodemeRecord, convert
from .syllabifier import parse_bracketed
from .weight import Weight

FULL_COLUMNS = ("grapheme", "upf", "syllables", "labels", "feet", "surface", "prosodic_labels", "stress")
STAGE_COLUMNS = {"upf": FULL_COLUMNS[:2], "ilevel": FULL_COLUMNS[:4], "full": FULL_COLUMNS}
GOLD_COLUMNS = ("grapheme", "syllables", "labels", "surface", "stress")

LEVELS = (
    "Syllabification",
    "Syllable Labeling",
    "Schwa Deletion",
    "Stress Alignment using Prosodic Label",
)


def record_fields(record: ProsodemeRecord) -> dict[str, str]:
    return {
        "grapheme": record.source.strip(),
        "upf": record.upf.text,
        "syllables": record.i_level.syllables.bracketed(),
        "labels": record.i_level.label_string(),
        "feet": record.feet.render(),
        "surface": record.surface.bracketed(),
        "prosodic_labels": record.prosodic_label_string(),
        "stress": record.stress_string(),
    }


def format_record(record: ProsodemeRecord, stage: str = "full", fmt: str = "tsv") -> str:
    fields = record_fields(record)
    columns = STAGE_COLUMNS[stage]
    if fmt == "tsv":
        return "\t".join(fields[c] for c in columns)
    if fmt == "records":
        data = {c: fields[c] for c in columns}
        if stage == "full":
            data["moras"] = list(record.i_level.moras)
            data["deleted_sites"] = [j + 1 for j in record.deleted_sites]
        return json.dumps(data, ensure_ascii=False)
    raise ValueError(f"unknown format {fmt!r}")


def word_key(word: str) -> str:
    try:
        return normalize(word)
    except ProsodemeError:
        return word.strip()


def read_words(path) -> list[str]:
    text = sys.stdin.read() if str(path) == "-" else Path(path).read_text(encoding="utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]


def run_convert(
    input_path,
    lexicon_path=None,
    output_path=None,
    *,
    stage: str = "full",
    fmt: str = "tsv",
    delete: bool = True,
    rejects_path=None,
    table: PhonemeTable | None = None,
) -> int:
    """Convert a word list. Returns the exit status: 0, or 1 on I/O failure.

    Words that fail to convert go to the rejects file (``<output>.rejects``
    by default, stderr when writing to stdout) as
    ``word<TAB>stage<TAB>ErrorClass<TAB>message``.
    """
    try:
        words = read_words(input_path)
        lex = ExceptionLexicon.load(lexicon_path) if lexicon_path else None
    except (OSError, UnicodeDecodeError, ProsodemeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    lines, rejects = [], []
    for word in words:
        try:
            record = convert(word, lex, delete=delete, table=table)
        except ProsodemeError as exc:
            rejects.append(f"{word}\t{exc.stage}\t{type(exc).__name__}\t{exc}")
            continue
        lines.append(format_record(record, stage, fmt))

    try:
        _write_lines(output_path, lines)
        if rejects_path is None and output_path not in (None, "-"):
            rejects_path = f"{output_path}.rejects"
        if rejects_path is not None:
            _write_lines(rejects_path, rejects)
        else:
            for line in rejects:
                print(line, file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _write_lines(path, lines):
    body = "".join(line + "\n" for line in lines)
    if path in (None, "-"):
        sys.stdout.write(body)
    else:
        Path(path).write_text(body, encoding="utf-8")


@dataclass(frozen=True)
class GoldEntry:
    grapheme: str
    gold_syllables: str
    gold_labels: str
    gold_surface: str
    gold_stress: str

    def validate(self, table: PhonemeTable | None = None):
        try:
            ilevel = parse_bracketed(self.gold_syllables, table)
            surface = parse_bracketed(self.gold_surface, table)
        except (ProsodemeError, ValueError, KeyError) as exc:
            raise MalformedGold(f"{self.grapheme}: {exc}") from None
        labels = self.gold_labels.split()
        if len(labels) != len(ilevel) or not all(x in {w.value for w in Weight} for x in labels):
            raise MalformedGold(f"{self.grapheme}: labels {self.gold_labels!r} do not fit {self.gold_syllables}")
        if len(self.gold_stress) != len(surface) or set(self.gold_stress) - {"0", "1"}:
            raise MalformedGold(f"{self.grapheme}: stress {self.gold_stress!r} does not fit {self.gold_surface}")


def _gold_from_line(line: str, lineno: int) -> GoldEntry:
    if line.lstrip().startswith("{"):
        try:
            data = json.loads(line)
            return GoldEntry(*(str(data[c]) for c in GOLD_COLUMNS))
        except (ValueError, KeyError) as exc:
            raise MalformedGold(f"line {lineno}: {exc}") from None
    fields = line.split("\t")
    if len(fields) == len(FULL_COLUMNS):
        row = dict(zip(FULL_COLUMNS, fields))
        return GoldEntry(*(row[c] for c in GOLD_COLUMNS))
    if len(fields) == len(GOLD_COLUMNS):
        return GoldEntry(*fields)
    raise MalformedGold(f"line {lineno}: expected {len(GOLD_COLUMNS)} or {len(FULL_COLUMNS)} columns, got {len(fields)}")


def read_gold(path, table: PhonemeTable | None = None) -> dict[str, GoldEntry]:
    gold: dict[str, GoldEntry] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        entry = _gold_from_line(line, lineno)
        entry = GoldEntry(entry.grapheme.strip(), *(f.strip() for f in (
            entry.gold_syllables, entry.gold_labels, entry.gold_surface, entry.gold_stress)))
        entry.validate(table)
        key = word_key(entry.grapheme)
        if key in gold and gold[key] != entry:
            raise MalformedGold(f"line {lineno}: conflicting gold entries for {entry.grapheme}")
        gold[key] = entry
    return gold


@dataclass(frozen=True)
class LevelScore:
    level: str
    words: int
    errors: int

    @property
    def percentage(self) -> float:
        # an empty run has nothing wrong with it
        if self.words == 0:
            return 100.0
        return (self.words - self.errors) / self.words * 100


@dataclass(frozen=True)
class AccuracyReport:
    levels: tuple[LevelScore, ...]
    failures: tuple[str, ...] = ()

    def __getitem__(self, level: str) -> LevelScore:
        for score in self.levels:
            if score.level == level:
                return score
        raise KeyError(level)

    def format_table(self) -> str:
        width = max(len(x) for x in LEVELS + ("Testing Level",))
        lines = [f"{'Testing Level':<{width}}  {'#Words':>7}  {'#WO':>6}  {'% Accuracy':>10}"]
        for s in self.levels:
            lines.append(f"{s.level:<{width}}  {s.words:>7}  {s.errors:>6}  {s.percentage:>10.2f}")
        return "\n".join(lines)

    def __str__(self):
        return self.format_table()


def evaluate(words, gold: dict[str, GoldEntry], lex: ExceptionLexicon | None = None, table=None) -> AccuracyReport:
    missing = sorted({word_key(w) for w in words} - gold.keys())
    if missing:
        raise MissingGold(missing)
    errors = [0, 0, 0, 0]
    failures = []
    for word in words:
        entry = gold[word_key(word)]
        try:
            record = convert(word, lex, table=table)
        except ProsodemeError as exc:
            failures.append(f"{word}\t{exc.stage}\t{type(exc).__name__}")
            errors = [e + 1 for e in errors]
            continue
        predicted = (
            record.i_level.syllables.bracketed(),
            record.i_level.label_string(),
            record.surface.bracketed(),
            record.stress_string(),
        )
        expected = (
            entry.gold_syllables,
            " ".join(entry.gold_labels.split()),
            entry.gold_surface,
            entry.gold_stress,
        )
        for k, (p, g) in enumerate(zip(predicted, expected)):
            if p != g:
                errors[k] += 1
    n = len(words)
    return AccuracyReport(tuple(LevelScore(level, n, e) for level, e in zip(LEVELS, errors)), tuple(failures))


def run_eval(input_path, gold_path, lexicon_path=None, table: PhonemeTable | None = None) -> AccuracyReport:
    words = read_words(input_path)
    gold = read_gold(gold_path, table)
    lex = ExceptionLexicon.load(lexicon_path) if lexicon_path else None
    return evaluate(words, gold, lex, table)
