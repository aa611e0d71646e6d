"""Metrical foot construction over weight-labeled syllables.

Feet are built left to right. At each unfooted syllable the pair it forms
with its right neighbour is licensed by the highest affinity rule that
applies, in the order

    LAR > WWAR > HWAR > WHAR > HHAR > SOAR

where LAR is an exception lexicon lookup, WWAR pairs w+w, HWAR h+w, WHAR w+h
(only in two-syllable words or listed loanwords), HHAR h+h, and a
superheavy syllable always projects its own foot (SOAR). A syllable that
pairs with nothing becomes a one-syllable foot.

A WWAR or HHAR pair is deferred by one syllable when taking it would strand
the next syllable as a lone weak foot while the deferred syllable's
neighbour can still pair; this is why w w w h parses (w)(w w)(h) but
w w h parses (w w)(h).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import LexiconDirectiveMismatch
from .ingest import UPFWord
from .weight import LabeledWord, Weight

BINARY = "binary"
DEGENERATE = "degenerate"
SUPERFOOT = "superfoot"

LAR, WWAR, HWAR, WHAR, HHAR, SOAR, DEGEN = "LAR", "WWAR", "HWAR", "WHAR", "HHAR", "SOAR", "DEGEN"
HIERARCHY = (LAR, WWAR, HWAR, WHAR, HHAR, SOAR)
RULES = HIERARCHY + (DEGEN,)
PAIR_RULES = (WWAR, HWAR, WHAR, HHAR)
DEFERRABLE = (WWAR, HHAR)

W, H, SH = Weight.W, Weight.H, Weight.SH


@dataclass(frozen=True)
class FootNode:
    """One foot. ``children`` holds syllable indices, plus one nested
    FootNode for a superfoot; ``head`` indexes into ``children``."""

    kind: str
    children: tuple
    rule: str
    extrametrical: bool = False
    head: int = 0

    @property
    def span(self) -> tuple[int, ...]:
        out = []
        for child in self.children:
            out.extend(child.span if isinstance(child, FootNode) else (child,))
        return tuple(sorted(out))

    def leaves(self):
        if self.kind != SUPERFOOT:
            yield self
            return
        for child in self.children:
            if isinstance(child, FootNode):
                yield from child.leaves()

    def render(self) -> str:
        if self.kind == SUPERFOOT:
            parts = [c.render() if isinstance(c, FootNode) else str(c + 1) for c in self.children]
            text = "(" + "+".join(parts) + ")"
        else:
            span = self.span
            where = f"{span[0] + 1}-{span[-1] + 1}" if len(span) > 1 else f"{span[0] + 1}"
            text = f"{where}:{self.rule}"
        return f"<{text}>" if self.extrametrical else text


@dataclass(frozen=True)
class FootParse:
    word: LabeledWord
    feet: tuple[FootNode, ...]
    effective_labels: tuple[Weight, ...]
    from_lexicon: bool = False
    deletion_override: tuple[int, ...] | None = None

    def leaves(self) -> list[FootNode]:
        return [leaf for foot in self.feet for leaf in foot.leaves()]

    def flat(self) -> list[tuple[tuple[int, ...], str]]:
        """(span, rule) for every foot below superfoot level, in order.

        A bare syllable adjoined inside a superfoot counts as DEGEN.
        """
        out = []
        for foot in self.feet:
            children = foot.children if foot.kind == SUPERFOOT else (foot,)
            for c in children:
                out.append((c.span, c.rule) if isinstance(c, FootNode) else ((c,), DEGEN))
        return out

    def render(self) -> str:
        return ";".join(f.render() for f in self.feet)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Directive:
    """An exception lexicon entry.

    ``spans`` are 0-based inclusive (start, end, rule) triples tiling the word,
    or None when the entry only flags a loanword. ``deletions`` overrides the
    deletion sites (0-based syllable indices); None keeps the normal rule.
    """

    spans: tuple[tuple[int, int, str], ...] | None = None
    loanword: bool = False
    deletions: tuple[int, ...] | None = None


def parse_spans(text: str) -> tuple[tuple[int, int, str], ...]:
    spans = []
    expected = 0
    for item in text.split(";"):
        where, sep, rule = item.strip().partition(":")
        if not sep or rule not in RULES:
            raise LexiconDirectiveMismatch(f"bad span {item!r}")
        lo, _, hi = where.partition("-")
        try:
            start, end = int(lo) - 1, int(hi or lo) - 1
        except ValueError:
            raise LexiconDirectiveMismatch(f"bad span {item!r}") from None
        if start != expected or end - start not in (0, 1):
            raise LexiconDirectiveMismatch(f"span {item!r} does not continue the tiling")
        if rule != LAR and (end > start) != (rule in PAIR_RULES):
            raise LexiconDirectiveMismatch(f"rule {rule} does not fit span {item!r}")
        spans.append((start, end, rule))
        expected = end + 1
    return tuple(spans)


class ExceptionLexicon:
    """Read-only table of foot directives keyed by the UPF string (``k@m@l@ta:``).

    File format, UTF-8, ``#`` comments::

        <upf>\\t<spans or LOAN>[\\t<deletion sites>]

    Spans look like ``1-2:WWAR;3:DEGEN`` (1-based). ``LOAN`` only marks a
    loanword, which licenses WHAR outside two-syllable words. Deletion sites
    are comma-separated 1-based syllable numbers, or ``-`` for none.
    """

    def __init__(self, entries: dict[str, Directive] | None = None):
        self._entries = dict(entries or {})

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def get(self, key: str) -> Directive | None:
        return self._entries.get(key)

    @classmethod
    def load(cls, path: str | Path) -> "ExceptionLexicon":
        entries = {}
        for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.rstrip("\n").split("\t")
            if len(fields) not in (2, 3):
                raise LexiconDirectiveMismatch(f"{path}:{lineno}: expected 2 or 3 tab-separated fields")
            key = fields[0].strip()
            body = fields[1].strip()
            try:
                if body == "LOAN":
                    directive = Directive(loanword=True)
                else:
                    directive = Directive(spans=parse_spans(body))
                if len(fields) == 3 and fields[2].strip():
                    sites = fields[2].strip()
                    deletions = () if sites == "-" else tuple(int(s) - 1 for s in sites.split(","))
                    directive = Directive(directive.spans, directive.loanword, deletions)
            except (LexiconDirectiveMismatch, ValueError) as exc:
                raise LexiconDirectiveMismatch(f"{path}:{lineno}: {exc}") from None
            entries[key] = directive
        return cls(entries)


def lookup_exception(word: UPFWord, lex: ExceptionLexicon | None) -> Directive | None:
    if lex is None:
        return None
    return lex.get(word.text)


def pair_rule(left: Weight, right: Weight, allow_whar: bool) -> str | None:
    """Highest affinity rule that binds two adjacent syllables, if any."""
    if SH in (left, right):
        return None
    if left == W and right == W:
        return WWAR
    if left == H and right == W:
        return HWAR
    if left == W and right == H:
        return WHAR if allow_whar else None
    return HHAR


def _scan(labels: tuple[Weight, ...], allow_whar: bool) -> list[tuple[int, ...]]:
    n = len(labels)

    def rule_at(i):
        return pair_rule(labels[i], labels[i + 1], allow_whar) if i + 1 < n else None

    groups = []
    i = 0
    while i < n:
        rule = rule_at(i)
        if rule is None:
            groups.append((i,))
            i += 1
            continue
        strands = i + 2 < n and labels[i + 2] == W and rule_at(i + 2) is None
        if rule in DEFERRABLE and strands and rule_at(i + 1) is not None:
            groups.append((i,))
            i += 1
            continue
        groups.append((i, i + 1))
        i += 2
    return groups


def _leaf(span: tuple[int, ...], rule: str, labels) -> FootNode:
    if len(span) == 2:
        return FootNode(BINARY, span, rule, extrametrical=rule == WWAR)
    i = span[0]
    return FootNode(DEGENERATE, span, rule, extrametrical=i == 0 and labels[i] == W)


def _is_single(f: FootNode) -> bool:
    return f.kind == DEGENERATE and f.rule != SOAR


def _group_superfeet(leaves: list[FootNode], labels) -> list[FootNode]:
    """Adjoin lone syllables to neighbouring feet (one level of recursion)."""

    def weak_single(f):
        return _is_single(f) and labels[f.children[0]] == W

    def joins_next(k):
        if k + 1 >= len(leaves):
            return False
        f, nxt = leaves[k], leaves[k + 1]
        return (_is_single(f) and nxt.rule == SOAR and nxt.kind == DEGENERATE) or (
            weak_single(f) and nxt.rule == WWAR
        )

    out = []
    k = 0
    while k < len(leaves):
        f = leaves[k]
        last = k + 1 == len(leaves) - 1
        if joins_next(k):
            nxt = leaves[k + 1]
            out.append(FootNode(SUPERFOOT, (f.children[0], nxt), nxt.rule, extrametrical=nxt.rule == WWAR, head=1))
            k += 2
        elif (
            k + 1 < len(leaves)
            and _is_single(leaves[k + 1])
            and not joins_next(k + 1)
            and ((f.rule == SOAR and f.kind == DEGENERATE) or (last and weak_single(leaves[k + 1])))
        ):
            out.append(FootNode(SUPERFOOT, (f, leaves[k + 1].children[0]), f.rule, head=0))
            k += 2
        else:
            out.append(f)
            k += 1
    return out


def _downgrade(labels: list[Weight], leaves: list[FootNode]):
    n = len(labels)
    for leaf in leaves:
        if leaf.rule != HHAR or leaf.kind != BINARY:
            continue
        left, right = leaf.children
        if n == 3 and left == 0:
            labels[0] = W
        elif n == 2:
            labels[right] = W


def build_feet(w: LabeledWord, lex: ExceptionLexicon | None = None) -> FootParse:
    """Parse a labeled word into feet; see the module docstring for the rules.

    HHAR demotes the first syllable of a three-syllable word and the second
    of a two-syllable word to weak in ``effective_labels``; mora counts are
    left alone.
    """
    labels = w.labels
    n = len(labels)
    directive = lookup_exception(w.syllables.source, lex)

    if directive is not None and directive.spans is not None:
        spans = directive.spans
        if spans[-1][1] != n - 1:
            raise LexiconDirectiveMismatch(
                f"directive for /{w.syllables.source.text}/ covers {spans[-1][1] + 1} syllables, word has {n}"
            )
        leaves = [_leaf(tuple(range(a, b + 1)), rule, labels) for a, b, rule in spans]
    else:
        allow_whar = n == 2 or (directive is not None and directive.loanword)
        leaves = []
        for span in _scan(labels, allow_whar):
            if len(span) == 2:
                rule = pair_rule(labels[span[0]], labels[span[1]], allow_whar)
            else:
                rule = SOAR if labels[span[0]] == SH else DEGEN
            leaves.append(_leaf(span, rule, labels))

    effective = list(labels)
    _downgrade(effective, leaves)
    feet = _group_superfeet(leaves, effective)
    return FootParse(
        word=w,
        feet=tuple(feet),
        effective_labels=tuple(effective),
        from_lexicon=directive is not None and directive.spans is not None,
        deletion_override=None if directive is None else directive.deletions,
    )
