"""Exception classes raised along the conversion pipeline."""


class ProsodemeError(Exception):
    """Base class. ``stage`` names the pipeline step that failed, once known."""

    stage: str | None = None


class EmptyInput(ProsodemeError):
    pass


class NonDevanagari(ProsodemeError):
    pass


class UnmappableCharacter(ProsodemeError):
    def __init__(self, char: str, word: str = ""):
        self.char = char
        self.word = word
        super().__init__(f"cannot map U+{ord(char):04X} ({char!r}) in {word!r}")


class TableError(ProsodemeError):
    pass


class NoNucleus(ProsodemeError):
    pass


class LexiconDirectiveMismatch(ProsodemeError):
    pass


class NoPrecedingSyllable(ProsodemeError):
    pass


class MissingGold(ProsodemeError):
    def __init__(self, keys):
        self.keys = list(keys)
        super().__init__("no gold entry for: " + ", ".join(self.keys))


class MalformedGold(ProsodemeError):
    pass
