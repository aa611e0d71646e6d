import argparse
import sys

from .errors import LexiconDirectiveMismatch, MalformedGold, MissingGold
from .harness import run_convert, run_eval

EXIT_OK, EXIT_IO, EXIT_GOLD = 0, 1, 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prosodeme",
        description="Hindi Devanagari words to syllabified, weight-labeled, stress-marked phoneme strings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    conv = sub.add_parser("convert", help="convert a word list, one word per line")
    conv.add_argument("input", help="UTF-8 word list, or - for stdin")
    conv.add_argument("-o", "--output", help="output file (default: stdout)")
    conv.add_argument("--lexicon", help="exception lexicon file")
    conv.add_argument("--rejects", help="where failed words go (default: OUTPUT.rejects, or stderr)")
    conv.add_argument("--no-schwa-deletion", action="store_true", help="keep every schwa")
    conv.add_argument("--stage", choices=("upf", "ilevel", "full"), default="full")
    conv.add_argument("--format", choices=("tsv", "records"), default="tsv")

    ev = sub.add_parser("eval", help="score a word list against a gold file at four levels")
    ev.add_argument("input", help="UTF-8 word list, or - for stdin")
    ev.add_argument("gold", help="gold file (conversion TSV, 5-column TSV, or JSON records)")
    ev.add_argument("--lexicon", help="exception lexicon file")
    ev.add_argument("--show-failures", action="store_true", help="list words that failed to convert")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "convert":
        return run_convert(
            args.input,
            args.lexicon,
            args.output,
            stage=args.stage,
            fmt=args.format,
            delete=not args.no_schwa_deletion,
            rejects_path=args.rejects,
        )

    try:
        report = run_eval(args.input, args.gold, args.lexicon)
    except (MissingGold, MalformedGold) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GOLD
    except (OSError, UnicodeDecodeError, LexiconDirectiveMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(report.format_table())
    if args.show_failures:
        for line in report.failures:
            print(line)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
