import argparse
from typing import NoReturn

from app.cli import commands
from app.errors import UsageError
from app.models.harness import MUTATIONS


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that reports problems as UsageError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _add_input(parser: argparse.ArgumentParser, space: bool = False) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", "-i", help="Path of the poset file")
    source.add_argument("--text", "-t", help="Inline poset text; ';' separates lines")
    if space:
        parser.add_argument(
            "--space",
            action="store_true",
            help="Read an orthogonality space ('points:' / 'edges:') instead of a poset",
        )


def _add_output(parser: argparse.ArgumentParser, formats, default: str) -> None:
    parser.add_argument("--output", "-o", help="Write to this file instead of stdout")
    parser.add_argument(
        "--format", "-f",
        choices=formats,
        default=default,
        help=f"Output format (default: {default})",
    )


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="orthologic",
        description="Orthogonality spaces of proper quotients and their logics.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command", parser_class=CommandParser)
    subparsers.required = True

    classify = subparsers.add_parser("classify", help="Classify a poset and report witnesses")
    _add_input(classify)
    _add_output(classify, ("json", "text"), "json")
    classify.set_defaults(handler=commands.classify_command)

    logic = subparsers.add_parser("logic", help="Dump the logic of Q(P) or of a space")
    _add_input(logic, space=True)
    _add_output(logic, ("json", "dot", "text"), "json")
    logic.set_defaults(handler=commands.logic_command)

    kalmbach = subparsers.add_parser("kalmbach", help="Dump K(P) and its isomorphism with the logic")
    _add_input(kalmbach)
    _add_output(kalmbach, ("json", "dot", "text"), "json")
    kalmbach.set_defaults(handler=commands.kalmbach_command)

    macneille = subparsers.add_parser("macneille", help="Dump the completion and its image in the logic")
    _add_input(macneille)
    _add_output(macneille, ("json", "dot", "text"), "json")
    macneille.set_defaults(handler=commands.macneille_command)

    witness = subparsers.add_parser("witness", help="Print only the failure witnesses")
    _add_input(witness, space=True)
    _add_output(witness, ("text", "json"), "text")
    witness.set_defaults(handler=commands.witness_command)

    harness = subparsers.add_parser("harness", help="Check every theorem over the catalogue")
    harness.add_argument("--max", type=int, dest="n_max", help="Largest poset size (default: the cap)")
    harness.add_argument("--workers", type=int, help="Worker processes")
    harness.add_argument("--graphs-max", type=int, dest="graph_max", help="Largest graph size")
    harness.add_argument("--seed", type=int, help="Seed for sampled lemma instances")
    harness.add_argument("--mutate", choices=MUTATIONS, help="Apply a negative control")
    harness.add_argument("--strict", action="store_true", help="Exit with status 3 on any discrepancy")
    harness.add_argument("--allow-large", action="store_true", help="Accept sizes up to the hard cap")
    _add_output(harness, ("text", "json"), "text")
    harness.set_defaults(handler=commands.harness_command)

    return parser
