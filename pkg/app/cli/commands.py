"""
One handler per subcommand. Handlers read the input, delegate to a
controller, render in the requested format and write the result.
"""
import argparse
import logging
import sys

from app.cli import render
from app.controllers.classification_controller import ClassificationController
from app.controllers.harness_controller import HarnessController
from app.controllers.lattice_controller import LatticeController
from app.errors import DiscrepancyError, InputError
from app.models.harness import HarnessConfig
from app.models.ortho_space import parse_space
from app.models.poset import Poset, parse_poset
from app.settings import get_settings

logger = logging.getLogger(__name__)


def read_input(args: argparse.Namespace) -> str:
    """
    Raises:
        InputError: If the input file cannot be read
    """
    if args.text is not None:
        return args.text
    try:
        with open(args.input, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise InputError(f"Cannot read {args.input}: {e.strerror or e}")


def read_poset(args: argparse.Namespace) -> Poset:
    return parse_poset(read_input(args))


def emit(args: argparse.Namespace, text: str) -> None:
    """
    Raises:
        InputError: If the output file cannot be written
    """
    if not args.output:
        sys.stdout.write(text)
        return
    try:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as e:
        raise InputError(f"Cannot write {args.output}: {e.strerror or e}")
    logger.info(f"Wrote {args.command} output to {args.output}")


def classify_command(args: argparse.Namespace) -> None:
    report = ClassificationController().classify(read_poset(args))
    emit(args, render.as_json(report) if args.format == "json" else render.classification_text(report))


def logic_command(args: argparse.Namespace) -> None:
    controller = LatticeController()
    if args.space:
        dump = controller.logic_of_space(parse_space(read_input(args)))
    else:
        dump = controller.logic_of_poset(read_poset(args))
    renderers = {"json": render.as_json, "dot": render.logic_dot, "text": render.logic_text}
    emit(args, renderers[args.format](dump))


def kalmbach_command(args: argparse.Namespace) -> None:
    dump = LatticeController().kalmbach(read_poset(args))
    renderers = {"json": render.as_json, "dot": render.kalmbach_dot, "text": render.kalmbach_text}
    emit(args, renderers[args.format](dump))


def macneille_command(args: argparse.Namespace) -> None:
    dump = LatticeController().macneille(read_poset(args))
    renderers = {"json": render.as_json, "dot": render.completion_dot, "text": render.completion_text}
    emit(args, renderers[args.format](dump))


def witness_command(args: argparse.Namespace) -> None:
    controller = ClassificationController()
    if args.space:
        report = controller.witness_space(parse_space(read_input(args)))
    else:
        report = controller.witness_poset(read_poset(args))
    emit(args, render.as_json(report) if args.format == "json" else render.witness_text(report))


def harness_command(args: argparse.Namespace) -> None:
    """
    Discrepancies are data: they are reported and the exit status stays 0
    unless ``--strict`` is given.

    Raises:
        DiscrepancyError: In strict mode, after the report is written
    """
    settings = get_settings()
    config = HarnessConfig.from_settings(settings, seed=args.seed, mutation=args.mutate)
    n_max = args.n_max if args.n_max is not None else settings.cap
    report = HarnessController().run(
        n_max,
        config,
        workers=args.workers,
        graph_max=args.graph_max,
        allow_large=args.allow_large,
    )
    emit(args, render.as_json(report) if args.format == "json" else render.harness_text(report))
    if args.strict and not report.verified:
        raise DiscrepancyError(f"Harness found {len(report.discrepancies)} discrepancies")
