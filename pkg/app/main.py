import logging
import sys
from typing import List, Optional

from app.cli.parser import build_parser
from app.errors import EXIT_OK, OrthologicError
from app.settings import get_settings

logger = logging.getLogger(__name__)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the subcommand and return the process exit status."""
    try:
        settings = get_settings()
    except OrthologicError as e:
        sys.stderr.write(f"error: {e.detail}\n")
        return e.exit_code

    # Configure logging; stdout carries command output only
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        args = build_parser().parse_args(argv)
        logger.info(f"Running {args.command}")
        args.handler(args)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except OrthologicError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        sys.stderr.write(f"error: {e.detail}\n")
        return e.exit_code
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
