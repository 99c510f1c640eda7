# srdmod/main.py
import argparse
import json
import logging
import sys
from typing import List, Optional, Tuple

from pydantic import ValidationError

from srdmod import __version__
from srdmod.core.config import settings
from srdmod.core.errors import EXIT_INPUT_ERROR, SRDModError
from srdmod.core.output import render, to_payload

from srdmod.domains.complex import commands as complex_commands
from srdmod.domains.sralgebra import commands as sralgebra_commands
from srdmod.domains.idealizer import commands as idealizer_commands
from srdmod.domains.ddm import commands as ddm_commands
from srdmod.domains.localization import commands as localization_commands
from srdmod.domains.holonomy import commands as holonomy_commands
from srdmod.domains.verification import commands as verification_commands

logger = logging.getLogger(__name__)


def parse_box(text: str) -> Tuple[int, int]:
    """`lo:hi`, e.g. `-4:4`; pass it as `--box=-4:4` so argparse keeps the sign"""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must look like lo:hi, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty box {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=settings.CHARACTERISTIC, help="0 or a prime")
    common.add_argument("--max-degree", type=int, default=settings.MAX_DEGREE, dest="max_degree")
    common.add_argument("--box", type=parse_box, default=settings.BOX, help="multidegree box lo:hi")
    common.add_argument("--seed", type=int, default=settings.SEED)
    common.add_argument("--json", action="store_true", help="compact single-line JSON")
    common.add_argument("--log-level", default=settings.LOG_LEVEL, dest="log_level")

    parser = argparse.ArgumentParser(
        prog="sr-dmod",
        description="Stanley-Reisner rings of T-spaces and their differential operators",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Mount commands
    complex_commands.register(subparsers, common)
    sralgebra_commands.register(subparsers, common)
    idealizer_commands.register(subparsers, common)
    ddm_commands.register(subparsers, common)
    localization_commands.register(subparsers, common)
    holonomy_commands.register(subparsers, common)
    verification_commands.register(subparsers, common)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        result, code = args.handler(args)
        if hasattr(result, "__next__"):
            # Streams go out as JSON lines
            for item in result:
                print(json.dumps(to_payload(item), sort_keys=True))
        else:
            print(render(result, args.json))
    except SRDModError as e:
        logger.warning(f"{args.command}: {e.detail}")
        print(json.dumps(e.to_dict(), sort_keys=True))
        return e.exit_code
    except ValidationError as e:
        logger.warning(f"{args.command}: invalid input")
        print(json.dumps({"error": str(e), "kind": "ValidationError"}, sort_keys=True))
        return EXIT_INPUT_ERROR
    return code


def cli() -> None:
    sys.exit(run())


if __name__ == "__main__":
    cli()
