# srdmod/domains/idealizer/commands.py
from srdmod.core.errors import EXIT_FAIL, EXIT_OK
from srdmod.core.fields import get_field
from srdmod.core.schemas import Verdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.idealizer.service import IdealizerService


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("dbasis", parents=[common], help="monomial basis of D_R up to a degree")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--compare", action="store_true", help="compare the criterion with the action oracle")
    parser.set_defaults(handler=dbasis)


def dbasis(args):
    complex_ = ComplexService.load(args.complex)
    report = IdealizerService.basis_report(
        complex_, args.max_degree, get_field(args.char), compare=args.compare
    )
    return report, EXIT_FAIL if report.xdelx.verdict == Verdict.FAIL else EXIT_OK
