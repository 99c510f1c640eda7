# srdmod/domains/complex/commands.py
from srdmod.core.errors import EXIT_OK
from srdmod.domains.complex.service import ComplexService


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("check", parents=[common], help="T-space predicate of a complex")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--summary", action="store_true", help="include facets and f-vector")
    parser.set_defaults(handler=check)


def check(args):
    """T-space verdict, with a non-separated face as witness when false"""
    complex_ = ComplexService.load(args.complex)
    report = ComplexService.t_space_report(complex_).model_dump(mode="json")
    if args.summary:
        report["complex"] = ComplexService.summary(complex_).model_dump(mode="json")
    return report, EXIT_OK
