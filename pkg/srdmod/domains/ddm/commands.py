# srdmod/domains/ddm/commands.py
from srdmod.core.errors import EXIT_FAIL, EXIT_OK, ParseError
from srdmod.core.fields import get_field
from srdmod.core.schemas import Verdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.ddm.schemas import NormalFormReport, RationalPoint
from srdmod.domains.ddm.service import DdmService
from srdmod.domains.idealizer.operators import DROperator
from srdmod.domains.weyl.parser import parse_operator

ACTIONS = ("nf", "invert", "rank", "filt")


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("ddm", parents=[common], help="D/Dm at a rational maximal ideal")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--point", required=True, help="coordinates, e.g. 1,1,0,0")
    parser.add_argument("--op", default=None, help='operator literal, e.g. "x1 d1^[1]"')
    parser.add_argument("--action", choices=ACTIONS, default="nf")
    parser.add_argument("--order", type=int, default=2, help="largest |t| for the rank check, or i_max for filt")
    parser.set_defaults(handler=ddm)


def ddm(args):
    field = get_field(args.char)
    complex_ = ComplexService.load(args.complex)
    point = RationalPoint.parse(args.point, field, complex_)

    if args.action == "rank":
        report = DdmService.basis_rank_check(complex_, point, args.order)
        return report, EXIT_FAIL if report.check.verdict == Verdict.FAIL else EXIT_OK
    if args.action == "filt":
        report = DdmService.filt_dim_check(complex_, point, args.order)
        return report, EXIT_FAIL if report.check.verdict == Verdict.FAIL else EXIT_OK

    if args.op is None:
        raise ParseError(f"--op is required for --action {args.action}")
    op = DROperator(parse_operator(args.op, complex_.labels, field), complex_).op
    element = DdmService.normal_form(op, complex_, point)
    if args.action == "nf":
        return NormalFormReport(
            operator=op.format(complex_.labels),
            point=point.describe(),
            coordinates=DdmService.describe(complex_, element),
            verified=DdmService.normal_form_verified(op, complex_, point),
        ), EXIT_OK

    report = DdmService.find_inverse(element, complex_, point)
    return report, EXIT_OK if report.found and report.verified else EXIT_FAIL
