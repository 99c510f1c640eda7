# srdmod/domains/localization/commands.py
from srdmod.core.errors import EXIT_FAIL, EXIT_OK
from srdmod.core.fields import get_field
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.localization.schemas import ActReport
from srdmod.domains.localization.service import LocalizationService
from srdmod.domains.sralgebra.polynomial import parse_monomial
from srdmod.domains.weyl.parser import parse_operator


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("act", parents=[common], help="operator acting on a fraction g/f^k")
    parser.add_argument("--complex", required=True, help="complex JSON file")
    parser.add_argument("--f", required=True, help="denominator, a monomial of the ring")
    parser.add_argument("--op", required=True, help='operator literal, e.g. "x4 d4^[2]"')
    parser.add_argument("--fraction", required=True, help='fraction literal, e.g. "x3/w^2"')
    parser.set_defaults(handler=act)

    parser = subparsers.add_parser("cech", parents=[common], help="multigraded Cech cohomology on a box")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--ideal", required=True, help='comma separated monomial generators, e.g. "w" or "x*y,w"')
    parser.set_defaults(handler=cech)


def act(args):
    field = get_field(args.char)
    complex_ = ComplexService.load(args.complex)
    ctx = LocalizationService.context(complex_, args.f, field)
    op = parse_operator(args.op, complex_.labels, field)
    u = LocalizationService.parse_fraction(ctx, args.fraction)
    return ActReport(
        context=LocalizationService.saturation_report(ctx),
        operator=op.format(complex_.labels),
        fraction=LocalizationService.describe(u),
        result=LocalizationService.describe(LocalizationService.act_operator(op, u)),
    ), EXIT_OK


def cech(args):
    complex_ = ComplexService.load(args.complex)
    generators = [parse_monomial(part, complex_.labels) for part in args.ideal.split(",") if part.strip()]
    report = LocalizationService.cech_report(complex_, generators, get_field(args.char), args.box)
    return report, EXIT_OK if report.square_zero else EXIT_FAIL
