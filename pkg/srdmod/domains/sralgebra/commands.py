# srdmod/domains/sralgebra/commands.py
from srdmod.core.errors import EXIT_OK
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.sralgebra.polynomial import format_monomial
from srdmod.domains.sralgebra.schemas import HilbertReport, IdealReport
from srdmod.domains.sralgebra.service import SRAlgebraService


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("ideal", parents=[common], help="face ideal generators")
    parser.add_argument("complex", help="complex JSON file")
    parser.set_defaults(handler=ideal)

    parser = subparsers.add_parser("primes", parents=[common], help="minimal primes of the face ideal")
    parser.add_argument("complex", help="complex JSON file")
    parser.set_defaults(handler=primes)

    parser = subparsers.add_parser("hilbert", parents=[common], help="Hilbert data of the ring")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--jmax", type=int, default=None, help="largest degree (default --max-degree)")
    parser.set_defaults(handler=hilbert)


def _ideal_report(complex_) -> IdealReport:
    return IdealReport(
        generators=[
            format_monomial(complex_.labels, g) for g in SRAlgebraService.face_ideal_generators(complex_)
        ],
        minimal_primes=[
            ComplexService.names(complex_, p) for p in SRAlgebraService.minimal_primes(complex_)
        ],
    )


def ideal(args):
    return _ideal_report(ComplexService.load(args.complex)), EXIT_OK


def primes(args):
    report = _ideal_report(ComplexService.load(args.complex))
    return {"primes": report.minimal_primes}, EXIT_OK


def hilbert(args):
    complex_ = ComplexService.load(args.complex)
    j_max = args.max_degree if args.jmax is None else args.jmax
    return HilbertReport(j_max=j_max, data=SRAlgebraService.hilbert_data(complex_, j_max)), EXIT_OK
