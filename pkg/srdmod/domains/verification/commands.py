# srdmod/domains/verification/commands.py
from srdmod.core.config import settings
from srdmod.core.errors import EXIT_FAIL, EXIT_OK
from srdmod.core.fields import get_field
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.verification.generators import generate_complexes
from srdmod.domains.verification.schemas import GenerationMode
from srdmod.domains.verification.service import VerificationService


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("verify", parents=[common], help="run the verification suite on a complex")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--samples", type=int, default=None, help="random samples per check")
    parser.set_defaults(handler=verify)

    parser = subparsers.add_parser("generate", parents=[common], help="stream complexes as JSON lines")
    parser.add_argument("--n", type=int, required=True, help="vertex count")
    parser.add_argument("--mode", choices=[m.value for m in GenerationMode], default=GenerationMode.EXHAUSTIVE.value)
    parser.add_argument("--count", type=int, default=None, help="number of random complexes")
    parser.set_defaults(handler=generate)


def verify(args):
    report = VerificationService.run_suite(
        ComplexService.load(args.complex),
        get_field(args.char),
        args.max_degree,
        args.seed,
        settings.RANDOM_SAMPLES if args.samples is None else args.samples,
        args.box,
    )
    return report, EXIT_FAIL if report.failed else EXIT_OK


def generate(args):
    stream = generate_complexes(args.n, GenerationMode(args.mode), seed=args.seed, count=args.count)
    return (ComplexService.dump(complex_) for complex_ in stream), EXIT_OK
