# srdmod/domains/holonomy/commands.py
from srdmod.core.errors import EXIT_FAIL, EXIT_OK
from srdmod.core.fields import get_field
from srdmod.core.schemas import Verdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.holonomy.schemas import HolonomyReport
from srdmod.domains.holonomy.service import HolonomyService
from srdmod.domains.localization.service import LocalizationService


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("holonomy", parents=[common], help="filtration growth on R and R_f")
    parser.add_argument("complex", help="complex JSON file")
    parser.add_argument("--imax", type=int, default=8, help="largest filtration level")
    parser.add_argument("--f", default=None, help="monomial to localize at")
    parser.add_argument("--tmax", type=int, default=3, help="largest divided power in the R_f check")
    parser.set_defaults(handler=holonomy)


def holonomy(args):
    field = get_field(args.char)
    complex_ = ComplexService.load(args.complex)
    levels = min(args.imax, args.max_degree)
    report = HolonomyReport(
        levels=HolonomyService.bernstein_levels(complex_, levels),
        r_filtration=HolonomyService.r_filtration_report(complex_, args.imax),
        filtration_law=HolonomyService.r_filtration_law_check(complex_, levels, field),
    )
    if args.f is not None:
        ctx = LocalizationService.context(complex_, args.f, field)
        report.rf_filtration = HolonomyService.rf_filtration_check(ctx, levels, args.tmax)
        report.rf_growth = HolonomyService.rf_growth_report(ctx, args.imax)
    checks = [report.r_filtration.check, report.filtration_law, report.rf_filtration,
              report.rf_growth.check if report.rf_growth else None]
    failed = any(c is not None and c.verdict == Verdict.FAIL for c in checks)
    return report, EXIT_FAIL if failed else EXIT_OK
