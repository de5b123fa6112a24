import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Ensure project root is in path
root_path = Path(__file__).parent.parent.parent
if str(root_path) not in sys.path:
    sys.path.append(str(root_path))

from src.bench.architect import Architect  # noqa: E402
from src.bench.blueprint import Blueprint  # noqa: E402
from src.core.correction import RULES  # noqa: E402
from src.core.leibniz import SCHEMES  # noqa: E402
from src.methods.registry import METHODS, method_names, split_method_spec  # noqa: E402
from src.precision.errors import ConfigError  # noqa: E402
from src.reporting.convergence_report import render  # noqa: E402
from src.utils.config import OUTPUT_FORMATS, RunConfig, load_config  # noqa: E402
from src.validation.validator import SUITE_NAMES, SuiteValidator  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

PARAM_FLAGS = ("n", "terms", "panels", "iterations")
OPTION_FLAGS = ("x", "rule", "angle", "scheme")


class Trigger:
    """
    Entry point of the command line.
    Parses arguments, builds the Blueprint and hands it to the Architect.
    """

    def __init__(self):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--digits", type=int, default=None, help="Digits after the point (default: PI_DIGITS or 50)"
        )
        common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, dest="output_format")
        common.add_argument("--seed", type=int, default=0, help="Seed for sampled checks")
        common.add_argument("--jobs", type=int, default=1, help="Worker threads for compare")
        common.add_argument("-v", "--verbose", action="count", default=0)

        options = argparse.ArgumentParser(add_help=False)
        options.add_argument("--x", type=str, default=None, help="Argument of arctan (arcbit, series, leibniz)")
        options.add_argument("--rule", choices=list(RULES), default=None, help="Correction rule")
        options.add_argument("--angle", type=str, default=None, help="Angle for sine/versine")
        options.add_argument("--scheme", choices=SCHEMES, default=None, help="Quadrature rule")

        self.parser = argparse.ArgumentParser(
            prog="pi_series_cli", description="High-precision pi/4, arctan and sine series"
        )
        commands = self.parser.add_subparsers(dest="command", required=True)

        estimate = commands.add_parser(
            "estimate", parents=[common, options], help="Evaluate one method once"
        )
        estimate.add_argument("method", choices=method_names())
        estimate.add_argument("--n", type=int, default=None, help="Arc bits (arcbit)")
        estimate.add_argument("--terms", type=int, default=None, help="Series terms")
        estimate.add_argument("--panels", type=int, default=None, help="Quadrature panels (leibniz)")
        estimate.add_argument("--iterations", type=int, default=None, help="Refinements (sine, versine)")

        compare = commands.add_parser(
            "compare", parents=[common, options], help="Convergence grid over methods and params"
        )
        compare.add_argument("--methods", required=True, help="e.g. series,corrected:cf3")
        compare.add_argument("--params", required=True, help="e.g. 10,100,1000")

        verify = commands.add_parser("verify", parents=[common], help="Run verification suites")
        verify.add_argument("suite", choices=("all",) + SUITE_NAMES)

    def execute(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK

        level = logging.WARNING
        if args.verbose == 1:
            level = logging.INFO
        elif args.verbose > 1:
            level = logging.DEBUG
        logging.basicConfig(
            level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
        )

        default_format = "csv" if args.command == "compare" else "table"
        try:
            config = load_config(
                digits=args.digits,
                output_format=args.output_format or default_format,
                seed=args.seed,
                jobs=args.jobs,
            )
        except ConfigError as e:
            return self._usage(str(e))
        logger.info("Trigger: command=%s digits=%d", args.command, config.digits)

        if args.command == "verify":
            return self._verify(args, config)
        return self._bench(args, config)

    def _usage(self, message: str) -> int:
        self.parser.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE

    def _options(self, args: argparse.Namespace) -> dict:
        return {k: getattr(args, k) for k in OPTION_FLAGS if getattr(args, k, None) is not None}

    def _bench(self, args: argparse.Namespace, config: RunConfig) -> int:
        blueprint = Blueprint(config)
        shared = self._options(args)
        try:
            if args.command == "estimate":
                flag = METHODS[args.method].param_flag.lstrip("-")
                param = getattr(args, flag)
                if param is None:
                    raise ConfigError(f"{args.method} needs --{flag}")
                others = [f for f in PARAM_FLAGS if f != flag and getattr(args, f) is not None]
                if others:
                    raise ConfigError(f"{args.method} takes --{flag}, not --{others[0]}")
                blueprint.add_cell(args.method, param, shared)
            else:
                entries = []
                for spec in args.methods.split(","):
                    name, extra = split_method_spec(spec)
                    entries.append({"method": name, "options": {**shared, **extra}})
                params = self._parse_params(args.params)
                blueprint.load_grid(entries, params)
        except ConfigError as e:
            return self._usage(str(e))

        Architect(blueprint).run()
        failed = blueprint.failed_cells()
        if failed:
            for cell in failed:
                print(f"error: {cell.method} {cell.param}: {cell.error}", file=sys.stderr)
            return EXIT_USAGE
        sys.stdout.write(render(blueprint.records(), config.output_format))
        return EXIT_OK

    @staticmethod
    def _parse_params(text: str) -> List[int]:
        try:
            params = [int(p) for p in text.split(",") if p.strip()]
        except ValueError:
            raise ConfigError(f"params must be comma-separated integers, got '{text}'") from None
        if not params:
            raise ConfigError("params list is empty")
        return params

    def _verify(self, args: argparse.Namespace, config: RunConfig) -> int:
        validator = SuiteValidator(config)
        validator.run(args.suite)
        sys.stdout.write(validator.report())
        return EXIT_OK if validator.all_passed else EXIT_VERIFY_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    return Trigger().execute(argv)


if __name__ == "__main__":
    sys.exit(main())
