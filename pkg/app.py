"""Coined Walks - command line entry point"""
import argparse
import logging
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import pandas as pd

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from utils.config import load_config, setup_logging
from utils.errors import (
    DomainError,
    NoLimitingDistributionError,
    NumericalError,
    PreconditionError,
    WalkError,
)
from utils.serialization import to_csv_text, to_json_text, write_frame, write_json, write_output

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

_ANGLE_RE = re.compile(
    r'^\s*(?P<sign>[+-]?)\s*(?P<coef>\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$',
    re.IGNORECASE,
)


def parse_angle(text: str) -> float:
    """Parse radians given as a decimal or as a multiple of pi ("pi/4", "3pi/8", "0.4*pi")"""
    match = _ANGLE_RE.match(str(text))
    if match:
        coef_text = match.group('coef')
        coef = float(coef_text) if coef_text not in ('', '.') else 1.0
        value = coef * math.pi
        if match.group('den'):
            den = float(match.group('den'))
            if den == 0.0:
                raise argparse.ArgumentTypeError(f"zero denominator in angle: {text!r}")
            value /= den
        return -value if match.group('sign') == '-' else value
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid angle: {text!r}")


def _angle_list(text: str) -> List[float]:
    try:
        return [parse_angle(item) for item in text.split(',') if item.strip()]
    except argparse.ArgumentTypeError as e:
        raise DomainError(str(e), field='params')


def _float_list(text: str, field: str = 'params') -> List[float]:
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise DomainError(f"invalid number list: {text!r}", field=field)


class WalkLab:
    """Dispatches CLI subcommands to the walk engines and writes their output"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """Initialize the command dispatcher

        Args:
            config: Parsed configuration; loaded from config.yaml when omitted
        """
        self.config = load_config() if config is None else config
        self.cli_config = self.config.get('cli', {})
        self.workers = self.cli_config.get('workers', 4)

        self.handlers: Dict[str, Callable[[argparse.Namespace], None]] = {
            'simulate-quantum': self.cmd_simulate_quantum,
            'simulate-classical': self.cmd_simulate_classical,
            'closed-form': self.cmd_closed_form,
            'classify': self.cmd_classify,
            'variance-scan': self.cmd_variance_scan,
            'limit-density': self.cmd_limit_density,
        }

    def run(self, args: argparse.Namespace) -> None:
        logger.info(f"Running {args.command}")
        self.handlers[args.command](args)
        logger.info(f"Finished {args.command}")

    @staticmethod
    def _setup(args: argparse.Namespace):
        from walk_core.coin_algebra import CoinSetup
        return CoinSetup(theta=args.theta, phi1=args.phi1, phi2=args.phi2, varphi=args.varphi, xi=args.xi)

    @staticmethod
    def _emit(args: argparse.Namespace, frame: pd.DataFrame, payload: Dict[str, Any]) -> None:
        if args.format == 'json':
            write_json(payload, args.out)
        else:
            write_frame(frame, args.out)

    def cmd_simulate_quantum(self, args: argparse.Namespace) -> None:
        """Write the spatial distribution after n steps"""
        from walk_core.quantum_sim import distribution, evolve

        dist = distribution(evolve(self._setup(args), args.n))
        self._emit(args, dist.to_frame(), dist.to_json_dict())

    def cmd_simulate_classical(self, args: argparse.Namespace) -> None:
        """Write the joint or marginal distribution of the correlated walk"""
        from walk_core.classical_walk import CorrelationParams, evolve, marginal

        params = CorrelationParams(delta=args.delta, q0=(args.q0_up, 1.0 - args.q0_up))
        state = evolve(params, args.n)
        if args.joint:
            self._emit(args, state.to_frame(), state.to_json_dict())
        else:
            dist = marginal(state)
            self._emit(args, dist.to_frame(), dist.to_json_dict())

    def cmd_closed_form(self, args: argparse.Namespace) -> None:
        """Write amplitudes from direct evolution, the kappa sums or the Fourier oracle"""
        from walk_core.closed_form import fourier_oracle, quantum_amplitudes_closed, walk_state_table
        from walk_core.quantum_sim import evolve

        setup = self._setup(args)
        if args.method == 'direct':
            table = walk_state_table(evolve(setup, args.n))
        elif args.method == 'lemma':
            table = quantum_amplitudes_closed(setup, args.n)
        else:
            table = fourier_oracle(setup, args.n, grid_size=args.grid_size)
        self._emit(args, table.to_frame(), table.to_json_dict())

    def cmd_classify(self, args: argparse.Namespace) -> None:
        """Write the classification record as JSON"""
        from analysis.classify import classify_setup

        write_json(classify_setup(self._setup(args)), args.out)

    def _quantum_variances(self, theta: float, args: argparse.Namespace) -> List[float]:
        from walk_core.coin_algebra import CoinSetup, wrap_angle
        from walk_core.quantum_sim import variance_series

        setup = CoinSetup(theta=wrap_angle(theta), phi1=args.phi1, phi2=args.phi2, varphi=args.varphi, xi=args.xi)
        return list(variance_series(setup, args.n_max))

    def _classical_variances(self, delta: float, args: argparse.Namespace) -> List[float]:
        from walk_core.classical_walk import ballistic_variance, gillis_variance

        if delta == 1.0:
            return [ballistic_variance(n) for n in range(args.n_max + 1)]
        return [gillis_variance(delta, n) for n in range(args.n_max + 1)]

    def cmd_variance_scan(self, args: argparse.Namespace) -> None:
        """Write CSV n,param,variance over a grid of theta or delta values"""
        if args.n_max < args.n_min or args.n_min < 0:
            raise DomainError(f"need 0 <= n-min <= n-max, got {args.n_min}..{args.n_max}", field='n_max')
        if args.walk == 'quantum':
            params = _angle_list(args.params)
            worker = self._quantum_variances
        else:
            params = _float_list(args.params)
            worker = self._classical_variances
        if not params:
            raise DomainError("at least one value is required", field='params')

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            series = list(pool.map(lambda value: worker(value, args), params))

        rows = [
            {'n': n, 'param': value, 'variance': values[n]}
            for value, values in zip(params, series)
            for n in range(args.n_min, args.n_max + 1)
        ]
        frame = pd.DataFrame(rows, columns=['n', 'param', 'variance'])
        self._emit(args, frame, {'walk': args.walk, 'rows': rows})

    def cmd_limit_density(self, args: argparse.Namespace) -> None:
        """Write density curves for Gaussian, (theta, lambda) or full-setup input

        With --empirical-n a companion file holds the finite-n rescaled pmf of
        the walk the curves describe: the correlated walk for --delta, the
        setup itself for --from-setup, and a representative setup with the
        same (theta, lambda) otherwise.
        """
        from analysis.classify import asymptotic_representative
        from analysis.limit_dist import (
            LimitParams,
            classical_empirical_curve,
            default_grid,
            density_curve,
            empirical_curve,
            gaussian_curve,
        )
        from walk_core.coin_algebra import is_trivial

        companion_target = self._companion_target(args) if args.empirical_n else None
        grid = default_grid(args.grid_points)
        companions = []
        if args.delta is not None:
            frames = []
            for delta in _float_list(args.delta, field='delta'):
                frame = gaussian_curve(delta, grid)
                frame.insert(0, 'delta', delta)
                frames.append(frame)
                if args.empirical_n:
                    companion = classical_empirical_curve(delta, args.empirical_n)
                    companion.insert(0, 'delta', delta)
                    companions.append(companion)
            curve = pd.concat(frames, ignore_index=True)
        else:
            if args.from_setup:
                setup = self._setup(args)
                params = LimitParams.from_setup(setup)
            else:
                if args.lam is None:
                    raise DomainError("give --lambda, --from-setup or --delta", field='lambda')
                if is_trivial((args.theta, 0.0, 0.0)):
                    raise NoLimitingDistributionError("trivial coins have no limiting density")
                params = LimitParams.from_theta(args.theta, args.lam)
                setup = asymptotic_representative(args.theta, args.lam).to_setup() if args.empirical_n else None
            curve = density_curve(params, grid)
            if args.empirical_n:
                companions.append(empirical_curve(setup, args.empirical_n))

        self._emit(args, curve, {'columns': list(curve.columns), 'rows': curve.to_dict(orient='records')})

        if companions:
            companion = pd.concat(companions, ignore_index=True)
            if args.format == 'json':
                write_output(to_json_text({'rows': companion.to_dict(orient='records')}) + '\n', companion_target)
            else:
                write_output(to_csv_text(companion), companion_target)

    @staticmethod
    def _companion_target(args: argparse.Namespace) -> str:
        """Path for the empirical companion; derived from --out unless given explicitly"""
        if args.out in (None, '-') and args.empirical_out in (None, '-'):
            raise DomainError("--empirical-out is required when the density goes to stdout",
                              field='empirical_out')
        if args.empirical_out is not None:
            return args.empirical_out
        path = Path(args.out)
        return str(path.with_name(f"{path.stem}_empirical{path.suffix or '.csv'}"))


def _add_setup_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group('coin setup (radians, "pi/4" style literals accepted)')
    group.add_argument('--theta', type=parse_angle, default=math.pi / 4)
    group.add_argument('--phi1', type=parse_angle, default=0.0)
    group.add_argument('--phi2', type=parse_angle, default=0.0)
    group.add_argument('--varphi', type=parse_angle, default=math.pi / 4)
    group.add_argument('--xi', type=parse_angle, default=math.pi / 2)


def _add_output_flags(parser: argparse.ArgumentParser, default_format: str) -> None:
    parser.add_argument('--out', default=None, help='output path (stdout when omitted)')
    parser.add_argument('--format', choices=['csv', 'json'], default=default_format)


def build_parser(config: Optional[Dict[str, Any]] = None) -> argparse.ArgumentParser:
    cli = (config or {}).get('cli', {})
    default_format = cli.get('format', 'csv')

    parser = argparse.ArgumentParser(
        prog='coined-walks',
        description='Simulate, classify and compare coined quantum walks and correlated random walks.',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('simulate-quantum', help='spatial distribution of a quantum walk')
    _add_setup_flags(p)
    p.add_argument('--n', type=int, required=True)
    _add_output_flags(p, default_format)

    p = sub.add_parser('simulate-classical', help='distribution of a correlated random walk')
    p.add_argument('--delta', type=float, required=True)
    p.add_argument('--q0-up', type=float, default=cli.get('q0_up', 0.5))
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--joint', action='store_true', help='emit j,p_up,p_down instead of the marginal')
    _add_output_flags(p, default_format)

    p = sub.add_parser('closed-form', help='amplitude table by one of three methods')
    _add_setup_flags(p)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--method', choices=['direct', 'lemma', 'fourier'], default='lemma')
    p.add_argument('--grid-size', type=int, default=None)
    _add_output_flags(p, default_format)

    p = sub.add_parser('classify', help='symmetry, lambda and canonical representatives')
    _add_setup_flags(p)
    p.add_argument('--out', default=None)

    p = sub.add_parser('variance-scan', help='variance against n over a parameter grid')
    _add_setup_flags(p)
    p.add_argument('--walk', choices=['quantum', 'classical'], default='quantum')
    p.add_argument('--params', required=True, help='comma separated theta (quantum) or delta (classical) values')
    p.add_argument('--n-min', type=int, default=1)
    p.add_argument('--n-max', type=int, default=cli.get('variance_n', 100))
    _add_output_flags(p, default_format)

    p = sub.add_parser('limit-density', help='limiting density curves')
    _add_setup_flags(p)
    p.add_argument('--lambda', dest='lam', type=float, default=None)
    p.add_argument('--from-setup', action='store_true', help='derive a and lambda from the setup flags')
    p.add_argument('--delta', default=None, help='comma separated correlations for Gaussian curves')
    p.add_argument('--grid-points', type=int, default=None)
    p.add_argument('--empirical-n', type=int, nargs='?', const=cli.get('limit_n', 400), default=None)
    p.add_argument('--empirical-out', default=None)
    _add_output_flags(p, default_format)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point"""
    config = load_config()
    setup_logging(config)
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        WalkLab(config).run(args)
        return EXIT_OK
    except (DomainError, PreconditionError, NoLimitingDistributionError) as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE
    except NumericalError as e:
        logger.error(f"{args.command}: numerical failure: {e}")
        return EXIT_NUMERICAL
    except WalkError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
