import argparse
import logging
import os
import sys

_ROOT = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(_ROOT, 'src'))
sys.path.insert(0, os.path.join(_ROOT, 'src/catalog'))
sys.path.insert(0, os.path.join(_ROOT, 'src/types'))
sys.path.insert(0, os.path.join(_ROOT, 'src/stuffs'))

from core import Core
from run_config import RunConfig, COMMANDS
from _errors import CacheError, DomainError, UsageError, Zeta3Error
import _param as param

logger = logging.getLogger("zeta3")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def buildParser():
    parser = _Parser(
        prog="main.py",
        description="Rational approximations of zeta(3) from Eisenstein "
                    "series and Hauptmoduln of Fricke groups")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("table", nargs="?", type=int,
                        help="table id for the table command (1-4)")
    parser.add_argument("--level", type=int, default=param._DEFAULT_LEVEL)
    parser.add_argument("--levels", type=str, default=None,
                        help="comma separated levels, e.g. 6,10,15")
    parser.add_argument("--alpha", type=str, default=None,
                        help="comma separated rationals p/q")
    parser.add_argument("--order", type=int, default=param._DEFAULT_ORDER)
    parser.add_argument("--digits", type=int, default=param._DEFAULT_DIGITS)
    parser.add_argument("--format", type=str, default="json",
                        choices=("json", "md", "tsv"))
    parser.add_argument("--cache-dir", type=str, default=None,
                        help="defaults to $" + param._CACHE_ENV)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--verify-cache", action="store_true",
                        help="recompute cache hits and compare")
    parser.add_argument("--n", type=int, default=None,
                        help="approximant index for metrics")
    parser.add_argument("--upto", type=int, default=param._VERIFY_UPTO,
                        help="recurrence range checked by verify")
    parser.add_argument("--out", type=str, default=None,
                        help="run directory for export")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("-q", "--quiet", action="store_true")
    return parser


def main(argv=None):
    """
    Return:
        exit status: 0 pass, 1 failed check or bad cache, 2 usage error
    """
    try:
        args = buildParser().parse_args(argv)
        level = logging.WARNING
        if args.verbose:
            level = logging.DEBUG
        elif args.quiet:
            level = logging.ERROR
        logging.basicConfig(
            level=level, stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s")
        config = RunConfig.fromArgs(args)
        core = Core(config)
        ok, result = core.run()
    except (UsageError, DomainError) as exc:
        print("error: {:}".format(exc), file=sys.stderr)
        return 2
    except CacheError as exc:
        print("cache error: {:}".format(exc), file=sys.stderr)
        return 1
    except (Zeta3Error, OSError) as exc:
        print("error: {:}".format(exc), file=sys.stderr)
        return 1
    print(core.render(result))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
