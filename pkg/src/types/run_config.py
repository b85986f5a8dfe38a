from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import os

from _errors import UsageError
import arith_functions as arith
import table_functions as table
import _param as param

COMMANDS = ('f-form', 'e-family', 'haupt', 'approx', 'verify', 'branch',
            'hecke-check', 'metrics', 'table', 'export')


def _splitList(text):
    return [s.strip() for s in str(text).split(",") if s.strip()]


@dataclass
class RunConfig:
    """
    Everything one command run depends on
    alphas are kept as exact Fractions; identical configs give identical
    output bytes.
    """
    command: str
    level: int = param._DEFAULT_LEVEL
    levels: List[int] = field(default_factory=list)
    alphas: List[Any] = field(default_factory=list)
    order: int = param._DEFAULT_ORDER
    digits: int = param._DEFAULT_DIGITS
    fmt: str = 'json'
    cache_dir: Optional[str] = None
    jobs: int = 1
    verify_cache: bool = False
    n: Optional[int] = None
    table: Optional[int] = None
    out: Optional[str] = None
    upto: int = param._VERIFY_UPTO

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError("unknown command '{:}'".format(self.command))
        if self.order < param._MIN_ORDER:
            raise UsageError("order must be >= {:}, got {:}"
                             .format(param._MIN_ORDER, self.order))
        if self.digits < param._MIN_DIGITS:
            raise UsageError("digits must be >= {:}, got {:}"
                             .format(param._MIN_DIGITS, self.digits))
        if self.fmt not in table.FORMATS:
            raise UsageError("unknown format '{:}'".format(self.fmt))
        if self.jobs < 1:
            raise UsageError("jobs must be >= 1, got {:}".format(self.jobs))
        if self.n is not None and self.n < 0:
            raise UsageError("n must be >= 0, got {:}".format(self.n))
        if self.command == 'table' and self.table not in table.TABLE_IDS:
            raise UsageError("unknown table id {:}, expected one of {:}"
                             .format(self.table, table.TABLE_IDS))
        if self.command == 'export' and not self.out:
            raise UsageError("export needs --out")
        self.alphas = [arith.parseRational(a) for a in self.alphas]
        if not self.alphas:
            self.alphas = [arith.parseRational(param._DEFAULT_ALPHA)]
        if not self.levels:
            self.levels = [self.level]
        if self.cache_dir is None:
            self.cache_dir = os.environ.get(param._CACHE_ENV) or None

    @classmethod
    def fromArgs(cls, args):
        """
        Build from an argparse namespace
        """
        try:
            levels = [int(x) for x in _splitList(args.levels or "")]
        except ValueError:
            raise UsageError("--levels must be a comma separated list of "
                             "integers, got '{:}'".format(args.levels))
        return cls(command=args.command, level=args.level, levels=levels,
                   alphas=_splitList(args.alpha or ""), order=args.order,
                   digits=args.digits, fmt=args.format,
                   cache_dir=args.cache_dir, jobs=args.jobs,
                   verify_cache=args.verify_cache, n=args.n,
                   table=args.table, out=args.out, upto=args.upto)

    def inputs(self):
        """
        JSON view of the inputs, written into export manifests
        """
        return {
            "command": self.command,
            "level": self.level,
            "levels": list(self.levels),
            "alphas": [table.alphaKey(a) for a in self.alphas],
            "order": self.order,
            "digits": self.digits,
            "n": self.n,
        }


@dataclass(frozen=True)
class CacheEntry:
    key: str
    payload: Dict[str, Any]
    version: str = param._VERSION

    def toDict(self):
        return {"key": self.key, "payload": self.payload,
                "version": self.version}

    @classmethod
    def fromDict(cls, d):
        return cls(key=d["key"], payload=d["payload"], version=d["version"])
