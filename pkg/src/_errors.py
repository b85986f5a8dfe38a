class Zeta3Error(Exception):
    """
    Base class of every error raised by the library
    """


class DomainError(Zeta3Error, ValueError):
    """
    Violated precondition: wrong level, odd weight, bad valuation, ...
    """


class SolverError(Zeta3Error, RuntimeError):
    """
    An exact system that must be regular turned out singular
    """


class CacheError(Zeta3Error):
    """
    Unreadable, stale or mismatching cache entry
    """
    def __init__(self, key, reason):
        super(CacheError, self).__init__(
            "cache entry {:} {:}".format(key, reason))
        self.key = key
        self.reason = reason


class UsageError(Zeta3Error):
    """
    Bad command line usage
    """
