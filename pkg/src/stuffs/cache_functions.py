import hashlib
import json
import logging
import os
import tempfile

from _errors import CacheError
from run_config import CacheEntry
import _param as param

logger = logging.getLogger(__name__)


def canonicalJson(value):
    return json.dumps(value, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def cacheKey(kind, level, alpha=None, order=None, **extra):
    """
    Canonical key string, e.g. 'approx|N=6|alpha=1/2|M=50'
    """
    parts = [kind, "N={:}".format(level)]
    if alpha is not None:
        parts.append("alpha={:}".format(alpha))
    if order is not None:
        parts.append("M={:}".format(order))
    parts += ["{:}={:}".format(k, extra[k]) for k in sorted(extra)]
    return "|".join(parts)


def cachePath(cache_dir, key):
    digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
    return os.path.join(cache_dir, digest + ".json")


def readEntry(cache_dir, key):
    """
    Return:
        CacheEntry, or None on a miss or a stale version stamp
    """
    path = cachePath(cache_dir, key)
    if not os.path.exists(path):
        logger.info("cache miss %s", key)
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            entry = CacheEntry.fromDict(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CacheError(key, "is unreadable at {:} ({:})".format(path, exc))
    if entry.key != key:
        raise CacheError(key, "file {:} holds key '{:}'"
                         .format(path, entry.key))
    if entry.version != param._VERSION:
        logger.warning("cache entry %s has version %s, expected %s; "
                       "invalidating", key, entry.version, param._VERSION)
        os.remove(path)
        return None
    logger.info("cache hit %s", key)
    return entry


def writeEntry(cache_dir, entry):
    """
    Write to a temporary file in the cache directory, then rename
    """
    os.makedirs(cache_dir, exist_ok=True)
    path = cachePath(cache_dir, entry.key)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(canonicalJson(entry.toDict()))
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("cache write %s -> %s", entry.key, path)


def cached(cache_dir, key, compute, verify=False):
    """
    Payload of key from the cache directory, computing and storing it on
    a miss
    Args:
        cache_dir: directory, or None to always compute
        key: canonical key string
        compute: callable returning a JSON serialisable payload
        verify: recompute on a hit and require identical bytes
    Return:
        payload as it reads back from JSON
    """
    if cache_dir is None:
        return json.loads(canonicalJson(compute()))
    entry = readEntry(cache_dir, key)
    if entry is not None:
        if verify:
            fresh = canonicalJson(compute())
            if fresh != canonicalJson(entry.payload):
                raise CacheError(key, "differs from recomputation")
            logger.info("cache entry %s verified", key)
        return entry.payload
    payload = json.loads(canonicalJson(compute()))
    writeEntry(cache_dir, CacheEntry(key, payload))
    return payload
