"""Plain-text persistence for the class-number memo.

Format: a header line followed by ``d<TAB>h`` records, ``d`` strictly
decreasing. Anything unreadable is reported with a warning and treated as
an empty cache.
"""
from __future__ import annotations

import os
import warnings

from . import classnum

HEADER = "qfloor-classnum-cache v1"
ENV_VAR = "QFLOOR_CACHE"


class CacheWarning(UserWarning):
    pass


def parse(text: str) -> dict[int, int]:
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise ValueError("missing or mismatched header")
    memo: dict[int, int] = {}
    prev = 0
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two tab-separated fields")
        d, h = int(fields[0]), int(fields[1])
        if d >= prev or h < 1:
            raise ValueError(f"line {lineno}: need decreasing negative d and positive h")
        memo[d] = h
        prev = d
    return memo


def dumps(memo: dict[int, int]) -> str:
    body = "".join(f"{d}\t{h}\n" for d, h in sorted(memo.items(), reverse=True))
    return f"{HEADER}\n{body}"


def load(path: str | os.PathLike) -> dict[int, int]:
    """Read a cache file; a missing file is an empty cache, a corrupt one warns."""
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            text = fh.read()
    except FileNotFoundError:
        return {}
    except (OSError, UnicodeDecodeError) as exc:
        warnings.warn(f"cannot read class number cache {path}: {exc}", CacheWarning, stacklevel=2)
        return {}
    try:
        return parse(text)
    except ValueError as exc:
        warnings.warn(f"ignoring class number cache {path}: {exc}", CacheWarning, stacklevel=2)
        return {}


def store(path: str | os.PathLike, memo: dict[int, int]) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps(memo))
    os.replace(tmp, path)


def seed_memo(path: str | os.PathLike) -> int:
    entries = load(path)
    classnum.memo_update(entries)
    return len(entries)


def save_memo(path: str | os.PathLike) -> None:
    store(path, classnum.memo_snapshot())
