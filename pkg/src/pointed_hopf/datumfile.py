"""Datum files: a small TOML dialect with integer-vector values.

    name = "a2_33"
    group = [3, 3]          # invariant factors
    g = [[1, 0], [0, 1]]    # g_i as exponent vectors
    chi = [[1, 2], [0, 1]]  # χ_i as exponent vectors
    cartan = "A2"           # or an explicit matrix [[2, -1], [-1, 2]]

A ``[two_param]`` table (type, N, r_exp, s_exp, optional d) replaces
group/g/chi/cartan with the Euler-form construction.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .cartan import CARTAN_TYPES, CartanDatum, DatumError, two_param_datum, validate_datum

TOP_KEYS = {"name", "group", "g", "chi", "cartan", "linking", "rootparams", "two_param"}
TWO_PARAM_KEYS = {"type", "N", "r_exp", "s_exp", "d"}


class DatumSyntaxError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = "<datum>"):
        self.message, self.line, self.col, self.source = message, line, col, source
        where = f"{source}:{line}:{col}" if line else source
        super().__init__(f"{where}: {message}")


def _locate(text: str, key: str, table: str | None = None) -> tuple[int, int]:
    """Line and column of ``key =`` (inside ``[table]`` when given)."""
    current = None
    pat = re.compile(rf"^\s*{re.escape(key)}\s*=")
    for n, line in enumerate(text.splitlines(), 1):
        head = re.match(r"^\s*\[([^\]]+)\]", line)
        if head:
            current = head.group(1).strip()
            continue
        if current == table and pat.match(line):
            return n, line.index(key) + 1
    return 0, 0


def _header(text: str, table: str) -> tuple[int, int]:
    for n, line in enumerate(text.splitlines(), 1):
        head = re.match(r"^\s*\[([^\]]+)\]", line)
        if head and head.group(1).strip() == table:
            return n, line.index("[") + 1
    return 0, 0


def _int_vector(value, depth: int) -> bool:
    if depth == 0:
        return isinstance(value, int) and not isinstance(value, bool)
    return isinstance(value, (list, tuple)) and all(_int_vector(v, depth - 1) for v in value)


def _cartan(value):
    if isinstance(value, str):
        if value not in CARTAN_TYPES:
            raise KeyError(value)
        return CARTAN_TYPES[value]
    return value


def parse_datum(source: str | Path, text: str | None = None) -> CartanDatum:
    """Parse and validate a datum file (path, or name plus text)."""
    if text is None:
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        label = str(path)
    else:
        label = str(source)
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        msg = str(e).split(" (at line")[0]
        raise DatumSyntaxError(msg, getattr(e, "lineno", 0), getattr(e, "colno", 0), label) from None

    def fail(msg: str, key: str, table: str | None = None):
        line, col = _locate(text, key, table)
        raise DatumSyntaxError(msg, line, col, label)

    for key in data:
        if key not in TOP_KEYS:
            fail(f"unknown key {key!r}", key)
    name = data.get("name", Path(label).stem)
    if not isinstance(name, str):
        fail("name must be a string", "name")

    if "two_param" in data:
        tp = data["two_param"]
        if not isinstance(tp, dict):
            fail("two_param must be a table", "two_param")
        for key in tp:
            if key not in TWO_PARAM_KEYS:
                fail(f"unknown two_param key {key!r}", key, "two_param")
        for key in ("type", "N", "r_exp", "s_exp"):
            if key not in tp:
                raise DatumSyntaxError(f"two_param: missing key {key!r}", *_header(text, "two_param"), label)
        for key in ("N", "r_exp", "s_exp"):
            if not _int_vector(tp[key], 0):
                fail(f"{key} must be an integer", key, "two_param")
        if "d" in tp and not _int_vector(tp["d"], 1):
            fail("d must be an integer vector", "d", "two_param")
        try:
            cartan = _cartan(tp["type"])
        except KeyError:
            fail(f"unknown Cartan type {tp['type']!r}; known: {', '.join(CARTAN_TYPES)}", "type", "two_param")
        if not _int_vector(cartan, 2):
            fail("type must name a Cartan type or be an integer matrix", "type", "two_param")
        d = two_param_datum(cartan, tp.get("d"), tp["N"], tp["r_exp"], tp["s_exp"])
        return validate_datum(d.group, d.g, d.chi, d.cartan, name=name)

    for key in ("group", "g", "chi", "cartan"):
        if key not in data:
            raise DatumSyntaxError(f"missing key {key!r}", 0, 0, label)
    if not _int_vector(data["group"], 1):
        fail("group must be an integer vector of invariant factors", "group")
    for key in ("g", "chi"):
        if not _int_vector(data[key], 2):
            fail(f"{key} must be a list of integer vectors", key)
    try:
        cartan = _cartan(data["cartan"])
    except KeyError:
        fail(f"unknown Cartan type {data['cartan']!r}; known: {', '.join(CARTAN_TYPES)}", "cartan")
    if not _int_vector(cartan, 2):
        fail("cartan must name a Cartan type or be an integer matrix", "cartan")
    linking = data.get("linking")
    if linking is not None and not _int_vector(linking, 2):
        fail("linking must be an integer matrix", "linking")
    rootparams = data.get("rootparams")
    if rootparams is not None and not _int_vector(rootparams, 1):
        fail("rootparams must be an integer vector", "rootparams")
    return validate_datum(
        data["group"], data["g"], data["chi"], cartan, linking=linking, rootparams=rootparams, name=name
    )


__all__ = ["DatumError", "DatumSyntaxError", "parse_datum"]
