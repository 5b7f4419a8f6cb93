"""Flat key-value scenario files.

One assignment per line; ``#`` starts a comment; blank lines are ignored::

    nr = 6
    sigma2 = 1.0
    user.0.nt = 6
    user.0.p_db = 10
    user.1.nt = 2
    user.1.p_lin = 0.01

Users are numbered contiguously from 0 (user 0 is the desired link). Each
user needs ``nt`` and exactly one of ``p_db`` / ``p_lin``. Every problem in
the file is reported at once.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Any

from mimo_capacity.covariance.scenario import NetworkScenario, UserLink, db_to_linear
from mimo_capacity.outcome import Issue, Validation

_USER_KEY = re.compile(r"^user\.(\d+)\.(nt|p_db|p_lin)$")
_TOP_KEYS = ("nr", "sigma2")


def _parse_number(key: str, raw: str, integer: bool) -> Validation[float]:
    try:
        value = float(raw)
    except ValueError:
        return Validation.invalid(Issue(key, f"not a number: {raw!r}"))
    if integer and not value.is_integer():
        return Validation.invalid(Issue(key, f"not an integer: {raw!r}"))
    return Validation.valid(value)


def _assignments(text: str) -> tuple[dict[str, str], list[Issue]]:
    values: dict[str, str] = {}
    issues: list[Issue] = []
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        key, sep, raw = body.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key or not raw:
            issues.append(Issue(f"<line {number}>", f"expected 'key = value', got {line.strip()!r}"))
            continue
        if key in values:
            issues.append(Issue(key, f"assigned twice (line {number})"))
            continue
        if key not in _TOP_KEYS and not _USER_KEY.match(key):
            issues.append(Issue(key, "unknown key"))
            continue
        values[key] = raw
    return values, issues


def parse_scenario_text(text: str) -> Validation[NetworkScenario]:
    """Parse scenario text into a validated NetworkScenario.

    Example:
        >>> parse_scenario_text("nr = 2\\nuser.0.nt = 1\\nuser.0.p_db = 0").unwrap().snr
        1.0
        >>> [str(i) for i in parse_scenario_text("nr = x").unwrap_errors()]
        ["nr: not a number: 'x'", 'user.0: no users defined']
    """
    values, issues = _assignments(text)

    parsed: dict[str, float] = {}
    for key, raw in values.items():
        integer = key == "nr" or key.endswith(".nt")
        checked = _parse_number(key, raw, integer)
        if checked.is_valid():
            parsed[key] = checked.unwrap()
        else:
            issues.extend(checked.unwrap_errors())

    if "nr" not in values:
        issues.append(Issue("nr", "missing"))

    users: dict[int, dict[str, Any]] = {}
    for key in values:
        match = _USER_KEY.match(key)
        if match:
            users.setdefault(int(match.group(1)), {})[match.group(2)] = parsed.get(key)

    links: list[UserLink] = []
    if not users:
        issues.append(Issue("user.0", "no users defined"))
    for k in range(max(users, default=-1) + 1):
        fields = users.get(k)
        if fields is None:
            issues.append(Issue(f"user.{k}", "missing; users must be numbered from 0 without gaps"))
            continue
        if "p_db" in fields and "p_lin" in fields:
            issues.append(Issue(f"user.{k}", "give p_db or p_lin, not both"))
            continue
        if "nt" not in fields:
            issues.append(Issue(f"user.{k}.nt", "missing"))
        if "p_db" not in fields and "p_lin" not in fields:
            issues.append(Issue(f"user.{k}.p_db", "missing (or give p_lin)"))
        nt, p_db, p_lin = fields.get("nt"), fields.get("p_db"), fields.get("p_lin")
        power = db_to_linear(p_db) if p_db is not None else p_lin
        if nt is not None and power is not None:
            links.append(UserLink(int(nt), float(power)))

    if issues:
        return Validation.invalid(issues)
    return NetworkScenario.validate(int(parsed["nr"]), links, parsed.get("sigma2", 1.0))


def load_scenario(path: str | Path) -> Validation[NetworkScenario]:
    """Read and parse a scenario file; an unreadable file is one Issue."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        return Validation.invalid(Issue(str(path), f"cannot read scenario file: {exc.strerror or exc}"))
    return parse_scenario_text(text)


__all__ = ["parse_scenario_text", "load_scenario"]
