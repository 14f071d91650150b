"""Deterministic machine-readable reports (YAML text)."""

from __future__ import annotations

import enum

import numpy as np
import yaml

PASS, FAIL, SKIPPED, EXPECTED_FAIL = "pass", "fail", "skipped", "expected-fail"


def plain(value):
    """Convert numpy and enum values into YAML-safe builtins."""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


class Report:
    def __init__(self, command: str, inputs: dict | None = None):
        self.command = command
        self.inputs = dict(inputs or {})
        self.result: dict = {}
        self.checks: list[dict] = []

    def check(self, name: str, ok: bool | None, witness=None) -> bool:
        """Record one check; ok=None marks it skipped."""
        if any(c["name"] == name for c in self.checks):
            raise ValueError(f"duplicate check {name!r}")
        status = SKIPPED if ok is None else (PASS if ok else FAIL)
        self.checks.append({"name": name, "status": status,
                            "witness": plain(witness) if witness is not None else "-"})
        return bool(ok)

    def merge(self, other: "Report", prefix: str) -> None:
        self.result[prefix] = other.result
        for c in other.checks:
            if any(x["name"] == f"{prefix}.{c['name']}" for x in self.checks):
                raise ValueError(f"duplicate check {prefix}.{c['name']}")
            self.checks.append({**c, "name": f"{prefix}.{c['name']}"})

    def apply_expectations(self, expectations: dict[str, str]) -> None:
        """Downgrade failures named in an expectation file to expected-fail.

        A key matches a check of the same name or one ending in ``.<key>``.
        """
        for c in self.checks:
            if c["status"] != FAIL:
                continue
            if any(c["name"] == k or c["name"].endswith("." + k) for k in expectations):
                c["status"] = EXPECTED_FAIL

    def status(self, name: str) -> str:
        for c in self.checks:
            if c["name"] == name:
                return c["status"]
        raise KeyError(name)

    @property
    def failed(self) -> bool:
        return any(c["status"] == FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": plain(self.inputs),
                "result": plain(self.result), "checks": self.checks}

    def to_text(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, default_flow_style=None,
                              width=120, allow_unicode=True)
