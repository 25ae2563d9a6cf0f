"""Result records shared by the verification harnesses and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class CaseResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""
    steps: int = 0
    inconclusive: bool = False


def format_report(cases: list[CaseResult]) -> str:
    lines = []
    for c in cases:
        mark = " OK " if c.ok else "FAIL"
        extra = f"  -- {c.detail}" if c.detail else ""
        lines.append(f"[{mark}] {c.suite}/{c.name}{extra}")
    groups: dict[str, list[CaseResult]] = {}
    for c in cases:
        groups.setdefault(c.suite, []).append(c)
    lines.append("cases: " + "  ".join(
        f"{name} {sum(1 for c in group if c.ok)}/{len(group)}"
        for name, group in groups.items()
    ))
    failed = sum(1 for c in cases if not c.ok)
    if failed:
        lines.append(f"FAIL  {failed}/{len(cases)} cases failed")
    else:
        lines.append(f"PASS  {len(cases)} cases")
    return "\n".join(lines)


def all_ok(cases: list[CaseResult]) -> bool:
    return all(c.ok for c in cases)
