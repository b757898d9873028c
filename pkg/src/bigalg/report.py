"""Verification reports shared by the checking routines and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


def _text(x) -> str:
    if x is None:
        return ""
    if hasattr(x, "to_str"):
        return x.to_str()
    return str(x)


@dataclass
class Item:
    name: str
    lhs: str
    rhs: str
    diff: str = ""


@dataclass
class Report:
    command: str
    checked: int = 0
    items: list[Item] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.items else "fail"

    @property
    def ok(self) -> bool:
        return not self.items

    def compare(self, name: str, lhs, rhs) -> bool:
        """Record one equality check; keep a counterexample on mismatch."""
        self.checked += 1
        if lhs == rhs:
            return True
        try:
            diff = _text(lhs - rhs)
        except TypeError:
            diff = "<not comparable>"
        self.items.append(Item(name, _text(lhs), _text(rhs), diff or "<nonzero>"))
        return False

    def require(self, name: str, cond: bool, detail: str = "") -> bool:
        self.checked += 1
        if not cond:
            self.items.append(Item(name, detail, "", "<failed>"))
        return cond

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.items.extend(other.items)
        return self

    def to_text(self, limit: int = 5) -> str:
        lines = [f"{self.command}: {self.status} ({self.checked} checks)"]
        for it in self.items[:limit]:
            lines.append(f"  {it.name}")
            lines.append(f"    lhs:  {it.lhs}")
            lines.append(f"    rhs:  {it.rhs}")
            lines.append(f"    diff: {it.diff}")
        if len(self.items) > limit:
            lines.append(f"  ... {len(self.items) - limit} more failures")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "command": self.command,
            "status": self.status,
            "checked": self.checked,
            "items": [it.__dict__ for it in self.items],
        }, indent=2, sort_keys=True)
