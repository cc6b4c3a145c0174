"""Machine-readable verification reports.

Schema (JSON)::

    {
      "command": str,
      "parameters": {...},
      "results": [{"name": str, "status": "pass"|"fail"|"skipped", "evidence": ...}],
      "status": "pass"|"fail",
      "timing": {"seconds": float}          # excluded from golden comparisons
    }

Rationals are written as ``"num/den"`` strings (integers too, e.g. ``"3/1"``),
polynomials as lists of ``{"e_qp", "e_qm", "num", "den"}`` sorted by exponent
pair, partitions as integer arrays, signed permutations as their window
``[s(1), ..., s(n)]`` and symmetric pair partitions as arrays of blocks with
negative integers for barred points.  Key order is fixed by construction.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .group import CycleType, Reflection, SignedPermutation
from .poly import BivarPoly

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj: Any) -> Any:
    from .pairpart import SymPairPartition

    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, BivarPoly):
        return obj.to_monomials()
    if isinstance(obj, SignedPermutation):
        return list(obj.img)
    if isinstance(obj, Reflection):
        return {"kind": obj.kind, "support": list(obj.support)}
    if isinstance(obj, CycleType):
        return {"rho_plus": list(obj.rho_plus), "rho_minus": list(obj.rho_minus)}
    if isinstance(obj, SymPairPartition):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, float):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _status(ok: Optional[bool]) -> str:
    if ok is None:
        return SKIPPED
    return PASS if ok else FAIL


class Report:
    def __init__(self, command: str, parameters: Optional[Dict[str, Any]] = None):
        self.command = command
        self.parameters = dict(parameters or {})
        self.results: List[Dict[str, Any]] = []
        self.tables: Dict[str, List[List[Any]]] = {}
        self.seconds: Optional[float] = None

    def add(self, name: str, ok: Optional[bool], evidence: Any = None) -> None:
        self.results.append({"name": name, "status": _status(ok), "evidence": evidence})

    def table(self, name: str, header: List[str], rows: List[List[Any]]) -> None:
        self.tables[name] = [header] + rows

    @property
    def failed(self) -> bool:
        return any(r["status"] == FAIL for r in self.results)

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        out = {
            "command": self.command,
            "parameters": jsonable(self.parameters),
            "results": [
                {"name": r["name"], "status": r["status"], "evidence": jsonable(r["evidence"])}
                for r in self.results
            ],
            "status": FAIL if self.failed else PASS,
        }
        if timing and self.seconds is not None:
            out["timing"] = {"seconds": round(self.seconds, 6)}
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.tables:
            for name, rows in self.tables.items():
                if len(self.tables) > 1:
                    w.writerow([f"# {name}"])
                for row in rows:
                    w.writerow([_csv_cell(c) for c in row])
        else:
            w.writerow(["name", "status", "evidence"])
            for r in self.results:
                w.writerow([r["name"], r["status"], json.dumps(jsonable(r["evidence"]), ensure_ascii=False)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}: {'FAIL' if self.failed else 'PASS'}"]
        for k, v in self.parameters.items():
            lines.append(f"  {k} = {_short(v)}")
        for r in self.results:
            ev = r["evidence"]
            tail = f"  {_short(ev)}" if ev is not None else ""
            lines.append(f"  [{r['status']}] {r['name']}{tail}")
        if self.seconds is not None:
            lines.append(f"  ({self.seconds:.2f} s)")
        return "\n".join(lines) + "\n"


def _csv_cell(c) -> str:
    if isinstance(c, Fraction):
        return rational(c)
    return str(c)


def _short(v) -> str:
    if isinstance(v, (BivarPoly, Fraction, SignedPermutation)):
        return str(v)
    if isinstance(v, (dict, list, tuple)) or dataclasses.is_dataclass(v):
        text = json.dumps(jsonable(v), ensure_ascii=False)
        return text if len(text) <= 160 else text[:157] + "..."
    return str(v)


def strip_timing(data: Dict[str, Any]) -> Dict[str, Any]:
    """Copy of a report dict without the timing field (for golden files)."""
    return {k: v for k, v in data.items() if k != "timing"}
