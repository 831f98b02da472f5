"""Output documents and their pretty/JSON/CSV renderings.

Every numeric field in JSON and CSV payloads is a decimal string: diamond
entries overflow doubles long before they stop being interesting, and
consumers must be able to round-trip values losslessly.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, List

from .hodge import TwistedHodgeDiamond

KINDS = ("diamond", "profile", "kernel_table", "search_table", "ainfty_report")


@dataclass
class OutputDocument:
    kind: str
    payload: Dict
    pretty: str = field(default="", repr=False)

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, **self.payload}, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        meta = {k: v for k, v in self.payload.items() if not isinstance(v, (list, dict))}
        for key, value in meta.items():
            writer.writerow([key, value])
        table = self.payload.get("entries") or self.payload.get("dims") or []
        for row in table:
            writer.writerow(row)
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.pretty


def render_diamond(dd: TwistedHodgeDiamond) -> str:
    """The diamond laid out as in the figures: bottom vertex h^{0,0}, top
    h^{n,n}, left h^{n,0}, right h^{0,n}.

    Every cell of the (n+1) x (n+1) table is printed (zeros included) on a
    staggered grid of 2n+1 columns; the blank slots are the off-parity
    positions that do not hold a cell.  Cell (i, j) sits in row i+j from
    the bottom, column n + j - i.
    """
    n = dd.n
    cells: Dict[tuple, str] = {}
    for i in range(n + 1):
        for j in range(n + 1):
            cells[(i + j, n + j - i)] = str(dd.entry(i, j))
    widths = [0] * (2 * n + 1)
    for (_, col), text in cells.items():
        widths[col] = max(widths[col], len(text))
    lines = []
    for s in range(2 * n, -1, -1):
        row = []
        for col in range(2 * n + 1):
            text = cells.get((s, col), "")
            row.append(text.rjust(widths[col]))
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines)


def diamond_document(dd: TwistedHodgeDiamond) -> OutputDocument:
    X = dd.hypersurface
    entries: List[List[str]] = [["i", "j", "value"]]
    for (i, j, value) in dd.nonzero_entries():
        entries.append([str(i), str(j), str(value)])
    payload = {"n": str(X.n), "d": str(X.d), "twist": str(dd.twist), "entries": entries}
    return OutputDocument("diamond", payload, render_diamond(dd))


def table_pretty(header: List[str], rows: List[List[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for k, cell in enumerate(row):
            widths[k] = max(widths[k], len(cell))
    fmt_row = lambda row: "  ".join(cell.rjust(widths[k]) for k, cell in enumerate(row))
    return "\n".join([fmt_row(header)] + [fmt_row(r) for r in rows])


def profile_document(profile) -> OutputDocument:
    X = profile.hypersurface
    rows = [[str(m), str(dim)] for m, dim in sorted(profile.dims.items())]
    payload = {
        "n": str(X.n),
        "d": str(X.d),
        "p": str(profile.twist),
        "target": profile.target,
        "entries": [["m", "dim"]] + rows,
    }
    pretty = f"dim HH^m, target={profile.target}, n={X.n} d={X.d} p={profile.twist}\n"
    pretty += table_pretty(["m", "dim"], rows)
    return OutputDocument("profile", payload, pretty)


def kernel_document(X, p: int, table: Dict[int, int], verified=None) -> OutputDocument:
    rows = [[str(m), str(dim)] for m, dim in sorted(table.items())]
    payload = {
        "n": str(X.n),
        "d": str(X.d),
        "p": str(p),
        "entries": [["m", "dim"]] + rows,
    }
    header = f"dim ker(f_*) on HH^m, n={X.n} d={X.d} p={p}"
    if verified is not None:
        payload["verified_against_ledger"] = "true" if verified else "false"
        header += "  [ledger oracle: " + ("agrees" if verified else "DISAGREES") + "]"
    return OutputDocument("kernel_table", payload, header + "\n" + table_pretty(["m", "dim"], rows))


def search_document(rows) -> OutputDocument:
    table = []
    for r in rows:
        table.append(
            [str(r.n), str(r.d), str(r.p), str(r.m),
             "" if r.dim is None else str(r.dim),
             r.reason if r.skipped else ""]
        )
    payload = {"entries": [["n", "d", "p", "m", "dim", "note"]] + table}
    pretty = table_pretty(["n", "d", "p", "m", "dim", "note"], table)
    return OutputDocument("search_table", payload, pretty)


def quadric_document(k: int, d: int, n: int, p: int, m: int, dim: int) -> OutputDocument:
    payload = {
        "k": str(k), "d": str(d), "n": str(n), "p": str(p),
        "entries": [["m", "dim"], [str(m), str(dim)]],
    }
    pretty = (
        f"odd quadric-family check: k={k} d={d} (n={n}, p={p})\n"
        f"dim ker(f_*) in degree m={m}: {dim}"
    )
    return OutputDocument("kernel_table", payload, pretty)


def ainfty_document(payload: Dict, pretty: str) -> OutputDocument:
    return OutputDocument("ainfty_report", payload, pretty)
