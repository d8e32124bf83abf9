"""Table cells combining upper bounds with construction/search lower bounds.

A cell mirrors one entry of the bound tables: a lower bound with its
source, an upper bound with its method tag, or an exact value when the
two meet; parameter pairs admitting no two-distance code render as "--".
Cells are pure functions of their inputs, so a table can be recomputed
cell by cell in any order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import constructions, search
from .core import TwoDistParams

_TAG_ORDER = ("ext", "dd", "d2", "sc", "lp", "plotkin", "exact")


def _order_tags(methods) -> str:
    ranked = sorted(methods, key=lambda m: _TAG_ORDER.index(m) if m in _TAG_ORDER else 99)
    return ",".join(ranked)


@dataclass(frozen=True)
class CellBound:
    value: int
    tag: str


@dataclass(frozen=True)
class TableCell:
    params: TwoDistParams
    status: str  # "value" | "range" | "not_well_defined"
    lower: CellBound | None
    upper: CellBound | None
    equidistant_size: int | None = None
    note: str = ""
    methods: tuple[tuple[str, int | None], ...] = ()

    def __post_init__(self):
        if self.status not in ("value", "range", "not_well_defined"):
            raise ValueError(f"bad status {self.status!r}")
        if self.lower and self.upper and self.lower.value > self.upper.value:
            raise ValueError("cell lower bound exceeds upper bound")
        if self.status == "value" and (
            not self.lower or not self.upper or self.lower.value != self.upper.value
        ):
            raise ValueError("exact cells need lower = upper")

    @property
    def equidistant(self) -> bool:
        return self.equidistant_size is not None


@dataclass(frozen=True)
class TableSpec:
    q: int
    delta: int
    n_min: int
    n_max: int
    d_min: int = 1
    d_max: int | None = None
    fmt: str = "markdown"

    def __post_init__(self):
        if not (2 <= self.q <= 9):
            raise ValueError("supported alphabets are 2..9")
        if not (1 <= self.n_min <= self.n_max <= 64):
            raise ValueError("supported lengths are 1..64")
        if self.delta < 1:
            raise ValueError("delta must be positive")
        if self.fmt not in ("csv", "markdown", "latex", "json"):
            raise ValueError(f"unsupported format {self.fmt!r}")


@dataclass(frozen=True)
class CellOptions:
    external: bounds_mod.ExternalBounds | None = None
    search_cfg: search.SearchConfig | None = None
    oracle_max_vertices: int = 0


def compute_cell(params: TwoDistParams, options: CellOptions = CellOptions()) -> TableCell:
    """One table cell: feasibility screens, bound aggregation, lower bounds."""
    report = bounds_mod.best_upper_bound(params, options.external)
    methods = tuple((e.method, e.value) for e in report.entries)
    if report.status.kind == "not_well_defined":
        return TableCell(params, "not_well_defined", None, None, note=report.status.note)
    if report.status.kind == "exact":
        v = report.status.lo
        tag = _order_tags(report.status.methods or ("exact",))
        return TableCell(
            params, "value", CellBound(v, "exact"), CellBound(v, tag or "exact"),
            note=report.status.note, methods=methods,
        )

    upper = report.status.hi
    upper_tag = _order_tags(report.status.methods)

    lower, lower_tag = 3, "construction"  # three-word witness always exists here
    catalog = constructions.two_distance_lower_bounds(params)
    if catalog and catalog[0].size > lower:
        lower, lower_tag = catalog[0].size, "construction"
    if options.search_cfg is not None:
        result = search.random_greedy(params, options.search_cfg)
        if result.report.ok and result.size > lower:
            lower, lower_tag = result.size, "search"
    if options.oracle_max_vertices:
        total = search.candidate_count(params)
        if total <= options.oracle_max_vertices:
            exact = search.exhaustive_maximum(params, options.oracle_max_vertices)
            if exact > upper:
                raise AssertionError(
                    f"oracle value {exact} exceeds upper bound {upper} for {params}"
                )
            return TableCell(
                params, "value", CellBound(exact, "exact"), CellBound(exact, "exact"),
                methods=methods,
            )

    eq_size = None
    eq_entry = constructions.equidistant_lower_bound(params.q, params.n, params.d)
    if eq_entry is not None and lower < eq_entry.size <= upper:
        eq_size = eq_entry.size

    if lower == upper:
        return TableCell(
            params, "value", CellBound(lower, lower_tag), CellBound(upper, upper_tag),
            methods=methods,
        )
    return TableCell(
        params, "range", CellBound(lower, lower_tag), CellBound(upper, upper_tag),
        equidistant_size=eq_size, methods=methods,
    )


def table_cells(spec: TableSpec, options: CellOptions = CellOptions()) -> list[TableCell]:
    cells = []
    d_hi = spec.d_max
    for n in range(spec.n_min, spec.n_max + 1):
        top = n - spec.delta if d_hi is None else min(d_hi, n - spec.delta)
        for d in range(spec.d_min, top + 1):
            cells.append(compute_cell(TwoDistParams(spec.q, n, d, spec.delta), options))
    return cells


def cell_text(cell: TableCell) -> str:
    """Compact rendering like the printed tables: '12-19^dd', '56^lp', '--'."""
    if cell.status == "not_well_defined":
        return "--"
    if cell.status == "value":
        tag = cell.upper.tag
        return f"{cell.upper.value}" + (f"^{tag}" if tag and tag != "exact" else "")
    if cell.equidistant_size == cell.upper.value:
        # an equidistant catalog code meets the two-distance upper bound
        return f"{cell.upper.value}^e,{cell.upper.tag}"
    lo = (
        f"{cell.equidistant_size}^e"
        if cell.equidistant_size is not None
        else str(cell.lower.value)
    )
    return f"{lo}-{cell.upper.value}^{cell.upper.tag}"


def render_table(spec: TableSpec, options: CellOptions = CellOptions()) -> str:
    cells = table_cells(spec, options)
    if spec.fmt == "json":
        return cells_to_json(cells)
    if spec.fmt == "csv":
        lines = ["q,n,d,delta,lower,lower_tag,upper,upper_tag,status"]
        for c in cells:
            lo = ("", "") if c.lower is None else (str(c.lower.value), c.lower.tag)
            hi = ("", "") if c.upper is None else (str(c.upper.value), c.upper.tag)
            lines.append(
                f"{c.params.q},{c.params.n},{c.params.d},{c.params.delta},"
                f"{lo[0]},{lo[1]},{hi[0]},{hi[1]},{c.status}"
            )
        return "\n".join(lines) + "\n"

    by_pos = {(c.params.n, c.params.d): c for c in cells}
    d_values = sorted({c.params.d for c in cells})
    n_values = list(range(spec.n_min, spec.n_max + 1))
    grid = []
    for n in n_values:
        row = []
        for d in d_values:
            c = by_pos.get((n, d))
            row.append(cell_text(c) if c is not None else "")
        grid.append(row)

    if spec.fmt == "markdown":
        header = ["n\\d"] + [str(d) for d in d_values]
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join(["---"] * len(header)) + "|")
        for n, row in zip(n_values, grid):
            lines.append("| " + " | ".join([str(n)] + row) + " |")
        return "\n".join(lines) + "\n"
    # latex
    cols = "|c|" + "c|" * len(d_values)
    lines = [f"\\begin{{tabular}}{{{cols}}}", "\\hline"]
    lines.append(
        " & ".join(["$n|d$"] + [str(d) for d in d_values]) + " \\\\ \\hline"
    )
    for n, row in zip(n_values, grid):
        rendered = [_latex_cell(c) for c in row]
        lines.append(" & ".join([str(n)] + rendered) + " \\\\ \\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _latex_cell(text: str) -> str:
    if "^" not in text:
        return text
    parts = text.split("^")
    out = parts[0]
    for extra in parts[1:]:
        # a tag runs until the next '-' that starts the upper half
        if "-" in extra:
            tag, rest = extra.split("-", 1)
            out += f"$^{{{tag}}}$-{rest}" if tag else "-" + rest
        else:
            out += f"$^{{{extra}}}$"
    return out


def cells_to_json(cells) -> str:
    payload = []
    for c in cells:
        payload.append(
            {
                "q": c.params.q,
                "n": c.params.n,
                "d": c.params.d,
                "delta": c.params.delta,
                "status": c.status,
                "lower": None if c.lower is None else {"value": c.lower.value, "tag": c.lower.tag},
                "upper": None if c.upper is None else {"value": c.upper.value, "tag": c.upper.tag},
                "equidistant_size": c.equidistant_size,
                "note": c.note,
                "methods": [[m, v] for m, v in c.methods],
            }
        )
    return json.dumps({"cells": payload}, indent=2) + "\n"


def cells_from_json(text: str) -> list[TableCell]:
    data = json.loads(text)
    cells = []
    for entry in data["cells"]:
        params = TwoDistParams(entry["q"], entry["n"], entry["d"], entry["delta"])
        lower = entry["lower"] and CellBound(entry["lower"]["value"], entry["lower"]["tag"])
        upper = entry["upper"] and CellBound(entry["upper"]["value"], entry["upper"]["tag"])
        cells.append(
            TableCell(
                params,
                entry["status"],
                lower or None,
                upper or None,
                equidistant_size=entry.get("equidistant_size"),
                note=entry.get("note", ""),
                methods=tuple((m, v) for m, v in entry.get("methods", [])),
            )
        )
    return cells
