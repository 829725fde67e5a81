"""Structured reports for the command-line front end.

A :class:`ReportDocument` holds plain Python data (dicts, lists, floats) in
a fixed key order. ``to_json`` writes every float with ``repr`` precision so
parsed numbers equal the library results bit for bit; ``to_text`` rounds
to ``precision`` decimals for reading.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .dataset import Dataset
from .distance import dissimilarity_matrix, hamming, rank_by_dissimilarity
from .streaming import StreamingEstimator

__all__ = [
    "ReportDocument",
    "distmat_report",
    "rank_report",
    "stream_report",
    "weights_report",
]


@dataclass
class ReportDocument:
    kind: str
    body: dict
    precision: int = 3
    passed: bool = field(default=True, compare=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.body}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str, precision: int = 3) -> "ReportDocument":
        doc = json.loads(text)
        kind = doc.pop("kind")
        return cls(kind, doc, precision)

    def to_text(self) -> str:
        render = _RENDERERS[self.kind]
        return "\n".join(render(self.body, self.precision)) + "\n"


def _f(x: float, precision: int) -> str:
    return f"{x:.{precision}f}"


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def weights_body(ctx) -> dict:
    return {
        "case_count": ctx.case_count,
        "attributes": [
            {"name": n, "probability": float(p), "weight": float(w)}
            for n, p, w in zip(ctx.schema.names, ctx.probabilities, ctx.weights)
        ],
    }


def distmat_body(ctx, cases) -> dict:
    D = dissimilarity_matrix(ctx, cases)
    return {
        "names": list(D.names),
        "matrix": [[float(x) for x in row] for row in D.entries],
        "pairs": [{"a": a, "b": b, "distance": d} for a, b, d in D.pairs()],
    }


def rank_body(ctx, query, candidates) -> dict:
    r = rank_by_dissimilarity(ctx, query, candidates)
    return {
        "query": r.query,
        "ranked": [
            {"name": n, "distance": d, "hamming": hamming(query, next(c for c in candidates if c.name == n))}
            for n, d in r.ranked
        ],
        "winner": r.winner,
        "margin": None if math.isinf(r.margin) else r.margin,
        "ties": [list(g) for g in r.ties],
    }


def weights_report(dataset: Dataset, context=None, precision: int = 3) -> ReportDocument:
    ctx = context if context is not None else dataset.context()
    return ReportDocument("weights", weights_body(ctx), precision)


def distmat_report(dataset: Dataset, context=None, precision: int = 3) -> ReportDocument:
    ctx = context if context is not None else dataset.context()
    return ReportDocument("distmat", distmat_body(ctx, dataset.cases), precision)


def rank_report(dataset: Dataset, query: str, candidates=None, context=None,
                precision: int = 3) -> ReportDocument:
    ctx = context if context is not None else dataset.context()
    q = dataset[query]
    if candidates is None:
        cands = [c for c in dataset.cases if c.name != query]
    else:
        cands = [dataset[name] for name in candidates]
    return ReportDocument("rank", rank_body(ctx, q, cands), precision)


def stream_report(dataset: Dataset, alpha_floor: int | None = 100, snapshot_every: int | None = None,
                  precision: int = 3) -> ReportDocument:
    """Feed the rows in order and record a snapshot every ``snapshot_every`` cases.

    A final snapshot is always taken after the last row.
    """
    if snapshot_every is not None and snapshot_every < 1:
        raise ValueError("snapshot_every must be a positive integer")
    est = StreamingEstimator(dataset.schema, alpha_floor)
    snaps = []
    for c in dataset.cases:
        est.observe(c)
        if snapshot_every is not None and est.observed_count % snapshot_every == 0:
            snaps.append(est.snapshot_context())
    if not snaps or snaps[-1].case_count != est.observed_count:
        snaps.append(est.snapshot_context())
    return ReportDocument("stream", {
        "alpha_floor": alpha_floor,
        "attributes": list(dataset.schema.names),
        "snapshots": [
            {
                "observed": s.case_count,
                "probabilities": [float(p) for p in s.probabilities],
                "weights": [float(w) for w in s.weights],
            }
            for s in snaps
        ],
    }, precision)


def _render_weights(body, prec):
    attrs = body["attributes"]
    rows = [
        ["attribute", *(a["name"] for a in attrs)],
        ["p_j", *(_f(a["probability"], prec) for a in attrs)],
        ["h(p_j)", *(_f(a["weight"], prec) for a in attrs)],
    ]
    return [f"cases: {body['case_count']}", *_table(rows)]


def _render_distmat(body, prec):
    names = body["names"]
    grid = [["", *names]] + [
        [n, *(_f(x, prec) for x in row)] for n, row in zip(names, body["matrix"])
    ]
    lines = _table(grid)
    if body["pairs"]:
        lines.append("")
        lines += _table([["c_i", "c_k", "d(c_i, c_k)"]]
                        + [[p["a"], p["b"], _f(p["distance"], prec)] for p in body["pairs"]])
    return lines


def _render_rank(body, prec):
    rows = [["rank", "candidate", "distance", "hamming"]] + [
        [str(i), r["name"], _f(r["distance"], prec), str(r["hamming"])]
        for i, r in enumerate(body["ranked"], start=1)
    ]
    lines = [f"query: {body['query']}", *_table(rows)]
    margin = "n/a" if body["margin"] is None else _f(body["margin"], prec)
    lines.append(f"group with: {body['winner']} (margin {margin})")
    for g in body["ties"]:
        lines.append("tie: " + ", ".join(g))
    return lines


def _render_stream(body, prec):
    floor = "none" if body["alpha_floor"] is None else str(body["alpha_floor"])
    rows = [["observed", *body["attributes"]]] + [
        [str(s["observed"]), *(_f(w, prec) for w in s["weights"])] for s in body["snapshots"]
    ]
    return [f"alpha floor: {floor}", "snapshot weights h(p_j):", *_table(rows)]


def _render_demo(body, prec):
    lines = []
    for ctx in body["contexts"]:
        lines.append(f"== {ctx['label']} ==")
        lines += _render_weights(ctx["weights"], prec)
        lines.append("")
        lines += _render_distmat(ctx["distmat"], prec)
        lines.append("")
        lines += _render_rank(ctx["rank"], prec)
        lines.append("")
    lines.append("== checks ==")
    for chk in body["checks"]:
        lines.append(f"[{'PASS' if chk['passed'] else 'FAIL'}] {chk['name']}")
    lines.append("result: " + ("PASS" if body["passed"] else "FAIL"))
    return lines


_RENDERERS = {
    "weights": _render_weights,
    "distmat": _render_distmat,
    "rank": _render_rank,
    "stream": _render_stream,
    "demo": _render_demo,
}
