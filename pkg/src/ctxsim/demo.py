"""The Tversky-Gati country grouping task, reproduced with entropy weights.

Two four-country contexts share Austria, Sweden and Hungary. With Poland as
the fourth country Austria groups with Sweden; replacing Poland by Norway
makes Austria group with Hungary, although both Hamming distances are 2.

:func:`run_demo` recomputes everything from the bundled CSV tables and
checks it against the published three-decimal values.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .dataset import Dataset, ingest
from .distance import hamming
from .report import ReportDocument, distmat_body, rank_body, weights_body

__all__ = ["DEMO_TOLERANCE", "DemoContext", "load_demo_contexts", "run_demo"]

# published tables carry 3 decimals
DEMO_TOLERANCE = 5e-4


@dataclass(frozen=True)
class DemoContext:
    label: str
    dataset: Dataset
    query: str
    probabilities: tuple[float, ...]
    weights: tuple[float, ...]
    distances: dict
    winner: str


def load_dataset(resource: str) -> Dataset:
    with resources.files("ctxsim").joinpath("data", resource).open("r", encoding="utf-8") as fh:
        return ingest(fh, "csv")


def load_demo_contexts() -> list[DemoContext]:
    return [
        DemoContext(
            "context 1: Austria, Sweden, Poland, Hungary",
            load_dataset("countries_poland.csv"),
            "Austria",
            (0.25, 0.5, 0.5, 0.5),
            (0.678, 1, 1, 1),
            {
                ("Austria", "Sweden"): 1.678,
                ("Austria", "Poland"): 3,
                ("Austria", "Hungary"): 2,
                ("Sweden", "Poland"): 2.678,
                ("Sweden", "Hungary"): 3.678,
                ("Poland", "Hungary"): 1,
            },
            "Sweden",
        ),
        DemoContext(
            "context 2: Austria, Sweden, Norway, Hungary",
            load_dataset("countries_norway.csv"),
            "Austria",
            (0.5, 0.5, 0.25, 0.5),
            (1, 1, 0.678, 1),
            {
                ("Austria", "Sweden"): 2,
                ("Austria", "Norway"): 3,
                ("Austria", "Hungary"): 1.678,
                ("Sweden", "Norway"): 1,
                ("Sweden", "Hungary"): 3.678,
                ("Norway", "Hungary"): 2.678,
            },
            "Hungary",
        ),
    ]


def _close(xs, ys, tol=DEMO_TOLERANCE) -> bool:
    xs, ys = list(xs), list(ys)
    return len(xs) == len(ys) and all(abs(x - y) <= tol for x, y in zip(xs, ys))


def run_demo(precision: int = 3, contexts: list[DemoContext] | None = None) -> ReportDocument:
    """Recompute both contexts; ``report.passed`` says whether every check held."""
    if contexts is None:
        contexts = load_demo_contexts()
    sections = []
    checks = []
    winners = []
    for dc in contexts:
        ds = dc.dataset
        ctx = ds.context()
        query = ds[dc.query]
        others = [c for c in ds.cases if c.name != dc.query]
        w = weights_body(ctx)
        dm = distmat_body(ctx, ds.cases)
        rk = rank_body(ctx, query, others)
        sections.append({"label": dc.label, "weights": w, "distmat": dm, "rank": rk})

        short = dc.label.split(":")[0]
        checks.append({"name": f"{short}: p_j = {list(dc.probabilities)}",
                       "passed": _close(ctx.probabilities, dc.probabilities)})
        checks.append({"name": f"{short}: h(p_j) = {list(dc.weights)}",
                       "passed": _close(ctx.weights, dc.weights)})
        got = {(p["a"], p["b"]): p["distance"] for p in dm["pairs"]}
        dist_ok = set(got) == set(dc.distances) and _close(
            [got[k] for k in dc.distances], dc.distances.values())
        checks.append({"name": f"{short}: six pairwise dissimilarities", "passed": dist_ok})
        checks.append({"name": f"{short}: {dc.query} groups with {dc.winner}",
                       "passed": rk["winner"] == dc.winner and not rk["ties"]})
        winners.append(rk["winner"])

    if len(contexts) == 2:
        a, b = contexts
        flip = winners[0] != winners[1]
        checks.append({"name": f"grouping flips: {winners[0]} -> {winners[1]}", "passed": flip})
        # shared cases keep equal Hamming distances across contexts
        ham = [hamming(dc.dataset[dc.query], dc.dataset[name])
               for dc in (a, b) for name in (a.winner, b.winner)]
        checks.append({"name": f"Hamming({a.query}, {a.winner}) = Hamming({a.query}, {b.winner}) "
                               f"in both contexts", "passed": len(set(ham)) == 1})
    passed = all(c["passed"] for c in checks)
    doc = ReportDocument("demo", {"contexts": sections, "checks": checks, "passed": passed}, precision)
    doc.passed = passed
    return doc
