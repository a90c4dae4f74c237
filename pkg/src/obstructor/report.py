"""Model specifications and deterministic analysis documents.

JSON layout of an analysis document (keys always in this order)::

    {
      "tool": {"name": "obstructor", "version": ...},
      "conventions": <fingerprint>,
      "spec": {"genus": g, "degrees": [...], "triviality_flags": [...] | null},
      "model": {"genus": g, "degrees": [...sorted], "trivialities": [...]},
      "obstructions": [
        {"k": k, "sheaf": [[degree, triviality], ...], "exact": bool,
         "h0": int | [lo, hi], "h1": int | [lo, hi]}, ...],
      "verdict": {"status": ..., "rule": ..., "supporting": [...], "failed": [...]},
      "witness": null | {"section": ..., "classes": [...], "verified": bool},
      "notes": [...]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Sequence

from . import __version__
from .bundles import Curve, Model, SplitBundle, Triviality
from .cech import convention_fingerprint, oracle_listing
from .obstruction import GoodnessVerdict, Status, classify, obstruction_report

EXIT_CODES = {Status.GOOD: 0, Status.SUPPORTS_EXOTIC: 10, Status.INCONCLUSIVE: 20}
EXIT_INPUT_ERROR = 2
MAX_SWEEP_ROWS = 200_000


class SpecError(ValueError):
    """Invalid model specification; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class ModelSpec:
    genus: int
    degrees: tuple[int, ...]
    triviality_flags: tuple[Triviality, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.genus, int) or isinstance(self.genus, bool) or self.genus < 0:
            raise SpecError("genus", f"expected a non-negative integer, got {self.genus!r}")
        if not self.degrees:
            raise SpecError("degrees", "at least one degree is required")
        for i, d in enumerate(self.degrees):
            if not isinstance(d, int) or isinstance(d, bool):
                raise SpecError(f"degrees[{i}]", f"expected an integer, got {d!r}")
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.triviality_flags is not None:
            flags = []
            for i, f in enumerate(self.triviality_flags):
                try:
                    flags.append(f if isinstance(f, Triviality) else Triviality.parse(str(f)))
                except ValueError as exc:
                    raise SpecError(f"triviality_flags[{i}]", str(exc)) from None
            if len(flags) != len(self.degrees):
                raise SpecError("triviality_flags",
                                f"expected {len(self.degrees)} flags, got {len(flags)}")
            object.__setattr__(self, "triviality_flags", tuple(flags))

    def model(self) -> Model:
        bundle = SplitBundle.from_degrees(self.degrees, self.triviality_flags)
        return Model(Curve(self.genus), bundle)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "degrees": list(self.degrees),
            "triviality_flags": None if self.triviality_flags is None
            else [f.value for f in self.triviality_flags],
        }

    @classmethod
    def from_dict(cls, data: Any) -> "ModelSpec":
        if not isinstance(data, dict):
            raise SpecError("$", "expected a JSON object")
        unknown = set(data) - {"genus", "degrees", "triviality_flags"}
        if unknown:
            raise SpecError(sorted(unknown)[0], "unknown field")
        if "genus" not in data:
            raise SpecError("genus", "missing")
        if "degrees" not in data:
            raise SpecError("degrees", "missing")
        degrees = data["degrees"]
        if not isinstance(degrees, list):
            raise SpecError("degrees", "expected a list of integers")
        flags = data.get("triviality_flags")
        if flags is not None and not isinstance(flags, list):
            raise SpecError("triviality_flags", "expected a list or null")
        return cls(data["genus"], tuple(degrees), None if flags is None else tuple(flags))


def emit_spec(spec: ModelSpec) -> str:
    return json.dumps(spec.to_dict(), indent=2) + "\n"


def parse_spec(text: str) -> ModelSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("$", f"invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return ModelSpec.from_dict(data)


def balanced_spec(rank: int, degree: int, genus: int = 0) -> ModelSpec:
    if rank < 1:
        raise SpecError("balanced", f"rank must be positive, got {rank}")
    return ModelSpec(genus, (degree,) * rank)


# -- analysis -------------------------------------------------------------


def _range_value(r: tuple[int, int]):
    return r[0] if r[0] == r[1] else [r[0], r[1]]


def _classes_json(classes) -> list:
    return [{"bundle_degree": c.bundle_degree, "coordinates": [str(x) for x in c.coordinates]}
            for c in classes]


def _witness_json(model: Model, verdict: GoodnessVerdict) -> dict | None:
    if verdict.witness is None:
        return None
    from .exotic import verify_witness

    phi, classes = verdict.witness
    return {
        "section": phi.label(),
        "coefficients": [[f"t{a + 1}t{b + 1}", str(c)] for (a, b), c in zip(((0, 1), (0, 2), (1, 2)), phi.chart0)],
        "classes": _classes_json(classes),
        "verified": verify_witness(model, phi, classes),
    }


def analyze(spec: ModelSpec) -> dict:
    """Full report for one model, as an ordered dict ready for JSON."""
    model = spec.model()
    verdict = classify(model)
    doc: dict[str, Any] = {
        "tool": {"name": "obstructor", "version": __version__},
        "conventions": convention_fingerprint(),
        "spec": spec.to_dict(),
        "model": {
            "genus": model.genus,
            "degrees": list(model.degrees),
            "trivialities": [c.triviality.value for c in model.bundle],
        },
        "obstructions": [],
        "verdict": {
            "status": verdict.status.value,
            "rule": verdict.rule.value,
            "supporting": [r.value for r in verdict.supporting],
            "failed": list(verdict.failed),
        },
        "witness": None,
        "notes": [],
    }
    if model.rank >= 2:
        report = obstruction_report(model)
        for lvl in report.levels:
            doc["obstructions"].append({
                "k": lvl.k,
                "sheaf": [[c.degree, c.triviality.value] for c in lvl.sheaf],
                "exact": lvl.dims.is_exact,
                "h0": _range_value(lvl.dims.h0_range),
                "h1": _range_value(lvl.dims.h1_range),
            })
        doc["notes"] = list(report.notes)
    doc["witness"] = _witness_json(model, verdict)
    return doc


def exit_code(doc: dict) -> int:
    return EXIT_CODES[Status(doc["verdict"]["status"])]


def to_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else f"[{v[0]},{v[1]}]"


def render_text(doc: dict) -> str:
    m = doc["model"]
    lines = [
        f"obstructor {doc['tool']['version']}  conventions {doc['conventions']}",
        f"model: genus {m['genus']}, degrees {m['degrees']}",
    ]
    for row in doc["obstructions"]:
        sheaf = ",".join(str(d) for d, _ in row["sheaf"])
        mark = "" if row["exact"] else "  (interval)"
        lines.append(f"  k={row['k']}: Q = O({sheaf})  h0={_fmt(row['h0'])}  h1={_fmt(row['h1'])}{mark}")
    v = doc["verdict"]
    lines.append(f"verdict: {v['status']} by rule {v['rule']}")
    if v["supporting"]:
        lines.append(f"  also: {', '.join(v['supporting'])}")
    for reason in v["failed"]:
        lines.append(f"  not applicable: {reason}")
    w = doc["witness"]
    if w is not None:
        coords = "; ".join(f"O({c['bundle_degree']}): ({', '.join(c['coordinates'])})" for c in w["classes"])
        lines.append(f"witness: {w['section']} -> {coords}  verified={w['verified']}")
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


# -- sweeps ---------------------------------------------------------------


def sweep(ranges: Sequence[tuple[int, int]], genus: int = 0, balanced: bool = False,
          check_alpha: bool = False) -> dict:
    """Classify every model in a box of degrees.

    ``ranges`` holds one inclusive ``(lo, hi)`` per summand; with
    ``balanced=True`` only the diagonal of the box is visited, so
    ``[(lo, hi)] * rank`` sweeps the common degree over ``lo..hi``.
    """
    if not ranges:
        raise SpecError("box", "at least one range is required")
    for i, r in enumerate(ranges):
        if len(r) != 2 or any(not isinstance(x, int) for x in r):
            raise SpecError(f"box[{i}]", f"expected a pair of integer bounds, got {r!r}")
    rank = len(ranges)
    if balanced:
        lo = max(r[0] for r in ranges)
        hi = min(r[1] for r in ranges)
        tuples: Iterable[tuple[int, ...]] = ((d,) * rank for d in range(lo, hi + 1))
        size = max(0, hi - lo + 1)
    else:
        size = 1
        for lo, hi in ranges:
            size *= max(0, hi - lo + 1)
        tuples = product(*(range(lo, hi + 1) for lo, hi in ranges))
    if size > MAX_SWEEP_ROWS:
        raise SpecError("box", f"{size} models exceeds the limit of {MAX_SWEEP_ROWS}")
    if check_alpha and (genus != 0 or rank != 3):
        raise SpecError("check_alpha", "the boundary-map cross-check needs genus 0 and rank 3")

    rows = []
    counts = {s.value: 0 for s in Status}
    disagreements = 0
    for degrees in tuples:
        model = ModelSpec(genus, tuple(degrees)).model()
        verdict = classify(model, with_witness=False)
        counts[verdict.status.value] += 1
        row = {"degrees": list(degrees), "status": verdict.status.value, "rule": verdict.rule.value}
        if check_alpha:
            from .exotic import alpha_rank

            rank_alpha = alpha_rank(degrees)
            constructive = Status.SUPPORTS_EXOTIC if rank_alpha else Status.GOOD
            row["alpha_rank"] = rank_alpha
            row["agrees"] = constructive is verdict.status
            disagreements += not row["agrees"]
        rows.append(row)
    summary: dict[str, Any] = {"rows": len(rows), "counts": counts}
    if check_alpha:
        summary["disagreements"] = disagreements
    return {
        "tool": {"name": "obstructor", "version": __version__},
        "genus": genus,
        "box": [list(r) for r in ranges],
        "balanced": balanced,
        "rows": rows,
        "summary": summary,
    }


def render_sweep_text(table: dict) -> str:
    lines = [f"sweep genus {table['genus']} box {table['box']}" + (" (balanced)" if table["balanced"] else "")]
    for row in table["rows"]:
        extra = ""
        if "alpha_rank" in row:
            extra = f"  alpha_rank={row['alpha_rank']}" + ("" if row["agrees"] else "  DISAGREES")
        lines.append(f"  {tuple(row['degrees'])}: {row['status']} ({row['rule']}){extra}")
    s = table["summary"]
    counts = ", ".join(f"{k}={v}" for k, v in s["counts"].items())
    lines.append(f"{s['rows']} models: {counts}")
    if "disagreements" in s:
        lines.append(f"boundary-map disagreements: {s['disagreements']}")
    return "\n".join(lines) + "\n"


# -- exotic and oracle ----------------------------------------------------


def exotic_report(degrees: Sequence[int]) -> dict:
    """Boundary map on the monomial basis of H^0(Q^(2)) for a rank-3 model on P^1."""
    from .exotic import boundary_alpha, q2_global_basis, rational_rank

    degrees = tuple(degrees)
    if len(degrees) != 3:
        raise SpecError("degrees", "the exotic construction needs exactly three degrees")
    rows = []
    matrix = []
    for phi in q2_global_basis(degrees):
        classes = boundary_alpha(degrees, phi)
        rows.append({"section": phi.label(), "classes": _classes_json(classes),
                     "nonzero": any(not c.is_zero for c in classes)})
        matrix.append([x for c in classes for x in c.coordinates])
    rank = rational_rank(matrix) if matrix else 0
    return {
        "tool": {"name": "obstructor", "version": __version__},
        "conventions": convention_fingerprint(),
        "degrees": list(degrees),
        "h0_Q2": len(rows),
        "h1_Q3": len(matrix[0]) if matrix else sum(max(0, -(sum(degrees) - d) - 1) for d in degrees),
        "alpha_rank": rank,
        "basis": rows,
    }


def render_exotic_text(doc: dict) -> str:
    lines = [f"boundary map on P1, degrees {doc['degrees']}: "
             f"h0(Q2)={doc['h0_Q2']} h1(Q3)={doc['h1_Q3']} rank={doc['alpha_rank']}"]
    for row in doc["basis"]:
        coords = "; ".join(f"O({c['bundle_degree']}): ({', '.join(c['coordinates'])})" for c in row["classes"])
        lines.append(f"  {row['section']} -> {coords}")
    return "\n".join(lines) + "\n"


def oracle(d: int, window: int | None = None) -> dict:
    return oracle_listing(d, window)


def render_oracle_text(doc: dict) -> str:
    return (f"O({doc['degree']}) on P1: h0={doc['h0']} h1={doc['h1']}\n"
            f"  H0 basis: [{', '.join(doc['h0_basis'])}]\n"
            f"  H1 basis: [{', '.join(doc['h1_basis'])}]\n")
