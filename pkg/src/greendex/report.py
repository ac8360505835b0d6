"""Result emitters: json, csv and markdown.

All three formats carry the same numbers. The human-readable formats
(csv, md) round to 6 significant digits; json keeps full 64-bit precision
and is the format reproduction tooling should consume.
"""

from __future__ import annotations

import json

from .measure import AnalysisResult
from .robustness import PerturbationResult, SensitivityReport
from .model import Group

FORMATS = ("json", "csv", "md")


def sig6(v: float) -> str:
    return format(v, ".6g")


def _analysis_rows(result: AnalysisResult) -> list[dict]:
    groups = result.classification.assignments
    return [
        {"geo": s.unit, "median": s.median, "std_dev": s.std_dev, "w": s.w,
         "rank": rank, "group": groups[s.unit].value}
        for rank, s in enumerate(result.scores, start=1)
    ]


def render_analysis(result: AnalysisResult, fmt: str, name: str, year: int) -> str:
    rows = _analysis_rows(result)
    c = result.classification
    if fmt == "json":
        doc = {
            "name": name,
            "year": year,
            "units": len(result.scores),
            "indicators": result.n_indicators,
            "dropped_units": list(result.dropped_units),
            "dropped_indicators": list(result.dropped_indicators),
            "thresholds": {"mean_w": c.mean_w, "sd_w": c.sd_w,
                           "upper": c.upper, "lower": c.lower},
            "results": rows,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        lines = ["geo,median,std_dev,w,rank,group"]
        lines += [f"{r['geo']},{sig6(r['median'])},{sig6(r['std_dev'])},"
                  f"{sig6(r['w'])},{r['rank']},{r['group']}" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        lines = [
            f"# {name} ({year})",
            "",
            f"{len(result.scores)} units, {result.n_indicators} indicators; "
            f"thresholds: mean {sig6(c.mean_w)}, sd {sig6(c.sd_w)} "
            f"(cuts at {sig6(c.upper)} / {sig6(c.mean_w)} / {sig6(c.lower)})",
            "",
            "| rank | geo | median | std_dev | w | group |",
            "| ---: | --- | ---: | ---: | ---: | :---: |",
        ]
        lines += [f"| {r['rank']} | {r['geo']} | {sig6(r['median'])} | "
                  f"{sig6(r['std_dev'])} | {sig6(r['w'])} | {r['group']} |"
                  for r in rows]
        if result.dropped_units or result.dropped_indicators:
            lines.append("")
            if result.dropped_units:
                lines.append(f"Dropped units: {', '.join(result.dropped_units)}")
            if result.dropped_indicators:
                lines.append(f"Dropped indicators: {', '.join(result.dropped_indicators)}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_leave_one_out(report: SensitivityReport, fmt: str,
                         name: str, year: int) -> str:
    baseline_groups = {u: g.value for u, g in
                       sorted(report.baseline.classification.assignments.items())}
    if fmt == "json":
        doc = {
            "name": name,
            "year": year,
            "mode": "loo",
            "baseline": {"ranking": list(report.baseline.ranking()),
                         "groups": baseline_groups},
            "variants": [
                {"label": v.label,
                 "rank_correlation": v.rank_correlation,
                 "group_changes": v.group_changes}
                for v in report.variants
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        lines = ["omitted,rank_correlation,group_changes"]
        lines += [f"{v.label},{sig6(v.rank_correlation)},{v.group_changes}"
                  for v in report.variants]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        lines = [
            f"# Leave-one-out sensitivity: {name} ({year})",
            "",
            "| omitted | rank correlation | group changes |",
            "| --- | ---: | ---: |",
        ]
        lines += [f"| {v.label} | {sig6(v.rank_correlation)} | {v.group_changes} |"
                  for v in report.variants]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def render_perturbation(result: PerturbationResult, fmt: str,
                        name: str, year: int) -> str:
    baseline_groups = result.baseline.classification.assignments
    rows = [
        {"geo": unit, "baseline_group": baseline_groups[unit].value,
         **{g.value: counts[g] for g in Group}}
        for unit, counts in result.counts.items()
    ]
    if fmt == "json":
        doc = {
            "name": name,
            "year": year,
            "mode": "perturb",
            "noise": result.noise,
            "trials": result.trials,
            "seed": result.seed,
            "failed_trials": result.failed_trials,
            "frequencies": rows,
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        lines = ["geo,baseline_group,I,II,III,IV"]
        lines += [f"{r['geo']},{r['baseline_group']},{r['I']},{r['II']},"
                  f"{r['III']},{r['IV']}" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "md":
        lines = [
            f"# Perturbation sensitivity: {name} ({year})",
            "",
            f"noise ±{sig6(result.noise * 100)}% relative, {result.trials} trials, "
            f"seed {result.seed}, {result.failed_trials} failed",
            "",
            "| geo | baseline | I | II | III | IV |",
            "| --- | :---: | ---: | ---: | ---: | ---: |",
        ]
        lines += [f"| {r['geo']} | {r['baseline_group']} | {r['I']} | {r['II']} | "
                  f"{r['III']} | {r['IV']} |" for r in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
