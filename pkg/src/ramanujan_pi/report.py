"""JSON run reports for grid scans.

Schema (keys sorted on output)::

    {"version": 1,
     "config": {"seed": int, "digits": int, "bounds": {"p_max", "q_max", "r_max"}},
     "results": [{"family", "p", "q", "r"?, "constant": {"num", "den", "surd"},
                  "terms_used", "residual_exp", "matched"}
                 | {"family", "p", "q", "r"?, "skipped": reason}]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .families import FamilyParams
from .gamma import RecognizedConstant
from .verify import DEFAULT_SEED, SkipRecord, VerificationReport

SCHEMA_VERSION = 1

Entry = Union[VerificationReport, SkipRecord]


@dataclass(frozen=True)
class ReportConfig:
    seed: int = DEFAULT_SEED
    digits: int = 40
    bounds: dict = field(default_factory=dict)


def _params_dict(params: FamilyParams) -> dict:
    d = {"family": params.family.value, "p": params.p, "q": params.q}
    if params.family.has_r:
        d["r"] = params.r
    return d


def _entry_dict(e: Entry) -> dict:
    d = _params_dict(e.params)
    if isinstance(e, SkipRecord):
        d["skipped"] = e.reason
        return d
    d.update(
        constant={"num": e.constant.rat.numerator, "den": e.constant.rat.denominator, "surd": e.constant.surd},
        terms_used=e.terms_used,
        residual_exp=e.residual_exponent,
        matched=e.matched,
    )
    return d


def report_dict(entries: Sequence[Entry], config: ReportConfig) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "config": {"seed": config.seed, "digits": config.digits, "bounds": dict(config.bounds)},
        "results": [_entry_dict(e) for e in entries],
    }


def serialize(entries: Sequence[Entry], config: Optional[ReportConfig] = None) -> str:
    return json.dumps(report_dict(entries, config or ReportConfig()), sort_keys=True, indent=2) + "\n"


def parse(text: str) -> tuple[list[Entry], ReportConfig]:
    doc = json.loads(text)
    if doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report version {doc.get('version')!r}")
    cfg = doc["config"]
    config = ReportConfig(seed=cfg["seed"], digits=cfg["digits"], bounds=cfg["bounds"])
    entries: list[Entry] = []
    for d in doc["results"]:
        params = FamilyParams(d["family"], d["p"], d["q"], d.get("r"))
        if "skipped" in d:
            entries.append(SkipRecord(params, d["skipped"]))
            continue
        c = d["constant"]
        entries.append(
            VerificationReport(
                params=params,
                digits_requested=config.digits,
                terms_used=d["terms_used"],
                matched=d["matched"],
                constant=RecognizedConstant(Fraction(c["num"], c["den"]), c["surd"], -1),
                residual_exponent=d["residual_exp"],
                seed=config.seed,
            )
        )
    return entries, config
