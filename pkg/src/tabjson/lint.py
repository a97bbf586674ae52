"""Structural-consistency checks for dynamic JSON feeds.

Two executable rules:

* Rule 1, fixed keys: object keys carry names, never data. A record
  group whose keys are mostly one-off (and numerous) looks like data
  leaked into the key position, as do keys that parse as numbers.
* Rule 2, consistent types: each field path keeps a single structural
  type across records, and each array holds elements of a single type.
  Nulls and absent keys mark missing data and never conflict; the quoted
  numeric markers "NA", "NaN", "Inf" and "-Inf" are treated the same
  way, since they are this codec's encoding of non-finite slots inside
  numeric data.

The record universe is every top-level object document plus every
element of every array of objects, grouped by path. Paths are dotted
from the document root ``$`` with ``[]`` marking array descent, e.g.
``$.humans[].name``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Sequence

from .json_text import JsonObject, JsonValue, is_number_lexeme

__all__ = [
    "LintConfig",
    "Finding",
    "LintReport",
    "lint",
    "check_fixed_keys",
    "check_consistent_types",
]

_NEUTRAL_STRINGS = frozenset({"NA", "NaN", "Inf", "-Inf"})


@dataclass(frozen=True)
class LintConfig:
    """Thresholds for the statistical half of Rule 1.

    ``max_singleton_key_ratio`` is the tolerated fraction of keys, per
    record group, that occur in exactly one record. ``allow_null`` keeps
    nulls out of every type-conflict computation.
    """

    max_singleton_key_ratio: float = 0.5
    flag_numeric_keys: bool = True
    allow_null: bool = True

    def __post_init__(self):
        if not 0.0 <= self.max_singleton_key_ratio <= 1.0:
            raise ValueError("max_singleton_key_ratio must be within [0, 1]")


DEFAULT_CONFIG = LintConfig()


@dataclass(frozen=True)
class Finding:
    rule: str  # R1_fixed_keys | R1_data_key | R2_field_type | R2_array_homogeneity
    path: str
    detail: str
    severity: str  # "warn" | "error"
    witnesses: tuple = ()

    def __str__(self) -> str:
        return f"{self.severity.upper()} {self.rule} at {self.path}: {self.detail}"


@dataclass
class LintReport:
    findings: list
    documents_scanned: int
    path_stats: Dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_json(self) -> JsonValue:
        return {
            "documents_scanned": self.documents_scanned,
            "findings": [
                {
                    "rule": f.rule,
                    "path": f.path,
                    "severity": f.severity,
                    "detail": f.detail,
                    "witnesses": list(f.witnesses),
                }
                for f in self.findings
            ],
            "paths": {
                path: {
                    "keys": dict(stats.get("keys", {})),
                    "types": dict(stats.get("types", {})),
                }
                for path, stats in sorted(self.path_stats.items())
            },
        }

    def to_text(self) -> str:
        lines = [f"documents scanned: {self.documents_scanned}"]
        if self.findings:
            lines.append(f"findings ({len(self.findings)}):")
            width = max(len(f.rule) for f in self.findings)
            for f in self.findings:
                lines.append(
                    f"  {f.severity.upper():5} {f.rule.ljust(width)}  {f.path}  {f.detail}"
                )
        else:
            lines.append("findings: none")
        if self.path_stats:
            lines.append("paths:")
            for path, stats in sorted(self.path_stats.items()):
                parts = []
                keys = stats.get("keys")
                if keys:
                    parts.append(
                        "keys " + ", ".join(f"{k}:{n}" for k, n in sorted(keys.items()))
                    )
                types = stats.get("types")
                if types:
                    parts.append(
                        "types " + ", ".join(f"{t}:{n}" for t, n in sorted(types.items()))
                    )
                lines.append(f"  {path}: " + ("; ".join(parts) if parts else "-"))
        return "\n".join(lines)


def _tag(value: JsonValue) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "bool"
    if isinstance(value, (int, float)):
        return "number"
    if isinstance(value, str):
        return "string"
    if isinstance(value, (list, tuple)):
        return "array"
    return "object"


def _neutral(value: JsonValue, cfg: LintConfig) -> bool:
    if value is None:
        return cfg.allow_null
    return isinstance(value, str) and value in _NEUTRAL_STRINGS


class _Scan:
    """Single pass over a document stream collecting record groups,
    field type tags and per-array homogeneity conflicts."""

    def __init__(self, cfg: LintConfig):
        self.cfg = cfg
        self.groups: Dict[str, list] = {}  # path -> [(witness, JsonObject)]
        self.field_tags: Dict[str, Dict[str, set]] = {}  # path -> tag -> witnesses
        self.array_conflicts: Dict[str, dict] = {}  # path -> {"tags", "witnesses"}
        self.type_counts: Dict[str, Dict[str, int]] = {}

    def walk_document(self, doc: JsonValue, witness):
        if isinstance(doc, (JsonObject, dict)):
            self.groups.setdefault("$", []).append((witness, doc))
        self._walk(doc, "$", witness)

    def _walk(self, value, path, witness):
        if isinstance(value, (JsonObject, dict)):
            for key, member in value.items():
                child = f"{path}.{key}"
                counts = self.type_counts.setdefault(child, {})
                tag = _tag(member)
                counts[tag] = counts.get(tag, 0) + 1
                if not _neutral(member, self.cfg):
                    self.field_tags.setdefault(child, {}).setdefault(tag, set()).add(witness)
                self._walk(member, child, witness)
        elif isinstance(value, (list, tuple)):
            tags = {_tag(item) for item in value if not _neutral(item, self.cfg)}
            if len(tags) > 1:
                slot = self.array_conflicts.setdefault(path, {"tags": set(), "witnesses": set()})
                slot["tags"] |= tags
                slot["witnesses"].add(witness)
            if value and all(isinstance(item, (JsonObject, dict)) for item in value):
                group = self.groups.setdefault(f"{path}[]", [])
                for item in value:
                    group.append((witness, item))
            child = f"{path}[]"
            for item in value:
                self._walk(item, child, witness)


def check_fixed_keys(records: Sequence, cfg: LintConfig = DEFAULT_CONFIG,
                     path: str = "$", witnesses: Sequence = None) -> list:
    """Rule 1 over one group of record objects.

    The singleton heuristic needs more than one record to say anything;
    numeric-looking keys are flagged regardless of frequency.
    """
    records = list(records)
    witnesses = list(witnesses) if witnesses is not None else list(range(len(records)))
    findings = []
    key_freq: Dict[str, int] = {}
    key_witnesses: Dict[str, set] = {}
    for witness, rec in zip(witnesses, records):
        for key in set(rec.keys()):
            key_freq[key] = key_freq.get(key, 0) + 1
            key_witnesses.setdefault(key, set()).add(witness)
    if not key_freq:
        return findings
    singletons = [k for k, n in key_freq.items() if n == 1]
    if len(records) > 1 and len(key_freq) > 2:
        ratio = len(singletons) / len(key_freq)
        if ratio > cfg.max_singleton_key_ratio:
            involved = sorted(set().union(*(key_witnesses[k] for k in singletons)))
            findings.append(Finding(
                "R1_fixed_keys", path,
                f"{len(singletons)} of {len(key_freq)} keys occur in exactly one "
                f"record (ratio {ratio:.2f} > {cfg.max_singleton_key_ratio:.2f}); "
                "keys should be a fixed set known in advance",
                "warn", tuple(involved),
            ))
    if cfg.flag_numeric_keys:
        for key in sorted(k for k in key_freq if is_number_lexeme(k)):
            findings.append(Finding(
                "R1_data_key", f"{path}.{key}",
                f"key {key!r} parses as a number; keys should carry names, not data",
                "error", tuple(sorted(key_witnesses[key])),
            ))
    return findings


def check_consistent_types(documents: Sequence, cfg: LintConfig = DEFAULT_CONFIG,
                           path: str = "$", witnesses: Sequence = None) -> list:
    """Rule 2 over a sequence of values: conflicting field types per key
    path and mixed element types per array."""
    scan = _Scan(cfg)
    witnesses = list(witnesses) if witnesses is not None else list(range(len(documents)))
    for witness, doc in zip(witnesses, documents):
        scan._walk(doc, path, witness)
    return _type_findings(scan)


def _type_findings(scan: _Scan) -> list:
    findings = []
    for path in sorted(scan.field_tags):
        tags = scan.field_tags[path]
        if len(tags) > 1:
            involved = sorted(set().union(*tags.values()))
            findings.append(Finding(
                "R2_field_type", path,
                "field has conflicting types: " + ", ".join(sorted(tags)),
                "error", tuple(involved),
            ))
    for path in sorted(scan.array_conflicts):
        slot = scan.array_conflicts[path]
        findings.append(Finding(
            "R2_array_homogeneity", path,
            "array mixes element types: " + ", ".join(sorted(slot["tags"])),
            "error", tuple(sorted(slot["witnesses"])),
        ))
    return findings


def lint(documents: Sequence, cfg: LintConfig = DEFAULT_CONFIG) -> LintReport:
    """Run both rules over a stream of parsed documents.

    Requires at least one document. Findings are deterministic and do
    not depend on document order (witness indices aside).
    """
    documents = list(documents)
    if not documents:
        raise ValueError("lint requires at least one document")
    scan = _Scan(cfg)
    for idx, doc in enumerate(documents):
        scan.walk_document(doc, idx)

    findings = []
    for path in sorted(scan.groups):
        group = scan.groups[path]
        findings.extend(check_fixed_keys(
            [rec for _, rec in group], cfg, path,
            witnesses=[w for w, _ in group],
        ))
    findings.extend(_type_findings(scan))

    stats: Dict[str, dict] = {}
    for path, group in scan.groups.items():
        key_counts: Dict[str, int] = {}
        for _, rec in group:
            for key in set(rec.keys()):
                key_counts[key] = key_counts.get(key, 0) + 1
        stats.setdefault(path, {})["keys"] = key_counts
    for path, counts in scan.type_counts.items():
        stats.setdefault(path, {})["types"] = dict(counts)

    order = {"R1_fixed_keys": 0, "R1_data_key": 1, "R2_field_type": 2,
             "R2_array_homogeneity": 3}
    findings.sort(key=lambda f: (order.get(f.rule, 9), f.path))
    return LintReport(findings, len(documents), stats)
