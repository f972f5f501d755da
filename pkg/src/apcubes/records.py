"""Line-delimited certificate logs and run manifests.

One JSON document per line with the keys ``type, k, i, vector,
certificate_kind, witness, timestamp``; every integer is written as a decimal
string so values of any size round-trip. The first line is a ``header``
that names the manifest file of the run.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Iterator

from . import __version__
from .cubic import Certificate, CertificateKind
from .enumeration.filters import filter_rank_zero
from .enumeration.vector import CoefficientVector

OUT_DIR_ENV = "APCUBES_OUT_DIR"


def default_out_dir() -> Path | None:
    value = os.environ.get(OUT_DIR_ENV)
    return Path(value) if value else None


def now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "item"):  # numpy scalar
        return encode(value.item())
    return value


def decode(value: Any) -> Any:
    """Inverse of :func:`encode` for the fields we write (decimal strings become ints)."""
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            return value
    if isinstance(value, dict):
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    return value


@dataclass
class RunManifest:
    command: str
    parameters: dict[str, Any]
    code_version: str = __version__
    started: str = field(default_factory=now)
    finished: str | None = None
    node_convention: str | None = None
    totals: dict[str, dict[str, Any]] = field(default_factory=dict)

    @property
    def run_id(self) -> str:
        blob = json.dumps({"command": self.command, "parameters": self.parameters}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def write(self, path: Path) -> None:
        data = asdict(self)
        data["run_id"] = self.run_id
        path.write_text(json.dumps(encode(data), indent=2, sort_keys=True) + "\n", encoding="utf-8")


def record(
    type_: str,
    *,
    k: int | None = None,
    i: int | None = None,
    vector: CoefficientVector | None = None,
    certificate: Certificate | None = None,
    timestamp: str | None = None,
    **extra: Any,
) -> dict[str, Any]:
    rec = {
        "type": type_,
        "k": vector.k if vector is not None else k,
        "i": vector.i if vector is not None else i,
        "vector": list(vector.entries) if vector is not None else None,
        "certificate_kind": certificate.kind.value if certificate is not None else None,
        "witness": certificate.witness if certificate is not None else None,
        "timestamp": timestamp,
    }
    rec.update(extra)
    return encode(rec)


class LogWriter:
    def __init__(self, path: Path, manifest: RunManifest):
        self.path = Path(path)
        self.manifest = manifest
        self.manifest_path = self.path.with_name(self.path.name + ".manifest.json")
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh = self.path.open("w", encoding="utf-8", newline="\n")
        self.write(
            record(
                "header",
                timestamp=manifest.started,
                manifest=self.manifest_path.name,
                run_id=manifest.run_id,
                command=manifest.command,
                parameters=manifest.parameters,
            )
        )

    def write(self, rec: dict[str, Any]) -> None:
        self._fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")

    def close(self) -> None:
        self._fh.close()
        self.manifest.finished = now()
        self.manifest.write(self.manifest_path)

    def __enter__(self) -> LogWriter:
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def read_log(path: Path) -> Iterator[dict[str, Any]]:
    with Path(path).open(encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                yield json.loads(line)


def strip_timestamps(lines: Iterable[str]) -> list[str]:
    out = []
    for line in lines:
        rec = json.loads(line)
        rec.pop("timestamp", None)
        out.append(json.dumps(rec, sort_keys=True))
    return out


def _vector(rec) -> CoefficientVector:
    return CoefficientVector(int(rec["k"]), int(rec["i"]), tuple(int(a) for a in rec["vector"]))


def _cert(rec) -> Certificate:
    return Certificate(CertificateKind(rec["certificate_kind"]), decode(rec["witness"]))


@dataclass
class RevalidationReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def revalidate_log(path: Path) -> RevalidationReport:
    """Re-check every record of a log without re-running the enumeration."""
    from .certificates import InvalidCertificate, revalidate
    from .resolver import SolutionError, verify_solution

    report = RevalidationReport()
    filters: list[str] = []
    for lineno, rec in enumerate(read_log(path), 1):
        kind = rec["type"]
        try:
            if kind == "header":
                filters = decode(rec.get("parameters", {})).get("filters", [])
                continue
            if kind in ("elimination", "resolution"):
                v = _vector(rec) if rec["vector"] is not None else None
                revalidate(v, _cert(rec), k=int(rec["k"]), i=int(rec["i"]))
            elif kind == "survivor":
                v = _vector(rec)
                problems = v.structural_violations()
                if problems:
                    raise InvalidCertificate("; ".join(problems))
                if "rank-zero" in filters and filter_rank_zero(v) is not None:
                    raise InvalidCertificate("survivor is eliminated by the rank-zero scan")
            elif kind == "solution":
                s = verify_solution(int(rec["k"]), int(rec["i"]), int(rec["n"]), int(rec["d"]))
                if s.y != int(rec["y"]):
                    raise InvalidCertificate(f"y recomputes to {s.y}")
            else:
                continue
            report.checked += 1
        except (InvalidCertificate, SolutionError, KeyError, ValueError) as exc:
            report.failures.append(f"line {lineno}: {kind}: {exc}")
    return report
