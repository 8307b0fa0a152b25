"""JSON invariant reports, certificate verification and the on-disk result cache."""

from __future__ import annotations

import json
import math
import os
import sqlite3
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Iterable

from . import __version__
from .canon import canonical_hash
from .decomposition import CdCertificate, DecompositionTrace, is_codismantlable, is_cns, is_vertex_decomposable
from .formats import emit_graph6, parse_graph6
from .graph import Graph, girth
from .homology import CapExceeded, Field, is_cohen_macaulay, is_sequentially_cm, regularity
from .independence import independence_complex, independence_number, is_very_well_covered, is_well_covered
from .matching import (
    CochordalCover,
    CochordCapExceeded,
    cochordal_cover_number,
    is_dominating,
    is_induced_matching,
    is_matching,
    maximum_induced_matching,
    maximum_matching,
    minimum_dominating_set,
)

SCHEMA_VERSION = 1

INVARIANTS = (
    "well_covered",
    "very_well_covered",
    "cns",
    "codismantlable",
    "vertex_decomposable",
    "cohen_macaulay",
    "sequentially_cm",
    "alpha",
    "matching",
    "induced_matching",
    "domination",
    "cochord",
    "regularity",
)
FIELD_DEPENDENT = {"cohen_macaulay", "sequentially_cm", "regularity"}


def schema() -> dict:
    """The versioned JSON schema of invariant reports."""
    from importlib import resources

    return json.loads(resources.files("codis").joinpath("report.schema.json").read_text())


# ---------------------------------------------------------------------------
# cache


class ResultCache:
    """SQLite store keyed by (canonical hash, invariant, field tag, version).

    Values are JSON documents ``{"value": ..., "certificate": ...}``.  One
    connection per thread; SQLite serialises writers.
    """

    def __init__(self, directory: str | os.PathLike, version: str = __version__):
        self.path = Path(directory) / "results.sqlite"
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.version = version
        self._local = threading.local()
        with self._conn() as c:
            c.execute(
                "CREATE TABLE IF NOT EXISTS results (hash TEXT, invariant TEXT, field TEXT, version TEXT,"
                " payload TEXT, PRIMARY KEY (hash, invariant, field, version))"
            )

    def _conn(self) -> sqlite3.Connection:
        conn = getattr(self._local, "conn", None)
        if conn is None:
            conn = sqlite3.connect(self.path, timeout=30)
            self._local.conn = conn
        return conn

    def get(self, key: str, invariant: str, fld: str = "") -> dict | None:
        row = (
            self._conn()
            .execute(
                "SELECT payload FROM results WHERE hash=? AND invariant=? AND field=? AND version=?",
                (key, invariant, fld, self.version),
            )
            .fetchone()
        )
        return None if row is None else json.loads(row[0])

    def put(self, key: str, invariant: str, fld: str, payload: dict) -> None:
        with self._conn() as c:
            c.execute(
                "INSERT OR REPLACE INTO results VALUES (?, ?, ?, ?, ?)",
                (key, invariant, fld, self.version, json.dumps(payload, sort_keys=True)),
            )

    def __len__(self) -> int:
        return self._conn().execute("SELECT COUNT(*) FROM results").fetchone()[0]


def cache_from_env() -> ResultCache | None:
    d = os.environ.get("CODIS_CACHE_DIR")
    return ResultCache(d) if d else None


# ---------------------------------------------------------------------------
# computing a report


@dataclass
class _Slot:
    value: Any
    certificate: Any = None


def _compute(G: Graph, name: str, fld: Field | None) -> _Slot:
    if name == "well_covered":
        return _Slot(is_well_covered(G))
    if name == "very_well_covered":
        return _Slot(is_very_well_covered(G))
    if name == "cns":
        return _Slot(is_cns(G))
    if name == "codismantlable":
        ok, cert = is_codismantlable(G)
        return _Slot(ok, cert.to_json() if cert else None)
    if name == "vertex_decomposable":
        ok, trace = is_vertex_decomposable(G)
        return _Slot(ok, trace.to_json() if trace else None)
    if name == "cohen_macaulay":
        return _Slot(is_cohen_macaulay(G, fld))
    if name == "sequentially_cm":
        return _Slot(is_sequentially_cm(G, fld))
    if name == "alpha":
        return _Slot(independence_number(G))
    if name == "matching":
        M = maximum_matching(G)
        return _Slot(len(M), [list(e) for e in M])
    if name == "induced_matching":
        M = maximum_induced_matching(G)
        return _Slot(len(M), [list(e) for e in M])
    if name == "domination":
        D = minimum_dominating_set(G)
        return _Slot(len(D), sorted(D))
    if name == "cochord":
        k, cover = cochordal_cover_number(G)
        return _Slot(k, cover.to_json())
    if name == "regularity":
        return _Slot(regularity(G, fld))
    raise ValueError(f"unknown invariant {name!r}")


def _replay_slot(G: Graph, name: str, slot: dict) -> list[str]:
    """Certificate problems for one cached or reported value."""
    value, cert = slot.get("value"), slot.get("certificate")
    if name == "codismantlable" and value:
        return CdCertificate.from_json(cert).replay(G) if cert else ["missing cd certificate"]
    if name == "vertex_decomposable" and value:
        return DecompositionTrace.from_json(cert).replay(G) if cert else ["missing decomposition trace"]
    if name == "matching":
        M = [tuple(e) for e in cert or []]
        return [] if is_matching(G, M) and len(M) == value else ["matching certificate invalid"]
    if name == "induced_matching":
        M = [tuple(e) for e in cert or []]
        return [] if is_induced_matching(G, M) and len(M) == value else ["induced matching certificate invalid"]
    if name == "domination":
        D = list(cert or [])
        return [] if is_dominating(G, D) and len(D) == value else ["dominating set certificate invalid"]
    if name == "cochord":
        if cert is None:
            return ["missing co-chordal cover"]
        cover = CochordalCover.from_json(cert)
        errs = cover.replay(G)
        if cover.size != value:
            errs.append("co-chordal cover size differs from the reported value")
        return errs
    return []


def build_report(
    G: Graph,
    fields: Iterable[Field | str] = (Field.GF2,),
    only: Iterable[str] | None = None,
    cache: ResultCache | None = None,
    paranoid: bool = False,
) -> dict:
    """Invariant report of ``G`` as a JSON-ready dict.

    Invariants whose computation is refused (size caps) are reported as
    ``null`` and listed under ``refused`` with the reason.
    """
    flds = [Field.parse(f) for f in fields]
    names = list(INVARIANTS) if only is None else list(only)
    for nm in names:
        if nm not in INVARIANTS:
            raise ValueError(f"unknown invariant {nm!r}; known: {', '.join(INVARIANTS)}")
    key = canonical_hash(G)
    g = girth(G)
    rep: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "toolkit_version": __version__,
        "input": {"canonical_hash": key, "graph6": emit_graph6(G)},
        "n": G.n,
        "m": G.m,
        "girth": "inf" if g == math.inf else int(g),
        "invariants": {},
        "certificates": {},
        "refused": {},
        "timings": {},
    }
    for nm in names:
        for fld in flds if nm in FIELD_DEPENDENT else [None]:
            tag = fld.value if fld else ""
            label = f"{nm}.{tag}" if tag else nm
            t0 = time.perf_counter()
            slot = cache.get(key, nm, tag) if cache is not None else None
            if slot is not None and paranoid and _replay_slot(G, nm, slot):
                slot = None
            if slot is None:
                try:
                    s = _compute(G, nm, fld)
                except (CapExceeded, CochordCapExceeded) as exc:
                    rep["refused"][label] = str(exc)
                    s = _Slot(None)
                slot = {"value": s.value, "certificate": s.certificate}
                if cache is not None and s.value is not None:
                    cache.put(key, nm, tag, slot)
            rep["timings"][label] = round(time.perf_counter() - t0, 6)
            if fld:
                rep["invariants"].setdefault(nm, {})[tag] = slot["value"]
            else:
                rep["invariants"][nm] = slot["value"]
            if slot.get("certificate") is not None:
                cert_name = {
                    "codismantlable": "cd_set",
                    "vertex_decomposable": "decomposition",
                    "matching": "matching",
                    "induced_matching": "induced_matching",
                    "domination": "dominating_set",
                    "cochord": "cochordal_cover",
                }[nm]
                rep["certificates"][cert_name] = slot["certificate"]
    return rep


# ---------------------------------------------------------------------------
# verification of reports


_CERT_TO_INVARIANT = {
    "cd_set": "codismantlable",
    "decomposition": "vertex_decomposable",
    "matching": "matching",
    "induced_matching": "induced_matching",
    "dominating_set": "domination",
    "cochordal_cover": "cochord",
}


def sanity_problems(rep: dict) -> list[str]:
    """Cross-invariant checks every report must pass."""
    inv = rep.get("invariants", {})
    out = []
    im, m, cc = inv.get("induced_matching"), inv.get("matching"), inv.get("cochord")
    for tag, r in (inv.get("regularity") or {}).items():
        if r is None:
            continue
        if im is not None and im > r:
            out.append(f"im {im} exceeds reg over {tag} {r}")
        if m is not None and r > m:
            out.append(f"reg over {tag} {r} exceeds m {m}")
        if cc is not None and r > cc:
            out.append(f"reg over {tag} {r} exceeds cochord {cc}")
    if im is not None and m is not None and im > m:
        out.append(f"im {im} exceeds m {m}")
    return out


def verify_report(rep: dict, graph_check: Callable[[Graph], list[str]] | None = None) -> list[str]:
    """Replay every certificate in ``rep``; returns the problems found."""
    try:
        G = parse_graph6(rep["input"]["graph6"])
    except (KeyError, TypeError, ValueError) as exc:
        return [f"unreadable input graph: {exc}"]
    problems = []
    if canonical_hash(G) != rep["input"].get("canonical_hash"):
        problems.append("canonical hash does not match the graph")
    if rep.get("n") != G.n or rep.get("m") != G.m:
        problems.append("vertex or edge count does not match the graph")
    inv = rep.get("invariants", {})
    for cert_name, cert in rep.get("certificates", {}).items():
        nm = _CERT_TO_INVARIANT.get(cert_name)
        if nm is None:
            problems.append(f"unknown certificate {cert_name!r}")
            continue
        try:
            errs = _replay_slot(G, nm, {"value": inv.get(nm), "certificate": cert})
        except (KeyError, TypeError, ValueError) as exc:
            errs = [f"malformed certificate: {exc}"]
        problems.extend(f"{cert_name}: {e}" for e in errs)
    for nm in ("codismantlable", "vertex_decomposable"):
        if inv.get(nm) and nm not in {_CERT_TO_INVARIANT.get(c) for c in rep.get("certificates", {})}:
            problems.append(f"{nm} is true without a certificate")
    wc = inv.get("well_covered")
    if wc is not None and wc != independence_complex(G).is_pure():
        problems.append("well_covered disagrees with purity of the independence complex")
    problems.extend(sanity_problems(rep))
    if graph_check:
        problems.extend(graph_check(G))
    return problems


__all__ = [
    "FIELD_DEPENDENT",
    "INVARIANTS",
    "ResultCache",
    "SCHEMA_VERSION",
    "build_report",
    "cache_from_env",
    "sanity_problems",
    "schema",
    "verify_report",
]
