"""
Analysis reports for 4D and 3D triangulations.

The JSON layout (``report_version`` 1) is::

    {
      "report_version": 1,
      "dimension": 4,
      "num_simplices": N,
      "validity": {"closed", "num_gluings", "unpaired": [[s, f], ...], "errors"},
      "face_cycles": {"count", "length_histogram", "return_class_histogram"},
      "six_valent", "manifold", "orientable": bool,
      "volume": {"pi_squared_coefficient": "4/3", "decimal": "13.159472534785811"},
      "euler_characteristic": {"value": "1", "integer": true, "warning": null},
      "boundary_components": [{"index", "size", "signature", "certificate"}, ...],
      "cusps": [{"index", "size", "surface": {"triangles", "chi", "orientable", "class"}}],
      "double": {"num_simplices", "pi_squared_coefficient", "euler_characteristic"}
    }

Everything after ``validity`` is ``null`` when the input is not closed.  A
``tri3`` input gives ``dimension`` 3, ``num_tetrahedra``, ``validity``,
``signature`` and ``certificate`` instead.  Decimals are strings holding 17
significant digits; keys are emitted sorted.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from . import core4
from .core4 import Triangulation4
from .iso import signature
from .link3 import Triangulation3, cusp_surface4, tetrahedral_certificate, vertex_link
from .surface2 import surface_summary

REPORT_VERSION = 1


def _validity(t) -> dict:
    v = t.validate()
    return {
        "closed": v.closed,
        "num_gluings": v.num_gluings,
        "unpaired": [list(slot) for slot in v.unpaired],
        "errors": list(v.errors),
    }


@dataclass
class AnalysisReport:
    num_simplices: int
    validity: dict
    face_cycles: dict | None = None
    six_valent: bool | None = None
    manifold: bool | None = None
    orientable: bool | None = None
    volume: dict | None = None
    euler_characteristic: dict | None = None
    boundary_components: list | None = None
    cusps: list | None = None
    double: dict | None = None
    report_version: int = REPORT_VERSION
    dimension: int = field(default=4)

    @property
    def closed(self) -> bool:
        return self.validity["closed"]

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"


def analyze(t: Triangulation4) -> AnalysisReport:
    report = AnalysisReport(num_simplices=t.num_simplices, validity=_validity(t))
    if not report.closed:
        return report
    cycles = core4.face_cycles(t)
    lengths = Counter(c.length for c in cycles)
    classes = Counter(c.return_class for c in cycles)
    report.face_cycles = {
        "count": len(cycles),
        "length_histogram": {str(k): lengths[k] for k in sorted(lengths)},
        "return_class_histogram": dict(sorted(classes.items())),
    }
    report.six_valent = all(c.length == 6 for c in cycles)
    report.manifold = all(c.trivial_return for c in cycles)
    report.orientable = core4.orientability(t) is not None

    vol = core4.exact_volume(t)
    report.volume = {"pi_squared_coefficient": str(vol.coefficient), "decimal": vol.display()}
    chi = core4.euler_characteristic(t)
    report.euler_characteristic = {
        "value": str(chi),
        "integer": chi.denominator == 1,
        "warning": core4.euler_warning(t),
    }

    report.boundary_components = []
    for i, cls in enumerate(core4.vertex_classes(t)):
        link = vertex_link(t, cls)
        report.boundary_components.append({
            "index": i,
            "size": len(cls),
            "signature": signature(link),
            "certificate": tetrahedral_certificate(link).as_dict(),
        })
    report.cusps = []
    for i, cls in enumerate(core4.edge_classes(t)):
        report.cusps.append({
            "index": i,
            "size": len(cls),
            "surface": surface_summary(cusp_surface4(t, cls)),
        })
    # doubling along the boundary: arithmetic only
    report.double = {
        "num_simplices": 2 * t.num_simplices,
        "pi_squared_coefficient": str(2 * vol.coefficient),
        "euler_characteristic": str(2 * chi),
    }
    return report


def analyze3(t3: Triangulation3) -> dict:
    out = {
        "report_version": REPORT_VERSION,
        "dimension": 3,
        "num_tetrahedra": t3.num_tetrahedra,
        "validity": _validity(t3),
        "signature": None,
        "certificate": None,
    }
    if out["validity"]["closed"]:
        out["signature"] = signature(t3)
        out["certificate"] = tetrahedral_certificate(t3).as_dict()
    return out


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_text(report: AnalysisReport) -> str:
    v = report.validity
    lines = [f"simplices: {report.num_simplices}",
             f"gluings: {v['num_gluings']}",
             f"closed: {_yes(v['closed'])}"]
    if not report.closed:
        slots = ", ".join(f"({s},{f})" for s, f in v["unpaired"])
        lines.append(f"not closed: {len(v['unpaired'])} unpaired facet slot(s): {slots}")
        return "\n".join(lines) + "\n"
    fc = report.face_cycles
    hist = " ".join(f"{k}x{n}" for k, n in fc["length_histogram"].items())
    lines += [
        f"face cycles: {fc['count']} (lengths {hist})",
        f"return maps: " + ", ".join(f"{k} {n}" for k, n in fc["return_class_histogram"].items()),
        f"six-valent: {_yes(report.six_valent)}",
        f"manifold: {_yes(report.manifold)}",
        f"orientable: {_yes(report.orientable)}",
        f"volume: {report.volume['pi_squared_coefficient']}*pi^2 = {report.volume['decimal']}",
        f"euler characteristic: {report.euler_characteristic['value']}",
    ]
    if report.euler_characteristic["warning"]:
        lines.append(f"warning: {report.euler_characteristic['warning']}")
    lines.append(f"boundary components: {len(report.boundary_components)}")
    for b in report.boundary_components:
        cert = b["certificate"]
        lines.append(
            f"  [{b['index']}] {b['size']} tetrahedra, tetrahedral: {_yes(cert['granted'])}, "
            f"orientable: {_yes(cert['orientable'])}, cusps: {cert['num_cusps']}, "
            f"volume {cert['volume']}")
    lines.append(f"cusps: {len(report.cusps)}")
    for c in report.cusps:
        s = c["surface"]
        lines.append(f"  [{c['index']}] {c['size']} triangles, {s['class']} (chi {s['chi']})")
    return "\n".join(lines) + "\n"


def render_text3(report: dict) -> str:
    v = report["validity"]
    lines = [f"tetrahedra: {report['num_tetrahedra']}", f"closed: {_yes(v['closed'])}"]
    if not v["closed"]:
        slots = ", ".join(f"({s},{f})" for s, f in v["unpaired"])
        lines.append(f"not closed: {len(v['unpaired'])} unpaired facet slot(s): {slots}")
        return "\n".join(lines) + "\n"
    cert = report["certificate"]
    lines += [
        f"edge valences: {' '.join(map(str, cert['edge_valences']))}",
        f"flipped edges: {cert['num_flipped_edges']}",
        f"tetrahedral: {_yes(cert['granted'])}",
        f"orientable: {_yes(cert['orientable'])}",
        f"cusps: {cert['num_cusps']} ({', '.join(cert['cusp_surfaces'])})",
        f"volume: {cert['volume']}",
        f"signature: {report['signature']}",
    ]
    return "\n".join(lines) + "\n"
