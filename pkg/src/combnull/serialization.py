"""JSON wire formats for grids, specs, outcomes, and certificates.

Serialized certificates are self-contained: they carry the ring, the
arity, the certified polynomial, and the basis polynomials themselves, so
re-verification needs nothing but the document.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import ParseError
from .multiset_ideals import Certificate, MultisetGrid, PuncturedGrid
from .polynomials import Poly, format_poly, parse_poly
from .reduction import MonicFamily, ReductionOutcome
from .rings import Ring, parse_ring
from .staircase import format_expvec, parse_expvec
from .vanishing import VanishingSpec


def element_to_json(ring: Ring, value):
    return str(value) if isinstance(value, Fraction) else value


def element_from_json(ring: Ring, value):
    if isinstance(value, str):
        return ring.parse_element(value)
    return ring.canon(value)


def _label_to_key(label) -> str:
    if isinstance(label, tuple):
        return format_expvec(label)
    return str(label)


def _label_from_key(key: str):
    key = key.strip()
    if key.startswith("("):
        return parse_expvec(key)
    try:
        return int(key)
    except ValueError:
        return key


# -- grids ---------------------------------------------------------------------


def grid_to_json(grid: MultisetGrid) -> dict:
    return {
        "ring": str(grid.ring),
        "axes": [
            {
                "S": [element_to_json(grid.ring, u) for u in axis.support],
                "psi": {
                    str(element_to_json(grid.ring, u)): m
                    for u, m in sorted(axis.psi.items())
                },
            }
            for axis in grid.axes
        ],
    }


def grid_from_json(doc: Mapping, ring: Ring | None = None) -> MultisetGrid:
    """Accepts the canonical axes form and the compact ``{S: [[...]]}``
    form; a ring given explicitly overrides the document."""
    if ring is None:
        if "ring" not in doc:
            raise ParseError("grid document carries no ring")
        ring = parse_ring(doc["ring"])
    if "axes" in doc:
        supports = []
        psis = []
        for axis_doc in doc["axes"]:
            values = [element_from_json(ring, v) for v in axis_doc["S"]]
            psi_doc = axis_doc.get("psi")
            psi = None
            if psi_doc is not None:
                psi = {
                    element_from_json(ring, k): int(m)
                    for k, m in psi_doc.items()
                }
            supports.append(values)
            psis.append(psi)
        return MultisetGrid.build(ring, supports, psis)
    if "S" in doc:
        supports = [
            [element_from_json(ring, v) for v in axis] for axis in doc["S"]
        ]
        psis = None
        if "psi" in doc:
            psis = [
                {element_from_json(ring, k): int(m) for k, m in axis.items()}
                if axis is not None
                else None
                for axis in doc["psi"]
            ]
        return MultisetGrid.build(ring, supports, psis)
    raise ParseError("grid document needs an 'axes' or 'S' entry")


def punctured_to_json(pgrid: PuncturedGrid) -> dict:
    doc = grid_to_json(pgrid.base)
    doc["E"] = [
        [element_to_json(pgrid.ring, u) for u in E] for E in pgrid.punctures
    ]
    return doc


def punctured_from_json(doc: Mapping, ring: Ring | None = None) -> PuncturedGrid:
    grid = grid_from_json(doc, ring)
    if "E" not in doc:
        raise ParseError("punctured grid document needs an 'E' entry")
    punctures = [
        [element_from_json(grid.ring, v) for v in axis] for axis in doc["E"]
    ]
    return PuncturedGrid.build(grid, punctures)


# -- vanishing specs ------------------------------------------------------------


def spec_to_json(spec: VanishingSpec) -> dict:
    return {
        "ring": str(spec.ring),
        "S": [
            [element_to_json(spec.ring, u) for u in axis] for axis in spec.axes
        ],
        "B": {
            "(" + ",".join(str(element_to_json(spec.ring, v)) for v in point) + ")": [
                list(vec) for vec in sorted(spec.B[point])
            ]
            for point in spec.grid_points()
        },
    }


def spec_from_json(doc: Mapping, ring: Ring | None = None) -> VanishingSpec:
    if ring is None:
        if "ring" not in doc:
            raise ParseError("spec document carries no ring")
        ring = parse_ring(doc["ring"])
    axes = [[element_from_json(ring, v) for v in axis] for axis in doc["S"]]
    B = {}
    for key, vecs in doc["B"].items():
        inner = key.strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ParseError(f"bad grid point key {key!r}")
        parts = [p for p in inner[1:-1].split(",") if p.strip() != ""]
        point = tuple(ring.parse_element(p) for p in parts)
        B[point] = {tuple(v) for v in vecs}
    return VanishingSpec.build(ring, axes, B)


# -- reduction outcomes and certificates ----------------------------------------


def family_to_json(family: MonicFamily) -> dict:
    return {
        _label_to_key(label): format_poly(g) for label, g, _ in family
    }


def family_from_json(doc: Mapping, ring: Ring, nvars: int) -> MonicFamily:
    labels = []
    members = []
    for key, text in doc.items():
        labels.append(_label_from_key(key))
        members.append(parse_poly(text, ring, nvars))
    return MonicFamily.build(members, labels=labels)


def outcome_to_json(outcome: ReductionOutcome, f: Poly) -> dict:
    return {
        "ring": str(f.ring),
        "nvars": f.nvars,
        "poly": format_poly(f),
        "basis": family_to_json(outcome.family),
        "quotients": {
            _label_to_key(label): format_poly(p)
            for label, p in zip(outcome.family.labels, outcome.quotients)
        },
        "remainder": format_poly(outcome.remainder),
        "checks": outcome.verify(f),
    }


def certificate_to_json(cert: Certificate) -> dict:
    doc = {
        "ring": str(cert.poly.ring),
        "nvars": cert.poly.nvars,
        "poly": format_poly(cert.poly),
        "basis": cert.kind,
        "t": cert.t,
        "basis_polys": family_to_json(cert.family),
        "quotients": {
            _label_to_key(label): format_poly(p)
            for label, p in zip(cert.family.labels, cert.quotients)
        },
        "remainder": format_poly(cert.remainder),
        "checks": {
            "identity": cert.identity_holds(),
            "support": cert.support_ok,
            "remainder_reduced": cert.remainder.is_zero(),
        },
        "degree_report": cert.degree_report,
    }
    return doc


def verify_certificate_json(doc: Mapping) -> dict:
    """Re-check a serialized certificate from the document alone.

    Reconstructs everything from text, then re-verifies the identity, the
    support containment, and remainder reducedness.  Works for both plain
    reduction outcomes and level or mixed certificates.
    """
    ring = parse_ring(doc["ring"])
    nvars = int(doc["nvars"])
    f = parse_poly(doc["poly"], ring, nvars)
    basis_doc = doc.get("basis_polys", doc.get("basis"))
    if not isinstance(basis_doc, Mapping):
        raise ParseError("certificate document carries no basis polynomials")
    family = family_from_json(basis_doc, ring, nvars)
    quotient_doc = doc["quotients"]
    quotients = []
    for label in family.labels:
        key = _label_to_key(label)
        if key not in quotient_doc:
            raise ParseError(f"missing quotient for basis member {key}")
        quotients.append(parse_poly(quotient_doc[key], ring, nvars))
    remainder = parse_poly(doc["remainder"], ring, nvars)
    outcome = ReductionOutcome(family, tuple(quotients), remainder)
    checks = outcome.verify(f)
    checks["valid"] = all(checks.values())
    return checks
