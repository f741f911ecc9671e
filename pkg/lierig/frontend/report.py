"""
Report payloads and their JSON / text rendering.

Payloads are plain dicts built in a fixed key order; rationals are written as
reduced ``"p/q"`` strings (``"3"`` for integers), never floats, so the same
input always gives byte-identical JSON.
"""

import json
from fractions import Fraction
from typing import Optional

from lierig.frontend.dsl import AlgebraDocument, format_vector
from lierig.lie.cohomology import full_report
from lierig.lie.core import is_solvable, jacobi_violations
from lierig.lie.derivations import (
    NonConjugacyCertificate,
    is_real_diagonalizable,
    torus_failure,
)
from lierig.lie.structure import Verdict, fingerprint, nilradical


def _encode(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"cannot encode {type(value).__name__}")


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def to_json(payload: dict) -> str:
    return json.dumps(_plain(payload), indent=2, default=_encode)


def to_text(payload: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(to_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(to_text(item, indent + 1))
                lines.append("")
        elif isinstance(value, (list, tuple)):
            lines.append(f"{pad}{key}: " + ", ".join(str(_plain(v)) for v in value))
        elif value is None:
            lines.append(f"{pad}{key}: -")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines).rstrip("\n")


def render(payload: dict, fmt: str) -> str:
    return to_json(payload) if fmt == "json" else to_text(payload)


def check_payload(doc: AlgebraDocument) -> dict:
    g = doc.constants()
    violations = jacobi_violations(g)
    return {
        "algebra": doc.name,
        "dim": doc.dim,
        "lie": not violations,
        "violations": [
            {
                "triple": [doc.labels[i], doc.labels[j], doc.labels[k]],
                "jacobiator": format_vector(doc.labels, vec),
            }
            for i, j, k, vec in violations
        ],
    }


def h2_payload(doc: AlgebraDocument) -> dict:
    report = full_report(doc.constants())
    return {"algebra": doc.name, "dim": doc.dim, "h2": report.h2, "rigid": report.h2 == 0}


def full_payload(doc: AlgebraDocument) -> dict:
    g = doc.constants()
    report = full_report(g)
    solvable = is_solvable(g)
    return {
        "algebra": doc.name,
        "dim": doc.dim,
        "rigid": report.h2 == 0,
        "solvable": solvable,
        "cohomology": report.as_dict(),
        "fingerprint": fingerprint(g).as_dict() if solvable else None,
    }


def nilradical_payload(doc: AlgebraDocument) -> dict:
    nil = nilradical(doc.constants())
    return {
        "algebra": doc.name,
        "dim": doc.dim,
        "nilradical_dim": nil.dim,
        "basis": [format_vector(doc.labels, v) for v in nil.basis],
        "coordinates": [list(v) for v in nil.basis],
    }


def torus_payload(doc: AlgebraDocument, torus_name: str, matrices) -> dict:
    g = doc.constants()
    failure = torus_failure(g, matrices)
    payload = {
        "algebra": doc.name,
        "torus": torus_name,
        "rank": len(matrices),
        "is_torus": failure is None,
        "failed_check": failure[0] if failure else None,
        "detail": failure[2] if failure else None,
        "split": None,
    }
    if failure is None:
        payload["split"] = all(is_real_diagonalizable(d) for d in matrices)
    return payload


def certificate_payload(doc: AlgebraDocument, t1: str, t2: str, cert: Optional[NonConjugacyCertificate]) -> dict:
    payload = {"algebra": doc.name, "tori": [t1, t2], "certificate": None, "verdict": "inconclusive"}
    if cert is not None:
        payload["verdict"] = "not conjugate"
        payload["certificate"] = {
            "witness_torus": t1 if cert.witness_index == 1 else t2,
            "witness_element": list(cert.witness_element),
            "witness_matrix": [list(cert.witness_matrix.row(i)) for i in range(cert.witness_matrix.rows)],
            "real_roots": cert.real_roots,
            "degree": cert.degree,
            "reason": cert.reason,
        }
    return payload


def compare_payload(a: AlgebraDocument, b: AlgebraDocument, verdict: Verdict) -> dict:
    return {
        "left": a.name,
        "right": b.name,
        "verdict": verdict.kind,
        "field": verdict.field,
        "left_value": _plain(verdict.left),
        "right_value": _plain(verdict.right),
    }
