"""Canonical JSON serialization for codes, matrices and certificates.

All documents are emitted with sorted keys, compact separators and a
trailing newline, so loading a canonical file and re-serializing it is
byte-identical.  Only integers, strings, booleans, nulls, arrays and
objects appear -- never floats.

Code file layout::

    {"field": {"p": ..., "m": ..., "modulus": [...]},
     "points": [[digits], ...],
     "exponents": [int, ...],
     "family": "...",
     "params": {...},
     "certificate": {...}}        (optional)

Field elements serialize as little-endian digit arrays.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Any, Optional

from .certify import Certificate
from .errors import FormatError, InvalidParamsError, NotPrimeError
from .evalcode import EvalCode, EvalSet, ExponentSet
from .field import FieldContext, FieldElement, make_field
from .matrix import MatrixFq, matrix_from_rows


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see a
    partial document."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".mdsforge-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# Pieces


def field_to_obj(ctx: FieldContext) -> dict:
    return {"p": ctx.p, "m": ctx.m, "modulus": list(ctx.modulus)}


def field_from_obj(obj: Any) -> FieldContext:
    """Rebuild a field from {p, m, modulus?}.

    The modulus key is optional (the canonical one is implied), but when
    present it must match: this package never writes non-canonical moduli,
    and silently honoring a different one would change element identity.
    """
    try:
        p, m = obj["p"], obj["m"]
    except (TypeError, KeyError) as exc:
        raise FormatError(f"field block missing key: {exc}") from exc
    if not (isinstance(p, int) and isinstance(m, int)) or isinstance(p, bool) or isinstance(m, bool):
        raise FormatError("field block has wrong types")
    try:
        ctx = make_field(p, m)
    except (ValueError, NotPrimeError) as exc:
        raise FormatError(f"invalid field block: {exc}") from exc
    modulus = obj.get("modulus")
    if modulus is not None:
        if not isinstance(modulus, list) or list(ctx.modulus) != modulus:
            raise FormatError(
                f"modulus {modulus!r} is not the canonical modulus for GF({p}^{m})"
            )
    return ctx


def element_to_obj(a: FieldElement) -> list[int]:
    return list(a)


def element_from_obj(ctx: FieldContext, obj: Any) -> FieldElement:
    """Accept a digit array, or a bare int meaning a prime-subfield value."""
    if isinstance(obj, bool):
        raise FormatError("booleans are not field elements")
    if isinstance(obj, int):
        return ctx.scalar(obj)
    if isinstance(obj, list) and all(isinstance(d, int) and not isinstance(d, bool) for d in obj):
        if len(obj) != ctx.m:
            raise FormatError(f"element needs {ctx.m} digits, got {len(obj)}")
        if not all(0 <= d < ctx.p for d in obj):
            raise FormatError(f"digits must lie in [0, {ctx.p}): {obj!r}")
        return ctx.element(obj)
    raise FormatError(f"not a field element: {obj!r}")


# ---------------------------------------------------------------------------
# Code files


def code_to_obj(code: EvalCode, certificate: Optional[Certificate] = None) -> dict:
    obj = {
        "field": field_to_obj(code.ctx),
        "points": [element_to_obj(t) for t in code.points.points],
        "exponents": list(code.exponents.exps),
        "family": code.family,
        "params": dict(code.params),
    }
    if certificate is not None:
        obj["certificate"] = certificate_to_obj(certificate)
    return obj


def code_from_obj(obj: Any) -> tuple[EvalCode, Optional[dict]]:
    """Parse a code document; returns the code and any embedded certificate
    block (unvalidated -- verification recomputes and compares)."""
    if not isinstance(obj, dict):
        raise FormatError("code document must be a JSON object")
    for key in ("field", "points", "exponents"):
        if key not in obj:
            raise FormatError(f"code document missing {key!r}")
    ctx = field_from_obj(obj["field"])
    points_raw = obj["points"]
    if not isinstance(points_raw, list) or not points_raw:
        raise FormatError("points must be a nonempty array")
    try:
        points = EvalSet(tuple(element_from_obj(ctx, t) for t in points_raw))
    except InvalidParamsError as exc:
        raise FormatError(str(exc)) from exc
    exps_raw = obj["exponents"]
    if not isinstance(exps_raw, list) or not all(
        isinstance(e, int) and not isinstance(e, bool) for e in exps_raw
    ):
        raise FormatError("exponents must be an array of integers")
    try:
        exponents = ExponentSet(tuple(exps_raw))
    except InvalidParamsError as exc:
        raise FormatError(str(exc)) from exc
    family = obj.get("family", "custom")
    if not isinstance(family, str):
        raise FormatError("family must be a string")
    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise FormatError("params must be an object")
    cert = obj.get("certificate")
    if cert is not None and not isinstance(cert, dict):
        raise FormatError("certificate must be an object")
    return EvalCode(ctx, points, exponents, family, params), cert


def load_code(path: str) -> tuple[EvalCode, Optional[dict]]:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    return code_from_obj(obj)


# ---------------------------------------------------------------------------
# Matrices and certificates


def matrix_to_obj(mat: MatrixFq) -> dict:
    return {
        "rows": mat.rows,
        "cols": mat.cols,
        "entries": [[element_to_obj(x) for x in row] for row in mat.entries],
    }


def matrix_from_obj(ctx: FieldContext, obj: Any) -> MatrixFq:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (TypeError, KeyError) as exc:
        raise FormatError(f"matrix block missing key: {exc}") from exc
    if not isinstance(entries, list) or len(entries) != rows:
        raise FormatError("matrix entries do not match declared row count")
    parsed = []
    for row in entries:
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError("matrix entries do not match declared column count")
        parsed.append(tuple(element_from_obj(ctx, x) for x in row))
    return matrix_from_rows(ctx, parsed)


def certificate_to_obj(cert: Certificate) -> dict:
    return {
        "n": cert.n,
        "k": cert.k,
        "mds": cert.is_mds,
        "witness": list(cert.failing_columns) if cert.failing_columns is not None else None,
        "min_distance": cert.min_distance,
        "schur_dim": cert.schur_dim,
        "verdict": cert.verdict,
    }
