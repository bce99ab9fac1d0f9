"""JSON descriptors for fields and forms, canonical text, and content hashes.

Field descriptor: {"base_vars": [...], "levels": [{"theta": <element-expr>,
"replaced_index": n}]}.  An element-expr is a nested {"u":..., "v":...} pair
bottoming out in rational-function text.  Form: {"field": <descriptor>,
"coeffs": [<element-expr>...]}.  Deserialization rejects unknown keys and
re-derives each replacement index, refusing descriptors that disagree with
the deterministic rule.
"""

from __future__ import annotations

import hashlib
import json

from .errors import ParseError
from .forms import QuasilinearForm, form
from .towers import (
    Caps,
    DEFAULT_CAPS,
    FieldTower,
    elem_from_expr,
    elem_to_expr,
    make_base_field,
)


def field_to_dict(K: FieldTower) -> dict:
    base = K.base_vars
    return {
        "base_vars": list(base),
        "levels": [
            {
                "theta": elem_to_expr(lv.theta, base),
                "replaced_index": lv.replaced_index,
            }
            for lv in K.levels
        ],
    }


def field_from_dict(obj, caps: Caps = DEFAULT_CAPS) -> FieldTower:
    _require_keys(obj, {"base_vars", "levels"}, "field descriptor")
    base_vars = obj["base_vars"]
    if not isinstance(base_vars, list) or not all(isinstance(v, str) for v in base_vars):
        raise ParseError("base_vars must be a list of names")
    K = make_base_field(base_vars, caps)
    for entry in obj["levels"]:
        _require_keys(entry, {"theta", "replaced_index"}, "tower level")
        theta = elem_from_expr(entry["theta"], K)
        K = K.adjoin_sqrt(theta)
        if K.levels[-1].replaced_index != entry["replaced_index"]:
            raise ParseError(
                "replaced_index disagrees with the deterministic replacement rule"
            )
    return K


def form_to_dict(q: QuasilinearForm) -> dict:
    names = q.field.base_vars
    return {
        "field": field_to_dict(q.field),
        "coeffs": [elem_to_expr(c, names) for c in q.coeffs],
    }


def form_from_dict(obj, caps: Caps = DEFAULT_CAPS, field: FieldTower = None) -> QuasilinearForm:
    _require_keys(obj, {"field", "coeffs"}, "form")
    K = field if field is not None else field_from_dict(obj["field"], caps)
    return form(K, (elem_from_expr(c, K) for c in obj["coeffs"]))


def _require_keys(obj, keys, what):
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be an object")
    if set(obj) != keys:
        unknown = set(obj) - keys
        missing = keys - set(obj)
        parts = []
        if unknown:
            parts.append(f"unknown keys {sorted(unknown)}")
        if missing:
            parts.append(f"missing keys {sorted(missing)}")
        raise ParseError(f"{what}: " + ", ".join(parts))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def content_hash(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()
