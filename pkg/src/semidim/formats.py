"""JSON file formats for semirings, products and campaigns.

Semiring::

    {"order": q, "labels": [...], "add": [[...]], "mul": [[...]]}

Product::

    {"factors": [<semiring object> | "catalog:NAME" | "file:PATH", ...]}

Campaign: a list of product objects, or ``{"products": [...]}``.
Relative ``file:`` paths resolve against the directory of the referring file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import SemiringFormatError
from .product import ProductSemiring
from .semiring import SemiringTable, catalog


def _read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SemiringFormatError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SemiringFormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def semiring_from_dict(obj: Any, name: str | None = None) -> SemiringTable:
    if not isinstance(obj, dict):
        raise SemiringFormatError("semiring: expected an object with order/add/mul")
    for key in ("order", "add", "mul"):
        if key not in obj:
            raise SemiringFormatError(f"semiring: missing field {key!r}")
    unknown = set(obj) - {"order", "labels", "add", "mul"}
    if unknown:
        raise SemiringFormatError(f"semiring: unknown field(s) {sorted(unknown)}")
    q = obj["order"]
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        raise SemiringFormatError(f"order: expected an integer >= 2, got {q!r}")
    if not isinstance(obj["add"], list) or len(obj["add"]) != q:
        got = len(obj["add"]) if isinstance(obj["add"], list) else type(obj["add"]).__name__
        raise SemiringFormatError(f"add: has {got} rows, expected {q}")
    labels = obj.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != q):
        raise SemiringFormatError(f"labels: expected a list of {q} strings")
    t = SemiringTable(obj["add"], obj["mul"], labels, name)
    return t.normalized()


def semiring_to_dict(t: SemiringTable) -> dict:
    return t.to_dict()


def dumps_semiring(t: SemiringTable) -> str:
    rows = lambda tab: "[\n" + ",\n".join("    " + json.dumps(r) for r in tab.tolist()) + "\n  ]"
    return (
        "{\n"
        f'  "order": {t.order},\n'
        f'  "labels": {json.dumps(list(t.labels))},\n'
        f'  "add": {rows(t.add)},\n'
        f'  "mul": {rows(t.mul)}\n'
        "}\n"
    )


def load_semiring(path: str | Path) -> SemiringTable:
    path = Path(path)
    return semiring_from_dict(_read_json(path), path.stem)


def resolve_factor(ref: Any, base_dir: Path | None = None) -> SemiringTable:
    if isinstance(ref, dict):
        return semiring_from_dict(ref, "inline")
    if isinstance(ref, str):
        if ref.startswith("catalog:"):
            return catalog(ref[len("catalog:"):])
        if ref.startswith("file:"):
            p = Path(ref[len("file:"):])
            if base_dir is not None and not p.is_absolute():
                p = base_dir / p
            return load_semiring(p)
    raise SemiringFormatError(f"factor reference {ref!r}: expected an object, 'catalog:NAME' or 'file:PATH'")


def product_from_dict(obj: Any, base_dir: Path | None = None) -> ProductSemiring:
    if isinstance(obj, list):
        obj = {"factors": obj}
    if not isinstance(obj, dict) or "factors" not in obj:
        raise SemiringFormatError("product: expected an object with a 'factors' list")
    refs = obj["factors"]
    if not isinstance(refs, list) or not refs:
        raise SemiringFormatError("product: 'factors' must be a non-empty list")
    factors = []
    for i, ref in enumerate(refs):
        try:
            factors.append(resolve_factor(ref, base_dir))
        except SemiringFormatError as exc:
            raise SemiringFormatError(f"factors[{i}]: {exc}") from exc
    return ProductSemiring(factors)


def product_to_dict(p: ProductSemiring) -> dict:
    return {"factors": [_factor_ref(f) for f in p.factors]}


def _factor_ref(t: SemiringTable):
    if t.name:
        try:
            if catalog(t.name) == t:
                return f"catalog:{t.name}"
        except SemiringFormatError:
            pass
    return t.to_dict()


def load_product(path: str | Path) -> ProductSemiring:
    path = Path(path)
    return product_from_dict(_read_json(path), path.parent)


def load_campaign(path: str | Path) -> list[ProductSemiring]:
    path = Path(path)
    obj = _read_json(path)
    if isinstance(obj, dict) and "products" in obj:
        obj = obj["products"]
    if not isinstance(obj, list):
        raise SemiringFormatError(f"{path}: campaign must be a list of products")
    out = []
    for i, entry in enumerate(obj):
        try:
            out.append(product_from_dict(entry, path.parent))
        except SemiringFormatError as exc:
            raise SemiringFormatError(f"{path}: products[{i}]: {exc}") from exc
    return out


def load_target(target: str) -> SemiringTable | ProductSemiring:
    """Resolve a command-line operand.

    ``catalog:NAME`` gives one table, ``catalog:A,B,...`` a product of catalog
    entries; anything else is a path to a semiring or product file.
    """
    if target.startswith("catalog:"):
        names = [n.removeprefix("catalog:") for n in target[len("catalog:"):].split(",")]
        tables = [catalog(n) for n in names]
        return tables[0] if len(tables) == 1 else ProductSemiring(tables)
    path = Path(target)
    obj = _read_json(path)
    if isinstance(obj, dict) and "factors" in obj:
        return product_from_dict(obj, path.parent)
    return semiring_from_dict(obj, path.stem)
