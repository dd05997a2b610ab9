"""Workspace files: named rings, modules, submodules, and subcategories.

The on-disk format is JSON with explicit integer lists; integers beyond the
64-bit range are written as decimal strings and accepted back in either
form.  Loading validates every name and every dimension, so a loaded
workspace is always internally consistent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .closure import DivisibleModule, Subcategory
from .modules import FPModule, Submodule
from .rings import Ring, ZZ, Zmod

_I64_MAX = 2**63 - 1
_I64_MIN = -(2**63)


def encode_int(x: int):
    """Plain number when it fits in 64 bits, decimal string otherwise."""
    return x if _I64_MIN <= x <= _I64_MAX else str(x)


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x, 10)
    raise ValueError(f"expected an integer or decimal string, got {x!r}")


def encode_json_value(value):
    """Recursively apply :func:`encode_int` so the document stays valid JSON."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return encode_int(value)
    if isinstance(value, float):
        raise ValueError("reports are exact; floats are not serializable")
    if isinstance(value, dict):
        return {k: encode_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_json_value(v) for v in value]
    raise ValueError(f"cannot serialize {type(value).__name__}")


def dumps_report(report: dict, pretty: bool = False) -> str:
    """Byte-deterministic JSON: canonical key order, fixed separators."""
    doc = encode_json_value(report)
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def parse_ring(text: str) -> Ring:
    if text == "Z":
        return ZZ
    if text.startswith("Zmod:"):
        return Zmod(int(text.split(":", 1)[1]))
    raise ValueError(f"unknown ring {text!r}; use \"Z\" or \"Zmod:<n>\"")


def ring_name(ring: Ring) -> str:
    return f"Zmod:{ring.modulus}" if ring.is_modular else "Z"


@dataclass
class Workspace:
    """Named definitions resolved into live objects.

    Name structure (parent names, subcategory member names) is tracked so
    that serialization reproduces the document it was loaded from:
    load -> serialize -> load is the identity.
    """

    ring: Ring
    modules: dict[str, FPModule] = field(default_factory=dict)
    submodules: dict[str, Submodule] = field(default_factory=dict)
    subcategories: dict[str, Subcategory] = field(default_factory=dict)
    submodule_parents: dict[str, str] = field(default_factory=dict)
    subcategory_members: dict[str, tuple[list[str], list[str]]] = field(
        default_factory=dict
    )

    def module(self, name: str) -> FPModule:
        if name not in self.modules:
            raise ValueError(f"unknown module {name!r}")
        return self.modules[name]

    def submodule(self, name: str) -> Submodule:
        if name not in self.submodules:
            raise ValueError(f"unknown submodule {name!r}")
        return self.submodules[name]

    def subcategory(self, name: str) -> Subcategory:
        if name not in self.subcategories:
            raise ValueError(f"unknown subcategory {name!r}")
        return self.subcategories[name]

    # -- construction -------------------------------------------------------

    def add_module(self, name: str, module: FPModule) -> None:
        if module.ring != self.ring:
            raise ValueError(f"module {name!r} lives over {module.ring}, not {self.ring}")
        self.modules[name] = module

    def add_submodule(self, name: str, parent_name: str, gens) -> None:
        parent = self.module(parent_name)
        self.submodules[name] = Submodule(parent, gens)
        self.submodule_parents[name] = parent_name

    def add_subcategory(
        self, name: str, finite_names: list[str], divisible: list[str]
    ) -> None:
        finite = [self.module(m) for m in finite_names]
        if self.ring.is_modular:
            from .homs import is_injective_module

            for mname, obj in zip(finite_names, finite):
                if not is_injective_module(obj):
                    raise ValueError(
                        f"module {mname!r} is not injective over {self.ring} "
                        f"(Baer criterion fails)"
                    )
        tags = [DivisibleModule(d) for d in divisible]
        self.subcategories[name] = Subcategory(self.ring, finite, tags)
        self.subcategory_members[name] = (list(finite_names), list(divisible))


def _decode_columns(value, what: str) -> list[tuple[int, ...]]:
    if not isinstance(value, list):
        raise ValueError(f"{what} must be a list of integer columns")
    return [tuple(decode_int(x) for x in col) for col in value]


def load_workspace(doc: dict) -> Workspace:
    if not isinstance(doc, dict):
        raise ValueError("workspace document must be a JSON object")
    ring = parse_ring(doc.get("ring", "Z"))
    ws = Workspace(ring=ring)

    for name, spec in (doc.get("modules") or {}).items():
        gens = spec.get("generators")
        if not isinstance(gens, int) or isinstance(gens, bool) or gens < 0:
            raise ValueError(
                f"module {name!r}: generators must be a nonnegative integer"
            )
        cols = _decode_columns(spec.get("relations", []), f"module {name!r} relations")
        for c in cols:
            if len(c) != gens:
                raise ValueError(
                    f"module {name!r}: relation column of length {len(c)}, "
                    f"expected {gens}"
                )
        ws.add_module(name, FPModule(ring, gens, cols))

    for name, spec in (doc.get("submodules") or {}).items():
        parent_name = spec.get("parent")
        if parent_name not in ws.modules:
            raise ValueError(
                f"submodule {name!r}: unknown parent module {parent_name!r}"
            )
        parent = ws.modules[parent_name]
        cols = _decode_columns(spec.get("gens", []), f"submodule {name!r} gens")
        for c in cols:
            if len(c) != parent.n_gens:
                raise ValueError(
                    f"submodule {name!r}: generator column of length {len(c)}, "
                    f"expected {parent.n_gens}"
                )
        ws.add_submodule(name, parent_name, cols)

    for name, spec in (doc.get("subcategories") or {}).items():
        finite_names = list(spec.get("finite", []))
        for mname in finite_names:
            if mname not in ws.modules:
                raise ValueError(f"subcategory {name!r}: unknown module {mname!r}")
        divisible = list(spec.get("divisible", []))
        for tag in divisible:
            if tag not in ("Q", "QmodZ"):
                raise ValueError(
                    f"subcategory {name!r}: unknown divisible object {tag!r}; "
                    f"use \"Q\" or \"QmodZ\""
                )
        try:
            ws.add_subcategory(name, finite_names, divisible)
        except ValueError as exc:
            raise ValueError(f"subcategory {name!r}: {exc}") from None

    return ws


def load_workspace_file(path: str) -> Workspace:
    with open(path, "r", encoding="utf-8") as fh:
        return load_workspace(json.load(fh))


def serialize_workspace(ws: Workspace) -> dict:
    return {
        "ring": ring_name(ws.ring),
        "modules": {
            name: {
                "generators": m.n_gens,
                "relations": [
                    [encode_int(x) for x in c] for c in m.relations.columns()
                ],
            }
            for name, m in ws.modules.items()
        },
        "submodules": {
            name: {
                "parent": ws.submodule_parents[name],
                "gens": [[encode_int(x) for x in c] for c in s.gens.columns()],
            }
            for name, s in ws.submodules.items()
        },
        "subcategories": {
            name: {
                "finite": list(ws.subcategory_members[name][0]),
                "divisible": list(ws.subcategory_members[name][1]),
            }
            for name in ws.subcategories
        },
    }
