"""JSON interchange for matrices, lattices and witnesses.

Integers are written as decimal strings so arbitrarily large entries
survive a round trip through any JSON reader.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .lattices import DnLattice
from .linalg import IntMatrix
from .witnesses import IsoWitness


def matrix_to_dict(m: IntMatrix) -> dict[str, Any]:
    return {"rows": m.rows, "cols": m.cols, "entries": [str(x) for x in m.entries]}


def matrix_from_dict(d: dict[str, Any]) -> IntMatrix:
    return IntMatrix(int(d["rows"]), int(d["cols"]), tuple(int(x) for x in d["entries"]))


def lattice_to_dict(l: DnLattice) -> dict[str, Any]:
    return {
        "n": l.n,
        "rank": l.rank,
        "label": l.label,
        "basis": list(l.basis),
        "sigma": matrix_to_dict(l.sigma),
        "tau": matrix_to_dict(l.tau),
    }


def lattice_from_dict(d: dict[str, Any]) -> DnLattice:
    l = DnLattice(int(d["n"]), matrix_from_dict(d["sigma"]), matrix_from_dict(d["tau"]),
                  d.get("label", ""), tuple(d.get("basis", ())))
    if l.rank != int(d["rank"]):
        raise ValueError(f"declared rank {d['rank']} but matrices have size {l.rank}")
    return l


def witness_to_dict(w: IsoWitness, provenance: str | None = None) -> dict[str, Any]:
    return {
        "source": lattice_to_dict(w.map.src),
        "target": lattice_to_dict(w.map.dst),
        "matrix": matrix_to_dict(w.map.mat),
        "provenance": w.provenance if provenance is None else provenance,
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def save_lattice(l: DnLattice, path: str | Path) -> None:
    Path(path).write_text(dumps(lattice_to_dict(l)), encoding="utf-8")


def load_lattice(path: str | Path) -> DnLattice:
    return lattice_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
