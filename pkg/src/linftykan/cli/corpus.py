"""Bundled example documents and document loading."""
from __future__ import annotations

import json
import os
from pathlib import Path

from ..forms import PolyForm
from ..linf import (LInftyAlgebra, abelian, build_end_example, contractible, heisenberg,
                    jacobi_counterexample, string_lie2, su2)
from ..gradedlin import parse_scalar

__all__ = ["corpus_dir", "bundled_corpus", "build_corpus", "write_corpus", "load_document",
           "dump_json", "MalformedInputError"]

PACKAGE_CORPUS = Path(__file__).resolve().parent.parent / "corpus"


class MalformedInputError(ValueError):
    pass


def corpus_dir() -> Path:
    env = os.environ.get("LINFTYKAN_CORPUS_DIR")
    return Path(env) if env else PACKAGE_CORPUS


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _named(L: LInftyAlgebra, name: str) -> dict:
    doc = L.to_json()
    doc["name"] = name
    return doc


def _h3_example() -> dict:
    m = 2
    forms = {"0:0": PolyForm.dvar(m, 1), "0:1": PolyForm.dvar(m, 2),
             "0:2": PolyForm.var(m, 1).wedge(PolyForm.dvar(m, 2))}
    return {"schema": 1, "kind": "mc", "algebra": "h3", "m": m,
            "forms": {k: f.to_json() for k, f in forms.items()}}


def build_corpus() -> dict:
    """name -> document, generated from the library constructors."""
    from ..simpset import (cocycle_2group, cyclic_group, find_collapse, k_g1, standard_simplex)
    from ..stringmod import tetra_to_json

    docs = {
        "abelian": _named(abelian({1: 1}), "abelian"),
        "abelian-2": _named(abelian({0: 1, 1: 2}), "abelian-2"),
        "contractible": _named(contractible(1, 0), "contractible"),
        "su2": _named(su2(), "su2"),
        "h3": _named(heisenberg(), "h3"),
        "str-su2": _named(string_lie2(), "str-su2"),
        "end-1-sqrt2": _named(build_end_example(1, parse_scalar("sqrt2")), "end-1-sqrt2"),
        "jacobi-counterexample": _named(jacobi_counterexample(), "jacobi-counterexample"),
        "h3-mc-example": _h3_example(),
    }
    kz2 = k_g1(cyclic_group(2), N=3, name="K(Z/2,1)")
    docs["k-z2-1"] = kz2.to_json()
    docs["delta-1"] = standard_simplex(1, N=3).to_json()
    docs["delta-1"]["name"] = "Delta[1]"
    z2 = cyclic_group(2)
    omega = lambda a, b, c: a * b * c
    docs["two-group-z2-twisted"] = cocycle_2group(z2, 2, omega, name="Z/2 with twisted associator").to_json()
    for name, n, gens in [("horn-2-1", 2, [[0, 1], [1, 2]]), ("boundary-2", 2, [[0, 1], [0, 2], [1, 2]]),
                          ("horn-3-1", 3, [[0, 1, 2], [1, 2, 3], [0, 1, 3]]),
                          ("boundary-3", 3, [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])]:
        cert = find_collapse(gens)
        doc = {"schema": 1, "kind": "subcomplex", "name": name, "n": n, "generators": gens,
               "collapse": None if cert is None else
               {"start": cert["start"], "steps": [[list(s), j] for s, j in cert["steps"]]}}
        docs[name] = doc
    docs["tetra-degree1"] = tetra_to_json("degree1", [1, 0, 0, 0])
    return docs


def write_corpus(directory=None) -> list:
    directory = Path(directory) if directory else PACKAGE_CORPUS
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in sorted(build_corpus().items()):
        path = directory / f"{name}.json"
        path.write_text(dump_json(doc), encoding="utf-8")
        written.append(path)
    return written


def bundled_corpus() -> dict:
    """name -> document for every JSON file in the corpus directory."""
    out = {}
    for path in sorted(corpus_dir().glob("*.json")):
        out[path.stem] = json.loads(path.read_text(encoding="utf-8"))
    return out


def load_document(ref: str) -> dict:
    """A JSON document from a file path, or a corpus entry by name."""
    path = Path(ref)
    if not path.exists():
        alt = corpus_dir() / f"{ref}.json"
        if not alt.exists():
            raise MalformedInputError(f"no file or corpus entry named {ref!r}")
        path = alt
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"{ref}: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInputError(f"{ref}: expected a JSON object")
    if "schema" in doc and doc["schema"] != 1:
        raise MalformedInputError(f"{ref}: unsupported schema {doc['schema']!r}")
    return doc
