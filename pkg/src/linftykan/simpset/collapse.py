"""Collapsibility certificates for subcomplexes of a standard simplex.

A step fills a horn: it adds a simplex sigma of dimension k >= 1 together
with its face opposite vertex j, provided every other face is present and
neither sigma nor that face is.  A certificate is a sequence of such steps
growing a single vertex into the whole subcomplex.
"""
from __future__ import annotations

import itertools

__all__ = ["closure", "find_collapse", "verify_collapse"]


def closure(generators) -> frozenset:
    """All nonempty faces of the given vertex sets, as sorted tuples."""
    out = set()
    for g in generators:
        g = tuple(sorted(set(g)))
        for r in range(1, len(g) + 1):
            out.update(itertools.combinations(g, r))
    return frozenset(out)


def _moves(current: frozenset, target: frozenset):
    for s in sorted(target - current, key=lambda t: (len(t), t)):
        if len(s) < 2:
            continue
        faces = [s[:i] + s[i + 1:] for i in range(len(s))]
        missing = [i for i, f in enumerate(faces) if f not in current]
        if len(missing) == 1:
            yield s, missing[0]


def find_collapse(generators, start=None):
    """Ordered list of (simplex, j) horn fills, or None when no order works.

    ``generators`` are the maximal vertex sets of the subcomplex.  The search
    is exhaustive over states (subcomplexes already built), memoizing dead
    ends, so None is a proof of non-collapsibility from every vertex.
    """
    target = closure(generators)
    vertices = sorted(v for (v,) in (s for s in target if len(s) == 1))
    starts = vertices if start is None else [start]
    dead = set()

    def search(cur, path):
        if cur == target:
            return list(path)
        if cur in dead:
            return None
        for s, j in _moves(cur, target):
            nxt = cur | {s, s[:j] + s[j + 1:]}
            path.append((s, j))
            res = search(nxt, path)
            if res is not None:
                return res
            path.pop()
        dead.add(cur)
        return None

    for v in starts:
        res = search(frozenset({(v,)}), [])
        if res is not None:
            return {"start": v, "steps": res}
    return None


def verify_collapse(generators, certificate) -> bool:
    target = closure(generators)
    cur = {(certificate["start"],)}
    for s, j in certificate["steps"]:
        s = tuple(s)
        face = s[:j] + s[j + 1:]
        others = [s[:i] + s[i + 1:] for i in range(len(s)) if i != j]
        if s in cur or face in cur or not all(f in cur for f in others):
            return False
        cur |= {s, face}
    return frozenset(cur) == target
