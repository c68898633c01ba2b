"""Finite coherent 2-groups, their nerves, and the inverse construction from a Kan set.

Conventions: an arrow f has ``src[f]`` and ``tgt[f]``; ``compose(g, f)`` is
g after f; the associator alpha(a, b, c) is an arrow a(bc) -> (ab)c.  Units
are strict and the associator is normalized, which keeps the nerve's
degeneracies simplicial.
"""
from __future__ import annotations

import itertools

from .core import FinSimplicialSet, NotKanError
from .examples import FiniteGroup, cyclic_group

__all__ = ["CoherentTwoGroup", "PentagonViolationError", "NonUniqueFillerError", "nerve_2group",
           "two_group_from_kan", "two_group_equivalence", "nerve_round_trip_maps",
           "crossed_module_2group", "cocycle_2group", "trivial_2group"]


class PentagonViolationError(ValueError):
    pass


class NonUniqueFillerError(ValueError):
    pass


class CoherentTwoGroup:
    def __init__(self, objects, unit, mu0, arrows, src, tgt, compose, ident, mu1, assoc,
                 name: str = ""):
        self.objects = list(objects)
        self.unit = unit
        self.mu0 = [list(r) for r in mu0]
        self.arrows = list(arrows)
        self.src = list(src)
        self.tgt = list(tgt)
        self.comp = dict(compose)          # (g, f) -> g o f
        self.ident = list(ident)
        self.mu1 = [list(r) for r in mu1]
        self.assoc = dict(assoc)           # (a, b, c) -> arrow a(bc) -> (ab)c
        self.name = name
        self.hom = {}
        for f in range(len(self.arrows)):
            self.hom.setdefault((self.src[f], self.tgt[f]), []).append(f)
        self._inv = None

    @property
    def n_objects(self):
        return len(self.objects)

    @property
    def n_arrows(self):
        return len(self.arrows)

    def compose(self, g, f):
        return self.comp[(g, f)]

    def inverse(self, f):
        if self._inv is None:
            self._inv = {}
            for h in range(self.n_arrows):
                for g in self.hom.get((self.tgt[h], self.src[h]), []):
                    if self.comp.get((g, h)) == self.ident[self.src[h]]:
                        self._inv[h] = g
                        break
        return self._inv[f]

    def arrows_between(self, a, b):
        return self.hom.get((a, b), [])

    # validation ------------------------------------------------------------
    def validate(self):
        O, A = range(self.n_objects), range(self.n_arrows)
        e = self.unit
        for f in A:
            s, t = self.src[f], self.tgt[f]
            if self.comp[(f, self.ident[s])] != f or self.comp[(self.ident[t], f)] != f:
                raise ValueError("identity arrows are not units for composition")
            self.inverse(f)
        for f in A:
            for g in A:
                if self.src[g] != self.tgt[f]:
                    continue
                gf = self.comp[(g, f)]
                if (self.src[gf], self.tgt[gf]) != (self.src[f], self.tgt[g]):
                    raise ValueError("composite has wrong endpoints")
                for h in A:
                    if self.src[h] == self.tgt[g]:
                        if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                            raise ValueError("composition is not associative")
        for a in O:
            if self.mu0[e][a] != a or self.mu0[a][e] != a:
                raise ValueError("unit is not strict")
            if not any(self.arrows_between(self.mu0[a][b], e) for b in O):
                raise ValueError(f"object {self.objects[a]} has no weak inverse")
        for f in A:
            for g in A:
                p = self.mu1[f][g]
                if (self.src[p], self.tgt[p]) != (self.mu0[self.src[f]][self.src[g]],
                                                  self.mu0[self.tgt[f]][self.tgt[g]]):
                    raise ValueError("mu1 has wrong endpoints")
            if self.mu1[self.ident[e]][f] != f or self.mu1[f][self.ident[e]] != f:
                raise ValueError("unit arrow is not strict for mu1")
        for a in O:
            for b in O:
                if self.mu1[self.ident[a]][self.ident[b]] != self.ident[self.mu0[a][b]]:
                    raise ValueError("mu1 does not preserve identities")
        for f, f2 in itertools.product(A, A):
            if self.src[f2] != self.tgt[f]:
                continue
            for g, g2 in itertools.product(A, A):
                if self.src[g2] != self.tgt[g]:
                    continue
                lhs = self.mu1[self.comp[(f2, f)]][self.comp[(g2, g)]]
                rhs = self.comp[(self.mu1[f2][g2], self.mu1[f][g])]
                if lhs != rhs:
                    raise ValueError("mu1 violates the interchange law")
        for a, b, c in itertools.product(O, O, O):
            al = self.assoc[(a, b, c)]
            if (self.src[al], self.tgt[al]) != (self.mu0[a][self.mu0[b][c]],
                                                self.mu0[self.mu0[a][b]][c]):
                raise ValueError("associator has wrong endpoints")
            if e in (a, b, c) and al != self.ident[self.src[al]]:
                raise ValueError("associator is not normalized")
        for f, g, h in itertools.product(A, A, A):
            a, b, c = self.src[f], self.src[g], self.src[h]
            a2, b2, c2 = self.tgt[f], self.tgt[g], self.tgt[h]
            lhs = self.comp[(self.assoc[(a2, b2, c2)], self.mu1[f][self.mu1[g][h]])]
            rhs = self.comp[(self.mu1[self.mu1[f][g]][h], self.assoc[(a, b, c)])]
            if lhs != rhs:
                raise ValueError("associator is not natural")
        self.check_pentagon()
        return True

    def check_pentagon(self):
        O = range(self.n_objects)
        m, I = self.mu0, self.ident
        for a, b, c, d in itertools.product(O, O, O, O):
            p1 = self.comp[(self.assoc[(m[a][b], c, d)], self.assoc[(a, b, m[c][d])])]
            step1 = self.mu1[I[a]][self.assoc[(b, c, d)]]
            step2 = self.assoc[(a, m[b][c], d)]
            step3 = self.mu1[self.assoc[(a, b, c)]][I[d]]
            p2 = self.comp[(step3, self.comp[(step2, step1)])]
            if p1 != p2:
                raise PentagonViolationError(
                    f"pentagon fails at {[self.objects[x] for x in (a, b, c, d)]}")
        return True

    # serialization -----------------------------------------------------------
    def to_json(self) -> dict:
        n = self.n_objects
        return {"schema": 1, "kind": "two_group", "name": self.name,
                "objects": [str(o) for o in self.objects], "unit": self.unit,
                "mu0": self.mu0,
                "arrows": [{"label": str(a), "source": self.src[i], "target": self.tgt[i]}
                           for i, a in enumerate(self.arrows)],
                "identity": self.ident,
                "compose": [[g, f, h] for (g, f), h in sorted(self.comp.items())],
                "mu1": self.mu1,
                "associator": [[a, b, c, self.assoc[(a, b, c)]]
                               for a, b, c in itertools.product(range(n), repeat=3)]}

    @classmethod
    def from_json(cls, doc: dict) -> "CoherentTwoGroup":
        arrows = doc["arrows"]
        T = cls(doc["objects"], doc["unit"], doc["mu0"], [a["label"] for a in arrows],
                [a["source"] for a in arrows], [a["target"] for a in arrows],
                {(g, f): h for g, f, h in doc["compose"]}, doc["identity"], doc["mu1"],
                {(a, b, c): v for a, b, c, v in doc["associator"]}, name=doc.get("name", ""))
        T.validate()
        return T

    def __repr__(self):
        return f"CoherentTwoGroup({self.name!r}, objects={self.n_objects}, arrows={self.n_arrows})"


# --- constructions ---------------------------------------------------------------

def crossed_module_2group(G: FiniteGroup, H: FiniteGroup, boundary, action=None,
                          name: str = "") -> CoherentTwoGroup:
    """Strict 2-group of a crossed module H -> G: arrows (h, g): g -> d(h) g."""
    act = action or (lambda g, h: h)
    arrows = [(h, g) for h in range(H.n) for g in range(G.n)]
    idx = {a: i for i, a in enumerate(arrows)}
    src = [g for h, g in arrows]
    tgt = [G.mul(boundary[h], g) for h, g in arrows]
    comp = {}
    for i, (h, g) in enumerate(arrows):
        for j, (h2, g2) in enumerate(arrows):
            if g2 == tgt[i]:
                comp[(j, i)] = idx[(H.mul(h2, h), g)]
    ident = [idx[(H.e, g)] for g in range(G.n)]
    mu1 = [[idx[(H.mul(h, act(g, h2)), G.mul(g, g2))] for (h2, g2) in arrows] for (h, g) in arrows]
    assoc = {(a, b, c): ident[G.mul(G.mul(a, b), c)]
             for a, b, c in itertools.product(range(G.n), repeat=3)}
    labels = [f"{H.names[h]}|{G.names[g]}" for h, g in arrows]
    return CoherentTwoGroup(G.names, G.e, G.table, labels, src, tgt, comp, ident, mu1, assoc,
                            name=name or "crossed-module")


def cocycle_2group(G: FiniteGroup, p: int, omega, name: str = "") -> CoherentTwoGroup:
    """Skeletal 2-group with pi_1 = G, pi_2 = Z/p (trivial action), associator omega."""
    arrows = [(x, g) for x in range(p) for g in range(G.n)]
    idx = {a: i for i, a in enumerate(arrows)}
    src = [g for x, g in arrows]
    comp = {}
    for i, (x, g) in enumerate(arrows):
        for y in range(p):
            comp[(idx[(y, g)], i)] = idx[((x + y) % p, g)]
    ident = [idx[(0, g)] for g in range(G.n)]
    mu1 = [[idx[((x + y) % p, G.mul(g, h))] for (y, h) in arrows] for (x, g) in arrows]
    assoc = {(a, b, c): idx[(omega(a, b, c) % p, G.mul(G.mul(a, b), c))]
             for a, b, c in itertools.product(range(G.n), repeat=3)}
    labels = [f"{x}|{G.names[g]}" for x, g in arrows]
    return CoherentTwoGroup(G.names, G.e, G.table, labels, src, list(src), comp, ident, mu1, assoc,
                            name=name or "cocycle-2group")


def trivial_2group() -> CoherentTwoGroup:
    return cocycle_2group(cyclic_group(1), 1, lambda a, b, c: 0, name="trivial")


# --- nerve -------------------------------------------------------------------------

def _pairs(m):
    return list(itertools.combinations(range(m + 1), 2))


def _triples(m):
    return list(itertools.combinations(range(m + 1), 3))


def _ctt_ok(T: CoherentTwoGroup, g, h, i, j, k, l) -> bool:
    gij, gjk, gkl = g[(i, j)], g[(j, k)], g[(k, l)]
    lhs = T.comp[(h[(i, j, l)], T.mu1[T.ident[gij]][h[(j, k, l)]])]
    rhs = T.comp[(h[(i, k, l)], T.comp[(T.mu1[h[(i, j, k)]][T.ident[gkl]], T.assoc[(gij, gjk, gkl)])])]
    return lhs == rhs


def _nerve_simplices(T: CoherentTwoGroup, m: int):
    P, Tr = _pairs(m), _triples(m)
    g, h = {}, {}
    out = []

    def assign_h(t):
        if t == len(Tr):
            out.append((tuple(g[p] for p in P), tuple(h[q] for q in Tr)))
            return
        i, j, k = Tr[t]
        for f in T.arrows_between(T.mu0[g[(i, j)]][g[(j, k)]], g[(i, k)]):
            h[(i, j, k)] = f
            # (i, j, k) is the last triple of every quadruple (a, i, j, k), a < i
            if all(_ctt_ok(T, g, h, a, i, j, k) for a in range(i)):
                assign_h(t + 1)
        h.pop((i, j, k), None)

    def assign_g(t):
        if t == len(P):
            assign_h(0)
            return
        i, j = P[t]
        for o in range(T.n_objects):
            g[(i, j)] = o
            # all triples (a, i, j) with a < i are now complete
            if all(T.arrows_between(T.mu0[g[(a, i)]][o], g[(a, j)]) for a in range(i)):
                assign_g(t + 1)
        g.pop((i, j), None)

    assign_g(0)
    return out


def nerve_2group(T: CoherentTwoGroup, N: int = 3) -> FinSimplicialSet:
    """m-simplices: objects g_ij (i < j) and arrows h_ijk: g_ij g_jk -> g_ik with every
    square for i < j < k < l commuting.  Keys are (g tuple, h tuple) in lexicographic order."""
    T.check_pentagon()

    def simplices(m):
        return _nerve_simplices(T, m)

    def face(x, i):
        gs, hs = x
        m = _dim_from_pairs(len(gs))
        P, Tr = _pairs(m), _triples(m)
        gd, hd = dict(zip(P, gs)), dict(zip(Tr, hs))
        up = lambda v: v if v < i else v + 1
        return (tuple(gd[(up(a), up(b))] for a, b in _pairs(m - 1)),
                tuple(hd[(up(a), up(b), up(c))] for a, b, c in _triples(m - 1)))

    def degen(x, i):
        gs, hs = x
        m = _dim_from_pairs(len(gs))
        gd, hd = dict(zip(_pairs(m), gs)), dict(zip(_triples(m), hs))
        down = lambda v: v if v <= i else v - 1
        g2 = []
        for a, b in _pairs(m + 1):
            a2, b2 = down(a), down(b)
            g2.append(T.unit if a2 == b2 else gd[(a2, b2)])
        h2 = []
        for a, b, c in _triples(m + 1):
            a2, b2, c2 = down(a), down(b), down(c)
            if a2 == b2:
                h2.append(T.ident[gd[(b2, c2)]])
            elif b2 == c2:
                h2.append(T.ident[gd[(a2, b2)]])
            else:
                h2.append(hd[(a2, b2, c2)])
        return (tuple(g2), tuple(h2))

    return FinSimplicialSet.build(N, simplices, face, degen, name=f"N({T.name})", coskeletal=3)


def _dim_from_pairs(k: int) -> int:
    m = 0
    while m * (m + 1) // 2 < k:
        m += 1
    return m


# --- inverse construction ------------------------------------------------------------

def two_group_from_kan(X: FinSimplicialSet, check: bool = True) -> CoherentTwoGroup:
    """Objects X_1, arrows {x in X_2 : d_2 x = *} from d_0 x to d_1 x; all structure
    maps come from unique fillers in X_3 and one chosen filler x(a, b) per pair."""
    if not X.reduced:
        raise ValueError("two_group_from_kan needs a reduced simplicial set")
    X = X.extended(3)
    if check:
        ok, bad = X.is_kan(3)
        if not ok:
            raise NotKanError(f"not Kan: {bad}")
        if not X.unique_fillers_above(2, 3):
            raise NonUniqueFillerError("fillers above dimension 2 are not unique")
    F2, F3 = X.faces[2], X.faces[3]
    S1 = X.degens[1]
    star1 = X.base(1)
    star2 = X.base(2)

    def fill3(j, faces):
        ks = [k for k in range(4) if k != j]
        res = X.fillers(3, j, tuple(faces[k] for k in ks))
        if len(res) != 1:
            raise NonUniqueFillerError(f"Lambda[3,{j}] has {len(res)} fillers")
        return res[0]

    objects = list(range(X.size(1)))
    arrows = [x for x in range(X.size(2)) if F2[x][2] == star1]
    aidx = {x: i for i, x in enumerate(arrows)}
    src = [F2[x][0] for x in arrows]
    tgt = [F2[x][1] for x in arrows]

    chosen = {}
    for a in objects:
        for b in objects:
            fs = X.fillers(2, 1, (b, a))  # faces (d_0, d_2)
            if not fs:
                raise NotKanError("missing Lambda[2,1] filler")
            if b == star1:
                chosen[(a, b)] = S1[a][1]   # s_1 a: keeps the unit strict
            elif a == star1:
                chosen[(a, b)] = S1[b][0]
            else:
                chosen[(a, b)] = min(fs)
    mu0 = [[F2[chosen[(a, b)]][1] for b in objects] for a in objects]
    ident = [aidx[S1[c][0]] for c in objects]

    comp = {}
    for f in arrows:
        for g in arrows:
            if F2[g][0] == F2[f][1]:
                w = fill3(1, {0: f, 2: g, 3: star2})
                comp[(aidx[g], aidx[f])] = aidx[F3[w][1]]

    def psi(y):
        a, b = F2[y][2], F2[y][0]
        w = fill3(2, {0: chosen[(a, b)], 1: y, 3: S1[a][0]})
        return aidx[F3[w][2]]

    def left(a, g):
        b2 = F2[g][1]
        w = fill3(1, {0: g, 2: chosen[(a, b2)], 3: S1[a][1]})
        return psi(F3[w][1])

    def right(f, b):
        a, a2 = F2[f][0], F2[f][1]
        w = fill3(2, {0: chosen[(a, b)], 1: chosen[(a2, b)], 3: f})
        return aidx[F3[w][2]]

    mu1 = []
    for fi, f in enumerate(arrows):
        row = []
        for gi, g in enumerate(arrows):
            a, b2 = src[fi], tgt[gi]
            row.append(comp[(right(f, b2), left(a, g))])
        mu1.append(row)

    T = CoherentTwoGroup([X.keys[1][o] for o in objects], star1, mu0,
                         [X.keys[2][x] for x in arrows], src, tgt, comp, ident, mu1, {},
                         name=f"pi({X.name})")
    assoc = {}
    for a, b, c in itertools.product(objects, repeat=3):
        w = fill3(1, {0: chosen[(b, c)], 2: chosen[(a, mu0[b][c])], 3: chosen[(a, b)]})
        assoc[(a, b, c)] = T.inverse(psi(F3[w][1]))
    T.assoc = assoc
    if check:
        T.validate()
    return T


def nerve_round_trip_maps(T: CoherentTwoGroup, T2: CoherentTwoGroup):
    """Object and arrow bijections T2 -> T when T2 = two_group_from_kan(nerve_2group(T))."""
    obj = [T2.objects[o][0][0] for o in range(T2.n_objects)]
    arr = [T2.arrows[f][1][0] for f in range(T2.n_arrows)]
    return obj, arr


def two_group_equivalence(T1: CoherentTwoGroup, T2: CoherentTwoGroup, obj_map, arr_map):
    """Search for a monoidal structure J making (obj_map, arr_map): T1 -> T2 an equivalence.

    The maps must form an isomorphism of groupoids.  J(a, b) is an arrow
    F(a)F(b) -> F(ab) satisfying naturality and the hexagon against both
    associators.  Returns the table of J or None.
    """
    O1, A1 = range(T1.n_objects), range(T1.n_arrows)
    F0, F1 = list(obj_map), list(arr_map)
    if sorted(F0) != list(range(T2.n_objects)) or sorted(F1) != list(range(T2.n_arrows)):
        return None
    for f in A1:
        if (T2.src[F1[f]], T2.tgt[F1[f]]) != (F0[T1.src[f]], F0[T1.tgt[f]]):
            return None
    for (g, f), h in T1.comp.items():
        if T2.comp[(F1[g], F1[f])] != F1[h]:
            return None
    for c in O1:
        if F1[T1.ident[c]] != T2.ident[F0[c]]:
            return None
    pairs = list(itertools.product(O1, O1))
    cands = {(a, b): T2.arrows_between(T2.mu0[F0[a]][F0[b]], F0[T1.mu0[a][b]]) for a, b in pairs}
    if any(not v for v in cands.values()):
        return None
    m1 = T1.mu0
    J = {}

    def hexagon(a, b, c):
        keys = [(a, b), (b, c), (a, m1[b][c]), (m1[a][b], c)]
        if any(k not in J for k in keys):
            return True
        Fa, Fb, Fc = F0[a], F0[b], F0[c]
        lhs = T2.comp[(F1[T1.assoc[(a, b, c)]],
                       T2.comp[(J[(a, m1[b][c])], T2.mu1[T2.ident[Fa]][J[(b, c)]])])]
        rhs = T2.comp[(J[(m1[a][b], c)],
                       T2.comp[(T2.mu1[J[(a, b)]][T2.ident[Fc]], T2.assoc[(Fa, Fb, Fc)])])]
        return lhs == rhs

    def natural():
        for f in A1:
            for g in A1:
                a, b, a2, b2 = T1.src[f], T1.src[g], T1.tgt[f], T1.tgt[g]
                lhs = T2.comp[(F1[T1.mu1[f][g]], J[(a, b)])]
                rhs = T2.comp[(J[(a2, b2)], T2.mu1[F1[f]][F1[g]])]
                if lhs != rhs:
                    return False
        return True

    def rec(t):
        if t == len(pairs):
            return natural()
        p = pairs[t]
        for f in cands[p]:
            J[p] = f
            if all(hexagon(a, b, c) for a, b, c in itertools.product(O1, O1, O1)
                   if p in ((a, b), (b, c), (a, m1[b][c]), (m1[a][b], c))):
                if rec(t + 1):
                    return True
        J.pop(p, None)
        return False

    return dict(J) if rec(0) else None
