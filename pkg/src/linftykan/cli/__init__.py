"""Command-line interface: ``linftykan <module> <command> ...``.

Exit status is 0 for success or a true verdict, 1 for a false verdict and 2
for malformed input.  Every numeric report line ends with a provenance tag,
``[exact]`` or ``[quadrature(order=K)]``.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .corpus import (MalformedInputError, build_corpus, bundled_corpus, corpus_dir, dump_json,
                     load_document, write_corpus)

__all__ = ["main", "run", "RunConfig", "bundled_corpus"]

EXACT = "[exact]"


def quad(order: int) -> str:
    return f"[quadrature(order={order})]"


class RunConfig:
    def __init__(self, seed: int = 0, tolerance: float | None = None, fmt: str = "text",
                 field: str | None = None):
        self.seed = seed
        self.tolerance = tolerance
        self.format = fmt
        self.field = field

    def rng(self) -> random.Random:
        return random.Random(self.seed)


class Report:
    def __init__(self):
        self.lines: list = []
        self.data: dict = {}
        self.status = 0
        self.format = "text"

    def line(self, text: str):
        self.lines.append(text)

    def fail(self):
        self.status = 1


# --- document helpers ------------------------------------------------------------------

def _algebra(ref: str, field: str | None = None):
    """Load an algebra; with ``field`` (e.g. "Q(sqrt2)") its brackets must lie in that field."""
    from ..linf import LInftyAlgebra
    doc = load_document(ref)
    if "dims" not in doc:
        raise MalformedInputError(f"{ref}: not an L-infinity algebra document")
    try:
        L = LInftyAlgebra.from_json(doc)
        if field is not None:
            field_roots(field)
            L.check_field(field)
        return L
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"{ref}: {exc}") from exc


def field_roots(field: str) -> tuple:
    """Square roots adjoined in a field name such as "Q" or "Q(sqrt2,sqrt3)"."""
    import re
    m = re.fullmatch(r"Q(?:\((sqrt\d+(?:,\s*sqrt\d+)*)\))?", field.strip())
    if not m:
        raise MalformedInputError(f"unrecognized scalar field {field!r}")
    return tuple(int(n) for n in re.findall(r"sqrt(\d+)", m.group(1) or ""))


def _mc(doc: dict, algebra_ref: str | None, field: str | None = None):
    from ..intl import MCElement
    ref = algebra_ref or doc.get("algebra")
    if not ref:
        raise MalformedInputError("MC document names no algebra; pass --algebra")
    L = _algebra(ref, field)
    try:
        return L, MCElement.from_json(doc, L)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(str(exc)) from exc


def _simpset(ref: str, N: int | None = None):
    from ..simpset import FinSimplicialSet, nerve_2group, subcomplex, CoherentTwoGroup
    doc = load_document(ref)
    kind = doc.get("kind")
    try:
        if kind == "simpset":
            return FinSimplicialSet.from_json(doc)
        if kind == "subcomplex":
            n = int(doc["n"])
            return subcomplex(n, doc["generators"], N=max(n, N or n), name=doc.get("name", ""))
        if kind == "two_group":
            return nerve_2group(CoherentTwoGroup.from_json(doc), N=N or 4)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"{ref}: {exc}") from exc
    raise MalformedInputError(f"{ref}: expected a simplicial-set, subcomplex or 2-group document")


# --- linf ----------------------------------------------------------------------------------

def cmd_linf_check(args, cfg, rep):
    from ..linf import ce_square_zero, jacobiator, basis_vector
    L = _algebra(args.file, args.field)
    ok, viol = ce_square_zero(L)
    rep.data.update({"algebra": L.name, "square_zero": ok, "violations": len(viol)})
    rep.line(f"algebra: {L.name or args.file}")
    rep.line(f"δ²=0: {'PASS' if ok else 'FAIL'} {EXACT}")
    if not ok:
        rep.fail()
        g, mono, c = viol[0]
        rep.line(f"first violation: generator {g}, monomial {list(mono)}, coefficient {c} {EXACT}")
        if set(len(k) for k in L.brackets) == {2}:
            basis = [b for b in L.basis() if b[0] == 0]
            for i, a in enumerate(basis):
                for j, b in enumerate(basis[i + 1:], i + 1):
                    for c_ in basis[j + 1:]:
                        J = jacobiator(L, basis_vector(*a), basis_vector(*b), basis_vector(*c_))
                        if J:
                            rep.line(f"Jacobiator({a}, {b}, {c_}) = {_vec(J)} {EXACT}")
                            rep.data["jacobiator"] = {"inputs": [a, b, c_], "value": _vec(J)}
                            return


def _vec(v: dict) -> str:
    from ..gradedlin import format_scalar
    return "{" + ", ".join(f"{k}: {format_scalar(c)}" for k, c in sorted(v.items())) + "}"


def cmd_linf_mc(args, cfg, rep):
    from ..linf import mc_system
    L = _algebra(args.file, args.field)
    eqs = mc_system(L)
    for _g, _p, text in eqs:
        rep.line(f"{text} {EXACT}")
    rep.data["equations"] = [t for _g, _p, t in eqs]


def cmd_linf_homology(args, cfg, rep):
    from ..linf import homology_dims
    L = _algebra(args.file, args.field)
    H = homology_dims(L)
    for k, v in sorted(H.items()):
        rep.line(f"dim H_{k} = {v} {EXACT}")
    rep.data["homology"] = {str(k): v for k, v in sorted(H.items())}


def cmd_linf_nilpotent(args, cfg, rep):
    from ..linf import is_nilpotent
    L = _algebra(args.file, args.field)
    ok, c = is_nilpotent(L)
    rep.line(f"nilpotent: {'yes, class ' + str(c) if ok else 'no'} {EXACT}")
    rep.data["nilpotent"] = ok
    if not ok:
        rep.fail()


def cmd_linf_truncate(args, cfg, rep):
    from ..linf import truncate_linf
    L = _algebra(args.file, args.field)
    T = truncate_linf(L, args.n, args.mode)
    rep.data["algebra"] = T.to_json()
    rep.line(dump_json(T.to_json()).rstrip())


# --- forms ------------------------------------------------------------------------------

def _polyform(ref):
    from ..forms import PolyForm
    doc = load_document(ref)
    try:
        return PolyForm.from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"{ref}: {exc}") from exc


def cmd_forms_d(args, cfg, rep):
    f = _polyform(args.file)
    rep.data["form"] = f.d().to_json()
    rep.line(dump_json(rep.data["form"]).rstrip())


def cmd_forms_period(args, cfg, rep):
    from ..gradedlin import format_scalar
    f = _polyform(args.file)
    p = f.simplex_period()
    rep.data["period"] = format_scalar(p)
    rep.line(f"period = {format_scalar(p)} {EXACT}")


def cmd_forms_face(args, cfg, rep):
    from ..forms import coface
    f = _polyform(args.file)
    g = f.pullback(coface(f.m, args.i))
    rep.data["form"] = g.to_json()
    rep.line(dump_json(g.to_json()).rstrip())


# --- intl ------------------------------------------------------------------------------

def cmd_intl_validate(args, cfg, rep):
    from ..intl import validate_mc
    L, x = _mc(load_document(args.file), args.algebra, args.field)
    ok, info = validate_mc(L, x)
    rep.data["valid"] = ok
    rep.line(f"Maurer-Cartan on Delta^{x.m}: {'PASS' if ok else 'FAIL'} {EXACT}")
    if not ok:
        rep.fail()
        rep.line(f"first failing generator {info['generator']}: residual {info['residual']} {EXACT}")
        rep.data["generator"] = list(info["generator"])


def cmd_intl_face(args, cfg, rep):
    from ..intl import face
    _L, x = _mc(load_document(args.file), args.algebra, args.field)
    if not 0 <= args.i <= x.m:
        raise MalformedInputError(f"face index {args.i} out of range for an {x.m}-simplex")
    y = face(x, args.i).to_json()
    rep.data["simplex"] = y
    rep.line(dump_json(y).rstrip())


def cmd_intl_fill(args, cfg, rep):
    from ..intl import MCElement, fill_horn, horn_of, validate_mc
    from ..intl.gauge import NotNilpotentError
    from ..forms import IncompatibleHornError
    doc = load_document(args.file)
    if doc.get("kind") == "horn":
        L = _algebra(args.algebra or doc["algebra"], args.field)
        m, j = int(doc["m"]), int(doc["j"])
        horn = {int(k): MCElement.from_json(v, L) for k, v in doc["faces"].items()}
    else:
        L, x = _mc(doc, args.algebra, args.field)
        if args.j is None:
            raise MalformedInputError("an m-simplex input needs --j to select the horn")
        m, j = x.m, args.j
        horn = horn_of(x, j)
    if args.m is not None and args.m != m:
        raise MalformedInputError(f"--m {args.m} does not match the horn dimension {m}")
    if args.j is not None and args.j != j:
        raise MalformedInputError(f"--j {args.j} does not match the horn index {j}")
    pin = None
    if args.pin:
        pin = MCElement.from_json(load_document(args.pin), L)
    try:
        y = fill_horn(L, horn, m, j, pin=pin)
    except NotNilpotentError as exc:
        rep.line(f"no exact filler: {exc} {EXACT}")
        rep.fail()
        return
    except IncompatibleHornError as exc:
        raise MalformedInputError(str(exc)) from exc
    ok, _ = validate_mc(L, y)
    restricts = horn_of(y, j) == horn
    rep.data.update({"filler": y.to_json(), "valid": ok, "restricts": restricts})
    rep.line(f"filler validates: {'PASS' if ok else 'FAIL'} {EXACT}")
    rep.line(f"filler restricts to the horn: {'PASS' if restricts else 'FAIL'} {EXACT}")
    if pin is not None:
        rep.data["reproduces_pin"] = (horn_of(pin, j) != horn) or y == pin
    if not (ok and restricts):
        rep.fail()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dump_json(y.to_json()))
    else:
        rep.line(dump_json(y.to_json()).rstrip())


def cmd_intl_random(args, cfg, rep):
    from ..intl import random_mc, horn_of
    L = _algebra(args.algebra, args.field)
    x = random_mc(L, args.m, cfg.rng())
    doc = x.to_json()
    doc["algebra"] = args.algebra
    if args.horn is not None:
        doc = {"schema": 1, "kind": "horn", "algebra": args.algebra, "m": x.m, "j": args.horn,
               "faces": {str(k): dict(v.to_json(), algebra=args.algebra)
                         for k, v in horn_of(x, args.horn).items()}}
    rep.data["document"] = doc
    rep.line(dump_json(doc).rstrip())


# --- homot ------------------------------------------------------------------------------

def _boundary(args):
    from ..homot import BoundaryData
    L = _algebra(args.algebra, args.field)
    pi_G = partial = None
    if getattr(args, "pi_g", None):
        doc = load_document(args.pi_g)
        pi_G = doc.get("pi_G", doc if "partial" not in doc else None)
        partial = doc.get("partial")
    B = BoundaryData.from_algebra(L, pi_G, partial)
    try:
        B.validate()
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc
    return L, B


def cmd_homot_les(args, cfg, rep):
    from ..homot import les_assemble, InconsistentLES
    L, B = _boundary(args)
    try:
        pres = les_assemble(B.H, B, args.up_to)
    except InconsistentLES as exc:
        rep.line(f"inconsistent long exact sequence: {exc} {EXACT}")
        rep.fail()
        return
    for p in pres:
        rep.line(f"pi_{p.n} = {p.describe()} {EXACT}")
    rep.data["pi"] = [p.to_json() for p in pres]


def cmd_homot_tvf(args, cfg, rep):
    from ..gradedlin import UnsupportedScalarError
    from ..homot import tvf_integrability
    L, B = _boundary(args)
    try:
        ok = tvf_integrability(B, args.n, None if args.field is None else field_roots(args.field))
    except UnsupportedScalarError as exc:
        raise MalformedInputError(str(exc)) from exc
    rep.data["discrete"] = ok
    rep.line(f"image of pi_{args.n}(G) in H_{args.n - 1}: "
             f"{'discrete' if ok else 'image not discrete'} {EXACT}")
    if not ok:
        rep.fail()


# --- simpset ----------------------------------------------------------------------------

def cmd_simpset_kan(args, cfg, rep):
    X = _simpset(args.file, args.up_to)
    ok, witness = X.is_kan(args.up_to)
    rep.data["kan"] = ok
    rep.line(f"{X.name}: Kan up to dimension {args.up_to or X.N}: {'yes' if ok else 'no'} {EXACT}")
    if not ok:
        m, j, faces = witness
        rep.line(f"unfillable horn Lambda[{m},{j}]: {faces} {EXACT}")
        rep.data["horn"] = {"m": m, "j": j, "faces": {str(k): str(v) for k, v in faces.items()}}
        rep.fail()
    elif args.unique_above is not None:
        u = X.unique_fillers_above(args.unique_above, args.up_to)
        rep.data["unique_fillers"] = u
        rep.line(f"unique fillers above dimension {args.unique_above}: {'yes' if u else 'no'} {EXACT}")
        if not u:
            rep.fail()


def _group_text(G) -> str:
    if G.n == 1:
        return "0"
    if G.is_abelian():
        return G.abelian_invariants().describe() if hasattr(G.abelian_invariants(), "describe") \
            else str(G.abelian_invariants())
    return f"non-abelian of order {G.n}"


def cmd_simpset_pi(args, cfg, rep):
    from ..simpset import pi_n, NotKanError
    X = _simpset(args.file, args.n + 1)
    try:
        G = pi_n(X, args.n)
    except NotKanError as exc:
        rep.line(f"not computable: {exc} {EXACT}")
        rep.fail()
        return
    rep.data.update({"order": G.n, "abelian": G.is_abelian()})
    rep.line(f"pi_{args.n}({X.name}) has order {G.n} {EXACT}")
    rep.line(f"pi_{args.n} = {_group_text(G)} {EXACT}")


def cmd_simpset_truncate(args, cfg, rep):
    from ..simpset import truncate_simpset
    X = _simpset(args.file, args.n + 2)
    T = truncate_simpset(X, args.n, args.mode)
    rep.data["simpset"] = T.to_json()
    rep.line(f"sizes {T.sizes()} {EXACT}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dump_json(T.to_json()))


def cmd_simpset_nerve2(args, cfg, rep):
    from ..simpset import (CoherentTwoGroup, nerve_2group, nerve_round_trip_maps,
                           two_group_equivalence, two_group_from_kan)
    doc = load_document(args.file)
    try:
        T = CoherentTwoGroup.from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"{args.file}: {exc}") from exc
    X = nerve_2group(T, N=args.N)
    ok, _ = X.is_kan()
    uniq = X.unique_fillers_above(2)
    T2 = two_group_from_kan(X)
    obj, arr = nerve_round_trip_maps(T, T2)
    J = two_group_equivalence(T, T2, obj, arr)
    rep.data.update({"sizes": X.sizes(), "kan": ok, "unique_fillers_above_2": uniq,
                     "round_trip": J is not None})
    rep.line(f"nerve sizes {X.sizes()} {EXACT}")
    rep.line(f"Kan: {'yes' if ok else 'no'}; unique fillers above 2: {'yes' if uniq else 'no'} {EXACT}")
    rep.line(f"round trip through two_group_from_kan: {'equivalent' if J is not None else 'not equivalent'}")
    if not (ok and uniq and J is not None):
        rep.fail()


def cmd_simpset_collapse(args, cfg, rep):
    from ..simpset import find_collapse, verify_collapse
    doc = load_document(args.file)
    if doc.get("kind") != "subcomplex":
        raise MalformedInputError(f"{args.file}: collapse needs a subcomplex document")
    cert = find_collapse(doc["generators"])
    rep.data["collapsible"] = cert is not None
    if cert is None:
        rep.line(f"{doc.get('name', args.file)}: not collapsible {EXACT}")
        rep.fail()
        return
    assert verify_collapse(doc["generators"], cert)
    rep.data["certificate"] = {"start": cert["start"],
                               "steps": [[list(s), j] for s, j in cert["steps"]]}
    rep.line(f"{doc.get('name', args.file)}: collapsible from vertex {cert['start']} "
             f"in {len(cert['steps'])} horn fillings {EXACT}")
    for s, j in cert["steps"]:
        rep.line(f"  fill {list(s)} at {j} {EXACT}")


# --- string -----------------------------------------------------------------------------

def _su2map(args):
    from ..stringmod import builtin_map, load_table
    if args.table:
        return load_table(args.table)
    try:
        return builtin_map(args.map)
    except (KeyError, ValueError) as exc:
        raise MalformedInputError(str(exc)) from exc


def cmd_string_period(args, cfg, rep):
    from ..stringmod import cartan_period
    f = _su2map(args)
    p = cartan_period(f, args.order)
    rep.data.update({"map": f.name, "period": p, "order": args.order})
    rep.line(f"period({f.name}) = {p:.6f} {quad(args.order)}")


def cmd_string_cocycle(args, cfg, rep):
    from ..stringmod import EdgeIncompatibilityError, cocycle_check, load_tetra
    try:
        faces, f = load_tetra(load_document(args.file))
    except (KeyError, ValueError) as exc:
        raise MalformedInputError(f"{args.file}: {exc}") from exc
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-2
    try:
        res = cocycle_check(faces, f, args.order)
    except EdgeIncompatibilityError as exc:
        rep.line(f"edge incompatibility: {exc}")
        rep.fail()
        return
    rep.data.update(res)
    rep.line(f"alternating sum of b = {res['alternating_sum']:.6f} {EXACT}")
    rep.line(f"period of the filling = {res['period']:.6f} {quad(args.order)}")
    rep.line(f"defect = {res['defect']:.3e} {quad(args.order)}; tolerance {tol:g}: "
             f"{'PASS' if res['defect'] < tol else 'FAIL'}")
    if res["defect"] >= tol:
        rep.fail()


def cmd_string_calibrate(args, cfg, rep):
    from ..stringmod import calibrate
    res = calibrate(args.order)
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-3
    ok = abs(res["calibrated_total"] - 1) < tol
    rep.data.update(res)
    rep.line(f"integral of the unnormalized form over SU(2) = {res['raw_integral']:.10f} {quad(args.order)}")
    rep.line(f"calibration constant = {res['constant']:.12f} {quad(args.order)}; stored {res['stored']:.12f}")
    rep.line(f"normalized total = {res['calibrated_total']:.10f} {quad(args.order)}: {'PASS' if ok else 'FAIL'}")
    if not ok:
        rep.fail()


# --- corpus -----------------------------------------------------------------------------

def cmd_corpus_list(args, cfg, rep):
    docs = bundled_corpus()
    rep.data["entries"] = sorted(docs)
    rep.line(f"corpus directory: {corpus_dir()}")
    for name, doc in sorted(docs.items()):
        rep.line(f"  {name}: {doc.get('kind', '?')}")


def cmd_corpus_show(args, cfg, rep):
    docs = bundled_corpus()
    if args.name not in docs:
        raise MalformedInputError(f"no corpus entry {args.name!r}")
    rep.data["document"] = docs[args.name]
    rep.line(dump_json(docs[args.name]).rstrip())


def cmd_corpus_write(args, cfg, rep):
    paths = write_corpus(args.dir)
    rep.data["written"] = [str(p) for p in paths]
    rep.line(f"wrote {len(paths)} documents to {args.dir or corpus_dir()} {EXACT}")


def cmd_corpus_check(args, cfg, rep):
    """Every bundled document parses and serializes back to itself; generated docs match."""
    fresh = build_corpus()
    docs = bundled_corpus()
    bad = []
    for name, doc in sorted(docs.items()):
        if name in fresh and json.loads(dump_json(fresh[name])) != doc:
            bad.append(f"{name}: differs from the generated version")
        if json.loads(dump_json(doc)) != doc:
            bad.append(f"{name}: does not round-trip")
    missing = sorted(set(fresh) - set(docs))
    bad.extend(f"{name}: missing" for name in missing)
    rep.data["problems"] = bad
    rep.line(f"{len(docs)} documents checked; {len(bad)} problems {EXACT}")
    for b in bad:
        rep.line("  " + b)
    if bad:
        rep.fail()


# --- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linftykan", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    p.add_argument("--tolerance", type=float, default=None, help="numeric tolerance (string commands)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--field", default=None,
                   help='scalar field for input documents, e.g. "Q" or "Q(sqrt2)"')
    sub = p.add_subparsers(dest="module", required=True)

    def add(group, name, fn, help_):
        q = group.add_parser(name, help=help_)
        q.set_defaults(fn=fn)
        return q

    lin = sub.add_parser("linf", help="L-infinity algebras").add_subparsers(dest="cmd", required=True)
    add(lin, "check", cmd_linf_check, "verify delta^2 = 0").add_argument("file")
    add(lin, "mc", cmd_linf_mc, "print the Maurer-Cartan system").add_argument("file")
    add(lin, "homology", cmd_linf_homology, "homology dimensions").add_argument("file")
    add(lin, "nilpotent", cmd_linf_nilpotent, "nilpotency test").add_argument("file")
    q = add(lin, "truncate", cmd_linf_truncate, "Postnikov truncation")
    q.add_argument("file")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", choices=["le", "lt"], default="le")

    fo = sub.add_parser("forms", help="polynomial forms").add_subparsers(dest="cmd", required=True)
    add(fo, "d", cmd_forms_d, "exterior derivative").add_argument("file")
    add(fo, "period", cmd_forms_period, "integral over the simplex").add_argument("file")
    q = add(fo, "face", cmd_forms_face, "restriction to a facet")
    q.add_argument("file")
    q.add_argument("--i", type=int, required=True)

    il = sub.add_parser("intl", help="MC simplices and horn fillers").add_subparsers(dest="cmd", required=True)
    q = add(il, "validate", cmd_intl_validate, "check the MC equation")
    q.add_argument("file")
    q.add_argument("--algebra")
    q = add(il, "face", cmd_intl_face, "face of an MC simplex")
    q.add_argument("file")
    q.add_argument("--i", type=int, required=True)
    q.add_argument("--algebra")
    q = add(il, "fill-horn", cmd_intl_fill, "fill a horn (horn document, or an m-simplex and --j)")
    q.add_argument("file")
    q.add_argument("--m", type=int)
    q.add_argument("--j", type=int)
    q.add_argument("--pin")
    q.add_argument("--algebra")
    q.add_argument("--output")
    q = add(il, "random", cmd_intl_random, "random MC simplex (uses --seed)")
    q.add_argument("--algebra", required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--horn", type=int, help="emit the horn at this index instead")

    ho = sub.add_parser("homot", help="homotopy groups").add_subparsers(dest="cmd", required=True)
    q = add(ho, "les", cmd_homot_les, "assemble the long exact sequence")
    q.add_argument("--algebra", required=True)
    q.add_argument("--pi-g", dest="pi_g")
    q.add_argument("--up-to", dest="up_to", type=int, required=True)
    q = add(ho, "tvf", cmd_homot_tvf, "discreteness criterion")
    q.add_argument("--algebra", required=True)
    q.add_argument("--pi-g", dest="pi_g")
    q.add_argument("--n", type=int, required=True)

    ss = sub.add_parser("simpset", help="finite simplicial sets").add_subparsers(dest="cmd", required=True)
    q = add(ss, "kan", cmd_simpset_kan, "Kan condition")
    q.add_argument("file")
    q.add_argument("--up-to", dest="up_to", type=int)
    q.add_argument("--unique-above", dest="unique_above", type=int)
    q = add(ss, "pi", cmd_simpset_pi, "homotopy group")
    q.add_argument("file")
    q.add_argument("--n", type=int, required=True)
    q = add(ss, "truncate", cmd_simpset_truncate, "Postnikov truncation")
    q.add_argument("file")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", choices=["le", "lt"], default="le")
    q.add_argument("--output")
    q = add(ss, "nerve2", cmd_simpset_nerve2, "nerve of a 2-group")
    q.add_argument("file")
    q.add_argument("--N", type=int, default=4)
    add(ss, "collapse", cmd_simpset_collapse, "collapse certificate").add_argument("file")

    st = sub.add_parser("string", help="numeric string model").add_subparsers(dest="cmd", required=True)
    q = add(st, "period", cmd_string_period, "period of a map Delta^3 -> SU(2)")
    q.add_argument("--map", default="degree1")
    q.add_argument("--table")
    q.add_argument("--order", type=int, default=12)
    q = add(st, "cocycle", cmd_string_cocycle, "cocycle defect of a tetrahedron datum")
    q.add_argument("file")
    q.add_argument("--order", type=int, default=12)
    q = add(st, "calibrate", cmd_string_calibrate, "integrate over SU(2)")
    q.add_argument("--order", type=int, default=24)

    co = sub.add_parser("corpus", help="bundled examples").add_subparsers(dest="cmd", required=True)
    add(co, "list", cmd_corpus_list, "list entries")
    add(co, "show", cmd_corpus_show, "print an entry").add_argument("name")
    add(co, "write", cmd_corpus_write, "regenerate the corpus").add_argument("dir", nargs="?")
    add(co, "check", cmd_corpus_check, "round-trip every entry")
    return p


def run(argv) -> tuple:
    """(exit status, Report or None) without touching sys.exit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    cfg = RunConfig(args.seed, args.tolerance, args.format, args.field)
    rep = Report()
    rep.format = cfg.format
    try:
        args.fn(args, cfg, rep)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, None
    return rep.status, rep


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    status, rep = run(argv)
    if rep is not None:
        if rep.format == "json":
            sys.stdout.write(dump_json(dict(rep.data, status=status, lines=rep.lines)))
        else:
            for line in rep.lines:
                print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
