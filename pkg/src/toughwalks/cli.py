"""Command-line front end.

JSON goes to stdout, logs to stderr.  Exit codes: 0 witness produced and
self-verified, 1 sound negative result, 2 input or precondition error,
3 budget exhausted, 4 internal self-check failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from fractions import Fraction

from . import oracles
from .domcycle import find_edge_dominating_cycle, find_edge_dominating_cycle_with_triangle
from .errors import BudgetExceeded, InvalidWitness, KTooSmall, Not2K2Free, ToughwalksError
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .generators import (
    fixture_net,
    gen_2k2_free_perturbed,
    gen_3k2_free,
    gen_complete_multipartite,
    gen_split_graph,
)
from .graph_core import Cycle, CycleW, Graph, witness_from_json
from .kwalk import KWalk, ToughnessCertificate, build_k_walk
from .prism_cycles import Failure, PrismCycle, prism_hamiltonian
from .recognition import InducedMatchingWitness, find_triangle, is_2k2_free

log = logging.getLogger("toughwalks")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


class SelfCheckFailed(RuntimeError):
    pass


def read_graph(path: str | None, fmt: str) -> Graph:
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="ascii").read()
    if fmt == "auto":
        first = text.strip().splitlines()[0] if text.strip() else ""
        fmt = "edgelist" if len(first.split()) == 2 else "graph6"
    return parse_edge_list(text) if fmt == "edgelist" else parse_graph6(text)


def digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(emit_graph6(g).encode("ascii")).hexdigest()


def report(command: str, g: Graph, result: str, kind: str, payload, start: float,
           trace=None) -> dict:
    out = {
        "command": command,
        "input_digest": digest(g),
        "result": result,
        "kind": kind,
        "payload": payload,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    if trace is not None:
        out["trace"] = trace
    return out


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise SelfCheckFailed(f"self-verification failed for {what}")


def _certificate_payload(g: Graph, cert: ToughnessCertificate) -> dict:
    _require(cert.is_valid_in(g), "toughness certificate")
    return cert.to_json()


def cmd_check_2k2free(args, g, start):
    res = is_2k2_free(g)
    if res:
        return EXIT_OK, report("check-2k2free", g, "witness", "2k2_free", {"free": True}, start)
    _require(res.witness.is_valid_in(g), "induced 2K2")
    return EXIT_NEGATIVE, report("check-2k2free", g, "certificate", "induced_matching",
                                 {"free": False, "edges": res.witness.to_json()}, start)


def cmd_dom_cycle(args, g, start):
    if args.triangle:
        tri = find_triangle(g)
        if tri is None:
            raise InvalidWitness("graph has no triangle")
        cyc, trace = find_edge_dominating_cycle_with_triangle(g, tri)
        w = CycleW(cyc)
    else:
        w, trace = find_edge_dominating_cycle(g)
    _require(oracles.check_edge_dominating(g, w), "dominating witness")
    log.info("dominating witness of size %d after %d steps", len(w.vertex_set), len(trace))
    return EXIT_OK, report("dom-cycle", g, "witness", "dominating_witness", w.to_json(), start,
                           trace.to_json() if args.trace else None)


def cmd_kwalk(args, g, start):
    w, _ = find_edge_dominating_cycle(g)
    res = build_k_walk(g, w, args.k)
    if isinstance(res, KWalk):
        _require(oracles.check_k_walk(g, res), "k-walk")
        return EXIT_OK, report("kwalk", g, "witness", "kwalk", res.to_json(), start)
    payload = _certificate_payload(g, res)
    return EXIT_NEGATIVE, report("kwalk", g, "certificate", "toughness_certificate", payload, start)


def cmd_prism_ham(args, g, start):
    res = prism_hamiltonian(g, ham_budget=oracles.env_budget(oracles.DEFAULT_HAM_BUDGET))
    if isinstance(res, PrismCycle):
        _require(oracles.check_prism_cycle(g, res), "prism cycle")
        return EXIT_OK, report("prism-ham", g, "witness", "prism_cycle", res.to_json(), start)
    if res.certificate is not None:
        _certificate_payload(g, res.certificate)
        return EXIT_NEGATIVE, report("prism-ham", g, "certificate", "toughness_certificate",
                                     res.to_json(), start)
    return EXIT_NEGATIVE, report("prism-ham", g, "failure", "failure", res.to_json(), start)


def _infer_kind(payload) -> str:
    if isinstance(payload, list):
        if payload and all(isinstance(x, list) and len(x) == 2 for x in payload):
            return "prism_cycle"
    elif isinstance(payload, dict):
        if "traversal" in payload:
            return "kwalk"
        if "type" in payload:
            return "dominating_witness"
        if "cutset" in payload:
            return "toughness_certificate"
        if "certificate" in payload:
            return "toughness_certificate"
        if "edges" in payload:
            return "induced_matching"
    raise InvalidWitness("cannot tell what kind of witness this is")


def verify_payload(g: Graph, kind: str, payload) -> bool:
    if kind == "dominating_witness":
        return oracles.check_edge_dominating(g, witness_from_json(payload))
    if kind == "kwalk":
        walk = KWalk(int(payload["k"]),
                     {(min(u, v), max(u, v)): m for u, v, m in payload["edges"]},
                     tuple(payload["traversal"]))
        return oracles.check_k_walk(g, walk)
    if kind == "prism_cycle":
        return oracles.check_prism_cycle(g, PrismCycle(tuple((v, l) for v, l in payload)))
    if kind == "toughness_certificate":
        body = payload.get("certificate", payload)
        cert = ToughnessCertificate(frozenset(body["cutset"]), int(body["components"]),
                                    Fraction(body["bound"]))
        return cert.is_valid_in(g)
    if kind == "induced_matching":
        return InducedMatchingWitness(tuple(tuple(e) for e in payload["edges"])).is_valid_in(g)
    raise InvalidWitness(f"cannot verify witnesses of kind {kind!r}")


def cmd_verify(args, g, start):
    with open(args.witness, encoding="utf-8") as fh:
        doc = json.load(fh)
    if isinstance(doc, dict) and "payload" in doc and "command" in doc:
        kind, payload = doc.get("kind") or _infer_kind(doc["payload"]), doc["payload"]
    else:
        kind, payload = _infer_kind(doc), doc
    try:
        ok = verify_payload(g, kind, payload)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidWitness(f"malformed {kind}: {exc}") from exc
    code = EXIT_OK if ok else EXIT_NEGATIVE
    return code, report("verify", g, "witness" if ok else "failure", kind,
                        {"valid": ok}, start)


def cmd_oracle(args, g, start):
    if args.which == "toughness":
        t = oracles.brute_force_toughness(g, force=args.force)
        value = "inf" if t == oracles.INFINITE else str(t)
        return EXIT_OK, report("oracle", g, "witness", "toughness", {"toughness": value}, start)
    if args.which == "ham":
        budget = args.budget or oracles.env_budget(oracles.DEFAULT_HAM_BUDGET)
        cyc = oracles.brute_force_hamiltonian(g, budget=budget)
        if cyc is None:
            return EXIT_NEGATIVE, report("oracle", g, "failure", "hamiltonian_cycle",
                                         {"hamiltonian": False}, start)
        return EXIT_OK, report("oracle", g, "witness", "hamiltonian_cycle",
                               {"hamiltonian": True, "cycle": list(cyc)}, start)
    budget = args.budget or oracles.env_budget(oracles.DEFAULT_DOMCYCLE_BUDGET)
    cyc = oracles.brute_force_dominating_cycle(g, budget=budget)
    if cyc is None:
        return EXIT_NEGATIVE, report("oracle", g, "failure", "dominating_witness",
                                     {"found": False}, start)
    w = CycleW(Cycle(cyc))
    _require(oracles.check_edge_dominating(g, w), "brute-force dominating cycle")
    return EXIT_OK, report("oracle", g, "witness", "dominating_witness", w.to_json(), start)


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "net":
        g = fixture_net()
    elif fam == "split":
        g = gen_split_graph(args.n, Fraction(args.density), args.seed)
    elif fam == "multipartite":
        g = gen_complete_multipartite(int(x) for x in args.parts.split(","))
    elif fam == "perturbed":
        base = gen_split_graph(args.n, Fraction(args.density), args.seed)
        g = gen_2k2_free_perturbed(base, args.extra, args.seed + 1)
    else:
        half = max(1, (args.n - 2) // 2)
        g = gen_3k2_free(gen_split_graph(half, Fraction(args.density), args.seed),
                         gen_split_graph(half, Fraction(args.density), args.seed + 1), 2)
    fmt = "graph6" if args.format == "auto" else args.format
    sys.stdout.write(emit_graph6(g) + "\n" if fmt == "graph6" else emit_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="inp", default=None, help="input file (default: stdin)")
    common.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")

    p = argparse.ArgumentParser(prog="toughwalks", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("check-2k2free", parents=[common])
    dc = sub.add_parser("dom-cycle", parents=[common])
    dc.add_argument("--triangle", action="store_true",
                    help="keep a triangle on three consecutive cycle vertices")
    dc.add_argument("--trace", action="store_true")
    kw = sub.add_parser("kwalk", parents=[common])
    kw.add_argument("--k", type=int, required=True)
    sub.add_parser("prism-ham", parents=[common])
    ve = sub.add_parser("verify", parents=[common])
    ve.add_argument("witness", help="JSON file written by another subcommand, or a bare payload")
    orc = sub.add_parser("oracle", parents=[common])
    orc.add_argument("which", choices=("toughness", "ham", "domcycle"))
    orc.add_argument("--budget", type=int, default=None)
    orc.add_argument("--force", action="store_true", help="lift the n <= 20 toughness guard")
    gen = sub.add_parser("gen", parents=[common])
    gen.add_argument("family", choices=("split", "multipartite", "perturbed", "net", "3k2"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--density", default="1/2")
    gen.add_argument("--parts", default="2,2")
    gen.add_argument("--extra", type=int, default=3)
    return p


COMMANDS = {
    "check-2k2free": cmd_check_2k2free,
    "dom-cycle": cmd_dom_cycle,
    "kwalk": cmd_kwalk,
    "prism-ham": cmd_prism_ham,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "kwalk" and args.k < 2:
            raise KTooSmall("k must be at least 2; k = 1 asks for a Hamiltonian cycle")
        g = read_graph(args.inp, args.format)
        start = time.perf_counter()
        code, out = COMMANDS[args.command](args, g, start)
    except BudgetExceeded as exc:
        _emit({"error": str(exc), "kind": "budget"})
        return EXIT_BUDGET
    except Not2K2Free as exc:
        _emit({"error": str(exc), "kind": "not_2k2_free", "witness": exc.witness.to_json()})
        return EXIT_INPUT
    except (ToughwalksError, ValueError, OSError) as exc:
        _emit({"error": str(exc), "kind": type(exc).__name__})
        return EXIT_INPUT
    except SelfCheckFailed as exc:
        _emit({"error": str(exc), "kind": "self_check"})
        return EXIT_INTERNAL
    _emit(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
