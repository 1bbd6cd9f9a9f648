"""Recompute every classified property directly on the constructed graph and
compare with the closed-form verdicts.

Finite groups get the full treatment.  Over the integers only window-local
degree facts are checked, since truncated windows do not see global structure.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import digraph as dg
from .classifier import NOT_APPLICABLE, ONE, ZERO, Classification, classify
from .errors import SkippedNonCommutative
from .graph_monoid import (
    DEFAULT_COEFF_CAP,
    DEFAULT_MAX_MN,
    DEFAULT_MAX_VISITED,
    EQUAL,
    IBN,
    NOT_EQUAL,
    NOT_IBN,
    GraphMonoid,
)
from .groups import DEFAULT_MAX_ORDER, INFINITE, TRIVIAL, IntegerGroup, build_group
from .hopf_graph import DEFAULT_MAX_EDGES, HopfGraphBundle, build_delta_lambda
from .ramification import RamificationData, parse_ramification, parse_ramification_json
from .semigroup import SemigroupReport, analyze

DEFAULT_SWEEP_GROUPS = (
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "symmetric:3",
    "dihedral:3",
    "dihedral:4",
    "product(cyclic:2, cyclic:2)",
)
SWEEP_MULTIPLICITIES = (0, 1, 2)
SWEEP_MAX_NONZERO = 3


@dataclass(frozen=True)
class Triple:
    name: str
    theorem: object
    direct: object

    @property
    def agree(self):
        return self.theorem == self.direct

    def to_json(self):
        return {"property": self.name, "theorem": self.theorem, "direct": self.direct,
                "agree": self.agree}


@dataclass
class CrossCheckReport:
    triples: list = field(default_factory=list)
    skipped: list = field(default_factory=list)  # (property, reason)
    monoid: object = None  # MonoidDecision from the IBN oracle, if run

    def add(self, name, theorem, direct):
        self.triples.append(Triple(name, theorem, direct))

    def skip(self, name, reason):
        self.skipped.append((name, reason))

    @property
    def disagreements(self):
        return [t for t in self.triples if not t.agree]

    def get(self, name) -> Optional[Triple]:
        return next((t for t in self.triples if t.name == name), None)

    def to_json(self):
        out = {
            "triples": [t.to_json() for t in self.triples],
            "skipped": [{"property": p, "reason": r} for p, r in self.skipped],
            "disagreements": len(self.disagreements),
        }
        if self.monoid is not None:
            out["ibn_oracle"] = self.monoid.to_json()
        return out


# ---------------------------------------------------------------------------
# Individual checks (finite groups)
# ---------------------------------------------------------------------------

def _reachable(g, start):
    """Vertices at the end of a path of positive length from ``start``."""
    seen = set()
    queue = deque(g.simple_successors[start])
    while queue:
        v = queue.popleft()
        if v in seen:
            continue
        seen.add(v)
        queue.extend(g.simple_successors[v])
    return seen


def translation_witness(bundle: HopfGraphBundle):
    """For each component, whether left translation by its smallest element maps
    the identity component onto it edge-bijectively."""
    G, gamma, delta = bundle.group, bundle.gamma, bundle.delta
    comps = dg.connected_components(gamma)
    delta_edges = [(delta.keys[s], delta.keys[r], t) for s, r, t in delta.edges]
    by_comp = {}
    comp_index = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_index[v] = i
    for s, r, t in gamma.edges:
        by_comp.setdefault(comp_index[s], set()).add((s, r, t))
    results = []
    for i, comp in enumerate(comps):
        g = gamma.keys[comp[0]]
        image_vertices = {G.mul(g, w) for w in delta.keys}
        image_edges = [(G.mul(g, a), G.mul(g, b), t) for a, b, t in delta_edges]
        ok = (
            image_vertices == set(comp)
            and len(set(image_edges)) == len(image_edges)
            and set(image_edges) == by_comp.get(i, set())
        )
        results.append(ok)
    return results


def check_structure(bundle: HopfGraphBundle, sg: SemigroupReport, cls: Classification,
                    report: CrossCheckReport):
    G, gamma, delta = bundle.group, bundle.gamma, bundle.delta
    total = bundle.ramification.degree_sum()
    comps = dg.connected_components(gamma)
    report.add("component_count", cls.component_count, len(comps))
    e = G.identity_index
    e_comp = next(c for c in comps if e in c)
    report.add("delta_is_identity_component", sorted(sg.delta0.members), list(e_comp))
    witness = translation_witness(bundle)
    report.add("translation_isomorphisms", cls.component_count, sum(witness))
    report.add("scc_count_delta", cls.scc_count_delta, len(dg.scc(delta).components))
    dec = dg.scc(gamma)
    e_scc = dec.components[dec.component_of[e]]
    direct_lambda = list(e_scc) if dec.has_cycle[dec.component_of[e]] else TRIVIAL
    theorem_lambda = TRIVIAL if sg.lambda0 == TRIVIAL else sorted(sg.lambda0.members)
    report.add("lambda_is_identity_scc", theorem_lambda, direct_lambda)
    report.add("delta_is_scc_of_gamma", cls.delta_is_scc_of_gamma,
               set(e_scc) == set(sg.delta0.members))
    report.add("reachable_from_identity", sorted(sg.s_members), sorted(_reachable(gamma, e)))
    report.add("has_cycle", sg.is_submonoid, dg.has_cycle(gamma, dec))
    degrees = {gamma.out_degree(v) for v in range(gamma.n)} | {
        gamma.in_degree(v) for v in range(gamma.n)}
    report.add("degree_regularity", [total], sorted(degrees))
    return dec


def _gk_class(chains: dg.ChainReport):
    value = chains.gk_dimension()
    return {0: ZERO, 1: ONE, INFINITE: INFINITE}.get(value, str(value))


def check_gk(bundle, cls, report, dec=None):
    chains = dg.exc_and_chains(bundle.gamma, dec)
    report.add("gk_dim", cls.gk_dim, _gk_class(chains))
    return chains


def check_pis_simple(bundle, cls, report, dec=None):
    gamma = bundle.gamma
    cofinal = dg.only_trivial_hs(gamma, dec)
    exitless = dg.exitless_cycle_exists(gamma)
    cyclic = dg.has_cycle(gamma, dec)
    report.add("purely_infinite_simple", cls.purely_infinite_simple,
               cofinal and not exitless and cyclic)
    if cls.simple == NOT_APPLICABLE:
        report.skip("simple", "simplicity formula needs nonzero ramification")
    else:
        report.add("simple", cls.simple, cofinal and not exitless)


def check_stable_rank(bundle, cls, report, dec=None):
    gamma = bundle.gamma
    if not dg.has_cycle(gamma, dec):
        report.add("stable_rank", cls.stable_rank, 1)
    elif all(gamma.out_degree(v) == 1 for v in range(gamma.n)) and all(
        gamma.in_degree(v) == 1 for v in range(gamma.n)
    ):
        # disjoint single cycles: matrices over Laurent polynomials
        report.add("stable_rank", cls.stable_rank, 2)
    else:
        report.skip("stable_rank", "no direct route beyond acyclic and single-cycle graphs")


def check_fd_and_ibn(bundle, cls, report, dec=None, *, max_visited=DEFAULT_MAX_VISITED,
                     coeff_cap=DEFAULT_COEFF_CAP, max_mn=DEFAULT_MAX_MN):
    gamma = bundle.gamma
    report.add("has_fd_rep", cls.has_fd_rep, dg.maximal_sink_or_cycle(gamma, dec))
    decision = GraphMonoid(gamma).ibn_test(max_mn, max_visited, coeff_cap)
    report.monoid = decision
    if decision.verdict == IBN:
        report.add("ibn", cls.ibn, True)
    elif decision.verdict == NOT_IBN:
        report.add("ibn", cls.ibn, False)
    else:
        report.skip("ibn", "monoid oracle undecided: " + decision.certificate.get("note", ""))


def check_downward_directed(bundle, report):
    if not bundle.group.is_abelian:
        report.skip("downward_directed", "group is not commutative")
        return
    report.add("downward_directed", True, dg.downward_directed(bundle.delta))


def require_commutative(G):
    if not G.is_abelian:
        raise SkippedNonCommutative(f"{G!r} is not commutative")


def check_integer_window(bundle, report):
    r = bundle.ramification
    gamma = bundle.gamma
    n = bundle.window
    reach = max((abs(c) for c in r.support_elements()), default=0)
    interior = [i for i, k in enumerate(gamma.keys) if abs(k) <= n - reach]
    total = r.degree_sum()
    if not interior:
        report.skip("window_degree_regularity", "window too small for an interior vertex")
        return
    degrees = {gamma.out_degree(v) for v in interior} | {gamma.in_degree(v) for v in interior}
    report.add("window_degree_regularity", [total], sorted(degrees))
    if total:
        sinks, sources, _ = dg.sinks_sources(gamma)
        report.add("window_interior_no_sinks_sources", True,
                   not (set(interior) & (sinks | sources)))
    report.skip("global_properties", "windows are truncations; integer verdicts use formulas only")


def default_window(r: RamificationData):
    return 2 * max((abs(c) for c in r.support_elements()), default=0) + 2


def run_cross_check(bundle: HopfGraphBundle, cls: Classification, *,
                max_visited=DEFAULT_MAX_VISITED, coeff_cap=DEFAULT_COEFF_CAP,
                max_mn=DEFAULT_MAX_MN) -> CrossCheckReport:
    report = CrossCheckReport()
    if isinstance(bundle.group, IntegerGroup):
        if bundle.window is None:
            report.skip("window_degree_regularity", "no window built")
        else:
            check_integer_window(bundle, report)
        return report
    dec = check_structure(bundle, bundle.semigroup, cls, report)
    check_gk(bundle, cls, report, dec)
    check_pis_simple(bundle, cls, report, dec)
    check_stable_rank(bundle, cls, report, dec)
    check_fd_and_ibn(bundle, cls, report, dec, max_visited=max_visited, coeff_cap=coeff_cap,
                     max_mn=max_mn)
    check_downward_directed(bundle, report)
    return report


# ---------------------------------------------------------------------------
# Instances, reports and sweeps
# ---------------------------------------------------------------------------

@dataclass
class Limits:
    max_order: int = DEFAULT_MAX_ORDER
    max_edges: int = DEFAULT_MAX_EDGES
    monoid_budget: int = DEFAULT_MAX_VISITED


def evaluate(G, r: RamificationData, *, window=None, limits: Limits = Limits(),
             run_checks=True):
    """Everything about one instance: (semigroup, classification, bundle, cross-check)."""
    sg = analyze(G, r)
    cls = classify(G, r, sg)
    if isinstance(G, IntegerGroup) and window is None and run_checks:
        window = default_window(r)
    bundle = build_delta_lambda(G, r, sg, window=window, max_edges=limits.max_edges)
    report = run_cross_check(bundle, cls, max_visited=limits.monoid_budget) if run_checks else None
    return sg, cls, bundle, report


def report_json(G, r, sg, cls, report, *, group_spec=None):
    group = G.to_json()
    if group_spec is not None:
        group = {"spec": group_spec, **group}
    doc = {
        "group": group,
        "ramification": r.to_json(),
        "semigroup": sg.to_json(G),
        "classification": cls.to_json(),
    }
    doc["cross_check"] = report.to_json() if report is not None else None
    return doc


def parse_instance(group_spec, ramification, limits: Limits = Limits()):
    G = build_group(group_spec, limits.max_order)
    if isinstance(ramification, dict):
        r = parse_ramification_json(G, ramification)
    else:
        r = parse_ramification(G, ramification or "")
    return G, r


def run_instance(item, limits: Limits = Limits()):
    """One sweep entry -> JSON-ready dict (no timing, so output is reproducible)."""
    group_spec, ram = item["group"], item.get("ramification", "")
    G, r = parse_instance(group_spec, ram, limits)
    sg, cls, bundle, report = evaluate(G, r, limits=limits)
    doc = report_json(G, r, sg, cls, report, group_spec=group_spec)
    if report.disagreements:
        gamma = bundle.gamma
        doc["counterexample"] = {
            "group": group_spec,
            "ramification": str(r),
            "graph": gamma.to_json() if hasattr(gamma, "to_json") else None,
            "disagreements": [t.to_json() for t in report.disagreements],
        }
    return doc


def _ram_text(G, classes, mults):
    return ";".join(f"{G.name(c.representative)}={m}" for c, m in zip(classes, mults) if m)


def default_sweep(groups=DEFAULT_SWEEP_GROUPS, mults=SWEEP_MULTIPLICITIES,
                  max_nonzero=SWEEP_MAX_NONZERO):
    """Manifest entries: every multiplicity vector with at most ``max_nonzero``
    nonzero classes."""
    items = []
    nonzero = [m for m in mults if m]
    for spec in groups:
        G = build_group(spec)
        classes = G.conjugacy_classes
        for k in range(0, max_nonzero + 1):
            for chosen in itertools.combinations(range(len(classes)), k):
                for values in itertools.product(nonzero, repeat=k):
                    vec = [0] * len(classes)
                    for i, m in zip(chosen, values):
                        vec[i] = m
                    items.append({"group": spec, "ramification": _ram_text(G, classes, vec)})
    return items


def _run_indexed(args):
    item, limits = args
    return run_instance(item, limits)


def run_sweep(items, *, jobs=1, limits: Limits = Limits()):
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_indexed, [(it, limits) for it in items], chunksize=8))
    else:
        results = [run_instance(it, limits) for it in items]
    return summarize(results)


def summarize(results):
    triples = sum(len(r["cross_check"]["triples"]) for r in results)
    bad = [r for r in results if r["cross_check"]["disagreements"]]
    ibn_total = sum(1 for r in results if "ibn_oracle" in r["cross_check"])
    ibn_decided = sum(
        1 for r in results
        if r["cross_check"].get("ibn_oracle", {}).get("verdict") in (IBN, NOT_IBN)
    )
    return {
        "summary": {
            "instances": len(results),
            "triples": triples,
            "disagreements": sum(r["cross_check"]["disagreements"] for r in results),
            "instances_with_disagreements": len(bad),
            "ibn_oracle_runs": ibn_total,
            "ibn_oracle_decisive": ibn_decided,
        },
        "counterexamples": [r["counterexample"] for r in bad],
        "instances": results,
    }


def load_manifest(path):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if isinstance(doc, dict) and "instances" in doc:
        doc = doc["instances"]
    if not isinstance(doc, list):
        raise ValueError("manifest must be a JSON list of {group, ramification} objects")
    return doc


def replay_certificate(monoid: GraphMonoid, decision, x=None, y=None) -> bool:
    """Check a monoid certificate: traces must replay, functionals must kill every
    relation and separate the two sides."""
    cert = decision.certificate
    if decision.verdict == NOT_IBN:
        m, n = cert["m"], cert["n"]
        x, y = (m,) * monoid.n, (n,) * monoid.n
    if "trace" in cert:
        return monoid.replay(x, cert["trace"]) == tuple(y)
    if "functional" in cert:
        f, mod = cert["functional"], cert["modulus"]

        def val(vec):
            s = sum(a * b for a, b in zip(f, vec))
            return s % mod if mod else s

        for row in monoid.lattice.rows:
            if val(row) != 0:
                return False
        if decision.verdict == IBN:
            return val((1,) * monoid.n) != 0
        return val([a - b for a, b in zip(x, y)]) != 0
    return False


__all__ = [
    "Triple", "CrossCheckReport", "Limits", "check_structure", "check_gk",
    "check_pis_simple", "check_stable_rank", "check_fd_and_ibn", "check_downward_directed",
    "check_integer_window", "run_cross_check", "evaluate", "report_json", "run_instance",
    "default_sweep", "run_sweep", "summarize", "load_manifest", "replay_certificate",
    "translation_witness", "require_commutative", "EQUAL", "NOT_EQUAL",
]
