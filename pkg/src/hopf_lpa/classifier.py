"""Closed-form classification of the Leavitt path algebra of a Hopf graph,
read off from the semigroup report and the degree sum.

Every function here is a formula in the flags of the generated subsemigroup S,
the generated subgroup and the degree sum; no graph is built.  The direct
graph computations that confirm these formulas live in ``cross_check``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotApplicable
from .groups import INFINITE, IntegerGroup
from .ramification import RamificationData
from .semigroup import SemigroupReport, analyze

ZERO = "ZERO"
ONE = "ONE"
NOT_APPLICABLE = "NOT_APPLICABLE"
NONE = None


@dataclass(frozen=True)
class Classification:
    component_count: object
    scc_count_delta: object
    gk_dim: str
    stable_rank: object  # 1, 2 or INFINITE
    purely_infinite_simple: bool
    simple: object  # bool or NOT_APPLICABLE
    has_fd_rep: bool
    fd_category: object
    ibn: object
    ugn: object
    lpa_structure: object
    delta_is_scc_of_gamma: bool

    def to_json(self):
        return {
            "component_count": self.component_count,
            "scc_count_delta": self.scc_count_delta,
            "gk_dim": self.gk_dim,
            "stable_rank": self.stable_rank,
            "purely_infinite_simple": self.purely_infinite_simple,
            "simple": self.simple,
            "has_fd_rep": self.has_fd_rep,
            "fd_category": self.fd_category,
            "ibn": self.ibn,
            "ugn": self.ugn,
            "lpa_structure": self.lpa_structure,
            "delta_is_scc_of_gamma": self.delta_is_scc_of_gamma,
        }


def gk_dimension(sg: SemigroupReport, total: int) -> str:
    if sg.is_submonoid and total >= 2:
        return INFINITE
    if sg.is_submonoid and total == 1:
        return ONE
    return ZERO


def purely_infinite_simple(sg: SemigroupReport, total: int) -> bool:
    return sg.equals_whole_group and total >= 2


def simplicity_finite(sg: SemigroupReport, total: int, G=None) -> bool:
    if isinstance(G, IntegerGroup):
        raise NotApplicable("simplicity formula is stated for finite groups")
    if total == 0:
        raise NotApplicable("zero ramification gives a disjoint union of points")
    return purely_infinite_simple(sg, total)


def stable_rank(sg: SemigroupReport, total: int):
    if not sg.is_submonoid:
        return 1
    if total >= 2 and sg.is_subgroup and sg.s_order != INFINITE:
        return INFINITE
    return 2


def _copies(G, sg: SemigroupReport) -> str:
    """Exponent naming the set of cosets of the generated subgroup."""
    if isinstance(G, IntegerGroup):
        return f"ℤ:{sg.delta0.modulus}" if sg.delta0.modulus else "ℤ"
    return str(sg.coset_count_delta0)


def fd_representations(sg: SemigroupReport, total: int, G):
    """``(has, category)``; the category is a descriptor dict or None."""
    if total == 0:
        copies = "ℤ" if isinstance(G, IntegerGroup) else G.order
        return True, {"text": "(M_K^fd)^(G)", "base": "K", "copies": copies}
    if total == 1 and sg.is_submonoid:
        return True, {
            "text": f"(M_{{K[x,x⁻¹]}}^fd)^({_copies(G, sg)} cosets)",
            "base": "K[x,x⁻¹]",
            "copies": sg.coset_count_delta0,
            "s_order": sg.s_order,
        }
    return False, NONE


def ibn_ugn_finite(total: int, G):
    if isinstance(G, IntegerGroup):
        raise NotApplicable("IBN criterion is stated for finite groups")
    return total <= 1, total <= 1


def lpa_structure(sg: SemigroupReport, total: int, G) -> str:
    if total == 0:
        return "K^(ℤ)" if isinstance(G, IntegerGroup) else f"K^({G.order})"
    copies = _copies(G, sg)
    if total == 1 and sg.is_submonoid:
        return f"M_{sg.s_order}(K[x,x⁻¹])^({copies})"
    return f"L_K(Δ)^({copies})"


def classify(G, r: RamificationData, sg: SemigroupReport = None) -> Classification:
    sg = sg or analyze(G, r)
    total = r.degree_sum()
    pis = purely_infinite_simple(sg, total)
    try:
        simple = simplicity_finite(sg, total, G)
    except NotApplicable:
        simple = True if pis else NOT_APPLICABLE
    try:
        ibn, ugn = ibn_ugn_finite(total, G)
    except NotApplicable:
        ibn = ugn = NOT_APPLICABLE
    has_fd, category = fd_representations(sg, total, G)
    return Classification(
        component_count=sg.coset_count_delta0,
        scc_count_delta=sg.scc_count_delta,
        gk_dim=gk_dimension(sg, total),
        stable_rank=stable_rank(sg, total),
        purely_infinite_simple=pis,
        simple=simple,
        has_fd_rep=has_fd,
        fd_category=category,
        ibn=ibn,
        ugn=ugn,
        lpa_structure=lpa_structure(sg, total, G),
        delta_is_scc_of_gamma=total == 0 or sg.is_subgroup,
    )


def explain(G, r: RamificationData, sg: SemigroupReport, cls: Classification):
    """Human readable lines: each verdict with the condition that decided it."""
    total = r.degree_sum()
    sub = "S submonoid" if sg.is_submonoid else "S not a submonoid"
    def sym(v):
        return "∞" if v == INFINITE else str(v)

    if cls.gk_dim == INFINITE:
        gk_why = "degree sum ≥ 2 and S submonoid"
    elif cls.gk_dim == ONE:
        gk_why = "degree sum = 1 and S submonoid"
    else:
        gk_why = "otherwise (" + ("degree sum 0" if total == 0 else sub) + ")"
    if cls.stable_rank == 1:
        sr_why = "S not a submonoid"
    elif cls.stable_rank == INFINITE:
        sr_why = "degree sum ≥ 2 and S a finite subgroup"
    else:
        sr_why = "otherwise"
    gk_value = {ZERO: "0", ONE: "1", INFINITE: "∞"}[cls.gk_dim]
    lines = [
        f"group: {G!r}",
        f"ramification: {r}  (degree sum {total})",
        f"S: {'whole group' if sg.equals_whole_group else sub}"
        + (", subgroup" if sg.is_subgroup else ""),
        f"connected components = {sym(cls.component_count)}  (index of the generated subgroup)",
        f"SCCs of the component = {sym(cls.scc_count_delta)}",
        f"GK dimension = {gk_value}  ({gk_why})",
        f"stable rank = {sym(cls.stable_rank)}  ({sr_why})",
        f"purely infinite simple = {cls.purely_infinite_simple}  (S = G and degree sum ≥ 2)",
        f"simple = {cls.simple}",
        "finite-dimensional representations = "
        + (f"yes, category {cls.fd_category['text']}" if cls.has_fd_rep else "no")
        + "  (ramification zero, or degree sum 1 with S submonoid)",
        f"IBN = {cls.ibn}, UGN = {cls.ugn}  (degree sum ≤ 1)",
        f"structure: {cls.lpa_structure}",
    ]
    return lines
