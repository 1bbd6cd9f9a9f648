"""The subsemigroup generated by the support, the subgroup it generates, and
its group of units, for finite groups (by closure) and for the integers (by
arithmetic)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .groups import (
    INFINITE,
    TRIVIAL,
    FiniteGroup,
    IntegerGroup,
    IntegerSubgroup,
    Subgroup,
    coset_count,
    generated_subgroup,
    is_normal,
)
from .ramification import RamificationData


@dataclass(frozen=True)
class SemigroupReport:
    s_members: object  # frozenset of indices, or a descriptor dict for Z
    s_order: object  # int or INFINITE
    is_submonoid: bool
    is_subgroup: bool
    equals_whole_group: bool
    delta0: object  # Subgroup or IntegerSubgroup
    lambda0: object  # Subgroup, IntegerSubgroup or TRIVIAL
    delta0_is_normal: bool
    lambda0_is_normal: bool
    coset_count_delta0: object
    scc_count_delta: object

    def to_json(self, G):
        def sub(H):
            if H == TRIVIAL:
                return TRIVIAL
            if isinstance(H, IntegerSubgroup):
                return {"modulus": H.modulus, "description": H.describe(), "order": H.order}
            return {"order": H.order, "members": [G.name(x) for x in sorted(H.members)]}

        if isinstance(self.s_members, frozenset):
            s = [G.name(x) for x in sorted(self.s_members)]
        else:
            s = self.s_members
        return {
            "s_members": s,
            "s_order": self.s_order,
            "is_submonoid": self.is_submonoid,
            "is_subgroup": self.is_subgroup,
            "equals_whole_group": self.equals_whole_group,
            "delta0": sub(self.delta0),
            "lambda0": sub(self.lambda0),
            "delta0_is_normal": self.delta0_is_normal,
            "lambda0_is_normal": self.lambda0_is_normal,
            "coset_count_delta0": self.coset_count_delta0,
            "scc_count_delta": self.scc_count_delta,
        }


def semigroup_closure_finite(G: FiniteGroup, gens) -> frozenset:
    """Least product-closed subset of G containing ``gens``."""
    gens = sorted(set(gens))
    members = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(members)


def integer_semigroup_flags(gens):
    """``(is_submonoid, is_subgroup, delta0_modulus)`` for the subsemigroup of Z
    generated by ``gens``."""
    gens = set(gens)
    has_pos = any(g > 0 for g in gens)
    has_neg = any(g < 0 for g in gens)
    mixed = has_pos and has_neg
    is_submonoid = 0 in gens or mixed
    is_subgroup = bool(gens) and (gens <= {0} or mixed)
    modulus = reduce(math.gcd, (abs(g) for g in gens), 0)
    return is_submonoid, is_subgroup, modulus


def integer_semigroup_contains(gens, target: int) -> bool:
    """Membership of ``target`` in the subsemigroup of Z generated by ``gens``."""
    gens = set(gens)
    if not gens:
        return False
    is_submonoid, is_subgroup, d = integer_semigroup_flags(gens)
    if target == 0:
        return is_submonoid
    if is_subgroup:
        return d != 0 and target % d == 0
    steps = sorted(abs(g) for g in gens if g != 0)
    if not steps or (target > 0) != any(g > 0 for g in gens):
        return False
    t = abs(target)
    if t % d:
        return False
    steps = [s // d for s in steps]
    t //= d
    # beyond this bound every multiple of d is representable
    bound = steps[0] * steps[-1]
    if t > bound:
        return True
    reach = [False] * (t + 1)
    reach[0] = True
    for k in range(1, t + 1):
        reach[k] = any(s <= k and reach[k - s] for s in steps)
    return reach[t]


def unit_group(G: FiniteGroup, S) -> object:
    """Largest subgroup of G inside the product-closed set S, or TRIVIAL when
    S is not a submonoid."""
    S = frozenset(S)
    if G.identity_index not in S:
        return TRIVIAL
    return Subgroup(frozenset(s for s in S if G.inv(s) in S), tuple(sorted(S)))


def analyze(G, r: RamificationData) -> SemigroupReport:
    if isinstance(G, IntegerGroup):
        return _analyze_integers(r)
    gens = r.support_elements()
    S = semigroup_closure_finite(G, gens)
    is_submonoid = G.identity_index in S
    is_subgroup = is_submonoid and all(G.inv(s) in S for s in S)
    delta0 = generated_subgroup(G, gens)
    lambda0 = unit_group(G, S)
    cosets = coset_count(G, delta0)
    if is_submonoid:
        scc_count = delta0.order // lambda0.order
        lam_normal = is_normal(G, lambda0)
    else:
        scc_count = delta0.order
        lam_normal = True
    return SemigroupReport(
        s_members=S,
        s_order=len(S),
        is_submonoid=is_submonoid,
        is_subgroup=is_subgroup,
        equals_whole_group=len(S) == G.order,
        delta0=delta0,
        lambda0=lambda0,
        delta0_is_normal=is_normal(G, delta0),
        lambda0_is_normal=lam_normal,
        coset_count_delta0=cosets,
        scc_count_delta=scc_count,
    )


def _describe_integer_semigroup(gens, is_submonoid, is_subgroup, d):
    gens = sorted(gens)
    if not gens:
        text = "empty"
    elif is_subgroup:
        text = "{0}" if d == 0 else ("Z" if d == 1 else f"{d}Z")
    else:
        text = "subsemigroup of Z generated by {" + ", ".join(map(str, gens)) + "}"
    return {"generators": gens, "description": text}


def _analyze_integers(r: RamificationData) -> SemigroupReport:
    gens = r.support_elements()
    is_submonoid, is_subgroup, d = integer_semigroup_flags(gens)
    delta0 = IntegerSubgroup(d, tuple(sorted(gens)))
    if is_subgroup:
        lambda0 = delta0
    elif is_submonoid:
        # all generators share one sign, so only 0 is invertible
        lambda0 = IntegerSubgroup(0)
    else:
        lambda0 = TRIVIAL
    cosets = d if d else INFINITE
    if is_subgroup:
        scc_count = 1
    elif is_submonoid:
        scc_count = INFINITE  # |dZ / {0}|
    else:
        scc_count = delta0.order
    s_finite = set(gens) <= {0}
    return SemigroupReport(
        s_members=_describe_integer_semigroup(gens, is_submonoid, is_subgroup, d),
        s_order=len(gens) if s_finite else INFINITE,
        is_submonoid=is_submonoid,
        is_subgroup=is_subgroup,
        equals_whole_group=is_subgroup and d == 1,
        delta0=delta0,
        lambda0=lambda0,
        delta0_is_normal=True,
        lambda0_is_normal=True,
        coset_count_delta0=cosets,
        scc_count_delta=scc_count,
    )
