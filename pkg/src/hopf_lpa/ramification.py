"""Ramification data: finitely supported multiplicities on conjugacy classes."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    ConflictingMultiplicity,
    InvalidSpec,
    NegativeMultiplicity,
    SizeLimit,
    UnknownElement,
)
from .groups import AmbientGroup, ConjugacyClass, IntegerGroup

DEFAULT_MAX_MULTIPLICITY = 8


@dataclass(frozen=True)
class RamificationData:
    """``entries`` pairs each supported class with its positive multiplicity,
    ordered by the class's canonical (smallest) representative."""

    group: AmbientGroup
    entries: tuple = ()

    def __post_init__(self):
        if any(mult <= 0 for _, mult in self.entries):
            raise ValueError("zero multiplicities must be normalized away")

    def is_zero(self):
        return not self.entries

    def multiplicity(self, cls: ConjugacyClass) -> int:
        for c, m in self.entries:
            if c.representative == cls.representative:
                return m
        return 0

    def degree_sum(self):
        """Number of edges leaving (and entering) every vertex of the Hopf graph."""
        return sum(m * len(c) for c, m in self.entries)

    def support_elements(self) -> frozenset:
        return frozenset(x for c, _ in self.entries for x in c.members)

    def steps(self):
        """``(c, multiplicity)`` for every element c of every supported class."""
        return [(x, m) for c, m in self.entries for x in c.members]

    def __str__(self):
        if not self.entries:
            return "0"
        G = self.group
        terms = []
        for c, m in self.entries:
            label = f"[{G.name(c.representative)}]"
            terms.append(label if m == 1 else f"{m}{label}")
        return " + ".join(terms)

    def to_json(self):
        G = self.group
        return {
            "text": str(self),
            "degree_sum": self.degree_sum(),
            "entries": [
                {
                    "rep": G.name(c.representative),
                    "mult": m,
                    "class": [G.name(x) for x in c.members],
                }
                for c, m in self.entries
            ],
        }


def from_multiplicities(G: AmbientGroup, pairs, *, max_multiplicity=DEFAULT_MAX_MULTIPLICITY):
    """Build ramification data from ``(element, multiplicity)`` pairs."""
    seen = {}
    for x, mult in pairs:
        cls = G.class_of(x)
        _admit(seen, cls, mult, max_multiplicity, G)
    return _normalize(G, seen)


def _admit(seen, cls, mult, cap, G, *, source=None, position=None):
    if mult < 0:
        raise NegativeMultiplicity(f"negative multiplicity {mult}", source=source, position=position)
    if mult > cap:
        raise SizeLimit(f"multiplicity {mult} exceeds the cap {cap}", source=source, position=position)
    key = cls.representative
    if key in seen and seen[key][1] != mult:
        raise ConflictingMultiplicity(
            f"class of {G.name(key)} given multiplicities {seen[key][1]} and {mult}",
            source=source,
            position=position,
        )
    seen[key] = (cls, mult)


def _normalize(G, seen):
    entries = sorted(((c, m) for c, m in seen.values() if m > 0), key=lambda e: e[0].representative)
    return RamificationData(G, tuple(entries))


_MULT_RE = re.compile(r"\s*([+-]?\d+)\s*$")


def parse_ramification(G: AmbientGroup, text: str, *, max_multiplicity=DEFAULT_MAX_MULTIPLICITY):
    """Parse ``rep=mult; rep=mult; ...``. A term without ``=mult`` means mult 1."""
    seen = {}
    offset = 0
    for term in text.split(";"):
        start = offset
        offset += len(term) + 1
        if not term.strip():
            continue
        lead = len(term) - len(term.lstrip())
        if "=" in term:
            lhs, rhs = term.rsplit("=", 1)
            m = _MULT_RE.match(rhs)
            if not m:
                raise InvalidSpec(
                    f"multiplicity {rhs.strip()!r} is not an integer",
                    source=text,
                    position=start + len(lhs) + 1 + (len(rhs) - len(rhs.lstrip())),
                )
            mult = int(m.group(1))
            mult_pos = start + len(lhs) + 1 + (len(rhs) - len(rhs.lstrip()))
        else:
            lhs, mult, mult_pos = term, 1, start + lead
        if not lhs.strip():
            raise InvalidSpec("missing element before '='", source=text, position=start + lead)
        try:
            x = G.element(lhs)
        except UnknownElement as exc:
            raise UnknownElement(exc.message, source=text, position=start + lead) from None
        _admit(seen, G.class_of(x), mult, max_multiplicity, G, source=text, position=mult_pos)
    return _normalize(G, seen)


def parse_ramification_json(G: AmbientGroup, doc, *, max_multiplicity=DEFAULT_MAX_MULTIPLICITY):
    """Parse ``{"entries": [{"rep": "(1 2 3)", "mult": 1}, ...]}``."""
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise InvalidSpec('ramification JSON must be an object with an "entries" list')
    seen = {}
    for k, item in enumerate(doc["entries"]):
        if not isinstance(item, dict) or "rep" not in item:
            raise InvalidSpec(f'entry {k} must be an object with "rep" and "mult"')
        mult = item.get("mult", 1)
        if not isinstance(mult, int) or isinstance(mult, bool):
            raise InvalidSpec(f"entry {k}: multiplicity must be an integer")
        if isinstance(G, IntegerGroup) and isinstance(item["rep"], int):
            x = item["rep"]
        else:
            x = G.element(str(item["rep"]))
        _admit(seen, G.class_of(x), mult, max_multiplicity, G)
    return _normalize(G, seen)


def degree_sum(r: RamificationData):
    return r.degree_sum()


def support_elements(r: RamificationData) -> frozenset:
    return r.support_elements()

