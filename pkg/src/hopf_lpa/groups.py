"""Ambient groups: finite groups stored as validated Cayley tables, and the
integer group as a separate symbolic realization.

Elements of a :class:`FiniteGroup` are the row indices ``0 .. order-1`` of its
table; elements of :class:`IntegerGroup` are Python ints.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

import numpy as np

from .errors import InvalidSpec, InvalidTable, NotASubgroup, SizeLimit, UnknownElement

INFINITE = "INFINITE"
TRIVIAL = "TRIVIAL"

DEFAULT_MAX_ORDER = 5040

IDENTITY_WORDS = {"1_G", "1_g", "id", "e", "()"}


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


@dataclass(frozen=True)
class Subgroup:
    members: frozenset
    generator_witnesses: tuple = ()

    @property
    def order(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def sorted_members(self):
        return sorted(self.members)


class FiniteGroup:
    """Finite group given by a Cayley table ``table[i, j] = index of g_i * g_j``."""

    def __init__(
        self,
        names: Iterable[str],
        table,
        *,
        family: str = "table",
        parse_literal: Optional[Callable[[str], Optional[int]]] = None,
        max_order: int = DEFAULT_MAX_ORDER,
    ):
        names = tuple(str(n) for n in names)
        n = len(names)
        if n == 0:
            raise InvalidTable("a group needs at least one element")
        if n > max_order:
            raise SizeLimit(f"group order {n} exceeds the cap {max_order}")
        if len(set(names)) != n:
            dup = next(x for x in names if names.count(x) > 1)
            raise InvalidTable(f"element names are not distinct: {dup!r} repeats")
        try:
            arr = np.asarray(table)
        except (ValueError, TypeError) as exc:
            raise InvalidTable(f"table is not a rectangular array: {exc}") from None
        if arr.shape != (n, n):
            raise InvalidTable(f"table has shape {arr.shape}, expected ({n}, {n})")
        if arr.size and not np.issubdtype(arr.dtype, np.integer):
            raise InvalidTable("table entries must be integers")
        arr = arr.astype(np.int32 if n > 32000 else np.int16 if n > 120 else np.int8, copy=True)
        if arr.min() < 0 or arr.max() >= n:
            raise InvalidTable("table entries must be element indices in range(order)")
        arr.setflags(write=False)

        self.order = n
        self.names = names
        self.table = arr
        self.family = family
        self._parse_literal = parse_literal
        self._index = {name: i for i, name in enumerate(names)}
        self.identity_index = self._find_identity()
        self.inverse = self._find_inverses()
        self._check_associative()

    # -- validation -------------------------------------------------------

    def _find_identity(self):
        ar = np.arange(self.order)
        for e in range(self.order):
            if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar):
                return e
        raise InvalidTable("no two-sided identity element")

    def _find_inverses(self):
        t = self.table
        e = self.identity_index
        rows, cols = np.nonzero(t == e)
        inv = np.full(self.order, -1, dtype=np.int64)
        for i, j in zip(rows.tolist(), cols.tolist()):
            if t[j, i] == e and inv[i] < 0:
                inv[i] = j
        missing = np.nonzero(inv < 0)[0]
        if missing.size:
            raise InvalidTable(f"element {self.names[int(missing[0])]!r} has no two-sided inverse")
        inv.setflags(write=False)
        return inv

    def _check_associative(self):
        # Light's test: elements a with (x a) y == x (a y) for all x, y form a
        # submagma, so checking a generating set suffices.
        t = self.table.astype(np.int64)
        for g in self._magma_generators():
            lhs = t[t[:, g], :]
            rhs = t[:, t[g, :]]
            if not np.array_equal(lhs, rhs):
                x, y = (int(v) for v in np.argwhere(lhs != rhs)[0])
                raise InvalidTable(
                    "operation is not associative: "
                    f"({self.names[x]}*{self.names[g]})*{self.names[y]} != "
                    f"{self.names[x]}*({self.names[g]}*{self.names[y]})"
                )

    def _magma_generators(self):
        t = self.table
        gens = []
        reached = np.zeros(self.order, dtype=bool)
        for x in range(self.order):
            if reached[x]:
                continue
            gens.append(x)
            reached[x] = True
            # a new generator must also act on everything reached so far
            frontier = np.nonzero(reached)[0]
            while frontier.size:
                prods = t[np.ix_(frontier, gens)].ravel()
                new = np.unique(prods[~reached[prods]])
                reached[new] = True
                frontier = new
        return gens

    # -- arithmetic -------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1"""
        return int(self.table[self.table[g, x], self.inverse[g]])

    @property
    def identity(self):
        return self.identity_index

    def elements(self):
        return range(self.order)

    def name(self, a: int) -> str:
        return self.names[a]

    @cached_property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def element(self, literal: str) -> int:
        """Resolve a user-supplied element literal to an index."""
        text = literal.strip()
        if text in self._index:
            return self._index[text]
        if text in IDENTITY_WORDS:
            return self.identity_index
        if self._parse_literal is not None:
            idx = self._parse_literal(text)
            if idx is not None:
                return idx
        raise UnknownElement(f"{literal!r} is not an element of {self.family}")

    # -- conjugacy --------------------------------------------------------

    @cached_property
    def conjugacy_classes(self):
        t = self.table.astype(np.int64)
        # conj[g, x] = g x g^-1
        conj = t[t, self.inverse[:, None]]
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if seen[x]:
                continue
            members = np.unique(conj[:, x])
            seen[members] = True
            members = tuple(int(m) for m in members)
            classes.append(ConjugacyClass(members[0], members))
        return tuple(classes)

    @cached_property
    def _class_index(self):
        out = {}
        for k, cls in enumerate(self.conjugacy_classes):
            for m in cls.members:
                out[m] = k
        return out

    def class_of(self, x: int) -> ConjugacyClass:
        return self.conjugacy_classes[self._class_index[x]]

    def __repr__(self):
        return f"FiniteGroup({self.family!r}, order={self.order})"

    def to_json(self):
        return {"kind": "finite", "spec": self.family, "order": self.order, "elements": list(self.names)}


class IntegerGroup:
    """The additive group of integers. Every conjugacy class is a singleton."""

    family = "integers"
    order = INFINITE
    identity = 0
    is_abelian = True

    def mul(self, a: int, b: int) -> int:
        return a + b

    def inv(self, a: int) -> int:
        return -a

    def conjugate(self, g: int, x: int) -> int:
        return x

    def name(self, a: int) -> str:
        return str(a)

    def element(self, literal: str) -> int:
        text = literal.strip()
        if text in IDENTITY_WORDS:
            return 0
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1].strip()
        try:
            return int(text)
        except ValueError:
            raise UnknownElement(f"{literal!r} is not an integer") from None

    def class_of(self, x: int) -> ConjugacyClass:
        return ConjugacyClass(x, (x,))

    def __eq__(self, other):
        return isinstance(other, IntegerGroup)

    def __hash__(self):
        return hash("integers")

    def __repr__(self):
        return "IntegerGroup()"

    def to_json(self):
        return {"kind": "integers", "spec": "integers", "order": INFINITE}


@dataclass(frozen=True)
class IntegerSubgroup:
    """The subgroup ``modulus * Z`` (``modulus == 0`` is the zero subgroup)."""

    modulus: int
    generator_witnesses: tuple = field(default=(), compare=False)

    @property
    def order(self):
        return 1 if self.modulus == 0 else INFINITE

    def __contains__(self, x):
        return x == 0 if self.modulus == 0 else x % self.modulus == 0

    def describe(self):
        if self.modulus == 0:
            return "{0}"
        if self.modulus == 1:
            return "Z"
        return f"{self.modulus}Z"


AmbientGroup = Union[FiniteGroup, IntegerGroup]


# ---------------------------------------------------------------------------
# Subgroups, normality, cosets
# ---------------------------------------------------------------------------

def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = sorted(set(gens))
    steps = sorted(set(gens) | {G.inv(g) for g in gens})
    members = {G.identity_index}
    frontier = [G.identity_index]
    while frontier:
        nxt = []
        for x in frontier:
            for g in steps:
                y = G.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(frozenset(members), tuple(gens))


def _check_subgroup(G: FiniteGroup, H: Subgroup):
    mem = H.members
    if G.identity_index not in mem:
        raise NotASubgroup("set does not contain the identity")
    for a in mem:
        if G.inv(a) not in mem:
            raise NotASubgroup(f"not closed under inverse at {G.name(a)}")
        for b in mem:
            if G.mul(a, b) not in mem:
                raise NotASubgroup(f"not closed under product at {G.name(a)}*{G.name(b)}")


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    _check_subgroup(G, H)
    for g in G.elements():
        for h in H.members:
            if G.conjugate(g, h) not in H.members:
                return False
    return True


def coset_count(G: FiniteGroup, H: Subgroup) -> int:
    _check_subgroup(G, H)
    q, rem = divmod(G.order, H.order)
    assert rem == 0, "Lagrange violated"
    return q


def conjugacy_classes(G: AmbientGroup):
    if isinstance(G, IntegerGroup):
        raise InvalidSpec("the integer group has infinitely many classes; use class_of")
    return list(G.conjugacy_classes)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def _cyclic(n: int, max_order: int) -> FiniteGroup:
    a = np.arange(n)
    table = (a[:, None] + a[None, :]) % n

    def parse(text):
        try:
            return int(text) % n
        except ValueError:
            return None

    return FiniteGroup([str(i) for i in range(n)], table, family=f"cyclic:{n}",
                       parse_literal=parse, max_order=max_order)


def _trivial(max_order: int) -> FiniteGroup:
    return FiniteGroup(["1_G"], [[0]], family="trivial",
                       parse_literal=lambda t: 0 if t in ("1", "0") else None,
                       max_order=max_order)


def _cycle_name(perm) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + "".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "id"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str, degree: int):
    """Permutation (tuple, 0-based one-line) from cycle notation, or None."""
    stripped = text.replace(" ", "")
    if not stripped or _CYCLE_RE.sub("", stripped) != "":
        return None
    perm = list(range(degree))
    for body in reversed(_CYCLE_RE.findall(text)):
        body = body.strip()
        if not body:
            continue
        if "," in body or " " in body:
            tokens = [t for t in re.split(r"[,\s]+", body) if t]
        else:
            tokens = list(body)
        try:
            pts = [int(t) - 1 for t in tokens]
        except ValueError:
            return None
        if len(set(pts)) != len(pts) or any(p < 0 or p >= degree for p in pts):
            return None
        cyc = dict(zip(pts, pts[1:] + pts[:1]))
        # compose: apply this cycle after the ones to its right
        perm = [cyc.get(perm[i], perm[i]) for i in range(degree)]
    return tuple(perm)


def _symmetric(n: int, max_order: int) -> FiniteGroup:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    k = len(perms)
    if k > max_order:
        raise SizeLimit(f"group order {k} exceeds the cap {max_order}")
    weights = n ** np.arange(n - 1, -1, -1)
    code = {int(c): i for i, c in enumerate(perms @ weights)}
    # (p*q)(i) = p(q(i))
    comp = perms[np.arange(k)[:, None, None], perms[None, :, :]]
    table = np.vectorize(code.__getitem__, otypes=[np.int64])(comp @ weights)
    names = [_cycle_name(p) for p in perms.tolist()]

    def parse(text):
        perm = _parse_cycles(text, n)
        if perm is None:
            return None
        return code[int(np.dot(perm, weights))]

    return FiniteGroup(names, table, family=f"symmetric:{n}", parse_literal=parse,
                       max_order=max_order)


_DIHEDRAL_TOKEN = re.compile(r"\s*([rs])\s*(?:\^\s*(-?\d+))?\s*[*·]?")


def _dihedral(n: int, max_order: int) -> FiniteGroup:
    # element r^i s^j has index i + n*j
    order = 2 * n

    def mul(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        return ((i + (k if j == 0 else -k)) % n) + n * ((j + l) % 2)

    table = [[mul(a, b) for b in range(order)] for a in range(order)]

    def name(a):
        i, j = a % n, a // n
        rpart = "" if i == 0 else "r" if i == 1 else f"r^{i}"
        spart = "s" if j else ""
        if rpart and spart:
            return f"{rpart} {spart}"
        return rpart or spart or "e"

    def parse(text):
        pos = 0
        acc = 0
        compact = text.strip()
        if not compact:
            return None
        while pos < len(compact):
            m = _DIHEDRAL_TOKEN.match(compact, pos)
            if not m or m.end() == pos:
                return None
            exp = int(m.group(2)) if m.group(2) else 1
            gen = 1 if m.group(1) == "r" else n
            power = 0
            for _ in range(exp % (n if gen == 1 else 2)):
                power = mul(power, gen)
            acc = mul(acc, power)
            pos = m.end()
        return acc

    return FiniteGroup([name(a) for a in range(order)], table, family=f"dihedral:{n}",
                       parse_literal=parse, max_order=max_order)


def _split_top_level(text: str):
    depth = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            return text[:i], text[i + 1:]
    return None


def _product(A: FiniteGroup, B: FiniteGroup, max_order: int) -> FiniteGroup:
    order = A.order * B.order
    if order > max_order:
        raise SizeLimit(f"group order {order} exceeds the cap {max_order}")
    m = B.order
    ta = A.table.astype(np.int64)
    tb = B.table.astype(np.int64)
    table = (ta[:, None, :, None] * m + tb[None, :, None, :]).reshape(order, order)
    names = [f"({a}, {b})" for a in A.names for b in B.names]

    def parse(text):
        t = text.strip()
        if len(t) < 2 or (t[0], t[-1]) not in (("(", ")"), ("[", "]")):
            return None
        parts = _split_top_level(t[1:-1])
        if parts is None:
            return None
        try:
            return A.element(parts[0]) * m + B.element(parts[1])
        except UnknownElement:
            return None

    return FiniteGroup(names, table, family=f"product({A.family}, {B.family})",
                       parse_literal=parse, max_order=max_order)


def load_table(path, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidSpec(f"cannot read table file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidTable(f"table file {path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "names" not in doc or "table" not in doc:
        raise InvalidTable('table file must be an object with "names" and "table"')
    return FiniteGroup(doc["names"], doc["table"], family=f"table:{path}", max_order=max_order)


class _SpecParser:
    """Recursive-descent parser for group descriptors."""

    def __init__(self, text: str, max_order: int):
        self.text = text
        self.pos = 0
        self.depth = 0
        self.max_order = max_order

    def fail(self, msg):
        raise InvalidSpec(msg, source=self.text, position=min(self.pos, len(self.text)))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def word(self):
        self.skip_ws()
        m = re.compile(r"[A-Za-z_]+").match(self.text, self.pos)
        if not m:
            self.fail("expected a group family name")
        self.pos = m.end()
        return m.group(0)

    def expect(self, ch):
        self.skip_ws()
        if not self.text.startswith(ch, self.pos):
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def number(self):
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.fail("expected a positive integer")
        self.pos = m.end()
        return int(m.group(0))

    def group(self) -> FiniteGroup:
        start = self.pos
        fam = self.word()
        if fam == "trivial":
            return _trivial(self.max_order)
        if fam == "product":
            self.expect("(")
            self.depth += 1
            a = self.group()
            self.expect(",")
            b = self.group()
            self.expect(")")
            self.depth -= 1
            return _product(a, b, self.max_order)
        if fam == "table":
            self.expect(":")
            end = len(self.text)
            if self.depth:
                m = re.compile(r"[,)]").search(self.text, self.pos)
                end = m.start() if m else end
            path = self.text[self.pos:end].strip()
            self.pos = end
            if not path:
                self.fail("expected a file path after table:")
            return load_table(path, self.max_order)
        if fam not in ("cyclic", "symmetric", "dihedral"):
            self.pos = start
            self.fail(f"unknown group family {fam!r}")
        self.expect(":")
        num_pos = self.pos
        n = self.number()
        if fam == "cyclic":
            if n < 1:
                self.pos = num_pos
                self.fail("cyclic:N needs N >= 1")
            if n > self.max_order:
                raise SizeLimit(f"group order {n} exceeds the cap {self.max_order}")
            return _cyclic(n, self.max_order)
        if fam == "symmetric":
            if not 2 <= n <= 6:
                self.pos = num_pos
                self.fail("symmetric:N needs 2 <= N <= 6")
            if math.factorial(n) > self.max_order:
                raise SizeLimit(f"group order {math.factorial(n)} exceeds the cap {self.max_order}")
            return _symmetric(n, self.max_order)
        if n < 2:
            self.pos = num_pos
            self.fail("dihedral:N needs N >= 2")
        if 2 * n > self.max_order:
            raise SizeLimit(f"group order {2 * n} exceeds the cap {self.max_order}")
        return _dihedral(n, self.max_order)


def build_finite_group(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    parser = _SpecParser(spec, max_order)
    G = parser.group()
    parser.skip_ws()
    if parser.pos != len(spec):
        parser.fail("unexpected trailing text")
    return G


def build_group(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> AmbientGroup:
    """Like :func:`build_finite_group`, but also accepts ``integers`` (or ``Z``)."""
    if spec.strip() in ("integers", "Z", "ℤ", "integer"):
        return IntegerGroup()
    return build_finite_group(spec, max_order)
