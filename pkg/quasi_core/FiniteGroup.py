import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .Errors import (GroupMismatch, GroupTooLarge, InvalidParameter, NoIdentity, NoInverse,
                     NotAssociative, NotLatinSquare)
from .QuasialgConfig import DEFAULT_CONFIG

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Handle into a FiniteGroup; index is the canonical enumeration position."""

    group: "FiniteGroup"
    index: int

    @property
    def label(self):
        return self.group.labels[self.index]

    @property
    def residues(self):
        return self.group.residues(self.index)

    def __mul__(self, other):
        return mul(self, other)

    def inverse(self):
        return inverse(self)

    def is_identity(self):
        return self.index == self.group.identity

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and other.index == self.index
                and (other.group is self.group or other.group == self.group))

    def __hash__(self):
        return hash(self.index)

    def __repr__(self):
        return f"GroupElement({self.label})"


class FiniteGroup:
    """A validated finite group held as a Cayley table of element indices."""

    def __init__(self, table, identity=0, labels=None, factors=None, max_order=None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise InvalidParameter(f"Cayley table must be square, got shape {table.shape}")
        n = table.shape[0]
        if n < 1:
            raise InvalidParameter("a group needs at least one element")
        limit = max_order or DEFAULT_CONFIG.max_group_order
        if n > limit:
            raise GroupTooLarge(f"|G| = {n} exceeds the supported bound {limit}")
        if not 0 <= identity < n:
            raise NoIdentity(f"identity index {identity} out of range")
        if table.min() < 0 or table.max() >= n:
            raise NotLatinSquare("table entries must be element indices 0..n-1")

        self.table = table
        self.identity = int(identity)
        self.factors = tuple(factors) if factors else None
        self.labels = list(labels) if labels else [str(i) for i in range(n)]
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise InvalidParameter("group labels must be distinct, one per element")
        self.mult = table.tolist()
        self._validate()
        self.inverses = self._find_inverses()
        self._by_label = {lab: i for i, lab in enumerate(self.labels)}

    # --------------------------
    # VALIDATION
    # --------------------------
    def _validate(self):
        n = self.order
        target = np.arange(n)
        rows = np.sort(self.table, axis=1)
        bad_rows = np.where((rows != target).any(axis=1))[0]
        if bad_rows.size:
            raise NotLatinSquare("row is not a permutation", witness=("row", self.labels[bad_rows[0]]))
        cols = np.sort(self.table, axis=0)
        bad_cols = np.where((cols != target[:, None]).any(axis=0))[0]
        if bad_cols.size:
            raise NotLatinSquare("column is not a permutation",
                                 witness=("column", self.labels[bad_cols[0]]))

        e = self.identity
        if not ((self.table[e, :] == target).all() and (self.table[:, e] == target).all()):
            raise NoIdentity(f"{self.labels[e]} is not a two-sided identity")

        # (gh)k == g(hk), one g-slice at a time
        for g in range(n):
            left = self.table[self.table[g], :]
            right = self.table[g][self.table]
            diff = np.argwhere(left != right)
            if diff.size:
                h, k = diff[0]
                raise NotAssociative("Cayley table is not associative",
                                     witness=(self.labels[g], self.labels[h], self.labels[k]))
        logger.debug("validated group of order %d", n)

    def _find_inverses(self):
        inverses = []
        e = self.identity
        for g in range(self.order):
            hits = np.where(self.table[g] == e)[0]
            if hits.size == 0 or self.table[hits[0], g] != e:
                raise NoInverse(f"{self.labels[g]} has no two-sided inverse", witness=self.labels[g])
            inverses.append(int(hits[0]))
        return inverses

    # --------------------------
    # CONSTRUCTORS
    # --------------------------
    @classmethod
    def from_table(cls, table, identity_index=0, labels=None):
        return cls(table, identity=identity_index, labels=labels)

    @classmethod
    def product(cls, *orders):
        """Z_{n1} x ... x Z_{nk}, elements ordered lexicographically on residue tuples."""
        if not orders or any(int(n) < 1 for n in orders):
            raise InvalidParameter(f"cyclic orders must be positive, got {orders}")
        orders = tuple(int(n) for n in orders)
        elements = list(itertools.product(*[range(n) for n in orders]))
        index = {t: i for i, t in enumerate(elements)}
        table = [[index[tuple((a + b) % n for a, b, n in zip(x, y, orders))] for y in elements]
                 for x in elements]
        if len(orders) == 1:
            labels = [str(t[0]) for t in elements]
        else:
            labels = ["(" + ",".join(str(r) for r in t) + ")" for t in elements]
        return cls(table, identity=0, labels=labels, factors=orders)

    # --------------------------
    # ACCESS
    # --------------------------
    @property
    def order(self):
        return len(self.mult)

    def __len__(self):
        return self.order

    def elements(self):
        return [GroupElement(self, i) for i in range(self.order)]

    def element(self, ref):
        """Element by index, label string, residue tuple or GroupElement."""
        if isinstance(ref, GroupElement):
            if ref.group is not self and ref.group != self:
                raise GroupMismatch("element belongs to another group")
            return ref
        return GroupElement(self, self.index_of(ref))

    def index_of(self, ref):
        if isinstance(ref, GroupElement):
            return self.element(ref).index
        if isinstance(ref, tuple) and self.factors:
            key = ref[0] if len(self.factors) == 1 else ref
            ref = str(key) if len(self.factors) == 1 else "(" + ",".join(str(int(r)) for r in ref) + ")"
        if isinstance(ref, str):
            key = ref.replace(" ", "")
            if key in self._by_label:
                return self._by_label[key]
            raise InvalidParameter(f"no group element labelled {ref!r}")
        if isinstance(ref, (int, np.integer)):
            if self.factors and len(self.factors) == 1:
                return int(ref) % self.order
            if 0 <= ref < self.order:
                return int(ref)
        raise InvalidParameter(f"cannot resolve group element {ref!r}")

    def residues(self, index):
        if not self.factors:
            return (index,)
        out = []
        for n in reversed(self.factors):
            out.append(index % n)
            index //= n
        return tuple(reversed(out))

    def mul_index(self, g, h):
        return self.mult[g][h]

    def inverse_index(self, g):
        return self.inverses[g]

    def is_abelian(self):
        return bool((self.table == self.table.T).all())

    def is_trivial(self):
        return self.order == 1

    def generators(self):
        """Greedy generating set, in enumeration order."""
        gens = []
        reached = {self.identity}
        for g in range(self.order):
            if g in reached:
                continue
            gens.append(g)
            frontier = list(reached)
            while frontier:
                nxt = []
                for x in frontier:
                    for s in gens:
                        y = self.mult[x][s]
                        if y not in reached:
                            reached.add(y)
                            nxt.append(y)
                frontier = nxt
        return gens

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (self is other or (self.identity == other.identity and self.labels == other.labels
                                  and self.mult == other.mult))

    def __hash__(self):
        return hash((self.order, self.identity, tuple(self.labels)))

    def __repr__(self):
        if self.factors:
            return "FiniteGroup(" + " x ".join(f"Z{n}" for n in self.factors) + ")"
        return f"FiniteGroup(order={self.order})"


def cyclic(n):
    return FiniteGroup.product(n)


def trivial_group():
    return FiniteGroup.product(1)


def direct_product(g1, g2):
    """G1 x G2; the second factor varies fastest in the enumeration."""
    if g1.factors and g2.factors:
        return FiniteGroup.product(*g1.factors, *g2.factors)
    n1, n2 = g1.order, g2.order
    table = [[g1.mult[a][c] * n2 + g2.mult[b][d] for c in range(n1) for d in range(n2)]
             for a in range(n1) for b in range(n2)]
    labels = [f"({x},{y})" for x in g1.labels for y in g2.labels]
    return FiniteGroup(table, identity=g1.identity * n2 + g2.identity, labels=labels)


def elements(group):
    return group.elements()


def is_abelian(group):
    return group.is_abelian()


def mul(g, h):
    if g.group is not h.group and g.group != h.group:
        raise GroupMismatch(f"{g} and {h} live in different groups")
    return GroupElement(g.group, g.group.mult[g.index][h.index])


def inverse(g):
    return GroupElement(g.group, g.group.inverses[g.index])


def parse_product(text, max_order=None):
    """'Z2 x Z2 x Z3' -> FiniteGroup."""
    orders = []
    for part in text.replace("×", "x").split("x"):
        part = part.strip()
        if not part.upper().startswith("Z") or not part[1:].isdigit():
            raise InvalidParameter(f"cannot read cyclic factor {part!r}")
        orders.append(int(part[1:]))
    group = FiniteGroup.product(*orders)
    if max_order and group.order > max_order:
        raise GroupTooLarge(f"|G| = {group.order} exceeds the supported bound {max_order}")
    return group
