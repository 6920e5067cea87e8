"""Finite groups given by Cayley tables.

This is the test-surface generator: group algebras are the standard
cocommutative examples, and subgroup / homomorphism enumeration at the
group level gives independent oracles for the Hopf-level constructions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Hashable, Sequence

from .errors import SchemaError


@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise SchemaError("group order must be positive", "order")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise SchemaError(f"table must be {n}x{n}", "table")
        if not 0 <= self.identity < n:
            raise SchemaError("identity index out of range", "identity")
        t = self.table
        for i in range(n):
            if sorted(t[i]) != list(range(n)):
                raise SchemaError(f"row {i} is not a permutation of the elements", "table")
            if t[self.identity][i] != i or t[i][self.identity] != i:
                raise SchemaError(f"identity fails on element {i}", "identity")
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise SchemaError(f"associativity fails on ({a},{b},{c})", "table")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], identity: int = 0, name: str = "") -> GroupTable:
        return cls(len(rows), tuple(tuple(int(x) for x in r) for r in rows), identity, name)

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], op: Callable, name: str = "") -> GroupTable:
        index = {e: i for i, e in enumerate(elements)}
        rows = [[index[op(a, b)] for b in elements] for a in elements]
        ident = next(i for i, a in enumerate(elements)
                     if all(rows[i][j] == j for j in range(len(elements))))
        return cls.from_rows(rows, ident, name)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        row = self.table[a]
        return row.index(self.identity)

    def power(self, a: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def closure(self, gens: Sequence[int]) -> frozenset[int]:
        elems = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(elems)

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element index."""
        gens: list[int] = []
        current = frozenset([self.identity])
        for g in range(self.order):
            if g not in current:
                gens.append(g)
                current = self.closure(gens)
                if len(current) == self.order:
                    break
        return gens

    def subgroups(self) -> list[frozenset[int]]:
        """Every subgroup, as joins of cyclic subgroups; sorted by (size, elements)."""
        cyclic = {self.closure([g]) for g in range(self.order)}
        found = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            new = set()
            for h in frontier:
                for c in cyclic:
                    if not c <= h:
                        j = self.closure(sorted(h | c))
                        if j not in found:
                            new.add(j)
            found |= new
            frontier = new
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def is_normal(self, sub: frozenset[int]) -> bool:
        t = self.table
        for g in range(self.order):
            gi = self.inverse(g)
            for h in sub:
                if t[t[g][h]][gi] not in sub:
                    return False
        return True

    def normal_subgroups(self) -> list[frozenset[int]]:
        return [s for s in self.subgroups() if self.is_normal(s)]

    def subgroup_table(self, sub: frozenset[int]) -> tuple[GroupTable, list[int]]:
        """The subgroup as a standalone table, plus the embedding (sorted elements)."""
        elems = sorted(sub)
        pos = {e: i for i, e in enumerate(elems)}
        rows = [[pos[self.table[a][b]] for b in elems] for a in elems]
        return GroupTable.from_rows(rows, pos[self.identity], f"{self.name}<{len(elems)}>"), elems

    def quotient_table(self, normal: frozenset[int]) -> tuple[GroupTable, list[int]]:
        """G/N with cosets ordered by smallest member, plus the projection as a list."""
        cosets: list[frozenset[int]] = []
        proj = [-1] * self.order
        for g in range(self.order):
            if proj[g] < 0:
                coset = frozenset(self.table[g][n] for n in normal)
                for x in coset:
                    proj[x] = len(cosets)
                cosets.append(coset)
        reps = [min(c) for c in cosets]
        rows = [[proj[self.table[a][b]] for b in reps] for a in reps]
        return GroupTable.from_rows(rows, proj[self.identity], f"{self.name}/{len(normal)}"), proj

    def to_json(self) -> dict:
        return {"order": self.order, "identity": self.identity,
                "table": [list(r) for r in self.table]}


def is_homomorphism(g: GroupTable, h: GroupTable, phi: Sequence[int]) -> bool:
    return all(phi[g.table[a][b]] == h.table[phi[a]][phi[b]]
               for a in range(g.order) for b in range(g.order))


def homomorphisms(g: GroupTable, h: GroupTable) -> list[tuple[int, ...]]:
    """All homomorphisms g -> h as image lists, sorted."""
    gens = g.generators()
    # spanning tree of words: element -> (parent, generator index)
    parent: dict[int, tuple[int, int]] = {}
    visit: list[int] = []
    frontier = [g.identity]
    seen = {g.identity}
    while frontier:
        nxt = []
        for x in frontier:
            for k, s in enumerate(gens):
                y = g.table[x][s]
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, k)
                    visit.append(y)
                    nxt.append(y)
        frontier = nxt
    gen_orders = [g.element_order(s) for s in gens]
    out = []
    for images in product(range(h.order), repeat=len(gens)):
        if any(o % h.element_order(i) for o, i in zip(gen_orders, images)):
            continue
        phi = [-1] * g.order
        phi[g.identity] = h.identity
        for y in visit:
            x, k = parent[y]
            phi[y] = h.table[phi[x]][images[k]]
        if is_homomorphism(g, h, phi):
            out.append(tuple(phi))
    return sorted(set(out))


def hom_kernel(g: GroupTable, h: GroupTable, phi: Sequence[int]) -> frozenset[int]:
    return frozenset(a for a in range(g.order) if phi[a] == h.identity)


def automorphisms(g: GroupTable) -> list[tuple[int, ...]]:
    return [phi for phi in homomorphisms(g, g) if len(set(phi)) == g.order]


# -- standard groups ---------------------------------------------------------

def cyclic(n: int) -> GroupTable:
    return GroupTable.from_rows([[(a + b) % n for b in range(n)] for a in range(n)], 0, f"C{n}")


def direct_product(a: GroupTable, b: GroupTable, name: str = "") -> GroupTable:
    n, m = a.order, b.order
    rows = [[a.table[i // m][j // m] * m + b.table[i % m][j % m] for j in range(n * m)]
            for i in range(n * m)]
    return GroupTable.from_rows(rows, a.identity * m + b.identity, name or f"{a.name}x{b.name}")


def symmetric(n: int) -> GroupTable:
    elems = sorted(permutations(range(n)))
    return GroupTable.from_elements(elems, lambda p, q: tuple(p[q[i]] for i in range(n)), f"S{n}")


def dihedral(n: int) -> GroupTable:
    """Symmetries of the regular n-gon, as vertex permutations."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    ident = tuple(range(n))

    def compose(p, q):
        return tuple(p[q[i]] for i in range(n))

    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in (rot, ref):
                y = compose(x, s)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return GroupTable.from_elements(sorted(elems), compose, f"D{n}")


def quaternion() -> GroupTable:
    # (sign, unit) with unit in 1, i, j, k
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}

    def op(x, y):
        s, u = units[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    elems = [(s, u) for s in (1, -1) for u in "1ijk"]
    return GroupTable.from_elements(elems, op, "Q8")


def standard_catalog() -> dict[str, GroupTable]:
    """All groups of order at most 8, up to isomorphism (D4 and Q8 included)."""
    c2 = cyclic(2)
    groups = [cyclic(n) for n in range(1, 9)]
    groups += [
        direct_product(c2, c2, "C2xC2"),
        direct_product(direct_product(c2, c2), c2, "C2xC2xC2"),
        direct_product(cyclic(4), c2, "C4xC2"),
        symmetric(3),
        dihedral(4),
        quaternion(),
    ]
    return {g.name: g for g in groups}
