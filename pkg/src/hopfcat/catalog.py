"""The example catalog: group tables, their algebras and the morphisms between them.

The bundled directory holds one JSON table per group under ``groups/``
plus a handful of ready-made Hopf algebras, morphisms and actions used by
the CLI examples.  ``write_bundled`` regenerates it from the constructions
in :mod:`hopfcat.groups`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .errors import SchemaError
from .groups import GroupTable, automorphisms, hom_kernel, homomorphisms, standard_catalog
from .hopf_model import HopfAlgebra, Morphism, group_algebra, group_morphism
from .io import (
    action_to_json,
    dumps,
    group_from_json,
    group_to_json,
    hopf_to_json,
    morphism_to_json,
    read_json,
    subspace_to_json,
)
from .linear_core import ONE, Subspace, unit_vec
from .smash import Action

BUNDLED_DIR = Path(__file__).with_name("catalog")


def catalog_dir() -> Path:
    env = os.environ.get("HOPFCAT_CATALOG")
    return Path(env) if env else BUNDLED_DIR


def group_files(path: str | Path) -> list[Path]:
    """Group tables of a catalog: ``groups/*.json`` if present, else ``*.json``."""
    path = Path(path)
    gdir = path / "groups" if (path / "groups").is_dir() else path
    return sorted(gdir.glob("*.json"))


@dataclass(frozen=True)
class CatalogHom:
    dom: str
    cod: str
    images: tuple[int, ...]
    morphism: Morphism

    @property
    def label(self) -> str:
        return f"{self.dom}->{self.cod}[{','.join(map(str, self.images))}]"

    @property
    def surjective(self) -> bool:
        return len(set(self.images)) == self.morphism.cod.dim


class Catalog:
    """Groups sorted by (order, name) with lazily built algebras and homomorphisms."""

    def __init__(self, groups: Sequence[GroupTable]):
        ordered = sorted(groups, key=lambda g: (g.order, g.name))
        self.groups: dict[str, GroupTable] = {g.name: g for g in ordered}
        if len(self.groups) != len(ordered):
            raise ValueError("group names in a catalog must be distinct")
        self._algebras: dict[str, HopfAlgebra] = {}

    @classmethod
    def standard(cls) -> Catalog:
        return cls(list(standard_catalog().values()))

    @classmethod
    def from_dir(cls, path: str | Path) -> Catalog:
        files = group_files(path)
        if not files:
            raise SchemaError("no group tables found", str(path))
        groups = []
        for f in files:
            try:
                groups.append(group_from_json(read_json(f), f.stem))
            except SchemaError as exc:
                raise SchemaError(exc.detail, f"{f.name}:{exc.field}") from None
        names = [g.name for g in groups]
        if len(set(names)) != len(names):
            raise SchemaError("group names must be distinct", "name")
        return cls(groups)

    def algebra(self, name: str) -> HopfAlgebra:
        if name not in self._algebras:
            self._algebras[name] = group_algebra(self.groups[name])
        return self._algebras[name]

    def hom(self, dom: str, cod: str, images: Sequence[int]) -> CatalogHom:
        g, h = self.groups[dom], self.groups[cod]
        f = group_morphism(g, h, images, self.algebra(dom), self.algebra(cod))
        return CatalogHom(dom, cod, tuple(images), f)

    @cached_property
    def homs(self) -> list[CatalogHom]:
        """Every homomorphism between catalog groups, linearized."""
        out = []
        for a, g in self.groups.items():
            for b, h in self.groups.items():
                out.extend(self.hom(a, b, phi) for phi in homomorphisms(g, h))
        return out

    def kernel(self, f: CatalogHom) -> frozenset[int]:
        return hom_kernel(self.groups[f.dom], self.groups[f.cod], f.images)

    @cached_property
    def representatives(self) -> list[CatalogHom]:
        """First homomorphism (in sorted order) for each (dom, cod, kernel, image)."""
        seen: dict[tuple, CatalogHom] = {}
        for f in self.homs:
            seen.setdefault((f.dom, f.cod, self.kernel(f), frozenset(f.images)), f)
        return list(seen.values())

    @cached_property
    def orbit_representatives(self) -> list[CatalogHom]:
        """One homomorphism per orbit of Hom(G, H) under precomposition with Aut(G)."""
        auts = {name: automorphisms(g) for name, g in self.groups.items()}
        seen: dict[tuple, CatalogHom] = {}
        for f in self.homs:
            canon = min(tuple(f.images[a[x]] for x in range(len(a))) for a in auts[f.dom])
            seen.setdefault((f.dom, f.cod, canon), f)
        return list(seen.values())

    def split_epis(self) -> list[tuple[CatalogHom, CatalogHom]]:
        """Pairs (p, s) of homomorphisms with p o s = id."""
        by_pair: dict[tuple[str, str], list[CatalogHom]] = {}
        for f in self.homs:
            by_pair.setdefault((f.dom, f.cod), []).append(f)
        out = []
        for p in self.homs:
            if not p.surjective:
                continue
            for s in by_pair.get((p.cod, p.dom), []):
                if all(p.images[s.images[y]] == y for y in range(len(s.images))):
                    out.append((p, s))
        return out

    def automorphism_group(self, name: str) -> tuple[GroupTable, list[tuple[int, ...]]]:
        autos = automorphisms(self.groups[name])
        table = GroupTable.from_elements(
            autos, lambda a, b: tuple(a[x] for x in b), f"Aut({name})")
        return table, autos

    def automorphism_actions(self, actor: str, target: str) -> list[tuple[tuple[int, ...], Action]]:
        """Linearized actions of the actor group on the target by automorphisms."""
        aut, autos = self.automorphism_group(target)
        y_alg, k_alg = self.algebra(actor), self.algebra(target)
        out = []
        for rho in homomorphisms(self.groups[actor], aut):
            maps = [autos[r] for r in rho]
            act = Action.from_function(y_alg, k_alg, lambda y, k: {maps[y][k]: ONE})
            out.append((rho, act))
        return out


def subgroup_space(g: GroupTable, sub: frozenset[int]) -> Subspace:
    return Subspace(g.order, [unit_vec(x) for x in sorted(sub)])


def inversion_action(cat: Catalog, actor: str = "C2", target: str = "C3") -> Action:
    """The generator of the actor acting on an abelian target by inversion."""
    y, k = cat.groups[actor], cat.groups[target]
    return Action.from_function(
        cat.algebra(actor), cat.algebra(target),
        lambda a, b: {b if y.element_order(a) == 1 else k.inverse(b): ONE})


def write_bundled(path: str | Path) -> list[Path]:
    """Regenerate the catalog directory; returns the written files."""
    path = Path(path)
    (path / "groups").mkdir(parents=True, exist_ok=True)
    cat = Catalog.standard()
    written = []

    def put(rel, data):
        p = path / rel
        p.write_text(dumps(data, pretty=True), encoding="utf-8")
        written.append(p)

    for name, g in cat.groups.items():
        put(f"groups/{name}.json", group_to_json(g))
    s3, c2, c3, c4 = (cat.algebra(n) for n in ("S3", "C2", "C3", "C4"))
    for rel, h in (("s3.json", s3), ("c2.json", c2), ("c3.json", c3), ("c4.json", c4)):
        put(rel, hopf_to_json(h))
    sign = [1 if cat.groups["S3"].element_order(x) == 2 else 0 for x in range(6)]
    put("sign.json", morphism_to_json(cat.hom("S3", "C2", sign).morphism, "s3.json", "c2.json"))
    even = frozenset(x for x in range(6) if sign[x] == 0)
    put("a3_subspace.json", subspace_to_json(subgroup_space(cat.groups["S3"], even)))
    gen = next(x for x in range(6) if cat.groups["S3"].element_order(x) == 3)
    incl = [cat.groups["S3"].power(gen, a) for a in range(3)]
    put("a3_inclusion.json", morphism_to_json(cat.hom("C3", "S3", incl).morphism, "c3.json", "s3.json"))
    put("c4_to_c2.json", morphism_to_json(cat.hom("C4", "C2", [0, 1, 0, 1]).morphism,
                                          "c4.json", "c2.json"))
    put("inversion_action.json", action_to_json(inversion_action(cat), "c2.json", "c3.json"))
    return written
