from __future__ import annotations

import json
import shutil

import pytest

from hopfcat.catalog import BUNDLED_DIR, Catalog, catalog_dir, group_files
from hopfcat.errors import SchemaError
from hopfcat.groups import homomorphisms
from hopfcat.hopf_model import is_surjective, verify_hopf
from hopfcat.io import hopf_from_json


def test_sorted_by_order_then_name(cat):
    names = list(cat.groups)
    assert names[:4] == ["C1", "C2", "C3", "C2xC2"]
    orders = [cat.groups[n].order for n in names]
    assert orders == sorted(orders)


def test_hom_count_matches_group_enumeration(cat):
    total = sum(len(homomorphisms(g, h)) for g in cat.groups.values() for h in cat.groups.values())
    assert len(cat.homs) == total == 1852


def test_every_catalog_morphism_is_valid(cat):
    for f in cat.representatives:
        assert f.surjective == is_surjective(f.morphism), f.label


def test_representatives_cover_every_kernel_image_pair(cat):
    reps = {(f.dom, f.cod, cat.kernel(f), frozenset(f.images)) for f in cat.representatives}
    every = {(f.dom, f.cod, cat.kernel(f), frozenset(f.images)) for f in cat.homs}
    assert reps == every and len(cat.representatives) == len(reps)


def test_split_epis(cat):
    pairs = cat.split_epis()
    assert len(pairs) == 483
    for p, s in pairs[:50]:
        assert (p.morphism @ s.morphism).cols == tuple({i: 1} for i in range(p.morphism.cod.dim))


def test_automorphism_actions(cat):
    acts = cat.automorphism_actions("C2", "C3")
    assert len(acts) == 2
    assert all(all(a.verify().values()) for _, a in acts)


def test_bundled_algebras_verify():
    for name in ("s3.json", "c2.json", "c3.json", "c4.json"):
        assert verify_hopf(hopf_from_json(json.loads((BUNDLED_DIR / name).read_text()))).ok


def test_catalog_dir_env(monkeypatch, tmp_path):
    monkeypatch.delenv("HOPFCAT_CATALOG", raising=False)
    assert catalog_dir() == BUNDLED_DIR
    monkeypatch.setenv("HOPFCAT_CATALOG", str(tmp_path))
    assert catalog_dir() == tmp_path


def test_from_dir_flat_layout(tmp_path):
    for name in ("C2", "S3"):
        shutil.copy(BUNDLED_DIR / "groups" / f"{name}.json", tmp_path / f"{name}.json")
    assert [p.stem for p in group_files(tmp_path)] == ["C2", "S3"]
    assert list(Catalog.from_dir(tmp_path).groups) == ["C2", "S3"]


def test_from_dir_errors(tmp_path):
    with pytest.raises(SchemaError):
        Catalog.from_dir(tmp_path)
    (tmp_path / "bad.json").write_text(json.dumps({"order": 2, "table": [[0, 1], [1, 1]]}))
    with pytest.raises(SchemaError) as exc:
        Catalog.from_dir(tmp_path)
    assert exc.value.field.startswith("bad.json:")
    (tmp_path / "bad.json").unlink()
    data = json.loads((BUNDLED_DIR / "groups" / "C2.json").read_text())
    (tmp_path / "a.json").write_text(json.dumps(data))
    (tmp_path / "b.json").write_text(json.dumps(data))
    with pytest.raises(SchemaError):
        Catalog.from_dir(tmp_path)


def test_standard_matches_bundled_tables():
    bundled = Catalog.from_dir(BUNDLED_DIR)
    standard = Catalog.standard()
    assert list(bundled.groups) == list(standard.groups)
    for name, g in standard.groups.items():
        assert bundled.groups[name].to_json() == g.to_json()
