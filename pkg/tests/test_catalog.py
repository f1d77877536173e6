"""Catalog keys, parametrized families, and the self-checking suite."""

import pytest

from nilcoh.catalog import (
    CatalogKeyError,
    catalog_get,
    catalog_list,
    run_suite,
)


def test_named_keys_are_stable():
    keys = catalog_list()
    assert keys[0] == "torus(1)"
    assert "iwasawa" in keys
    assert "kodaira" in keys
    assert "nakamura_ce" in keys
    assert "fps_skt(0,1,-1,1,1)" in keys
    assert "exnilp_ones(3)" in keys
    assert "product(kodaira,torus(1))" in keys
    assert len(keys) == len(set(keys))


def test_every_named_entry_builds():
    for key in catalog_list():
        entry = catalog_get(key)
        assert entry.key == key
        assert entry.spec.n == entry.metric.n
        assert entry.fixtures
        provs = {fx.provenance for fx in entry.fixtures}
        assert provs <= {"literature", "trivial", "derived"}


def test_parametrized_torus():
    entry = catalog_get("torus(5)")
    assert entry.spec.n == 5
    assert all(entry.spec.d_alpha(j).is_zero() for j in range(1, 6))


def test_parametrized_fps():
    entry = catalog_get("fps_skt(1,2i,0,-1/2,1+i)")
    d3 = entry.spec.d_alpha(3)
    assert not d3.is_zero()
    # round-trip through the canonical key
    assert entry.key.startswith("fps_skt(")


def test_parametrized_exnilp_with_matrices():
    entry = catalog_get("exnilp(3,A=0,B=[[1,1],[1,1]])")
    assert entry.spec.n == 3
    fx = {f.name: f for f in entry.fixtures}
    assert fx["exnilp_lhs"].expected == "0"
    assert fx["astheno_identity"].expected is True

    entry = catalog_get("exnilp(3,A=0,B=[[1,1],[1,-1]])")
    fx = {f.name: f for f in entry.fixtures}
    assert fx["exnilp_lhs"].expected == "4"
    assert fx["astheno_identity"].expected is False


def test_parametrized_product_recursive():
    entry = catalog_get("product(iwasawa,torus(1))")
    assert entry.spec.n == 4
    entry = catalog_get("product(product(torus(1),torus(1)),kodaira)")
    assert entry.spec.n == 4


def test_unknown_key_lists_alternatives():
    with pytest.raises(CatalogKeyError) as err:
        catalog_get("does_not_exist")
    assert "iwasawa" in str(err.value)
    with pytest.raises(CatalogKeyError):
        catalog_get("exnilp(3,A=0)")
    with pytest.raises(CatalogKeyError):
        catalog_get("fps_skt(1,2)")
    with pytest.raises(CatalogKeyError):
        catalog_get("exnilp(3,A=0,B=[[1],[1]")


def test_run_suite_all_green():
    ok, summary = run_suite()
    assert ok
    assert summary["ok"]
    assert len(summary["entries"]) == len(catalog_list())
    for item in summary["entries"]:
        assert item["ok"], item["key"]
        for fx in item["fixtures"]:
            assert fx["ok"], (item["key"], fx["name"])
            assert fx["expected"] == fx["computed"]


def test_run_suite_subset():
    ok, summary = run_suite(["kodaira"])
    assert ok and len(summary["entries"]) == 1


def test_run_suite_detects_tampering(monkeypatch):
    entry = catalog_get("kodaira")
    entry.fixtures[0].expected = "wrong"
    rows = []
    all_ok = True
    for fx in entry.fixtures:
        computed = fx.compute(entry)
        all_ok &= computed == fx.expected
    assert not all_ok
