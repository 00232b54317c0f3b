"""Catalogs, classification, truncated generators, factorization checks."""

import pytest

import cct
from cct.catalogs import Catalog, CatalogEntry, resolve_class_predicate
from cct.errors import OrderBudgetExceeded


def test_truncated_generator_factors():
    spec = cct.truncated_generator(2, 3)
    assert [f.order for f in spec.factors] == [2, 4, 8]
    spec = cct.truncated_generator(3, 1)
    assert [f.order for f in spec.factors] == [3]


def test_truncated_generator_errors():
    with pytest.raises(OrderBudgetExceeded):
        cct.truncated_generator(2, 20)
    with pytest.raises(ValueError):
        cct.truncated_generator(4, 2)
    with pytest.raises(ValueError):
        cct.truncated_generator(3, 0)


# ---------------------------------------------------------------------------
# catalogs


def test_catalog_max_order_one():
    cat = cct.build_small_catalog(1)
    assert len(cat) == 1
    assert cat.entries[0].group.order == 1


def test_catalog_orders_bounded(catalog24):
    assert all(e.group.order <= 24 for e in catalog24)


def test_catalog_names_unique(catalog24):
    names = [e.name for e in catalog24]
    assert len(names) == len(set(names))


def test_catalog_order8_slice_has_five_classes(catalog8):
    slice8 = Catalog([e for e in catalog8 if e.group.order == 8])
    classes = cct.classify_up_to_iso(slice8)
    assert len(classes) >= 5
    assert len(classes) == 5


def test_catalog6_contains_nonisomorphic_pair(catalog8):
    z6 = catalog8.get("z6").group
    d6 = catalog8.get("d6").group
    assert z6.is_abelian and not d6.is_abelian
    assert not cct.isomorphic(z6, d6)


def test_catalog_contains_dicyclic_and_products(catalog24):
    dic12 = catalog24.get("dic12").group
    assert dic12.order == 12
    assert sum(1 for x in range(12) if dic12.element_order(x) == 2) == 1
    assert not cct.isomorphic(dic12, catalog24.get("a4").group)
    assert not cct.isomorphic(dic12, catalog24.get("d12").group)
    prod = catalog24.get("z2_d6")
    assert prod.group.order == 12


# ---------------------------------------------------------------------------
# classification


def test_classify_merges_duplicates():
    cat = Catalog([
        CatalogEntry("a", cct.cyclic(6), "cyclic 6"),
        CatalogEntry("b", cct.direct_product(cct.cyclic(2), cct.cyclic(3)), "product"),
    ])
    classes = cct.classify_up_to_iso(cat)
    assert len(classes) == 1
    assert [e.name for e in classes[0]] == ["a", "b"]


def test_classify_singleton():
    cat = Catalog([CatalogEntry("only", cct.quaternion(), "quaternion")])
    assert len(cct.classify_up_to_iso(cat)) == 1


def seven_order8_constructions():
    return [
        CatalogEntry("z8", cct.cyclic(8), ""),
        CatalogEntry("z4xz2", cct.abelian([4, 2]), ""),
        CatalogEntry("z2cubed", cct.abelian([2, 2, 2]), ""),
        CatalogEntry("d8", cct.dihedral(8), ""),
        CatalogEntry("q8", cct.quaternion(), ""),
        CatalogEntry("d8pres", cct.realize(
            cct.parse_presentation("<r,s | r^4, s^2, (r s)^2>"), 200), ""),
        CatalogEntry("z2xz4", cct.direct_product(cct.cyclic(2), cct.cyclic(4)), ""),
    ]


def test_classify_seven_order8_constructions():
    classes = cct.classify_up_to_iso(Catalog(seven_order8_constructions()))
    assert len(classes) == 5
    by_name = {cls[0].name: sorted(e.name for e in cls) for cls in classes}
    assert by_name["d8"] == ["d8", "d8pres"]
    assert by_name["z4xz2"] == ["z2xz4", "z4xz2"]


def test_classify_invariant_under_permutation():
    entries = seven_order8_constructions()
    baseline = {frozenset(e.name for e in cls)
                for cls in cct.classify_up_to_iso(Catalog(entries))}
    import random
    rng = random.Random(5)
    for _ in range(3):
        shuffled = entries[:]
        rng.shuffle(shuffled)
        got = {frozenset(e.name for e in cls)
               for cls in cct.classify_up_to_iso(Catalog(shuffled))}
        assert got == baseline


def test_classify_is_true_partition(catalog8):
    classes = cct.classify_up_to_iso(catalog8)
    names = [e.name for cls in classes for e in cls]
    assert sorted(names) == sorted(e.name for e in catalog8)
    for i, cls in enumerate(classes):
        for other in classes[i + 1:]:
            assert not cct.isomorphic(cls[0].group, other[0].group)


# ---------------------------------------------------------------------------
# socle-equals-radical survey


def test_survey_truncated_2_3(catalog8):
    report = cct.socle_equals_radical(cct.truncated_generator(2, 3), catalog8)
    assert report.failures == ()
    assert report.skipped == ()
    for row in report.rows:
        assert row.equal
        assert row.torsion_match


def test_survey_single_z2_records_gap(catalog8):
    cat = Catalog([e for e in catalog8 if e.name == "z4"])
    report = cct.socle_equals_radical(cct.cyclic(2), cat)
    row = report.rows[0]
    assert row.precondition_ok is False
    assert not row.equal
    assert row.socle_order == 2 and row.radical_order == 4
    assert report.failures == ()
    assert report.skipped == ("z4",)


def test_survey_empty_catalog():
    report = cct.socle_equals_radical(cct.truncated_generator(2, 2), Catalog([]))
    assert report.rows == ()
    assert report.failures == () and report.skipped == ()


def test_survey_noncyclic_generator_rows_are_informational(catalog8):
    cat = Catalog([e for e in catalog8 if e.name in ("z4", "z8")])
    report = cct.socle_equals_radical(cct.quaternion(), cat)
    assert report.failures == ()
    for row in report.rows:
        assert row.precondition_ok is None
        assert row.torsion_match is None


def test_survey_torsion_characterization_directly(catalog24):
    spec = cct.truncated_generator(2, 3)
    for entry in catalog24:
        g = entry.group
        torsion = [x for x in range(1, g.order)
                   if g.element_order(x) in (2, 4, 8)]
        expected = cct.subgroup_generated(g, torsion)
        assert cct.socle(spec, g).members == expected.members, entry.name


# ---------------------------------------------------------------------------
# bounded factorization


def test_factor_through_2_group_in_d8(standard_groups):
    d8 = standard_groups["d8"]
    hom = next(h for h in cct.enumerate_homs(standard_groups["z2"], d8)
               if any(h.full_map))
    sub = cct.factor_through_class(cct.FactorizationQuery(hom, "2-group"))
    assert sub is not None
    assert set(hom.full_map) <= sub.members
    assert sub.order in (2, 4, 8)


def test_factor_through_2_group_in_s3(standard_groups):
    s3 = standard_groups["s3"]
    hom = next(h for h in cct.enumerate_homs(standard_groups["z2"], s3)
               if any(h.full_map))
    sub = cct.factor_through_class(cct.FactorizationQuery(hom, "2-group"))
    assert sub is not None and sub.order == 2
    assert set(hom.full_map) <= sub.members


def test_factor_no_2_group_contains_3_cycle(standard_groups):
    s3 = standard_groups["s3"]
    hom = next(h for h in cct.enumerate_homs(standard_groups["z3"], s3)
               if any(h.full_map))
    assert cct.factor_through_class(cct.FactorizationQuery(hom, "2-group")) is None


def test_factor_result_satisfies_predicate(standard_groups):
    a4 = standard_groups["a4"]
    for hom in cct.enumerate_homs(standard_groups["z2"], a4):
        sub = cct.factor_through_class(cct.FactorizationQuery(hom, "2-group"))
        assert sub is not None
        assert resolve_class_predicate("2-group")(sub)
        assert set(hom.full_map) <= sub.members


def test_class_predicates():
    z6 = cct.cyclic(6)
    subs = cct.all_subgroups(z6)
    assert [resolve_class_predicate("trivial")(s) for s in subs] == [True, False, False, False]
    assert all(resolve_class_predicate("abelian")(s) for s in subs)
    assert all(resolve_class_predicate("cyclic")(s) for s in subs)
    with pytest.raises(ValueError):
        resolve_class_predicate("4-group")
    with pytest.raises(ValueError):
        resolve_class_predicate("weird")
    cct.register_class_predicate("order-3", lambda s: s.order == 3)
    assert resolve_class_predicate("order-3")(subs[1]) == (subs[1].order == 3)
