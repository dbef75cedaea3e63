import pytest

from rrcrystals import reference
from rrcrystals.rootsystem import (
    ALL_TYPES, AffineType, Length, Root, RootKind, affine_config,
    affine_positive_root_heights, crystal_root_data, finite_positive_roots,
    positive_roots_from_cartan,
)


def test_seven_types():
    assert len(ALL_TYPES) == 7
    assert AffineType.parse("e8(1)") is AffineType.E8_1
    with pytest.raises(ValueError):
        AffineType.parse("A1_1")


def test_config_examples():
    g2 = affine_config("G2_1")
    assert g2.ht_delta == 6 and g2.delta_coeffs == (1, 2, 3)
    e8 = affine_config("E8_1")
    assert e8.ht_delta == 30 and e8.dual is AffineType.E8_1
    d4 = affine_config("D4_3")
    assert d4.crystal_root_kind is RootKind.SHORT_ONLY and d4.dual is AffineType.G2_1


def test_config_against_reference(affine_type):
    c = affine_config(affine_type)
    key = affine_type.value
    assert c.ht_delta == reference.HT_DELTA[key]
    assert Root(c.delta_coeffs).label() == reference.DELTA[key]
    assert c.dual.value == reference.DUAL[key]
    assert affine_config(c.dual).dual is affine_type
    short_only = affine_type in (AffineType.E6_2, AffineType.D4_3)
    assert (c.crystal_root_kind is RootKind.SHORT_ONLY) == short_only


def test_symmetrizer_symmetrizes(affine_type):
    c = affine_config(affine_type)
    n = c.rank
    for i in range(n):
        for j in range(n):
            assert c.symmetrizer[i] * c.cartan[i][j] == c.symmetrizer[j] * c.cartan[j][i]


def test_positive_roots_match_reference(affine_type):
    roots = finite_positive_roots(affine_config(affine_type))
    ref = reference.positive_roots(affine_type)
    labels = {r.label() for r, _ in roots}
    if "all" in ref:
        assert labels == ref["all"]
    else:
        assert {r.label() for r, l in roots if l is Length.LONG} == ref["long"]
        assert {r.label() for r, l in roots if l is Length.SHORT} == ref["short"]
    counts = {"G2_1": 6, "D4_3": 6, "F4_1": 24, "E6_2": 24, "E6_1": 36, "E7_1": 63,
              "E8_1": 120}
    assert len(roots) == counts[affine_type.value]


def test_g2_lengths():
    roots = finite_positive_roots(affine_config("G2_1"))
    assert {r.label() for r, l in roots if l is Length.LONG} == {"10", "13", "23"}
    assert {r.label() for r, l in roots if l is Length.SHORT} == {"01", "11", "12"}


def test_e8_highest_root():
    roots = finite_positive_roots(affine_config("E8_1"))
    assert len(roots) == 120
    assert max(r.coeffs for r, _ in roots) == (2, 3, 4, 6, 5, 4, 3, 2)


def test_rank_one_closure():
    assert positive_roots_from_cartan([[2]]) == [(1,)]


def test_root_invariants(affine_type):
    for r, _ in finite_positive_roots(affine_config(affine_type)):
        assert r.ht == sum(r.coeffs)
        assert all(c >= 0 for c in r.coeffs)
        assert all(c <= 0 for c in (-r).coeffs)
        assert (-r).ht == -r.ht


def test_mixed_sign_rejected():
    with pytest.raises(ValueError):
        Root((1, -1))


@pytest.mark.parametrize("key,rplus,sigma,theta", [
    ("D4_3", {"10", "11", "21"}, (1,), "21"),
    ("E6_2", None, (1, 2), "2321"),
    ("F4_1", None, (1, 2, 3, 4), "2342"),
])
def test_crystal_root_data(key, rplus, sigma, theta):
    data = crystal_root_data(affine_config(key))
    if rplus is not None:
        assert {r.label() for r in data.rplus} == rplus
    assert data.sigma == sigma
    assert data.theta.label() == theta


def test_rplus_sizes():
    sizes = {t.value: len(crystal_root_data(affine_config(t)).rplus) for t in ALL_TYPES}
    assert sizes == {"G2_1": 6, "D4_3": 3, "F4_1": 24, "E6_2": 12, "E6_1": 36,
                     "E7_1": 63, "E8_1": 120}


def test_theta_plus_one_is_delta(affine_type):
    c = affine_config(affine_type)
    assert crystal_root_data(c).theta.ht + 1 == c.ht_delta


def test_short_long_split():
    f4 = finite_positive_roots(affine_config("F4_1"))
    assert sum(l is Length.LONG for _, l in f4) == 12
    assert sum(l is Length.SHORT for _, l in f4) == 12


def _imaginary(config, cutoff):  # untwisted only
    hd = config.ht_delta
    out = {}
    for h, m in affine_positive_root_heights(config, (1,) * (config.rank + 1), cutoff):
        out.setdefault(h, []).append(m)
    return {h: ms for h, ms in out.items() if h % hd == 0}


def test_imaginary_g2():
    # real roots never have height divisible by ht(delta), so only imaginary ones land here
    imag = _imaginary(affine_config("G2_1"), 30)
    assert imag == {6: [2], 12: [2], 18: [2], 24: [2], 30: [2]}


def test_imaginary_d4_3():
    c = affine_config("D4_3")
    assert [c.mult_imaginary(r) for r in range(1, 7)] == [1, 1, 2, 1, 1, 2]


# in twisted types long real roots can also sit at multiples of ht(delta)
UNTWISTED = [t for t in ALL_TYPES if affine_config(t).twist == 1]


@pytest.mark.parametrize("cutoff", [1, 7, 29, 60])
@pytest.mark.parametrize("affine_type", UNTWISTED, ids=lambda t: t.value)
def test_imaginary_level_count(affine_type, cutoff):
    c = affine_config(affine_type)
    s = (1,) * (c.rank + 1)
    hd = c.ht_delta
    heights = [h for h, _ in affine_positive_root_heights(c, s, cutoff)]
    assert all(1 <= h <= cutoff for h in heights)
    assert sum(1 for h in heights if h % hd == 0) == cutoff // hd


def test_cutoff_rejected():
    with pytest.raises(ValueError):
        list(affine_positive_root_heights(affine_config("G2_1"), (1, 1, 1), 0))
