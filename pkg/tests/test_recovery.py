import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mskit.brauer import BrauerConfiguration, build_algebra
from mskit.fields import PrimeField, QQ
from mskit.presentation import SpecialPresentation
from mskit.quiver import Quiver
from mskit.randgen import random_configuration
from mskit.recovery import (
    RecoveryError,
    config_isomorphic,
    induced_permutation,
    recover_configuration,
    rescale_to_unit_idents,
    solve_unit_rescaling,
    symmetry_violations,
    verify_symmetric,
)
from mskit.samples import EXAMPLE_ARROW_NAMES


def two_self_paired_loops(field, lam):
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    xx = quiver.path(["x", "x"])
    yy = quiver.path(["y", "y"])
    return SpecialPresentation(
        quiver, field, [("x", "x"), ("y", "y")], {"x": 1, "y": 1}, [(xx, yy, lam)]
    )


def test_induced_permutation_cfg_ex(alg_ex):
    sig = induced_permutation(alg_ex)
    assert sig.orbits == (("a1", "a2"), ("b1", "b2", "b3", "b4"), ("c1", "c2", "c3"), ("d",))
    assert [sig.m[o[0]] for o in sig.orbits] == [3, 1, 1, 2]
    assert sig.cycle["a1"].arrows == ("a1", "a2")
    assert sig.cycle["b3"].arrows == ("b3", "b4", "b1", "b2")
    assert sig.sigma["d"] == "d"


def test_induced_permutation_small(ka3, ext):
    sig = induced_permutation(ka3)
    assert sig.orbits == (("a",),) and sig.m["a"] == 2
    sig_e = induced_permutation(ext)
    assert sig_e.orbits == (("x", "y"),) and sig_e.m["x"] == 1
    assert sig_e.cycle["x"].arrows == ("x", "y")


def test_induced_permutation_needs_m_prime(biserial):
    # biserial two-loops is M' as well; drop a pair to break it
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    pres = SpecialPresentation(quiver, QQ, [("x", "x")], {"x": 1, "y": 0})
    with pytest.raises(RecoveryError, match="M-prime"):
        induced_permutation(pres)


def test_verify_symmetric(alg_ex, ka3, ext, biserial):
    assert verify_symmetric(alg_ex)
    assert verify_symmetric(ka3)
    assert verify_symmetric(ext)
    # biserial two-loops: both maximal paths at v but never identified
    assert not verify_symmetric(biserial)
    assert any("socle" in v for v in symmetry_violations(biserial))


def test_verify_symmetric_needs_full_cycle_powers():
    # t+1 not divisible by the orbit size
    quiver = Quiver(["u", "w"], [("a", "u", "w"), ("b", "w", "u")])
    pres = SpecialPresentation(
        quiver, QQ, [("a", "b"), ("b", "a")], {"a": 2, "b": 2},
        [],
    )
    # maximal paths have length 3 = aba, bab: not cycles
    assert any("full cycle power" in v for v in symmetry_violations(pres))


def test_verify_symmetric_dropped_ident(cfg_ex):
    pres = build_algebra(cfg_ex, QQ, EXAMPLE_ARROW_NAMES)
    weakened = SpecialPresentation(
        pres.quiver, QQ, pres.pi.pairs, pres.t, pres.idents[1:]
    )
    assert not verify_symmetric(weakened)


def test_recover_fixtures(ka3, ext, alg_ex, cfg_ex):
    cfg_a = recover_configuration(ka3)
    assert len(cfg_a.polygons) == 1
    poly = cfg_a.polygons[0]
    assert len(poly.members) == 2
    trunc = [m for m in poly.members if cfg_a.is_truncated(m)]
    assert len(trunc) == 1
    alpha = next(m for m in poly.members if not cfg_a.is_truncated(m))
    assert cfg_a.mu[alpha] == 2

    cfg_e = recover_configuration(ext)
    assert len(cfg_e.polygons) == 1
    assert list(cfg_e.polygons[0].members).count(cfg_e.nontruncated()[0]) == 2
    assert cfg_e.mu[cfg_e.nontruncated()[0]] == 1

    rec = recover_configuration(alg_ex)
    assert config_isomorphic(rec, cfg_ex)


def test_recover_rejects_non_symmetric(biserial):
    with pytest.raises(RecoveryError):
        recover_configuration(biserial)


def test_config_isomorphic_basic(cfg_ex):
    assert config_isomorphic(cfg_ex, cfg_ex)
    rotated = BrauerConfiguration(
        cfg_ex.vertices,
        [(p.name, p.members) for p in cfg_ex.polygons],
        cfg_ex.mu,
        {
            **{v: list(cfg_ex.orientation[v]) for v in cfg_ex.vertices},
            "2": list(cfg_ex.orientation["2"][1:]) + list(cfg_ex.orientation["2"][:1]),
        },
    )
    assert config_isomorphic(cfg_ex, rotated)
    changed = BrauerConfiguration(
        cfg_ex.vertices,
        [(p.name, p.members) for p in cfg_ex.polygons],
        {**cfg_ex.mu, "1": 2},
        {v: list(cfg_ex.orientation[v]) for v in cfg_ex.vertices},
    )
    assert not config_isomorphic(cfg_ex, changed)


def test_config_isomorphic_detects_orientation_difference():
    def make(order):
        return BrauerConfiguration(
            ["1", "2", "3"],
            [("P", ["1", "2", "3"]), ("R", ["1", "2", "3"])],
            {"1": 1, "2": 1, "3": 1},
            {
                "1": [("P", 0), ("R", 0)],
                "2": [("P", 0), ("R", 0)],
                "3": order,
            },
        )

    same = config_isomorphic(make([("P", 0), ("R", 0)]), make([("P", 0), ("R", 0)]))
    assert same

    # alpha occurs twice in each polygon: PPRR and PRPR are distinct cyclic orders
    def with_alpha_order(order):
        return BrauerConfiguration(
            ["a", "b"],
            [("P", ["a", "a", "b"]), ("R", ["a", "a", "b"])],
            {"a": 1, "b": 1},
            {"a": order, "b": [("P", 0), ("R", 0)]},
        )

    cfg1 = with_alpha_order([("P", 0), ("P", 1), ("R", 0), ("R", 1)])
    cfg2 = with_alpha_order([("P", 0), ("R", 0), ("P", 1), ("R", 1)])
    assert config_isomorphic(cfg1, cfg1)
    assert not config_isomorphic(cfg1, cfg2)


def test_rescale_identity_when_unit(alg_ex, ka3):
    rescaled = rescale_to_unit_idents(alg_ex)
    assert rescaled is not None
    assert all(lam == QQ.one for _p, _q, lam in rescaled.idents)
    # a lone maximal path forms a singleton class: nothing to scale
    scalars, reason = solve_unit_rescaling(ka3)
    assert reason is None and all(v == QQ.one for v in scalars.values())


def test_rescale_f5_example():
    F5 = PrimeField(5)
    pres = two_self_paired_loops(F5, F5.of(4))
    scalars, reason = solve_unit_rescaling(pres)
    assert reason is None
    # one designated arrow is rescaled, the other keeps scalar 1
    assert sorted(v.v for v in scalars.values()) in ([1, 2], [1, 3])
    out = rescale_to_unit_idents(pres)
    assert out is not None and out.idents[0][2] == F5.one


def test_rescale_rational():
    pres = two_self_paired_loops(QQ, Fraction(4))
    out = rescale_to_unit_idents(pres)
    assert out is not None
    pres9 = two_self_paired_loops(QQ, Fraction(9, 4))
    assert rescale_to_unit_idents(pres9) is not None


def test_rescale_obstruction():
    pres = two_self_paired_loops(QQ, Fraction(2))
    scalars, reason = solve_unit_rescaling(pres)
    assert scalars is None and "root obstruction" in reason
    assert rescale_to_unit_idents(pres) is None
    F5 = PrimeField(5)
    pres5 = two_self_paired_loops(F5, F5.of(2))
    scalars5, reason5 = solve_unit_rescaling(pres5)
    assert scalars5 is None and "root obstruction" in reason5


def test_rescale_higher_multiplicity():
    # orbits of size 1 with m = 3: cube roots over Q
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    xxx = quiver.path(["x"] * 3)
    yyy = quiver.path(["y"] * 3)
    pres = SpecialPresentation(
        quiver, QQ, [("x", "x"), ("y", "y")], {"x": 2, "y": 2},
        [(xxx, yyy, Fraction(8))],
    )
    out = rescale_to_unit_idents(pres)
    assert out is not None
    pres_bad = SpecialPresentation(
        quiver, QQ, [("x", "x"), ("y", "y")], {"x": 2, "y": 2},
        [(xxx, yyy, Fraction(2))],
    )
    # 2 = (c*1)/(c*?) cube ratios: c=2 gives x->2*... actually solvable: y scaled by cbrt(1/2)? no
    scalars, reason = solve_unit_rescaling(pres_bad)
    assert scalars is None and "root obstruction" in reason


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from(["Q", "F5"]))
def test_roundtrip_random(seed, field_name):
    rng = random.Random(seed)
    cfg = random_configuration(rng, max_polygons=4, max_val=4, max_mu=3)
    field = QQ if field_name == "Q" else PrimeField(5)
    pres = build_algebra(cfg, field)
    rec = recover_configuration(pres)
    assert config_isomorphic(rec, cfg)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 100_000))
def test_orbit_invariants_random(seed):
    rng = random.Random(seed)
    cfg = random_configuration(rng, max_polygons=4, max_val=4, max_mu=3)
    pres = build_algebra(cfg, QQ)
    sig = induced_permutation(pres)
    for orb in sig.orbits:
        for a in orb:
            assert sig.m[a] == sig.m[orb[0]]
            c = sig.cycle[a]
            assert c.source == c.target == pres.quiver.source(a)
            # the largest surviving power lands in the socle: it is maximal
            assert len(c.arrows) * sig.m[a] == pres.t[a] + 1
    # pi pairs are exactly the wrapped consecutive orbit pairs
    wrap = set()
    for orb in sig.orbits:
        wrap.update(zip(orb, orb[1:] + orb[:1]))
    assert wrap == set(pres.pi.pairs)
