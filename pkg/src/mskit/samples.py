"""Ready-made configurations, presentations and Gram data used in tests and docs."""

from __future__ import annotations

from mskit.brauer import BrauerConfiguration, build_algebra
from mskit.fields import QQ
from mskit.presentation import SpecialPresentation
from mskit.quiver import Quiver
from mskit.radcube import GramSpec


#: Arrow naming for :func:`example_configuration`, one list per configuration
#: vertex, following its orientation order.
EXAMPLE_ARROW_NAMES = {
    "1": ["a1", "a2"],
    "2": ["b1", "b2", "b3", "b4"],
    "3": ["c1", "c2", "c3"],
    "4": ["d"],
}


def example_configuration() -> BrauerConfiguration:
    """Four vertices, three polygons, mu = (3,1,1,2); the running example.

    Orientation: vertex 2 cycles through v1 < v3 < v2 < v2 and vertex 3
    through v1 < v1 < v2, so the induced quiver has loops a1, a2, c1 at
    v1, the 4-cycle b1 b2 b3 b4, the 3-cycle c1 c2 c3 and the loop d.
    """
    return BrauerConfiguration(
        vertices=["1", "2", "3", "4"],
        polygons=[
            ("v1", ["1", "1", "2", "3", "3"]),
            ("v2", ["2", "2", "3"]),
            ("v3", ["2", "4"]),
        ],
        mu={"1": 3, "2": 1, "3": 1, "4": 2},
        orientation={
            "1": [("v1", 0), ("v1", 1)],
            "2": [("v1", 0), ("v3", 0), ("v2", 0), ("v2", 1)],
            "3": [("v1", 0), ("v1", 1), ("v2", 0)],
            "4": [("v3", 0)],
        },
    )


def example_algebra(field=QQ) -> SpecialPresentation:
    return build_algebra(example_configuration(), field, EXAMPLE_ARROW_NAMES)


def truncated_polynomial(field=QQ) -> SpecialPresentation:
    """K[a]/(a^3): one loop with cutoff 1."""
    quiver = Quiver(["v"], [("a", "v", "v")])
    return SpecialPresentation(quiver, field, [("a", "a")], {"a": 1})


def exterior_type(field=QQ) -> SpecialPresentation:
    """Two loops x, y with xy = yx and squares zero; dimension 4."""
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    xy = quiver.path(["x", "y"])
    yx = quiver.path(["y", "x"])
    return SpecialPresentation(
        quiver, field, [("x", "y"), ("y", "x")], {"x": 1, "y": 1}, [(xy, yx, field.one)]
    )


def special_biserial_two_loops(field=QQ) -> SpecialPresentation:
    """Two loops with x^3 = y^3 = xy = yx = 0; a monomial biserial algebra."""
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    return SpecialPresentation(quiver, field, [("x", "x"), ("y", "y")], {"x": 1, "y": 1})


def exterior_gram(field) -> GramSpec:
    """Two loops with hyperbolic pairing: the Gram datum of exterior_type."""
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    return GramSpec(
        quiver,
        field,
        {("x", "y"): field.one, ("y", "x"): field.one},
    )


def single_loop_gram(field) -> GramSpec:
    """One self-paired loop: the Gram datum of K[x]/(x^3)."""
    quiver = Quiver(["v"], [("x", "v", "v")])
    return GramSpec(quiver, field, {("x", "x"): field.one})


def hyperbolic_pair_gram(field) -> GramSpec:
    """Arrows u -> v -> u with pairing 1: a two-vertex symmetric algebra."""
    quiver = Quiver(["u", "v"], [("a", "u", "v"), ("b", "v", "u")])
    return GramSpec(quiver, field, {("a", "b"): field.one, ("b", "a"): field.one})
