"""Symmetric algebras with radical cube zero, given by Gram data.

The algebra is determined by the pairing ``gamma(a, b)`` on cyclic
length-2 arrow paths: a product of two arrows survives exactly when its
gamma value is nonzero, all longer products vanish, and surviving
products based at a common vertex fall into a single socle class.  A
sequence of parallel-class-preserving base changes turns the pairing
into block form, with each new basis element either self-paired (a loop
squaring into the socle) or half of a hyperbolic pair; from that form
the special presentation and the configuration follow.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Tuple

from mskit.brauer import BrauerConfiguration
from mskit.presentation import SpecialPresentation
from mskit.quiver import Quiver
from mskit.recovery import recover_configuration


class GramError(ValueError):
    pass


class GramDegeneracyError(GramError):
    """No self-paired or hyperbolic pivot is available: the pairing is singular."""


@dataclass
class GramSpec:
    """A quiver with the socle pairing gamma on cyclic arrow pairs."""

    quiver: Quiver
    field: object
    gamma: Dict[Tuple[str, str], object]

    def two_cyclic(self, a: str, b: str) -> bool:
        return (
            self.quiver.target(a) == self.quiver.source(b)
            and self.quiver.target(b) == self.quiver.source(a)
        )

    def value(self, a: str, b: str):
        return self.gamma.get((a, b), self.field.zero)


def validate_gram(spec: GramSpec) -> List[str]:
    out: List[str] = []
    quiver = spec.quiver
    if not quiver.vertices:
        return ["empty quiver"]
    names = {a.name for a in quiver.arrows}
    for (a, b), val in spec.gamma.items():
        if a not in names or b not in names:
            out.append(f"gamma({a}, {b}) names an unknown arrow")
        elif not spec.two_cyclic(a, b):
            out.append(f"gamma({a}, {b}) is not a cyclic length-2 pair")
        elif not spec.field.contains(val):
            out.append(f"gamma({a}, {b}) is not a {spec.field.name} scalar")
    if out:
        return out
    for (a, b), val in spec.gamma.items():
        if val != spec.value(b, a):
            out.append(f"symmetry violated: gamma({a}, {b}) != gamma({b}, {a})")
    if not quiver.arrows:
        out.append("no composable pair at all: the radical square is zero")
    for a in quiver.arrows:
        if not any(spec.value(a.name, b.name) for b in quiver.arrows):
            out.append(f"dead arrow {a.name}: all gamma values vanish")
    if not quiver.is_connected():
        out.append("quiver is not connected")
    return out


@dataclass
class ArrBasis:
    """Result of the normalization: new radical generators in block form."""

    order: Tuple[str, ...]
    combos: Dict[str, Dict[str, object]]  # new element -> old-arrow coefficients
    gamma: Dict[Tuple[str, str], object]
    blocks: Tuple[Tuple[str, ...], ...]  # ("a",) self-paired or ("a", "b") hyperbolic
    obstructions: Tuple[str, ...] = dataclass_field(default=())

    def value(self, a: str, b: str, zero):
        return self.gamma.get((a, b), zero)


def normalize_arr(spec: GramSpec) -> ArrBasis:
    """Base changes within parallel classes until gamma is in block form.

    Pass work: a self-paired pivot clears its row and column; a
    hyperbolic pivot pair clears everything against both members; a
    final scaling makes hyperbolic values 1 and self-paired values 1
    whenever the square root exists in the field.
    """
    problems = validate_gram(spec)
    if problems:
        raise GramError("; ".join(problems))
    field = spec.field
    quiver = spec.quiver
    names = [a.name for a in quiver.arrows]
    combos: Dict[str, Dict[str, object]] = {a: {a: field.one} for a in names}
    gamma: Dict[Tuple[str, str], object] = {}
    for a in names:
        for b in names:
            if spec.two_cyclic(a, b):
                gamma[(a, b)] = spec.value(a, b)

    def g(a, b):
        return gamma.get((a, b), field.zero)

    def parallel(a, b):
        return quiver.source(a) == quiver.source(b) and quiver.target(a) == quiver.target(b)

    def add_multiple(target: str, source: str, coeff) -> None:
        # target <- target + coeff * source; only parallel arrows may mix
        if not coeff:
            return
        assert parallel(target, source), "normalization tried to mix non-parallel arrows"
        for k, v in combos[source].items():
            combos[target][k] = combos[target].get(k, field.zero) + coeff * v
            if not combos[target][k]:
                del combos[target][k]
        for x in names:
            if (target, x) in gamma:
                gamma[(target, x)] = g(target, x) + coeff * g(source, x)
        for x in names:
            if (x, target) in gamma:
                gamma[(x, target)] = g(x, target) + coeff * g(x, source)

    def scale(target: str, coeff) -> None:
        combos[target] = {k: coeff * v for k, v in combos[target].items()}
        for x in names:
            if (target, x) in gamma:
                gamma[(target, x)] = coeff * g(target, x)
        for x in names:
            if (x, target) in gamma:
                gamma[(x, target)] = coeff * g(x, target)

    done: List[str] = []
    blocks: List[Tuple[str, ...]] = []
    while len(done) < len(names):
        remaining = [a for a in names if a not in done]
        pivot = next((a for a in remaining if g(a, a)), None)
        if pivot is not None:
            for b in remaining:
                if b != pivot and g(pivot, b):
                    add_multiple(b, pivot, -g(pivot, b) / g(pivot, pivot))
            done.append(pivot)
            blocks.append((pivot,))
            continue
        a = remaining[0]
        partner = next((b for b in remaining if b != a and g(a, b)), None)
        if partner is None:
            raise GramDegeneracyError(
                f"element {a} admits no pivot: the pairing is degenerate"
            )
        b = partner
        for c in remaining:
            if c in (a, b):
                continue
            add_multiple(c, a, -g(b, c) / g(a, b))
            add_multiple(c, b, -g(a, c) / g(a, b))
        done.extend([a, b])
        blocks.append((a, b))
    obstructions: List[str] = []
    for block in blocks:
        if len(block) == 1:
            (a,) = block
            root = field.sqrt(g(a, a))
            if root is None:
                obstructions.append(
                    f"gamma({a}, {a}) = {field.fmt(g(a, a))} has no square root in {field.name}"
                )
            else:
                scale(a, field.one / root)
        else:
            a, b = block
            scale(a, field.one / g(a, b))
    _assert_block_form(names, gamma, field)
    return ArrBasis(tuple(names), combos, gamma, tuple(blocks), tuple(obstructions))


def _assert_block_form(names, gamma, field) -> None:
    for a in names:
        row = [b for b in names if gamma.get((a, b), field.zero)]
        col = [b for b in names if gamma.get((b, a), field.zero)]
        if len(row) != 1 or len(col) != 1:
            raise GramError(
                f"internal: normalized gamma row/column of {a} is not a single entry"
            )


def extract_presentation(spec: GramSpec, arr: ArrBasis) -> SpecialPresentation:
    """The special presentation on the normalized generators.

    The new generators rename to the original arrow identifiers (the
    base change is unitriangular), pi is the support of the normalized
    gamma, every cutoff is 1, and all surviving length-2 paths based at
    a common vertex are identified with scalar ratios from gamma.
    """
    field = spec.field
    quiver = spec.quiver
    pairs = [(a, b) for (a, b), v in arr.gamma.items() if v]
    cutoffs = {a.name: 1 for a in quiver.arrows}
    by_vertex: Dict[str, List[Tuple[object, object]]] = {}
    for a, b in pairs:
        path = quiver.path([a, b])
        by_vertex.setdefault(path.source, []).append((path, arr.gamma[(a, b)]))
    idents = []
    for v in quiver.vertices:
        entries = by_vertex.get(v, [])
        if not entries:
            raise GramError(f"internal: no socle path based at vertex {v}")
        p0, g0 = entries[0]
        for p, gval in entries[1:]:
            idents.append((p, p0, gval / g0))
    pres = SpecialPresentation(quiver, field, pairs, cutoffs, idents)
    report = pres.check_conditions()
    if not (report.m and report.m_prime and report.arrow_free):
        raise GramError("internal: extracted presentation is not M-prime or arrow-free")
    expected = 2 * len(quiver.vertices) + len(quiver.arrows)
    if pres.dimension() != expected:
        raise GramError(
            f"internal: dimension {pres.dimension()} != {expected} on extraction"
        )
    return pres


def radcube_to_configuration(spec: GramSpec) -> BrauerConfiguration:
    """Normalize, extract the presentation, and recover the configuration."""
    arr = normalize_arr(spec)
    pres = extract_presentation(spec, arr)
    return recover_configuration(pres)
