"""Seeded random generators for configurations, presentations, modules and Gram data.

Everything is driven by a caller-supplied ``random.Random`` so corpora
are reproducible.  Generators are repair-based rather than
rejection-based: raw samples are patched until the validators accept
them, which keeps runs deterministic and fast.
"""

from __future__ import annotations

import random
from collections import Counter
from typing import Dict, List, Optional, Tuple

from mskit.brauer import BrauerConfiguration, build_algebra
from mskit.fields import PrimeField, QQ
from mskit.modules import (
    Representation,
    direct_sum,
    projective_rep,
    quotient_rep,
    submodule_generated,
)
from mskit.presentation import SpecialPresentation
from mskit.quiver import Quiver
from mskit.radcube import GramSpec


def random_configuration(
    rng: random.Random,
    max_polygons: int = 6,
    max_val: int = 5,
    max_mu: int = 3,
) -> BrauerConfiguration:
    """A valid configuration: sample polygons, repair C3/C4, shuffle orders."""
    n_poly = rng.randint(1, max_polygons)
    n_vert = rng.randint(1, 2 * n_poly)
    pool = [f"g{i + 1}" for i in range(n_vert)]
    val: Counter = Counter()
    polygons: List[Tuple[str, List[str]]] = []
    for j in range(n_poly):
        size = rng.randint(2, 4)
        members = []
        for _ in range(size):
            open_pool = [v for v in pool if val[v] < max_val]
            v = rng.choice(open_pool if open_pool else pool)
            members.append(v)
            val[v] += 1
        polygons.append((f"P{j + 1}", members))
    used = [v for v in pool if val[v] > 0]
    mu = {v: rng.randint(1, max_mu) for v in used}
    for _name, members in polygons:
        if all(val[v] * mu[v] <= 1 for v in set(members)):
            mu[members[0]] = 2
    for v in used:
        if val[v] * mu[v] == 1:
            poly = next(members for _n, members in polygons if v in members)
            if len(poly) != 2:
                mu[v] = 2
    cfg0 = BrauerConfiguration(used, polygons, mu)
    orientation = {}
    for v in used:
        if cfg0.val(v) * mu[v] > 1:
            occ = cfg0.occurrences(v)
            rng.shuffle(occ)
            orientation[v] = occ
    cfg = BrauerConfiguration(used, polygons, mu, orientation)
    cfg.validate()
    return cfg


def random_field(rng: random.Random):
    return rng.choice([QQ, PrimeField(5)])


def _random_balanced_quiver(rng: random.Random, max_vertices: int = 4, walks: int = 3) -> Quiver:
    """A quiver assembled from closed walks, so in-degree = out-degree everywhere."""
    n = rng.randint(1, max_vertices)
    verts = [f"w{i + 1}" for i in range(n)]
    arrows = []
    count = 0
    for _ in range(rng.randint(1, walks)):
        length = rng.randint(1, 4)
        stops = [rng.choice(verts) for _ in range(length)]
        for i in range(length):
            count += 1
            arrows.append((f"e{count}", stops[i], stops[(i + 1) % length]))
    used = sorted({a[1] for a in arrows} | {a[2] for a in arrows})
    return Quiver(used, arrows)


def random_permutation_pairs(rng: random.Random, quiver: Quiver) -> List[Tuple[str, str]]:
    """A successor bijection: arrows into each vertex matched to arrows out of it."""
    pairs = []
    for v in quiver.vertices:
        ins = [a.name for a in quiver.arrows_into(v)]
        outs = [a.name for a in quiver.arrows_from(v)]
        rng.shuffle(outs)
        pairs.extend(zip(ins, outs))
    return pairs


def random_arrowfree_pair_set(
    rng: random.Random, mutate: Optional[str] = None
) -> Tuple[Quiver, List[Tuple[str, str]]]:
    """A raw pair set with arrow-free socle; optionally with an (M) violation.

    ``mutate='add'`` inserts one extra composable pair, which breaks (M)
    while keeping every arrow with at least one successor and
    predecessor.
    """
    while True:
        quiver = _random_balanced_quiver(rng)
        pairs = random_permutation_pairs(rng, quiver)
        if mutate != "add":
            return quiver, pairs
        have = set(pairs)
        options = [
            (a.name, b.name)
            for a in quiver.arrows
            for b in quiver.arrows
            if a.target == b.source and (a.name, b.name) not in have
        ]
        if options:
            pairs.append(rng.choice(options))
            return quiver, pairs


def random_monomial_presentation(rng: random.Random, field=QQ) -> SpecialPresentation:
    """Condition-(M) algebra without identifications: a pruned cycle partition."""
    quiver = _random_balanced_quiver(rng)
    sigma = dict(random_permutation_pairs(rng, quiver))
    names = [a.name for a in quiver.arrows]
    dropped = {a for a in names if rng.random() < 0.3}
    pairs = [(a, b) for a, b in sigma.items() if a not in dropped]
    succ = dict(pairs)
    cutoffs: Dict[str, int] = {}

    def chain_length(a: str, seen) -> int:
        # arrows until the chain leaves the kept pairs, or a full cycle
        if a in seen:
            return -1  # closed cycle
        nxt = succ.get(a)
        if nxt is None:
            return 0
        deeper = chain_length(nxt, seen | {a})
        return deeper if deeper < 0 else deeper + 1

    for a in names:
        depth = chain_length(a, frozenset())
        if depth < 0:
            orbit = [a]
            cur = succ[a]
            while cur != a:
                orbit.append(cur)
                cur = succ[cur]
            m = rng.randint(1, 2)
            if m * len(orbit) < 2:
                m = 2
            for x in orbit:
                cutoffs.setdefault(x, m * len(orbit) - 1)
        else:
            cutoffs[a] = depth
    return SpecialPresentation(quiver, field, pairs, cutoffs)


def random_special_presentation(rng: random.Random, field=None) -> SpecialPresentation:
    """Either a configuration algebra or a monomial condition-(M) algebra."""
    field = field or random_field(rng)
    if rng.random() < 0.5:
        return build_algebra(random_configuration(rng, max_polygons=3, max_val=3, max_mu=2), field)
    return random_monomial_presentation(rng, field)


def random_representation(
    rng: random.Random, pres: SpecialPresentation, max_dim: int = 12
) -> Representation:
    """A valid module of bounded dimension: a quotient of a sum of projectives."""
    for _attempt in range(40):
        verts = [rng.choice(pres.quiver.vertices) for _ in range(rng.randint(1, 3))]
        rep = projective_rep(pres, verts[0])
        for v in verts[1:]:
            rep = direct_sum(rep, projective_rep(pres, v))
        rad = rep.radical()
        rad_rows = rad.rows()
        n_gens = rng.randint(0, 3) if rad_rows else 0
        gens = []
        for _ in range(n_gens):
            vec = rep.zero_vector()
            for row in rad_rows:
                if rng.random() < 0.4:
                    c = pres.field.random(rng)
                    for i, x in enumerate(row):
                        if x:
                            vec[i] = vec[i] + c * x
            if any(vec):
                gens.append(vec)
        if gens:
            sub = submodule_generated(rep, gens)
            rep = quotient_rep(rep, sub)
        if 0 < rep.total_dim <= max_dim:
            rep.validate()
            return rep
    # fall back to a simple module, always valid and tiny
    v = pres.quiver.vertices[0]
    rep = Representation(pres, {v: 1}, {})
    rep.validate()
    return rep


def glued_representation(
    rng: random.Random, pres: SpecialPresentation, max_dim: int = 30
) -> Optional[Representation]:
    """Two projectives glued along deep radical elements, or None.

    Identifying an element of rad^2 of one summand with one of the other
    makes their chains collide below the tops, which is exactly the
    situation where the decomposition has to perturb generators.
    """
    verts = pres.quiver.vertices
    left = projective_rep(pres, rng.choice(verts))
    right = projective_rep(pres, rng.choice(verts))
    both = direct_sum(left, right)
    if both.total_dim > max_dim:
        return None
    rad2 = both.radical_of(both.radical())
    lrows, rrows = [], []
    for row in rad2.rows():
        in_left = any(row[: left.total_dim])
        in_right = any(row[left.total_dim :])
        if in_left and not in_right:
            lrows.append(row)
        elif in_right and not in_left:
            rrows.append(row)
    rng.shuffle(lrows)
    rng.shuffle(rrows)
    for x1 in lrows:
        for x2 in rrows:
            if both.vertex_of(x1) != both.vertex_of(x2):
                continue
            lam = pres.field.random(rng, nonzero=True)
            glue = [a - lam * b for a, b in zip(x1, x2)]
            sub = submodule_generated(both, [glue])
            out = quotient_rep(both, sub)
            if out.total_dim > 0:
                return out
    return None


def random_gram(
    rng: random.Random, field, max_vertices: int = 4, max_arrows: int = 6
) -> GramSpec:
    """A valid Gram spec built from a scrambled block form, connected by design."""
    n_target = rng.randint(1, max_vertices)
    verts = ["u1"]
    arrows: List[Tuple[str, str, str]] = []
    gamma: Dict[Tuple[str, str], object] = {}
    count = 0

    def new_arrow(src, tgt):
        nonlocal count
        count += 1
        name = f"r{count}"
        arrows.append((name, src, tgt))
        return name

    while len(arrows) < max_arrows:
        budget = max_arrows - len(arrows)
        kind = rng.choice(["loop"] + ["hyploop"] * (budget >= 2) + ["pair"] * (budget >= 2))
        if kind == "loop":
            v = rng.choice(verts)
            a = new_arrow(v, v)
            gamma[(a, a)] = field.random(rng, nonzero=True)
        elif kind == "hyploop":
            v = rng.choice(verts)
            a, b = new_arrow(v, v), new_arrow(v, v)
            val = field.random(rng, nonzero=True)
            gamma[(a, b)] = val
            gamma[(b, a)] = val
        else:
            u = rng.choice(verts)
            if len(verts) < n_target:
                w = f"u{len(verts) + 1}"
                verts.append(w)
            else:
                w = rng.choice(verts)
            a, b = new_arrow(u, w), new_arrow(w, u)
            val = field.random(rng, nonzero=True)
            gamma[(a, b)] = val
            gamma[(b, a)] = val
        if rng.random() < 0.4:
            break
    quiver = Quiver(verts, arrows)
    spec = GramSpec(quiver, field, dict(gamma))
    _scramble_gram(rng, spec)
    return spec


def _scramble_gram(rng: random.Random, spec: GramSpec) -> None:
    """Random invertible parallel-class base changes, in place."""
    field = spec.field
    quiver = spec.quiver
    names = [a.name for a in quiver.arrows]
    for a in names:
        for b in names:
            if spec.two_cyclic(a, b) and (a, b) not in spec.gamma:
                spec.gamma[(a, b)] = field.zero
    classes: Dict[Tuple[str, str], List[str]] = {}
    for a in quiver.arrows:
        classes.setdefault((a.source, a.target), []).append(a.name)

    def g(x, y):
        return spec.gamma.get((x, y), field.zero)

    def add_multiple(target, source, coeff):
        for x in names:
            if (target, x) in spec.gamma:
                spec.gamma[(target, x)] = g(target, x) + coeff * g(source, x)
        for x in names:
            if (x, target) in spec.gamma:
                spec.gamma[(x, target)] = g(x, target) + coeff * g(x, source)

    def scale(target, coeff):
        for x in names:
            if (target, x) in spec.gamma:
                spec.gamma[(target, x)] = coeff * g(target, x)
        for x in names:
            if (x, target) in spec.gamma:
                spec.gamma[(x, target)] = coeff * g(x, target)

    for group in classes.values():
        for _ in range(rng.randint(0, 3)):
            if len(group) >= 2:
                t, s = rng.sample(group, 2)
                add_multiple(t, s, field.random(rng, nonzero=True))
        for a in group:
            if rng.random() < 0.5:
                scale(a, field.random(rng, nonzero=True))
    spec.gamma = {k: v for k, v in spec.gamma.items() if v}
