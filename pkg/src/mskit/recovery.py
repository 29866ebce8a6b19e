"""Recovering a Brauer configuration from a symmetric special presentation.

When every arrow has exactly one surviving successor, following
successors defines a permutation of the arrows whose orbits are the
special cycles.  For presentations whose socle is one-dimensional at
every vertex and generated by full cycle powers, the orbit data folds
back into a configuration: orbits become vertices, quiver vertices
become polygons, the largest surviving cycle power becomes the
multiplicity, and the base vertices along an orbit give the orientation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from mskit.brauer import BrauerConfiguration, build_algebra
from mskit.presentation import SpecialPresentation
from mskit.quiver import Path


class RecoveryError(ValueError):
    pass


@dataclass
class SigmaData:
    """The successor permutation, its orbits, orbit cycles and multiplicities."""

    sigma: Dict[str, str]
    orbits: Tuple[Tuple[str, ...], ...]
    cycle: Dict[str, Path]
    m: Dict[str, int]

    def orbit_of(self, arrow: str) -> Tuple[str, ...]:
        for orb in self.orbits:
            if arrow in orb:
                return orb
        raise KeyError(arrow)


def induced_permutation(pres: SpecialPresentation) -> SigmaData:
    """Successor permutation with orbit cycles and socle powers.

    Fails when some arrow lacks a successor or predecessor (the algebra
    cannot be symmetric with nonzero radical square), or when the
    largest surviving cycle power is not constant along an orbit.
    """
    report = pres.check_conditions()
    if not report.m_prime:
        raise RecoveryError(
            "not M-prime: some arrow is missing a pi-successor or pi-predecessor"
        )
    sigma = {a.name: pres.next_arrow(a.name) for a in pres.quiver.arrows}
    remaining = {a.name for a in pres.quiver.arrows}
    orbits: List[Tuple[str, ...]] = []
    while remaining:
        start = min(remaining)
        orb = [start]
        cur = sigma[start]
        while cur != start:
            orb.append(cur)
            cur = sigma[cur]
        remaining -= set(orb)
        orbits.append(tuple(orb))
    cycle: Dict[str, Path] = {}
    m: Dict[str, int] = {}
    for orb in orbits:
        size = len(orb)
        for k, a in enumerate(orb):
            rot = list(orb[k:]) + list(orb[:k])
            c = pres.quiver.path(rot)
            if c.source != c.target or c.source != pres.quiver.source(a):
                raise RecoveryError(f"orbit path of {a} is not a cycle based at its source")
            cycle[a] = c
            if pres.normal_form(c) is None:
                raise RecoveryError(
                    f"orbit cycle of {a} is zero in the algebra; not symmetric"
                )
            power = 1
            while pres.normal_form(Path(c.source, c.target, c.arrows * (power + 1))):
                power += 1
            m[a] = power
            if (pres.t[a] + 1) // size != power:
                # normal-form count and cutoff arithmetic must agree
                raise RecoveryError(f"inconsistent cycle power for arrow {a}")
        if len({m[a] for a in orb}) != 1:
            raise RecoveryError(
                f"largest surviving cycle power is not constant on orbit {orb}"
            )
    return SigmaData(sigma, tuple(orbits), cycle, m)


def symmetry_violations(pres: SpecialPresentation) -> List[str]:
    """Reasons the presentation cannot come from a configuration, if any."""
    out: List[str] = []
    for v in pres.quiver.vertices:
        if not pres.quiver.arrows_from(v) and not pres.quiver.arrows_into(v):
            out.append(f"isolated vertex {v}")
    if out:
        return out
    try:
        sig = induced_permutation(pres)
    except RecoveryError as exc:
        return [str(exc)]
    for a in pres.quiver.arrows:
        name = a.name
        size = len(sig.orbit_of(name))
        if (pres.t[name] + 1) % size != 0:
            out.append(
                f"maximal path of {name} is not a full cycle power"
                f" (t+1 = {pres.t[name] + 1}, orbit size {size})"
            )
    if out:
        return out
    for v in pres.quiver.vertices:
        reps = set()
        for p in pres.maximal_paths_at(v):
            _, rep = pres.ident_class_of(p)
            reps.add(rep)
        if len(reps) > 1:
            out.append(f"socle at vertex {v} is {len(reps)}-dimensional")
    return out


def verify_symmetric(pres: SpecialPresentation) -> bool:
    """True when the presentation carries the combinatorial shape of a
    symmetric algebra: M-prime, one socle class per vertex, and every
    maximal path a full cycle power."""
    return not symmetry_violations(pres)


def recover_configuration(pres: SpecialPresentation) -> BrauerConfiguration:
    """Fold a symmetric presentation back into a Brauer configuration."""
    problems = symmetry_violations(pres)
    if problems:
        raise RecoveryError(problems[0])
    sig = induced_permutation(pres)
    orbit_names = {orb: f"o{k + 1}" for k, orb in enumerate(sig.orbits)}
    sources: Dict[Tuple[str, ...], List[str]] = {
        orb: [pres.quiver.source(a) for a in orb] for orb in sig.orbits
    }
    polygons: List[Tuple[str, List[str]]] = []
    mu: Dict[str, int] = {}
    vertices: List[str] = [orbit_names[orb] for orb in sig.orbits]
    for orb in sig.orbits:
        mu[orbit_names[orb]] = sig.m[orb[0]]
    trunc_count = 0
    for v in pres.quiver.vertices:
        members: List[str] = []
        for orb in sig.orbits:
            members.extend([orbit_names[orb]] * sources[orb].count(v))
        if len(members) == 1:
            trunc_count += 1
            t_name = f"t{trunc_count}"
            vertices.append(t_name)
            mu[t_name] = 1
            members.append(t_name)
        polygons.append((v, members))
    orientation: Dict[str, List[Tuple[str, int]]] = {}
    for orb in sig.orbits:
        seen: Counter = Counter()
        seq: List[Tuple[str, int]] = []
        for v in sources[orb]:
            seq.append((v, seen[v]))
            seen[v] += 1
        orientation[orbit_names[orb]] = seq
    cfg = BrauerConfiguration(vertices, polygons, mu, orientation)
    cfg.validate()
    _check_against(cfg, pres, sig, orbit_names)
    return cfg


def _check_against(
    cfg: BrauerConfiguration,
    pres: SpecialPresentation,
    sig: SigmaData,
    orbit_names: Dict[Tuple[str, ...], str],
) -> None:
    """The rebuilt algebra must match the input presentation combinatorially."""
    names = {orbit_names[orb]: list(orb) for orb in sig.orbits}
    rebuilt = build_algebra(cfg, pres.field, names)
    if rebuilt.quiver.vertices != pres.quiver.vertices:
        raise RecoveryError("rebuilt quiver has different vertices")
    if set(rebuilt.quiver.arrows) != set(pres.quiver.arrows):
        raise RecoveryError("rebuilt quiver has different arrows")
    if rebuilt.pi.pairs != pres.pi.pairs:
        raise RecoveryError("rebuilt pi table differs")
    if rebuilt.t != pres.t:
        raise RecoveryError("rebuilt cutoffs differ")
    if rebuilt.dimension() != pres.dimension():
        raise RecoveryError("rebuilt algebra has different dimension")
    mine = {
        frozenset(
            p for p in pres.maximal_paths_at(v) if pres.ident_class_of(p)[1] == rep
        )
        for v in pres.quiver.vertices
        for rep in {pres.ident_class_of(q)[1] for q in pres.maximal_paths_at(v)}
    }
    theirs = {
        frozenset(
            p for p in rebuilt.maximal_paths_at(v) if rebuilt.ident_class_of(p)[1] == rep
        )
        for v in rebuilt.quiver.vertices
        for rep in {rebuilt.ident_class_of(q)[1] for q in rebuilt.maximal_paths_at(v)}
    }
    if mine != theirs:
        raise RecoveryError("rebuilt identification pattern differs")


# -- rescaling to unit identification scalars ---------------------------


def solve_unit_rescaling(
    pres: SpecialPresentation,
) -> Tuple[Optional[Dict[str, object]], Optional[str]]:
    """Per-arrow scalars making every identification scalar 1.

    One designated arrow per orbit is rescaled, the rest keep scalar 1.
    Returns (scalars, None) on success and (None, reason) when the
    scalars cannot exist in the base field.
    """
    problems = symmetry_violations(pres)
    if problems:
        return None, problems[0]
    field = pres.field
    sig = induced_permutation(pres)
    orbit_index = {a: k for k, orb in enumerate(sig.orbits) for a in orb}
    m_of = [sig.m[orb[0]] for orb in sig.orbits]
    n = len(sig.orbits)
    # For each vertex, all maximal paths p (cycle powers of orbits) satisfy
    # s_p * y_{orbit(p)} = const, where p = s_p * rep in the algebra and y is
    # the product of the arrow scalars raised over the cycle power.
    constraints: List[List[Tuple[int, object]]] = []
    for v in pres.quiver.vertices:
        entries = []
        for p in pres.maximal_paths_at(v):
            s_p, _ = pres.ident_class_of(p)
            entries.append((orbit_index[p.arrows[0]], s_p))
        constraints.append(entries)
    comps = _orbit_components(constraints, n)
    y: List[Optional[object]] = [None] * n
    for comp in comps:
        y[comp[0]] = field.one
    pending = True
    while pending:
        pending = False
        for entries in constraints:
            known = next(((k, s) for k, s in entries if y[k] is not None), None)
            if known is None:
                continue
            k0, s0 = known
            target = s0 * y[k0]
            for k, s in entries:
                val = target / s
                if y[k] is None:
                    y[k] = val
                    pending = True
                elif y[k] != val:
                    return (
                        None,
                        "identification scalars cannot be rescaled: orbit "
                        f"{sig.orbits[k]} is constrained to two different values",
                    )
    scalars: Dict[str, object] = {a.name: field.one for a in pres.quiver.arrows}
    for comp in comps:
        items = [(y[k], m_of[k], k) for k in comp]
        c = _solve_free_scalar(field, [(val, mm) for val, mm, _ in items])
        if c is None:
            witness = next(
                (it for it in items if field.nth_root(it[0], it[1]) is None),
                max(items, key=lambda it: it[1]),
            )
            val, mm, k = witness
            return (
                None,
                f"root obstruction: orbit {sig.orbits[k]} needs a solution of "
                f"x^{mm} = {field.fmt(val)} in {field.name} (up to a global unit)",
            )
        for val, mm, k in items:
            root = field.nth_root(c * val, mm)
            if root is None:
                return (
                    None,
                    f"root obstruction: orbit {sig.orbits[k]} needs an {mm}-th root of {field.fmt(c * val)}",
                )
            scalars[sig.orbits[k][0]] = root
    return scalars, None


def _orbit_components(constraints: Sequence[Sequence[Tuple[int, object]]], n: int) -> List[List[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for entries in constraints:
        ks = [k for k, _ in entries]
        for a, b in zip(ks, ks[1:]):
            parent[find(a)] = find(b)
    comps: Dict[int, List[int]] = {}
    for k in range(n):
        comps.setdefault(find(k), []).append(k)
    return list(comps.values())


def _solve_free_scalar(field, items: Sequence[Tuple[object, int]]):
    """Find c with c*y an m-th power for every (y, m) in items, or None."""

    def works(c):
        return all(field.nth_root(c * val, mm) is not None for val, mm in items)

    if works(field.one):
        return field.one
    candidates = []
    for val, _ in items:
        candidates.extend([field.one / val, val])
    for c in candidates:
        if c and works(c):
            return c
    if field.char and field.char <= 200:
        for raw in range(1, field.char):
            c = field.of(raw)
            if works(c):
                return c
        return None
    if field.char == 0:
        return _rational_free_scalar(field, items)
    return None


def _rational_free_scalar(field, items):
    from fractions import Fraction

    factored = []
    for val, mm in items:
        f = _factor_fraction(Fraction(val))
        if f is None:
            return None
        factored.append((f, mm, val))
    primes = sorted({p for f, _, _ in factored for p in f if p != -1})
    exponents = {}
    for p in primes:
        residue, modulus = 0, 1
        for f, mm, _ in factored:
            e = f.get(p, 0)
            residue2, modulus2 = (-e) % mm, mm
            merged = _crt(residue, modulus, residue2, modulus2)
            if merged is None:
                return None
            residue, modulus = merged
        exponents[p] = residue if residue <= modulus - residue else residue - modulus
    sign = 1
    for f, mm, _ in factored:
        if mm % 2 == 0 and f.get(-1, 0):
            sign = -1
    c = Fraction(sign)
    for p, e in exponents.items():
        c *= Fraction(p) ** e
    if all(field.nth_root(c * val, mm) is not None for _, mm, val in factored):
        return c
    return None


def _factor_fraction(x):
    out: Dict[int, int] = {}
    if x < 0:
        out[-1] = 1
    for n, sgn in ((abs(x.numerator), 1), (x.denominator, -1)):
        d = 2
        while d * d <= n:
            while n % d == 0:
                out[d] = out.get(d, 0) + sgn
                n //= d
            d += 1 if d == 2 else 2
            if d > 100_000:
                return None
        if n > 1:
            out[n] = out.get(n, 0) + sgn
    return out


def _crt(r1, m1, r2, m2):
    from math import gcd

    g = gcd(m1, m2)
    if (r2 - r1) % g != 0:
        return None
    lcm = m1 // g * m2
    step = m1 // g
    k = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g) if m2 // g > 1 else 0
    return (r1 + m1 * k) % lcm, lcm


def rescale_to_unit_idents(pres: SpecialPresentation) -> Optional[SpecialPresentation]:
    """The same algebra presented with all identification scalars equal to 1."""
    scalars, _reason = solve_unit_rescaling(pres)
    if scalars is None:
        return None
    field = pres.field

    def path_factor(p: Path):
        out = field.one
        for a in p.arrows:
            out = out * scalars[a]
        return out

    new_idents = []
    for p, q, lam in pres.idents:
        lam_new = lam * path_factor(p) / path_factor(q)
        if lam_new != field.one:
            raise RecoveryError("internal: rescaling failed to normalize a scalar")
        new_idents.append((p, q, field.one))
    return SpecialPresentation(pres.quiver, field, pres.pi.pairs, pres.t, new_idents)


# -- configuration isomorphism ------------------------------------------


def config_isomorphic(c1: BrauerConfiguration, c2: BrauerConfiguration) -> bool:
    """Isomorphism preserving membership multiplicities, mu and orientation
    up to cyclic rotation, with truncated vertices matched freely."""
    c1.validate()
    c2.validate()
    n1 = c1.nontruncated()
    n2 = c2.nontruncated()
    if len(n1) != len(n2) or len(c1.polygons) != len(c2.polygons):
        return False
    if sorted(c1.mu[a] for a in n1) != sorted(c2.mu[a] for a in n2):
        return False

    def poly_shape(cfg, poly):
        nt = sorted(
            (cfg.mu[m], cfg.val(m)) for m in poly.members if not cfg.is_truncated(m)
        )
        trunc = sum(1 for m in poly.members if cfg.is_truncated(m))
        return (tuple(nt), trunc)

    polys1 = list(c1.polygons)
    polys2 = list(c2.polygons)
    shapes2: Dict[object, List[int]] = {}
    for j, poly in enumerate(polys2):
        shapes2.setdefault(poly_shape(c2, poly), []).append(j)

    def orient_seq(cfg, alpha):
        return [p for p, _ in cfg.orientation[alpha]]

    def try_vertex_matching(pmap: Dict[str, str]) -> bool:
        # pmap: polygon name of c1 -> polygon name of c2
        def profile(cfg, alpha, rename):
            prof = tuple(
                sorted((rename(p.name), p.count(alpha)) for p in cfg.polygons if p.count(alpha))
            )
            return (cfg.mu[alpha], prof)

        cands: Dict[str, List[str]] = {}
        prof2 = {b: profile(c2, b, lambda x: x) for b in n2}
        for a in n1:
            pa = profile(c1, a, lambda x: pmap[x])
            cands[a] = [b for b in n2 if prof2[b] == pa]
            if not cands[a]:
                return False

        order = sorted(n1, key=lambda a: len(cands[a]))
        used = set()

        def rotations_match(a, b):
            seq1 = [pmap[p] for p in orient_seq(c1, a)]
            seq2 = orient_seq(c2, b)
            if len(seq1) != len(seq2):
                return False
            for k in range(len(seq2)):
                if seq1 == seq2[k:] + seq2[:k]:
                    return True
            return False

        def place(i):
            if i == len(order):
                return True
            a = order[i]
            for b in cands[a]:
                if b in used:
                    continue
                if not rotations_match(a, b):
                    continue
                used.add(b)
                if place(i + 1):
                    return True
                used.remove(b)
            return False

        return place(0)

    def assign_polys(i, used, pmap):
        if i == len(polys1):
            return try_vertex_matching(dict(pmap))
        poly = polys1[i]
        for j in shapes2.get(poly_shape(c1, poly), []):
            if j in used:
                continue
            used.add(j)
            pmap.append((poly.name, polys2[j].name))
            if assign_polys(i + 1, used, pmap):
                return True
            pmap.pop()
            used.remove(j)
        return False

    return assign_polys(0, set(), [])
