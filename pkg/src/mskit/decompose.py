"""Decomposing module radicals into uniserials with small intersections.

The radical of any module over a condition-(M) algebra is a sum of
uniserial submodules whose pairwise intersections are zero or simple.
The algorithm starts from arrow-images of top generators, forms the
kernel of the summing map from the formal direct sum of their cyclic
chains, and while that kernel is not semisimple it perturbs one
generator by elements of the other chains so that its chain dies
earlier.  Each accepted perturbation strictly shrinks the total chain
length, so the loop terminates; a verifying pass certifies the result,
and a grid search over perturbations backs the solver up on small
modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mskit import linalg
from mskit.modules import Representation, Subspace, radical_generators


class DecompositionError(RuntimeError):
    pass


@dataclass
class _Chain:
    gen: List
    vertex: str
    vectors: List[List]  # vectors[k] spans gen * rad^k

    @property
    def length(self) -> int:
        return len(self.vectors)


def _chain_of(rep: Representation, gen: Sequence) -> Optional[_Chain]:
    """Layered span of gen*A, or None when a layer exceeds dimension one."""
    v = rep.vertex_of(gen)
    if v is None:
        return None
    vectors = [list(gen)]
    cur, cur_vertex = list(gen), v
    while True:
        ech = linalg.Echelon(rep.field, rep.total_dim)
        images = []
        for arrow in rep.pres.quiver.arrows_from(cur_vertex):
            img = rep.act_arrow(cur, arrow.name)
            if any(img):
                images.append((img, arrow.target))
                ech.add(img)
        if not images:
            return _Chain(list(gen), v, vectors)
        if ech.rank > 1:
            return None
        cur, cur_vertex = images[0]
        vectors.append(cur)


def _kernel_report(rep: Representation, chains: Sequence[_Chain]):
    """Relations among all chain vectors, with (chain, depth) coordinates."""
    coords: List[Tuple[int, int]] = []
    rows: List[List] = []
    for i, ch in enumerate(chains):
        for k, vec in enumerate(ch.vectors):
            coords.append((i, k))
            rows.append(vec)
    rels = linalg.relations(rows, rep.field, rep.total_dim)
    return coords, rels


def _is_semisimple_kernel(chains: Sequence[_Chain], coords, rels) -> bool:
    last = {(i, ch.length - 1) for i, ch in enumerate(chains)}
    for rel in rels:
        for c, coord in zip(rel, coords):
            if c and coord not in last:
                return False
    return True


def _perturbation_pool(rep: Representation, chains: Sequence[_Chain], j: int) -> List[List]:
    v = chains[j].vertex
    pool = []
    for i, ch in enumerate(chains):
        if i == j:
            continue
        for k, vec in enumerate(ch.vectors):
            if rep.vertex_of(vec) == v:
                pool.append(vec)
    return pool


def _killing_paths(rep: Representation, vertex: str, length: int):
    out = []
    for arrow in rep.pres.quiver.arrows_from(vertex):
        if rep.pres.t[arrow.name] >= length - 1:
            out.append(rep.pres.p_chain(arrow.name, length - 1))
    return out


def _try_trim(rep: Representation, chains: List[_Chain], j: int) -> Optional[_Chain]:
    """A perturbed generator for chain j whose chain is strictly shorter."""
    depth = chains[j].length
    if depth <= 1:
        return None
    paths = _killing_paths(rep, chains[j].vertex, depth - 1)
    if not paths:
        return None
    pool = _perturbation_pool(rep, chains, j)
    if not pool:
        return None
    field = rep.field
    rows = []
    for w in pool:
        row: List = []
        for p in paths:
            row.extend(rep.act_path(w, p))
        rows.append(row)
    rhs: List = []
    u = chains[j].gen
    for p in paths:
        rhs.extend([-x for x in rep.act_path(u, p)])
    ncols = len(rhs)
    coeffs = linalg.solve_left(rows, rhs, field, ncols)
    if coeffs is None:
        return None
    candidates = [coeffs]
    for extra in linalg.relations(rows, field, ncols)[:3]:
        candidates.append([c + e for c, e in zip(coeffs, extra)])
    for cand in candidates:
        gen = list(u)
        for c, w in zip(cand, pool):
            if c:
                for idx, x in enumerate(w):
                    if x:
                        gen[idx] = gen[idx] + c * x
        chain = _chain_of(rep, gen)
        if chain is not None and chain.length < depth:
            return chain
    return None


def _sum_dim(rep: Representation, chains: Sequence[_Chain]) -> int:
    rows = [vec for ch in chains for vec in ch.vectors]
    return linalg.rank(rows, rep.field, rep.total_dim)


def decompose_multiserial(rep: Representation) -> List[Subspace]:
    """Uniserial submodules summing to rad(M) with intersections zero or simple.

    The returned list also induces an isomorphism of tops onto
    rad(M)/rad^2(M).  The output is always certified by
    :func:`verify_multiserial` before being returned.
    """
    rep.validate()
    rad_dim = rep.radical().dim()
    if rad_dim == 0:
        return []
    chains = _initial_chains(rep)
    total = sum(ch.length for ch in chains)
    for _ in range(total + 5):
        coords, rels = _kernel_report(rep, chains)
        if _is_semisimple_kernel(chains, coords, rels):
            break
        order = _candidate_order(chains, coords, rels)
        improved = None
        for j in order:
            improved = _try_trim(rep, chains, j)
            if improved is not None:
                before = _sum_dim(rep, chains)
                chains[j] = improved
                after = _sum_dim(rep, chains)
                if before != after or after != rad_dim:
                    raise DecompositionError("trim changed the span of the sum")
                break
        if improved is None:
            if rep.total_dim <= 8:
                found = _exhaustive_search(rep, rad_dim)
                if found is not None:
                    chains = found
                    break
            raise DecompositionError("no shortening perturbation found")
    else:
        raise DecompositionError("trimming failed to terminate")
    out = [Subspace.from_rows(rep, ch.vectors) for ch in chains]
    if not verify_multiserial(rep, out):
        raise DecompositionError("internal checker rejected the decomposition")
    if not _tops_isomorphism(rep, chains):
        raise DecompositionError("tops do not map onto rad/rad^2")
    return out


def _initial_chains(rep: Representation) -> List[_Chain]:
    chains = []
    for _m, _v, _a, u in radical_generators(rep):
        ch = _chain_of(rep, u)
        if ch is None:
            raise DecompositionError("arrow image of a top generator is not uniserial")
        chains.append(ch)
    return chains


def _candidate_order(chains, coords, rels) -> List[int]:
    last = {(i, ch.length - 1) for i, ch in enumerate(chains)}
    best = None
    for rel in rels:
        support = [coord for c, coord in zip(rel, coords) if c]
        if all(coord in last for coord in support):
            continue
        chains_in = sorted({i for i, _ in support})
        depth_sum = sum(k for _, k in support)
        key = (len(chains_in), depth_sum, chains_in)
        if best is None or key < best[0]:
            min_depth = {i: min(k for ii, k in support if ii == i) for i in chains_in}
            best = (key, sorted(chains_in, key=lambda i: (min_depth[i], i)))
    guided = best[1] if best else []
    rest = [i for i in range(len(chains)) if i not in guided]
    return guided + rest


def _tops_isomorphism(rep: Representation, chains: Sequence[_Chain]) -> bool:
    rad = rep.radical()
    rad2 = rep.radical_of(rad)
    ech = linalg.Echelon(rep.field, rep.total_dim)
    for r in rad2.rows():
        ech.add(r)
    base = ech.rank
    for ch in chains:
        ech.add(ch.gen)
    return ech.rank == base + len(chains) and ech.rank == rad.dim()


def _exhaustive_search(rep: Representation, rad_dim: int) -> Optional[List[_Chain]]:
    """Depth-first search over grid perturbations of single generators.

    Only sensible for small modules; every accepted move strictly
    decreases the total chain length, so the tree is shallow.
    """
    field = rep.field
    if field.char and field.char <= 11:
        grid = [field.of(k) for k in range(1, field.char)]
    else:
        grid = [field.of(1), field.of(-1), field.of(2), field.of(-2)]
    start = _initial_chains(rep)

    def search(chains: List[_Chain]) -> Optional[List[_Chain]]:
        coords, rels = _kernel_report(rep, chains)
        if _is_semisimple_kernel(chains, coords, rels):
            return chains
        for j in range(len(chains)):
            pool = _perturbation_pool(rep, chains, j)
            for w in pool:
                for c in grid:
                    gen = [x + c * y for x, y in zip(chains[j].gen, w)]
                    if not any(gen):
                        continue
                    ch = _chain_of(rep, gen)
                    if ch is None or ch.length >= chains[j].length:
                        continue
                    nxt = list(chains)
                    nxt[j] = ch
                    if _sum_dim(rep, nxt) != rad_dim:
                        continue
                    hit = search(nxt)
                    if hit is not None:
                        return hit
        return None

    return search(start)


def decompose_exhaustive(rep: Representation) -> List[Subspace]:
    """Grid-search variant for small modules, used to cross-check the solver."""
    rep.validate()
    if rep.total_dim > 8:
        raise DecompositionError("grid search is limited to total dimension 8")
    rad_dim = rep.radical().dim()
    if rad_dim == 0:
        return []
    chains = _exhaustive_search(rep, rad_dim)
    if chains is None:
        raise DecompositionError("no decomposition found by grid search")
    out = [Subspace.from_rows(rep, ch.vectors) for ch in chains]
    if not verify_multiserial(rep, out):
        raise DecompositionError("internal checker rejected the decomposition")
    return out


def verify_multiserial(rep: Representation, subspaces: Sequence[Subspace]) -> bool:
    """Certify a claimed decomposition against the definition.

    Checks that every summand is a uniserial submodule, that the sum is
    the radical, and that pairwise intersections have dimension at most
    one (hence are zero or simple).
    """
    rad = rep.radical()
    for u in subspaces:
        if not u.is_submodule():
            return False
        if not _is_uniserial(rep, u):
            return False
    total = Subspace.from_rows(rep, [r for u in subspaces for r in u.rows()])
    if total != rad:
        return False
    for i in range(len(subspaces)):
        for j in range(i + 1, len(subspaces)):
            if subspaces[i].intersection(subspaces[j]).dim() > 1:
                return False
    return True


def _is_uniserial(rep: Representation, space: Subspace) -> bool:
    cur = space
    while cur.dim() > 0:
        nxt = rep.radical_of(cur)
        if cur.dim() - nxt.dim() > 1:
            return False
        cur = nxt
    return True
