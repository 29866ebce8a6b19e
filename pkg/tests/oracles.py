"""Independent brute-force oracles the tests check the fast paths against.

These deliberately avoid the chain/cutoff machinery: dimensions come
from exhaustive path enumeration against the raw relation words, so a
bug in the normal form cannot hide in both places at once.
"""

from typing import List, Set, Tuple

from mskit.brauer import BrauerConfiguration, build_quiver, build_relations
from mskit.quiver import Quiver


def enumerate_surviving_paths(quiver: Quiver, forbidden_words: Set[Tuple[str, ...]], dead_pairs: Set[Tuple[str, str]]) -> List[Tuple[str, ...]]:
    """All arrow sequences that avoid every forbidden subword and dead pair."""
    max_len = max((len(w) for w in forbidden_words), default=2)
    out: List[Tuple[str, ...]] = []

    def extend(seq: List[str], last: str):
        word = tuple(seq)
        for w in forbidden_words:
            n = len(w)
            if len(word) >= n and any(word[i : i + n] == w for i in range(len(word) - n + 1)):
                return
        out.append(word)
        if len(seq) >= max_len + 1:
            raise RuntimeError("oracle runaway: relations do not bound path length")
        for arrow in quiver.arrows_from(quiver.target(last)):
            if (last, arrow.name) in dead_pairs:
                continue
            extend(seq + [arrow.name], arrow.name)

    for arrow in quiver.arrows:
        extend([arrow.name], arrow.name)
    return out


def brute_force_dimension(cfg: BrauerConfiguration, arrow_names=None) -> int:
    """Algebra dimension by path enumeration plus identification collapse."""
    quiver = build_quiver(cfg, arrow_names)
    rels = build_relations(cfg, arrow_names)
    forbidden = {tuple(p.arrows) for p in rels.type_two}
    dead = set(rels.type_three)
    paths = enumerate_surviving_paths(quiver, forbidden, dead)
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for p, q in rels.type_one:
        a, b = tuple(p.arrows), tuple(q.arrows)
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    classes = {find(p) for p in paths if p in parent}
    collapsed = sum(1 for p in paths if p in parent) - len(classes)
    return len(quiver.vertices) + len(paths) - collapsed


def enumerate_words_two_loops(relation_words: Set[Tuple[str, ...]], identify: Tuple[Tuple[str, ...], Tuple[str, ...]]) -> int:
    """Dimension of a two-loop algebra at one vertex by word enumeration."""
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    paths = enumerate_surviving_paths(quiver, relation_words, set())
    a, b = identify
    merged = sum(1 for p in paths if p == b)
    return 1 + len(paths) - merged
