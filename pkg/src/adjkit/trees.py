"""Dexterity trees: interchange rewriting, orbit enumeration, and count oracles.

A dexterity tree is a complete binary {L,R}-labeled tree of depth n; the
left child of a node is its unit branch, the right child its counit branch.
The interchange rewrite generates an equivalence relation whose class count
satisfies T(1) = 2, T(n) = T(n-1)^2 + 2^(2^(n-1)-1) and equals the number
of involutions in the n-fold iterated wreath product of Z/2 (OEIS A332757).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .dexterity import DexterityFunction, Side, negate_side
from .errors import CapacityError, DomainError, ParseError

BRUTE_FORCE_MAX_DEPTH = 4  # depth 5 already has 2^31 trees

# A tree is a nested tuple: ("L",) for a leaf, (label, unit, counit) otherwise.
Tree = tuple

TreePath = tuple[str, ...]  # entries "unit" / "counit"


def leaf(label: Side) -> Tree:
    return (label,)


def node(label: Side, unit: Tree, counit: Tree) -> Tree:
    return (label, unit, counit)


def depth(t: Tree) -> int:
    d = 1
    while len(t) == 3:
        t = t[1]
        d += 1
    return d


def parse_tree(text: str) -> Tree:
    """Grammar: TREE := SIDE | SIDE "(" TREE "," TREE ")", equal-depth subtrees."""
    tree, pos = _parse(text, 0)
    if pos != len(text):
        raise ParseError(f"trailing input at offset {pos}: {text[pos:]!r}")
    return tree


def _parse(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text) or text[pos] not in "LR":
        raise ParseError(f"expected L or R at offset {pos}")
    label = text[pos]
    pos += 1
    if pos < len(text) and text[pos] == "(":
        unit, pos = _parse(text, pos + 1)
        if pos >= len(text) or text[pos] != ",":
            raise ParseError(f"expected ',' at offset {pos}")
        counit, pos = _parse(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise ParseError(f"expected ')' at offset {pos}")
        if depth(unit) != depth(counit):
            raise ParseError("ragged tree: subtree depths differ")
        return (label, unit, counit), pos + 1
    return (label,), pos


def format_tree(t: Tree) -> str:
    if len(t) == 1:
        return t[0]
    return f"{t[0]}({format_tree(t[1])},{format_tree(t[2])})"


def tree_interchange(t: Tree, path: TreePath) -> Tree:
    """Apply the interchange rewrite at the internal node addressed by path.

    The node's label is negated, its unit and counit subtrees trade places,
    and both (post-swap) child root labels are negated; everything below the
    grandchildren is untouched. Requires both children to carry the same
    label. Involutive at a fixed path.
    """
    if len(path) == 0:
        if len(t) == 1:
            raise DomainError("interchange needs an internal node, got a leaf")
        label, unit, counit = t
        if unit[0] != counit[0]:
            raise DomainError("interchange needs equal child labels "
                              f"({unit[0]} vs {counit[0]})")
        new_unit = (negate_side(counit[0]),) + counit[1:]
        new_counit = (negate_side(unit[0]),) + unit[1:]
        return (negate_side(label), new_unit, new_counit)
    if len(t) == 1:
        raise DomainError("path runs past a leaf")
    step, rest = path[0], path[1:]
    if step == "unit":
        return (t[0], tree_interchange(t[1], rest), t[2])
    if step == "counit":
        return (t[0], t[1], tree_interchange(t[2], rest))
    raise DomainError(f"invalid path step {step!r}")


def internal_paths(n: int) -> list[TreePath]:
    """All addresses of internal nodes of a depth-n tree (lengths 0..n-2)."""
    paths: list[TreePath] = []
    frontier: list[TreePath] = [()]
    for _ in range(n - 1):
        paths.extend(frontier)
        frontier = [p + (step,) for p in frontier for step in ("unit", "counit")]
    return paths


def applicable_rewrites(t: Tree) -> Iterator[tuple[TreePath, Tree]]:
    for path in internal_paths(depth(t)):
        try:
            yield path, tree_interchange(t, path)
        except DomainError:
            continue


def all_trees(n: int) -> list[Tree]:
    """All 2^(2^n - 1) dexterity trees of depth n."""
    if n == 1:
        return [("L",), ("R",)]
    subs = all_trees(n - 1)
    return [(lab, u, c) for lab in ("L", "R") for u in subs for c in subs]


def are_tree_equivalent(s: Tree, t: Tree) -> tuple[bool, Optional[list[TreePath]]]:
    """Breadth-first reachability of t from s; the witness replays the steps."""
    if depth(s) != depth(t):
        raise DomainError(f"depth mismatch: {depth(s)} vs {depth(t)}")
    if s == t:
        return True, []
    seen = {s: []}
    frontier = [s]
    while frontier:
        nxt = []
        for cur in frontier:
            for path, neighbor in applicable_rewrites(cur):
                if neighbor in seen:
                    continue
                seen[neighbor] = seen[cur] + [path]
                if neighbor == t:
                    return True, seen[neighbor]
                nxt.append(neighbor)
        frontier = nxt
    return False, None


class _UnionFind:
    """Union-find with path compression over integer indices."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def brute_force_classes(n: int) -> tuple[int, list[Tree]]:
    """Exhaustive orbit count with one lexicographically minimal representative per class."""
    if n < 1:
        raise DomainError("depth must be >= 1")
    if n > BRUTE_FORCE_MAX_DEPTH:
        raise CapacityError(
            f"brute force is capped at depth {BRUTE_FORCE_MAX_DEPTH} "
            f"(depth {n} has 2^{2 ** n - 1} trees)")
    trees = all_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    uf = _UnionFind(len(trees))
    for t, i in index.items():
        for _, neighbor in applicable_rewrites(t):
            uf.union(i, index[neighbor])
    classes: dict[int, str] = {}
    for t, i in index.items():
        root = uf.find(i)
        key = format_tree(t)
        if root not in classes or key < classes[root]:
            classes[root] = key
    reps = sorted(classes.values())
    return len(reps), [parse_tree(r) for r in reps]


def orbit_sizes(n: int) -> list[int]:
    """Descending orbit-size multiset at depth n (same cap as brute force)."""
    if n > BRUTE_FORCE_MAX_DEPTH:
        raise CapacityError(f"orbit enumeration capped at depth {BRUTE_FORCE_MAX_DEPTH}")
    trees = all_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    uf = _UnionFind(len(trees))
    for t, i in index.items():
        for _, neighbor in applicable_rewrites(t):
            uf.union(i, index[neighbor])
    sizes: dict[int, int] = {}
    for i in range(len(trees)):
        root = uf.find(i)
        sizes[root] = sizes.get(root, 0) + 1
    return sorted(sizes.values(), reverse=True)


@lru_cache(maxsize=None)
def class_count_recurrence(n: int) -> int:
    """Exact class count: T(1) = 2, T(n) = T(n-1)^2 + 2^(2^(n-1) - 1)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if n == 1:
        return 2
    return class_count_recurrence(n - 1) ** 2 + 2 ** (2 ** (n - 1) - 1)


# Automorphisms of the complete binary tree of depth n+1, given by one
# swap/no-swap bit per internal node: nested tuples (bit,) at depth-2 spine
# bottom, (bit, left_auto, right_auto) above.

def _all_autos(internal_depth: int) -> list[tuple]:
    if internal_depth == 1:
        return [(0,), (1,)]
    subs = _all_autos(internal_depth - 1)
    return [(bit, a, b) for bit in (0, 1) for a in subs for b in subs]


def _compose_autos(a: tuple, b: tuple) -> tuple:
    """Apply b first, then a."""
    if len(a) == 1:
        return (a[0] ^ b[0],)
    swap = a[0] ^ b[0]
    if b[0]:
        return (swap, _compose_autos(a[2], b[1]), _compose_autos(a[1], b[2]))
    return (swap, _compose_autos(a[1], b[1]), _compose_autos(a[2], b[2]))


def _identity_auto(internal_depth: int) -> tuple:
    if internal_depth == 1:
        return (0,)
    sub = _identity_auto(internal_depth - 1)
    return (0, sub, sub)


def wreath_involutions(n: int) -> int:
    """Count g with g∘g = id among automorphisms of the depth-(n+1) binary tree.

    These automorphisms form the n-fold iterated wreath product of Z/2,
    of order 2^(2^n - 1); the identity counts as an involution.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if n > BRUTE_FORCE_MAX_DEPTH:
        raise CapacityError(
            f"wreath enumeration capped at n = {BRUTE_FORCE_MAX_DEPTH} "
            f"(group order 2^{2 ** n - 1})")
    ident = _identity_auto(n)
    return sum(1 for g in _all_autos(n) if _compose_autos(g, g) == ident)


def tree_from_function(a: DexterityFunction) -> Tree:
    """The level-uniform tree: every depth-j node is labeled a(j)."""
    def build_at(j: int) -> Tree:
        if j == a.n:
            return (a.at(j),)
        sub = build_at(j + 1)
        return (a.at(j), sub, sub)

    return build_at(1)
