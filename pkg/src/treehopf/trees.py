"""Canonical unordered rooted trees and forests: parsing, surgery, enumeration.

A tree stores its children in a fixed canonical order (lexicographic by
bracket encoding), so two trees are isomorphic exactly when their encodings
are equal.  The encoding grammar is ``Tree := "[" Tree* "]"`` with no
whitespace inside a tree; a forest renders as its tree tokens joined by
single spaces, and the empty forest renders as ``"1"``.

Vertices are addressed by preorder index on the canonical form: the root is
0 and children are visited in canonical order.  All values are immutable
after construction and every operation is pure.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class TreeParseError(ValueError):
    """Malformed encoding; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Tree:
    """Immutable rooted tree in canonical form."""

    __slots__ = ("children", "encoding", "size", "_hash")

    def __init__(self, children=()):
        kids = tuple(sorted(children, key=lambda c: c.encoding))
        self.children = kids
        self.encoding = "[" + "".join(c.encoding for c in kids) + "]"
        self.size = 1 + sum(c.size for c in kids)
        self._hash = hash(self.encoding)

    @property
    def fertility(self) -> int:
        """Number of children of the root."""
        return len(self.children)

    def __eq__(self, other):
        return isinstance(other, Tree) and self.encoding == other.encoding

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Tree({self.encoding!r})"


class Forest:
    """Immutable multiset of trees, kept as a canonically sorted tuple."""

    __slots__ = ("items", "encoding", "weight", "_hash")

    def __init__(self, items=()):
        trees = tuple(sorted(items, key=lambda t: t.encoding))
        self.items = trees
        self.encoding = " ".join(t.encoding for t in trees) if trees else "1"
        self.weight = sum(t.size for t in trees)
        self._hash = hash(("Forest", self.encoding))

    def union(self, other: "Forest") -> "Forest":
        """Multiset union; the monomial product of forests."""
        return Forest(self.items + other.items)

    def __eq__(self, other):
        return isinstance(other, Forest) and self.encoding == other.encoding

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Forest({self.encoding!r})"


LEAF = Tree()
EMPTY_FOREST = Forest()


class Cut:
    """An admissible cut of a tree.

    ``edges`` names each severed edge by the preorder index of its lower
    vertex; ``branch`` collects the severed subtrees and ``trunk`` is the
    part still containing the root.  Admissibility means no severed vertex
    is an ancestor of another.
    """

    __slots__ = ("edges", "branch", "trunk")

    def __init__(self, edges, branch: Forest, trunk: Tree):
        self.edges = frozenset(edges)
        self.branch = branch
        self.trunk = trunk

    @property
    def order(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return (f"Cut({sorted(self.edges)}, branch={self.branch.encoding!r}, "
                f"trunk={self.trunk.encoding!r})")


def _parse_tree_at(text: str, pos: int) -> tuple[Tree, int]:
    if pos >= len(text) or text[pos] != "[":
        raise TreeParseError("expected '['", pos)
    pos += 1
    children = []
    while True:
        if pos >= len(text):
            raise TreeParseError("expected ']'", pos)
        if text[pos] == "]":
            return Tree(children), pos + 1
        child, pos = _parse_tree_at(text, pos)
        children.append(child)


def parse_tree(text: str) -> Tree:
    """Parse a bracket encoding; child order in the input is irrelevant."""
    tree, pos = _parse_tree_at(text, 0)
    if pos != len(text):
        raise TreeParseError("trailing input", pos)
    return tree


def parse_forest(text: str) -> Forest:
    """Parse space-separated tree tokens; ``"1"`` is the empty forest."""
    if text == "1":
        return EMPTY_FOREST
    items = []
    pos = 0
    while True:
        tree, pos = _parse_tree_at(text, pos)
        items.append(tree)
        if pos == len(text):
            return Forest(items)
        if text[pos] != " ":
            raise TreeParseError("expected ' '", pos)
        pos += 1


def canonicalize(nested) -> Tree:
    """Build the canonical tree from nested child lists, in any child order.

    Idempotent: feeding back ``[_as_nested(c) for c in t.children]`` returns
    an equal tree.
    """
    return Tree(canonicalize(child) for child in nested)


def b_minus(t: Tree) -> Forest:
    """Delete the root, leaving the forest of its child subtrees."""
    return Forest(t.children)


def b_plus(f: Forest) -> Tree:
    """Attach a new root over every tree of the forest; inverse of b_minus."""
    return Tree(f.items)


def graft_many(host: Tree, placements) -> Tree:
    """Attach each scion as a new child of the host vertex it names.

    ``placements`` is an iterable of (preorder index, scion tree) pairs; all
    indices refer to the original host, so simultaneous attachments do not
    disturb each other.
    """
    extra: dict[int, list[Tree]] = {}
    for vertex, scion in placements:
        if not 0 <= vertex < host.size:
            raise IndexError(
                f"vertex {vertex} out of range for tree of size {host.size}")
        extra.setdefault(vertex, []).append(scion)

    def rebuild(node: Tree, index: int) -> Tree:
        child_index = index + 1
        kids = []
        for child in node.children:
            kids.append(rebuild(child, child_index))
            child_index += child.size
        kids.extend(extra.get(index, ()))
        return Tree(kids)

    return rebuild(host, 0)


def graft(host: Tree, vertex: int, scion: Tree) -> Tree:
    """Attach the scion's root as a new child of the given host vertex."""
    return graft_many(host, [(vertex, scion)])


def preorder_subtrees(t: Tree) -> list[Tree]:
    """Subtree rooted at each vertex, listed by preorder index."""
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(reversed(node.children))
    return out


def _extract_cut(t: Tree, vertices: tuple[int, ...], subs: list[Tree]) -> Cut:
    branch = Forest(subs[v] for v in vertices)
    severed = set(vertices)

    def rebuild(node: Tree, index: int) -> Tree:
        child_index = index + 1
        kids = []
        for child in node.children:
            if child_index not in severed:
                kids.append(rebuild(child, child_index))
            child_index += child.size
        return Tree(kids)

    return Cut(vertices, branch, rebuild(t, 0))


@lru_cache(maxsize=None)
def admissible_cuts(t: Tree) -> tuple[Cut, ...]:
    """Every admissible cut with at least one severed edge.

    A candidate is a set of non-root preorder indices; it is admissible when
    it is an antichain in the ancestor order (vertex v covers the preorder
    interval [v, v + size_v), so w is a descendant of v iff v < w < v +
    size_v).  Deterministic order: by cut order, then lexicographically by
    index tuple.
    """
    subs = preorder_subtrees(t)
    n = t.size
    cuts = []
    for order in range(1, n):
        for combo in itertools.combinations(range(1, n), order):
            admissible = True
            for i, v in enumerate(combo):
                top = v + subs[v].size
                if any(combo[j] < top for j in range(i + 1, len(combo))):
                    admissible = False
                    break
            if admissible:
                cuts.append(_extract_cut(t, combo, subs))
    return tuple(cuts)


def single_cuts(t: Tree) -> tuple[Cut, ...]:
    """The one-edge cuts, one per non-root vertex."""
    subs = preorder_subtrees(t)
    return tuple(_extract_cut(t, (v,), subs) for v in range(1, t.size))


def natural_growth_terms(t: Tree) -> list[Tree]:
    """One leaf graft per vertex; isomorphic results keep their multiplicity."""
    return [graft(t, v, LEAF) for v in range(t.size)]


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All canonical trees with exactly n vertices, sorted by encoding."""
    if n < 1:
        raise ValueError("tree size must be >= 1")
    if n == 1:
        return (LEAF,)
    return tuple(sorted((b_plus(f) for f in enumerate_forests(n - 1)),
                        key=lambda t: t.encoding))


@lru_cache(maxsize=None)
def enumerate_forests(weight: int) -> tuple[Forest, ...]:
    """All canonical forests with the given total vertex count, sorted."""
    if weight < 0:
        raise ValueError("forest weight must be >= 0")
    if weight == 0:
        return (EMPTY_FOREST,)
    pool = [t for k in range(1, weight + 1) for t in enumerate_trees(k)]
    found = []

    def extend(remaining: int, start: int, acc: list[Tree]) -> None:
        if remaining == 0:
            found.append(Forest(acc))
            return
        for i in range(start, len(pool)):
            if pool[i].size <= remaining:
                extend(remaining - pool[i].size, i, acc + [pool[i]])

    extend(weight, 0, [])
    return tuple(sorted(found, key=lambda f: f.encoding))


def count_trees_recurrence(n: int) -> int:
    """Rooted-tree count via the divisor-sum convolution.

    r(1) = 1 and m * r(m+1) = sum over k of (sum of d*r(d) over d | k)
    multiplied by r(m-k+1).  Never touches the enumerator, so the two can
    cross-check each other.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = [0, 1]
    while len(counts) <= n:
        m = len(counts) - 1
        total = 0
        for k in range(1, m + 1):
            divisor_sum = sum(d * counts[d] for d in range(1, k + 1) if k % d == 0)
            total += divisor_sum * counts[m - k + 1]
        assert total % m == 0
        counts.append(total // m)
    return counts[n]


@lru_cache(maxsize=None)
def aut_order(t: Tree) -> int:
    """Order of the automorphism group: equal child subtrees may permute."""
    result = 1
    run = 0
    previous = None
    for child in t.children:
        result *= aut_order(child)
        run = run + 1 if child.encoding == previous else 1
        previous = child.encoding
        result *= run
    return result
