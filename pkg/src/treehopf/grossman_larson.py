"""The cocommutative Hopf algebra of rooted trees under grafting.

Linear basis: all rooted trees, with the one-vertex tree as the unit.  For
trees a and b, ``tree_product(a, b)`` detaches the root subtrees s_1..s_r of
a and attaches them to vertices of b in all ``size(b) ** r`` ways; isomorphic
results merge, so the total coefficient mass is exactly ``size(b) ** r``.
``tree_coproduct`` splits the root subtrees over the ``2 ** r`` ordered
subset pairs (one binary choice per child slot, so repeated subtrees create
multiplicities) and regrows a root on each side.

The degree of a tree is its vertex count minus one; the product and
coproduct are degree-additive, and the antipode comes from the connected
graded recursion through the reduced coproduct.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exactlin import LinComb, Tensor, add_to, rank, tensor
from .trees import LEAF, Tree, enumerate_trees, graft_many

UNIT = LinComb.term(LEAF)


def tree_degree(t: Tree) -> int:
    return t.size - 1


@lru_cache(maxsize=None)
def tree_product(t1: Tree, t2: Tree) -> LinComb:
    """Grafting product of basis trees.

    Enumerates every assignment of the root subtrees of t1 to vertices of
    t2; attachments are simultaneous, so vertex indices always refer to the
    original t2.
    """
    subtrees = t1.children
    out: dict = {}
    for assignment in itertools.product(range(t2.size), repeat=len(subtrees)):
        add_to(out, graft_many(t2, zip(assignment, subtrees)), 1)
    return LinComb(out)


def product(a: LinComb, b: LinComb) -> LinComb:
    out: dict = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            scale = ca * cb
            for key, coeff in tree_product(ta, tb).terms.items():
                add_to(out, key, scale * coeff)
    return LinComb(out)


@lru_cache(maxsize=None)
def tree_coproduct(t: Tree) -> LinComb:
    """Subset-split coproduct of a basis tree; tensor legs are trees."""
    subtrees = t.children
    r = len(subtrees)
    out: dict = {}
    for mask in range(1 << r):
        left = Tree(subtrees[i] for i in range(r) if mask >> i & 1)
        right = Tree(subtrees[i] for i in range(r) if not mask >> i & 1)
        add_to(out, Tensor(left, right), 1)
    return LinComb(out)


def coproduct(x: LinComb) -> LinComb:
    out: dict = {}
    for t, c in x.terms.items():
        for key, coeff in tree_coproduct(t).terms.items():
            add_to(out, key, c * coeff)
    return LinComb(out)


def counit(x: LinComb) -> Fraction:
    """Coefficient of the one-vertex tree."""
    return x.coeff(LEAF)


@lru_cache(maxsize=None)
def tree_antipode(t: Tree) -> LinComb:
    """Connected graded recursion through the reduced coproduct."""
    if t == LEAF:
        return UNIT
    out = {t: Fraction(-1)}
    for key, coeff in tree_coproduct(t).terms.items():
        if key.left == LEAF or key.right == LEAF:
            continue
        for k2, c2 in product(tree_antipode(key.left), LinComb.term(key.right)).terms.items():
            add_to(out, k2, -coeff * c2)
    return LinComb(out)


def antipode(x: LinComb) -> LinComb:
    out: dict = {}
    for t, c in x.terms.items():
        for key, coeff in tree_antipode(t).terms.items():
            add_to(out, key, c * coeff)
    return LinComb(out)


def primitive_basis(n: int) -> list[Tree]:
    """All trees of size n + 1 whose root has exactly one child."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return [Tree((t,)) for t in enumerate_trees(n)]


def primitive_space_dimension(n: int) -> int:
    """Dimension of the primitives in degree n, by exact rank computation.

    Solves ``coproduct(x) = unit (x) x + x (x) unit`` on the degree-n slice;
    an independent check of ``primitive_basis``.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    basis = enumerate_trees(n + 1)
    unit = LinComb.term(LEAF)
    columns = []
    for t in basis:
        elem = LinComb.term(t)
        columns.append(tree_coproduct(t) - tensor(unit, elem) - tensor(elem, unit))
    return len(basis) - rank(columns)
