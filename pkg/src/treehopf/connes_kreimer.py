"""The commutative Hopf algebra of rooted forests with the cut coproduct.

Elements are rational combinations of forests; a forest stands for the
product of its trees and the empty forest is the unit 1.  On a single tree

    coproduct(t) = 1 (x) t  +  t (x) 1  +  sum over admissible cuts c
                                           of branch(c) (x) trunk(c)

and on a monomial the coproduct acts factor by factor, since it is an
algebra map.  A second, recursive form of the tree coproduct (peel the
root, coproduct the child forest, regrow the root on the right leg) is kept
as an independent cross-check.  The antipode follows the cut recursion and
extends multiplicatively over forest factors.

Leaf growth at every vertex is a weight +1 derivation; its iterates starting
from the one-vertex tree give the chain ``delta(1), delta(2), ...`` whose
span closure under the coproduct is checked degree by degree with exact
membership solves.  ``add_root`` (a basis forest goes to the tree grown over
it) is the Hochschild 1-cocycle partner of the coproduct.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactlin import LinComb, Tensor, add_to, solve_membership, tensor
from .trees import (EMPTY_FOREST, LEAF, Forest, Tree, admissible_cuts, b_plus,
                    natural_growth_terms)

UNIT = LinComb.term(EMPTY_FOREST)


def tree_monomial(t: Tree) -> LinComb:
    """The forest monomial of a single tree, as an element."""
    return LinComb.term(Forest((t,)))


def product(a: LinComb, b: LinComb) -> LinComb:
    """Commutative product: multiset union on basis forests, bilinear."""
    out: dict = {}
    for fa, ca in a.terms.items():
        for fb, cb in b.terms.items():
            add_to(out, fa.union(fb), ca * cb)
    return LinComb(out)


def multiply_tensors(x: LinComb, y: LinComb) -> LinComb:
    """Leg-by-leg forest product on tensor combinations."""
    out: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            add_to(out, Tensor(kx.left.union(ky.left), kx.right.union(ky.right)),
                   cx * cy)
    return LinComb(out)


@lru_cache(maxsize=None)
def tree_coproduct_by_cuts(t: Tree) -> LinComb:
    """All-cuts coproduct of a single tree; tensor legs are forests."""
    single = Forest((t,))
    out = {Tensor(EMPTY_FOREST, single): Fraction(1),
           Tensor(single, EMPTY_FOREST): Fraction(1)}
    for cut in admissible_cuts(t):
        add_to(out, Tensor(cut.branch, Forest((cut.trunk,))), 1)
    return LinComb(out)


@lru_cache(maxsize=None)
def tree_coproduct_recursive(t: Tree) -> LinComb:
    """Root-recursion form of the tree coproduct; must match the cut form."""
    acc = LinComb.term(Tensor(EMPTY_FOREST, EMPTY_FOREST))
    for child in t.children:
        acc = multiply_tensors(acc, tree_coproduct_recursive(child))
    out = {Tensor(Forest((t,)), EMPTY_FOREST): Fraction(1)}
    for key, coeff in acc.terms.items():
        add_to(out, Tensor(key.left, Forest((b_plus(key.right),))), coeff)
    return LinComb(out)


@lru_cache(maxsize=None)
def forest_coproduct(f: Forest) -> LinComb:
    """Coproduct of a basis forest: product of its tree coproducts."""
    out = LinComb.term(Tensor(EMPTY_FOREST, EMPTY_FOREST))
    for t in f.items:
        out = multiply_tensors(out, tree_coproduct_by_cuts(t))
    return out


def coproduct(x: LinComb) -> LinComb:
    out: dict = {}
    for f, c in x.terms.items():
        for key, coeff in forest_coproduct(f).terms.items():
            add_to(out, key, c * coeff)
    return LinComb(out)


def counit(x: LinComb) -> Fraction:
    """Coefficient of the empty forest."""
    return x.coeff(EMPTY_FOREST)


@lru_cache(maxsize=None)
def tree_antipode(t: Tree) -> LinComb:
    out = LinComb.term(Forest((t,)), -1)
    for cut in admissible_cuts(t):
        out = out - product(forest_antipode(cut.branch), tree_monomial(cut.trunk))
    return out


def forest_antipode(f: Forest) -> LinComb:
    """Antipode of a basis forest; multiplicative over the tree factors."""
    out = UNIT
    for t in f.items:
        out = product(out, tree_antipode(t))
    return out


def antipode(x: LinComb) -> LinComb:
    out: dict = {}
    for f, c in x.terms.items():
        for key, coeff in forest_antipode(f).terms.items():
            add_to(out, key, c * coeff)
    return LinComb(out)


def tree_growth(t: Tree) -> LinComb:
    return LinComb((Forest((grown,)), 1) for grown in natural_growth_terms(t))


def forest_growth(f: Forest) -> LinComb:
    """Leaf growth on a basis forest, expanded by the Leibniz rule."""
    out: dict = {}
    for i, t in enumerate(f.items):
        rest = f.items[:i] + f.items[i + 1:]
        for grown in natural_growth_terms(t):
            add_to(out, Forest(rest + (grown,)), 1)
    return LinComb(out)


def natural_growth(x: LinComb) -> LinComb:
    """Attach one new leaf at every vertex; a derivation, weight +1."""
    out: dict = {}
    for f, c in x.terms.items():
        for key, coeff in forest_growth(f).terms.items():
            add_to(out, key, c * coeff)
    return LinComb(out)


_delta_cache: list[LinComb] = []


def delta(k: int) -> LinComb:
    """The k-th growth iterate of the one-vertex tree (k >= 1).

    An integer combination of trees with exactly k vertices.
    """
    if k < 1:
        raise ValueError("delta is defined for k >= 1")
    if not _delta_cache:
        _delta_cache.append(tree_monomial(LEAF))
    while len(_delta_cache) < k:
        _delta_cache.append(natural_growth(_delta_cache[-1]))
    return _delta_cache[k - 1]


def add_root(x: LinComb) -> LinComb:
    """Send each basis forest to the tree grown over it, linearly.

    Satisfies the Hochschild 1-cocycle identity
    ``coproduct(add_root(x)) = add_root(x) (x) 1 + (id (x) add_root)(coproduct(x))``.
    """
    return LinComb((Forest((b_plus(f),)), c) for f, c in x.terms.items())


def partitions(n: int) -> list[tuple[int, ...]]:
    """Integer partitions of n with descending parts, largest-first order."""
    out: list[tuple[int, ...]] = []

    def descend(remaining: int, largest: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, largest), 0, -1):
            descend(remaining - part, part, acc + [part])

    descend(n, n, [])
    return out


def delta_monomial(parts) -> LinComb:
    """Product of delta(k) over the parts; the empty partition is the unit."""
    out = UNIT
    for k in parts:
        out = product(out, delta(k))
    return out


def delta_membership(x: LinComb, weight: int):
    """Coordinates of x over the delta-monomial basis at the given weight.

    Returns ``{partition: coefficient}`` or None when x is outside the span.
    The input must be homogeneous of the given weight.
    """
    if weight < 1:
        raise ValueError("weight must be >= 1")
    for f in x.terms:
        if f.weight != weight:
            raise ValueError("element is not homogeneous of the given weight")
    parts = partitions(weight)
    coords = solve_membership(x, [delta_monomial(p) for p in parts])
    if coords is None:
        return None
    return dict(zip(parts, coords))


def delta_coproduct_membership(k: int):
    """Coordinates of coproduct(delta(k)) over delta-monomial tensor pairs.

    Generators are all ``delta_monomial(p) (x) delta_monomial(q)`` with the
    weights of p and q summing to k; returns ``{(p, q): coefficient}`` or
    None when the solve fails.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    target = coproduct(delta(k))
    labels = []
    generators = []
    for left_weight in range(k + 1):
        for p in partitions(left_weight):
            for q in partitions(k - left_weight):
                labels.append((p, q))
                generators.append(tensor(delta_monomial(p), delta_monomial(q)))
    coords = solve_membership(target, generators)
    if coords is None:
        return None
    return dict(zip(labels, coords))
