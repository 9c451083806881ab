"""Lie algebra structure on the span of rooted trees via single grafting.

``star_trees(a, b)`` grafts the whole of a onto each vertex of b, one term
per vertex, so the coefficient mass equals ``size(b)``.  The bracket is the
commutator of that operation (which itself is not associative).

The independent oracle recovers the same coefficients from one-edge cuts of
every candidate result tree.  A raw count of severable edges is not the
number of attachment sites: the two differ by symmetry (double counting
isomorphisms of the cut pair gives ``sites * |Aut(result)| = edges *
|Aut(branch)| * |Aut(trunk)|``), so the oracle rescales each raw edge count
accordingly.  The raw count is exposed as ``single_cut_count`` so the
rescaling identity itself can be tested.

Root deletion maps the single-child-root trees of the grafting algebra onto
this Lie algebra; root attachment is its inverse.
"""

from __future__ import annotations

from fractions import Fraction

from .exactlin import LinComb, add_to
from .trees import (Forest, Tree, admissible_cuts, aut_order, enumerate_trees,
                    graft)


def star_trees(t1: Tree, t2: Tree) -> LinComb:
    """Graft t1 onto each vertex of t2; one term per vertex of t2."""
    return LinComb((graft(t2, v, t1), 1) for v in range(t2.size))


def star(a: LinComb, b: LinComb) -> LinComb:
    out: dict = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            scale = ca * cb
            for key, coeff in star_trees(ta, tb).terms.items():
                add_to(out, key, scale * coeff)
    return LinComb(out)


def single_cut_count(t1: Tree, t2: Tree, t: Tree) -> int:
    """Raw number of one-edge cuts of t with branch t1 and trunk t2."""
    target = Forest((t1,))
    return sum(1 for cut in admissible_cuts(t)
               if cut.order == 1 and cut.branch == target and cut.trunk == t2)


def star_by_cut_counting(t1: Tree, t2: Tree, max_size: int | None = None) -> LinComb:
    """Cut-count oracle for ``star_trees``.

    Enumerates every tree with ``size(t1) + size(t2)`` vertices, counts its
    one-edge cuts with branch t1 and trunk t2, and rescales by
    ``|Aut(t1)| * |Aut(t2)| / |Aut(candidate)|`` to convert severable-edge
    counts into attachment-site counts.  Must equal ``star_trees`` on every
    basis pair.
    """
    total = t1.size + t2.size
    if max_size is not None and max_size < total:
        raise ValueError("max_size is smaller than the combined tree size")
    scale = Fraction(aut_order(t1) * aut_order(t2))
    out: dict = {}
    for t in enumerate_trees(total):
        raw = single_cut_count(t1, t2, t)
        if raw:
            out[t] = scale * raw / aut_order(t)
    return LinComb(out)


def bracket(a: LinComb, b: LinComb) -> LinComb:
    """Commutator of the grafting operation; antisymmetric, satisfies Jacobi."""
    return star(a, b) - star(b, a)


def phi(x: LinComb) -> LinComb:
    """Root deletion on combinations of single-child-root trees.

    Rejects any support tree whose root has fertility other than one.
    """
    for t in x.terms:
        if t.fertility != 1:
            raise ValueError(
                f"{t.encoding} has root fertility {t.fertility}; expected 1")
    return x.map_keys(lambda t: t.children[0])


def psi(x: LinComb) -> LinComb:
    """Attach a new root over each basis tree; inverse of ``phi``."""
    return x.map_keys(lambda t: Tree((t,)))
