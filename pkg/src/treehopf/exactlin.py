"""Exact rational linear combinations over canonical basis keys.

``LinComb`` is a sparse formal sum with ``fractions.Fraction`` coefficients.
Keys may be any hashable objects exposing an ``encoding`` string (trees,
forests, tensor pairs); the encoding gives deterministic ordering for
serialization and for the elimination routines.  Products, coproducts and
brackets are defined on basis keys elsewhere and lifted here with
``extend_linear`` / ``extend_bilinear``.  ``solve_membership`` and ``rank``
run dense Gaussian elimination over the rationals, keeping every check
bit-exact.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def add_to(acc: dict, key, coeff) -> None:
    """Accumulate ``coeff`` at ``key``; zeros are pruned by LinComb later."""
    acc[key] = acc.get(key, 0) + coeff


class LinComb:
    """Finite formal sum of basis keys with nonzero rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                current = data.get(key)
                value = Fraction(coeff) if current is None else current + Fraction(coeff)
                if value:
                    data[key] = value
                elif key in data:
                    del data[key]
        self.terms = data

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def term(cls, key, coeff=1) -> "LinComb":
        return cls({key: coeff})

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def items(self):
        return self.terms.items()

    def support(self):
        return self.terms.keys()

    def mass(self) -> Fraction:
        """Sum of all coefficients (total multiplicity)."""
        return sum(self.terms.values(), Fraction(0))

    def map_keys(self, f) -> "LinComb":
        """Relabel basis keys; colliding images merge additively."""
        return LinComb((f(k), c) for k, c in self.terms.items())

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            add_to(out, key, coeff)
        return LinComb(out)

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            add_to(out, key, -coeff)
        return LinComb(out)

    def __neg__(self):
        return LinComb({k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        return LinComb({k: c * Fraction(scalar) for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        body = ", ".join(f"{k.encoding!r}: {c}" for k, c in
                         sorted(self.terms.items(), key=lambda kv: kv[0].encoding))
        return f"LinComb({{{body}}})"


def combine(a: LinComb, b: LinComb, scalar=1) -> LinComb:
    """a + scalar * b, zero terms pruned."""
    out = dict(a.terms)
    s = Fraction(scalar)
    for key, coeff in b.terms.items():
        add_to(out, key, coeff * s)
    return LinComb(out)


def extend_linear(f):
    """Lift a basis-level map ``key -> LinComb`` to a linear map."""

    def lifted(x: LinComb) -> LinComb:
        out: dict = {}
        for key, c in x.terms.items():
            for image_key, image_c in f(key).terms.items():
                add_to(out, image_key, c * image_c)
        return LinComb(out)

    return lifted


def extend_bilinear(f):
    """Lift a basis-level map ``(key, key) -> LinComb`` to a bilinear map."""

    def lifted(a: LinComb, b: LinComb) -> LinComb:
        out: dict = {}
        for ka, ca in a.terms.items():
            for kb, cb in b.terms.items():
                scale = ca * cb
                for image_key, image_c in f(ka, kb).terms.items():
                    add_to(out, image_key, scale * image_c)
        return LinComb(out)

    return lifted


class Tensor:
    """Ordered pair of basis keys; the basis of a two-fold tensor space."""

    __slots__ = ("left", "right", "encoding", "_hash")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.encoding = f"{left.encoding} | {right.encoding}"
        self._hash = hash(("Tensor", self.encoding))

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.encoding == other.encoding

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Tensor({self.left!r}, {self.right!r})"


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """Tensor product of two combinations."""
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            add_to(out, Tensor(ka, kb), ca * cb)
    return LinComb(out)


def map_left(f, x: LinComb) -> LinComb:
    """Apply a linear basis map to the left leg of a tensor combination."""
    out: dict = {}
    for key, c in x.terms.items():
        for image_key, image_c in f(key.left).terms.items():
            add_to(out, Tensor(image_key, key.right), c * image_c)
    return LinComb(out)


def map_right(f, x: LinComb) -> LinComb:
    """Apply a linear basis map to the right leg of a tensor combination."""
    out: dict = {}
    for key, c in x.terms.items():
        for image_key, image_c in f(key.right).terms.items():
            add_to(out, Tensor(key.left, image_key), c * image_c)
    return LinComb(out)


def swap_legs(x: LinComb) -> LinComb:
    """Exchange the tensor legs."""
    return x.map_keys(lambda key: Tensor(key.right, key.left))


def tensor_multiply(x: LinComb, y: LinComb, mult_left, mult_right) -> LinComb:
    """Componentwise product of tensor combinations.

    ``mult_left`` and ``mult_right`` are basis-level products returning
    combinations; the result is the bilinear leg-by-leg product of x and y.
    """
    out: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            scale = cx * cy
            left = mult_left(kx.left, ky.left)
            right = mult_right(kx.right, ky.right)
            for kl, cl in left.terms.items():
                for kr, cr in right.terms.items():
                    add_to(out, Tensor(kl, kr), scale * cl * cr)
    return LinComb(out)


def solve_membership(target: LinComb, generators) -> list[Fraction] | None:
    """Exact coordinates of ``target`` in the span of ``generators``.

    Gauss-Jordan elimination over the rationals.  Returns one coordinate
    vector (free coordinates set to 0), or None when the system is
    inconsistent; a successful result always reproduces the target exactly
    on re-substitution.
    """
    generators = list(generators)
    keys = sorted({k for g in generators for k in g.terms} | set(target.terms),
                  key=lambda k: k.encoding)
    ncols = len(generators)
    rows = [[g.coeff(k) for g in generators] + [target.coeff(k)] for k in keys]
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(row, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[row], rows[pivot_row] = rows[pivot_row], rows[row]
        pivot = rows[row][col]
        rows[row] = [v / pivot for v in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
        if row == len(rows):
            break
    for i in range(row, len(rows)):
        if rows[i][ncols]:
            return None
    coords = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        coords[col] = rows[i][ncols]
    return coords


def rank(vectors) -> int:
    """Rank of a family of combinations, by exact forward elimination."""
    vectors = list(vectors)
    keys = sorted({k for v in vectors for k in v.terms}, key=lambda k: k.encoding)
    if not keys:
        return 0
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(keys)
        for k, c in v.terms.items():
            row[index[k]] = c
        rows.append(row)
    rnk = 0
    for col in range(len(keys)):
        pivot_row = next((i for i in range(rnk, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[rnk], rows[pivot_row] = rows[pivot_row], rows[rnk]
        pivot = rows[rnk][col]
        for i in range(rnk + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / pivot
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rnk])]
        rnk += 1
        if rnk == len(rows):
            break
    return rnk
