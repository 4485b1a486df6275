"""Finite-dimensional spaces, exact matrices and subspace computations.

Tensor products use one global basis convention: for spaces V and W the
basis vector ``v_i (x) w_j`` has index ``i * dim(W) + j`` (row-major, V outer).
Every contraction in the package relies on it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .scalars import QQ, Field


class ShapeError(ValueError):
    """Raised when linear maps are combined along mismatched spaces."""


class NotInSubspace(ValueError):
    pass


@dataclass(frozen=True)
class VectorSpace:
    """A space with an ordered basis of distinct labels.

    ``factors`` records a tensor decomposition: ``None`` for a plain space,
    ``()`` for the ground field, otherwise the tensor factors in order.
    """

    labels: tuple[str, ...]
    factors: tuple["VectorSpace", ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        if self.factors == () and len(self.labels) != 1:
            raise ValueError("the ground field is one-dimensional")
        if self.factors:
            if int(np.prod([f.dim for f in self.factors])) != len(self.labels):
                raise ValueError("factor dimensions do not multiply to the dimension")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def is_ground(self) -> bool:
        return self.factors == ()

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def leg_dims(self) -> tuple[int, ...]:
        """Dimensions of the legs this space contributes to a tensor."""
        if self.factors is None:
            return (self.dim,)
        return tuple(f.dim for f in self.factors)

    def __repr__(self):
        if self.is_ground:
            return "VectorSpace(k)"
        return f"VectorSpace(dim={self.dim})"


K = VectorSpace(("1",), ())


def space(labels: Iterable[str] | int, prefix: str = "e") -> VectorSpace:
    if isinstance(labels, int):
        labels = [f"{prefix}{i}" for i in range(labels)]
    return VectorSpace(tuple(str(x) for x in labels))


def tensor_space(*spaces: VectorSpace) -> VectorSpace:
    """Tensor product with row-major basis ordering; ground factors drop out."""
    spaces = tuple(s for s in spaces if not s.is_ground)
    if not spaces:
        return K
    if len(spaces) == 1:
        return spaces[0]
    labels = tuple("(" + ",".join(p) + ")" for p in itertools.product(*(s.labels for s in spaces)))
    return VectorSpace(labels, spaces)


def _unflatten(index: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        index, r = divmod(index, d)
        out.append(r)
    return tuple(reversed(out))


def _as_matrix(matrix, rows: int, cols: int) -> np.ndarray:
    arr = np.empty((rows, cols), dtype=object)
    src = np.asarray(matrix, dtype=object)
    if src.shape != (rows, cols):
        raise ShapeError(f"matrix shape {src.shape} does not match ({rows}, {cols})")
    arr[...] = src
    return arr


@dataclass(frozen=True, eq=False)
class LinMap:
    """A linear map ``domain -> codomain`` stored as a dense exact matrix
    with ``codomain.dim`` rows and ``domain.dim`` columns."""

    domain: VectorSpace
    codomain: VectorSpace
    matrix: np.ndarray
    field: Field = dc_field(default=QQ)

    def __post_init__(self):
        m = _as_matrix(self.matrix, self.codomain.dim, self.domain.dim)
        red = self.field.reduce
        if self.field.modulus:
            m = m % self.field.modulus
        else:
            flat = m.ravel()
            for i, v in enumerate(flat.tolist()):
                if type(v) is not int:
                    flat[i] = red(v)
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    # construction helpers
    @classmethod
    def from_columns(cls, domain, codomain, columns, field: Field = QQ) -> "LinMap":
        """``columns[j]`` is a dict ``{row: value}`` (or a dense sequence)."""
        m = np.full((codomain.dim, domain.dim), field.zero, dtype=object)
        for j, col in enumerate(columns):
            if isinstance(col, dict):
                for i, v in col.items():
                    m[i, j] = m[i, j] + v
            else:
                m[:, j] = list(col)
        return cls(domain, codomain, m, field)

    @classmethod
    def from_function(cls, domain, codomain, fn, field: Field = QQ) -> "LinMap":
        """Build from ``fn(j) -> {row: value}`` over the domain basis."""
        return cls.from_columns(domain, codomain, [fn(j) for j in range(domain.dim)], field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def column(self, j: int) -> dict[int, object]:
        return {i: v for i, v in enumerate(self.matrix[:, j]) if v}

    @cached_property
    def _flat_columns(self):
        return [tuple(((i,), v) for i, v in enumerate(self.matrix[:, j]) if v)
                for j in range(self.domain.dim)]

    @cached_property
    def _split_columns(self):
        dims = self.codomain.leg_dims() if not self.codomain.is_ground else ()
        cols = []
        for j in range(self.domain.dim):
            cols.append(tuple((_unflatten(i, dims) if dims else (), v)
                              for i, v in enumerate(self.matrix[:, j]) if v))
        return cols

    def sparse_columns(self, n_out: int):
        """Nonzero columns with row indices split into ``n_out`` legs."""
        if n_out == 1 and not self.codomain.is_ground:
            return self._flat_columns
        expected = 0 if self.codomain.is_ground else len(self.codomain.leg_dims())
        if n_out != expected:
            raise ShapeError(f"codomain has {expected} legs, not {n_out}")
        return self._split_columns

    def __call__(self, vector) -> np.ndarray:
        v = np.asarray(vector, dtype=object)
        out = self.matrix.dot(v) if self.domain.dim else np.full(self.codomain.dim, self.field.zero, dtype=object)
        return _reduce_array(out, self.field)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.domain.dim == other.domain.dim and self.codomain.dim == other.codomain.dim
                and bool(np.all(self.matrix == other.matrix)))

    __hash__ = None

    def same_spaces(self, other: "LinMap") -> bool:
        return self.domain == other.domain and self.codomain == other.codomain

    def is_zero(self) -> bool:
        return not any(self.matrix.flat)

    def with_spaces(self, domain: VectorSpace, codomain: VectorSpace) -> "LinMap":
        return LinMap(domain, codomain, self.matrix, self.field)

    def transpose(self) -> "LinMap":
        return LinMap(self.codomain, self.domain, self.matrix.T, self.field)

    def __repr__(self):
        return f"LinMap({self.domain.dim} -> {self.codomain.dim}, {self.field!r})"


def _reduce_array(arr: np.ndarray, field: Field) -> np.ndarray:
    if field.modulus:
        return arr % field.modulus
    red = field.reduce
    out = np.empty(arr.size, dtype=object)
    out[:] = [v if type(v) is int else red(v) for v in arr.ravel().tolist()]
    return out.reshape(arr.shape)


def identity(V: VectorSpace, field: Field = QQ) -> LinMap:
    m = np.full((V.dim, V.dim), field.zero, dtype=object)
    for i in range(V.dim):
        m[i, i] = field.one
    return LinMap(V, V, m, field)


def zero_map(V: VectorSpace, W: VectorSpace, field: Field = QQ) -> LinMap:
    return LinMap(V, W, np.full((W.dim, V.dim), field.zero, dtype=object), field)


def vector_map(vector, W: VectorSpace, field: Field = QQ) -> LinMap:
    """The map ``k -> W`` sending 1 to ``vector``."""
    return LinMap(K, W, np.asarray(list(vector), dtype=object).reshape(W.dim, 1), field)


def functional(values, V: VectorSpace, field: Field = QQ) -> LinMap:
    """The map ``V -> k`` with the given values on the basis."""
    return LinMap(V, K, np.asarray(list(values), dtype=object).reshape(1, V.dim), field)


def _check_field(*maps: LinMap) -> Field:
    f = maps[0].field
    for m in maps[1:]:
        if m.field != f:
            raise ShapeError("maps live over different fields")
    return f


def compose(f: LinMap, g: LinMap) -> LinMap:
    """``f o g``; requires ``codomain(g) == domain(f)`` (compared by dimension)."""
    field = _check_field(f, g)
    if g.codomain.dim != f.domain.dim:
        raise ShapeError(f"cannot compose {f!r} after {g!r}")
    F = f.matrix
    out = np.full((f.codomain.dim, g.domain.dim), field.zero, dtype=object)
    for j in range(g.domain.dim):
        acc = None
        for k, v in enumerate(g.matrix[:, j]):
            if v:
                term = F[:, k] * v
                acc = term if acc is None else acc + term
        if acc is not None:
            out[:, j] = acc
    return LinMap(g.domain, f.codomain, out, field)


def add(f: LinMap, g: LinMap) -> LinMap:
    field = _check_field(f, g)
    if f.shape != g.shape:
        raise ShapeError("cannot add maps of different shapes")
    return LinMap(f.domain, f.codomain, f.matrix + g.matrix, field)


def scale(c, f: LinMap) -> LinMap:
    return LinMap(f.domain, f.codomain, f.matrix * f.field(c), f.field)


def sub(f: LinMap, g: LinMap) -> LinMap:
    return add(f, scale(-1, g))


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    """``(f (x) g)(v (x) w) = f(v) (x) g(w)`` in the row-major convention."""
    field = _check_field(f, g)
    F, G = f.matrix, g.matrix
    m, n = F.shape
    p, q = G.shape
    kron = np.multiply.outer(F, G).transpose(0, 2, 1, 3).reshape(m * p, n * q)
    return LinMap(tensor_space(f.domain, g.domain), tensor_space(f.codomain, g.codomain), kron, field)


# --- exact elimination -----------------------------------------------------

def rref(rows: Sequence[Sequence], field: Field = QQ) -> tuple[list[list], list[int]]:
    """Reduced row echelon form with leftmost-nonzero, first-row pivoting.

    Returns the nonzero rows and their pivot columns.
    """
    p = field.modulus
    R = [[field.reduce(x) for x in r] for r in rows]
    if not R:
        return [], []
    nrows, ncols = len(R), len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.inv(R[r][c])
        if p:
            R[r] = [x * inv % p for x in R[r]]
        else:
            R[r] = [field.reduce(x * inv) for x in R[r]]
        prow = R[r]
        support = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = R[i]
            fac = row[c]
            if not fac:
                continue
            if p:
                for j in support:
                    row[j] = (row[j] - fac * prow[j]) % p
            else:
                for j in support:
                    row[j] = row[j] - fac * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    if not p:
        R = [[field.reduce(x) for x in row] for row in R[:r]]
    return R[:r], pivots


def rank(f: LinMap) -> int:
    return len(rref(f.matrix.tolist(), f.field)[1])


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace given by its (unique) RREF basis, stored as rows."""

    ambient: VectorSpace
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]
    field: Field = QQ

    @classmethod
    def span(cls, ambient: VectorSpace, vectors: Iterable[Sequence], field: Field = QQ) -> "Subspace":
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(ambient, (), (), field)
        R, piv = rref(vectors, field)
        return cls(ambient, tuple(tuple(r) for r in R), tuple(piv), field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis and self.ambient.dim == other.ambient.dim

    __hash__ = None

    def coords(self, vector: Sequence) -> list:
        """Coordinates of ``vector`` in this basis; raises if it lies outside."""
        red = self.field.reduce
        v = [red(x) for x in vector]
        c = [v[p] for p in self.pivots]
        rebuilt = [self.field.zero] * len(v)
        for coeff, row in zip(c, self.basis):
            if coeff:
                for j, x in enumerate(row):
                    if x:
                        rebuilt[j] = rebuilt[j] + coeff * x
        if [red(x) for x in rebuilt] != v:
            raise NotInSubspace("vector is not in the subspace")
        return c

    def contains(self, vector: Sequence) -> bool:
        try:
            self.coords(vector)
        except NotInSubspace:
            return False
        return True

    @cached_property
    def space(self) -> VectorSpace:
        """Basis labels inherited from the pivot columns."""
        return VectorSpace(tuple(self.ambient.labels[p] for p in self.pivots))

    def inclusion(self) -> LinMap:
        cols = [dict(enumerate(row)) for row in self.basis]
        return LinMap.from_columns(self.space, self.ambient, cols, self.field)

    def coordinate_map(self) -> LinMap:
        """Left inverse of :meth:`inclusion` reading the pivot entries."""
        cols = []
        for j in range(self.ambient.dim):
            cols.append({k: self.field.one for k, p in enumerate(self.pivots) if p == j})
        return LinMap.from_columns(self.ambient, self.space, cols, self.field)


def nullspace(f: LinMap) -> Subspace:
    """Kernel of ``f`` as a deterministic RREF basis."""
    field = f.field
    n = f.domain.dim
    R, piv = rref(f.matrix.tolist(), field) if f.codomain.dim else ([], [])
    free = [j for j in range(n) if j not in piv]
    vecs = []
    for j in free:
        v = [field.zero] * n
        v[j] = field.one
        for row, pc in zip(R, piv):
            v[pc] = field.reduce(-row[j])
        vecs.append(v)
    return Subspace.span(f.domain, vecs, field)


def image(f: LinMap) -> Subspace:
    return Subspace.span(f.codomain, f.matrix.T.tolist(), f.field)


def solve(f: LinMap, target: LinMap) -> LinMap | None:
    """Some ``X`` with ``f o X = target``, or ``None`` when none exists."""
    field = _check_field(f, target)
    if f.codomain.dim != target.codomain.dim:
        raise ShapeError("target must share the codomain of f")
    n, k = f.domain.dim, target.domain.dim
    aug = np.concatenate([f.matrix, target.matrix], axis=1).tolist()
    R, piv = rref(aug, field)
    if any(p >= n for p in piv):
        return None
    X = np.full((n, k), field.zero, dtype=object)
    for row, p in zip(R, piv):
        X[p, :] = row[n:]
    return LinMap(target.domain, f.domain, X, field)


def inverse(f: LinMap) -> LinMap | None:
    if f.domain.dim != f.codomain.dim:
        return None
    X = solve(f, identity(f.codomain, f.field))
    if X is None or compose(X, f) != identity(f.domain, f.field):
        return None
    return X.with_spaces(f.codomain, f.domain)


def permutation_map(perm: Sequence[int], V: VectorSpace, W: VectorSpace | None = None,
                    field: Field = QQ) -> LinMap:
    """The map sending basis vector ``j`` to basis vector ``perm[j]``."""
    W = W or V
    return LinMap.from_columns(V, W, [{perm[j]: field.one} for j in range(V.dim)], field)
