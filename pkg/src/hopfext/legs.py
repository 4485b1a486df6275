"""Sparse multi-leg tensors for evaluating Sweedler-notation expressions.

A :class:`Tensor` is a finite sum of pure basis tensors.  Every tensor factor
is a named *leg*; linear maps are applied to chosen legs and replace them by
new ones.  A contraction plan therefore reads like the Sweedler formula it
evaluates::

    t = Tensor.grid(field, h=H.space, a=A.space)      # tags @h, @a kept
    t = t.split("h", H.comult, "h1", "h2")              # h(1) (x) h(2)
    t = t.split("a", A.comult, "a1", "a2")
    t = t.apply(ract, ["h1", "a1"], ["x"])              # h(1) |> a(1)
    t = t.apply(lact, ["h2", "a2"], ["y"])              # h(2) <| a(2)

Legs whose name starts with ``@`` are *tags*: ``grid`` creates one per input
so that a single tensor evaluates an expression on every basis tuple at once.
"""
from __future__ import annotations

import itertools
from operator import itemgetter
from collections import defaultdict
from typing import Iterator, Sequence

import numpy as np

from .linalg import LinMap, ShapeError, VectorSpace
from .scalars import Field, QQ


def _getter(positions):
    """``key -> tuple(key[i] for i in positions)``."""
    if not positions:
        return lambda key: ()
    if len(positions) == 1:
        i = positions[0]
        return lambda key: (key[i],)
    return itemgetter(*positions)


class Tensor:
    __slots__ = ("legs", "dims", "terms", "field")

    def __init__(self, legs: Sequence[str], dims: Sequence[int], terms: dict, field: Field = QQ):
        self.legs = tuple(legs)
        self.dims = tuple(dims)
        self.terms = terms
        self.field = field
        if len(set(self.legs)) != len(self.legs):
            raise ValueError(f"duplicate leg names in {self.legs}")

    @classmethod
    def grid(cls, field: Field = QQ, **spaces: VectorSpace) -> "Tensor":
        """All basis tuples of the named spaces, each tagged by ``@name``."""
        names = list(spaces)
        dims = [spaces[n].dim for n in names]
        one = field.one
        terms = {idx + idx: one for idx in itertools.product(*(range(d) for d in dims))}
        return cls(["@" + n for n in names] + names, dims + dims, terms, field)

    @classmethod
    def pure(cls, field: Field = QQ, **indexed: tuple[VectorSpace, int]) -> "Tensor":
        """A single pure tensor ``{name: (space, index)}`` without tags."""
        names = list(indexed)
        return cls(names, [indexed[n][0].dim for n in names],
                   {tuple(indexed[n][1] for n in names): field.one}, field)

    @classmethod
    def from_vector(cls, name: str, V: VectorSpace, vector, field: Field = QQ) -> "Tensor":
        terms = {(i,): v for i, v in enumerate(vector) if field.reduce(v)}
        return cls([name], [V.dim], terms, field)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"Tensor(legs={self.legs}, terms={len(self.terms)})"

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(n for n in self.legs if n.startswith("@"))

    # -- core operation -------------------------------------------------------
    def apply(self, f: LinMap, inputs: Sequence[str], outputs: Sequence[str]) -> "Tensor":
        """Replace ``inputs`` by ``f(inputs)`` written on new legs ``outputs``.

        With several inputs the legs are flattened row-major in the order
        given, so ``f`` must be defined on the matching tensor product.
        """
        pos = [self.legs.index(n) for n in inputs]
        in_dims = [self.dims[p] for p in pos]
        flat_dim = int(np.prod(in_dims)) if in_dims else 1
        if flat_dim != f.domain.dim:
            raise ShapeError(f"legs {list(inputs)} have dimension {flat_dim}, map expects {f.domain.dim}")
        if len(outputs) == 1:
            out_dims = [f.codomain.dim]
        elif f.codomain.is_ground:
            out_dims = []
        else:
            out_dims = list(f.codomain.leg_dims())
        cols = f.sparse_columns(len(outputs))
        keep = [i for i in range(len(self.legs)) if i not in pos]
        p = self.field.modulus
        new: dict = defaultdict(int)
        base_of = _getter(keep)
        if len(pos) == 1:
            q = pos[0]
            flat_of = lambda key: key[q]
        elif len(pos) == 2:
            q0, q1 = pos
            d1 = in_dims[1]
            flat_of = lambda key: key[q0] * d1 + key[q1]
        else:
            def flat_of(key):
                flat = 0
                for q, d in zip(pos, in_dims):
                    flat = flat * d + key[q]
                return flat
        for key, c in self.terms.items():
            base = base_of(key)
            for out, v in cols[flat_of(key)]:
                new[base + out] += c * v
        if p:
            terms = {k: v % p for k, v in new.items() if v % p}
        else:
            terms = {k: v for k, v in new.items() if v}
        legs = [self.legs[i] for i in keep] + list(outputs)
        dims = [self.dims[i] for i in keep] + out_dims
        return Tensor(legs, dims, terms, self.field)

    # -- conveniences ---------------------------------------------------------
    def split(self, leg: str, comult: LinMap, *names: str) -> "Tensor":
        """Iterated comultiplication of ``leg`` into ``len(names)`` legs."""
        if len(names) < 2:
            raise ValueError("need at least two output legs")
        t, cur = self, leg
        for k, name in enumerate(names[:-1]):
            rest = names[-1] if k == len(names) - 2 else f"{leg}~{k}"
            t = t.apply(comult, [cur], [name, rest])
            cur = rest
        return t

    def mul(self, mult: LinMap, left: str, right: str, out: str) -> "Tensor":
        return self.apply(mult, [left, right], [out])

    def chain(self, mult: LinMap, legs: Sequence[str], out: str) -> "Tensor":
        """Left-nested product ``((l0 l1) l2) ...`` of the given legs."""
        t, cur = self, legs[0]
        for k, leg in enumerate(legs[1:]):
            nxt = out if k == len(legs) - 2 else f"{out}~{k}"
            t = t.apply(mult, [cur, leg], [nxt])
            cur = nxt
        if len(legs) == 1:
            t = t.rename(legs[0], out)
        return t

    def insert(self, name: str, unit: LinMap) -> "Tensor":
        """Add a leg carrying the vector ``unit(1)`` (``unit: k -> V``)."""
        return self.apply(unit, [], [name])

    def rename(self, old: str, new: str) -> "Tensor":
        legs = [new if n == old else n for n in self.legs]
        return Tensor(legs, self.dims, self.terms, self.field)

    def reorder(self, order: Sequence[str]) -> "Tensor":
        if sorted(order) != sorted(self.legs):
            raise ValueError(f"{order} is not a permutation of {self.legs}")
        perm = [self.legs.index(n) for n in order]
        terms = {tuple(k[i] for i in perm): v for k, v in self.terms.items()}
        return Tensor(order, [self.dims[i] for i in perm], terms, self.field)

    def combine(self, other: "Tensor", coeff=1) -> "Tensor":
        """``self + coeff * other``; legs are matched by name."""
        other = other.reorder(self.legs)
        if other.dims != self.dims:
            raise ShapeError("cannot add tensors with different leg dimensions")
        new = dict(self.terms)
        for k, v in other.terms.items():
            new[k] = new.get(k, 0) + coeff * v
        red = self.field.reduce
        terms = {k: red(v) for k, v in new.items() if red(v)}
        return Tensor(self.legs, self.dims, terms, self.field)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self.combine(other, -1)

    def __add__(self, other: "Tensor") -> "Tensor":
        return self.combine(other, 1)

    # -- read out -------------------------------------------------------------
    def _check_outs(self, outs: Sequence[str]):
        rest = set(self.legs) - set(self.tags) - set(outs)
        if rest:
            raise ValueError(f"legs {sorted(rest)} are neither tags nor outputs")

    def table(self, outs: Sequence[str]) -> dict[tuple, dict[tuple, object]]:
        """``{tag tuple: {output tuple: coefficient}}``."""
        self._check_outs(outs)
        tag_pos = [self.legs.index(n) for n in self.tags]
        out_pos = [self.legs.index(n) for n in outs]
        res: dict = defaultdict(dict)
        for k, v in self.terms.items():
            res[tuple(k[i] for i in tag_pos)][tuple(k[i] for i in out_pos)] = v
        return res

    def tag_dims(self) -> tuple[int, ...]:
        return tuple(self.dims[self.legs.index(n)] for n in self.tags)

    def tag_tuples(self) -> Iterator[tuple]:
        return itertools.product(*(range(d) for d in self.tag_dims()))

    def to_map(self, domain: VectorSpace, codomain: VectorSpace, outs: Sequence[str],
               tags: Sequence[str] | None = None) -> LinMap:
        """Read the tensor as a matrix: tags (row-major) index columns,
        ``outs`` (row-major) index rows."""
        tags = list(tags) if tags is not None else list(self.tags)
        self._check_outs(outs)
        tag_pos = [self.legs.index(n) for n in tags]
        out_pos = [self.legs.index(n) for n in outs]
        tdims = [self.dims[i] for i in tag_pos]
        odims = [self.dims[i] for i in out_pos]
        if int(np.prod(tdims)) != domain.dim or int(np.prod(odims)) != codomain.dim:
            raise ShapeError("tensor legs do not match the requested spaces")
        m = np.full((codomain.dim, domain.dim), self.field.zero, dtype=object)
        for k, v in self.terms.items():
            col = 0
            for i, d in zip(tag_pos, tdims):
                col = col * d + k[i]
            row = 0
            for i, d in zip(out_pos, odims):
                row = row * d + k[i]
            m[row, col] = m[row, col] + v
        return LinMap(domain, codomain, m, self.field)

    def vector(self, outs: Sequence[str]) -> list:
        """Dense coefficients of an untagged tensor over ``outs`` (row-major)."""
        if self.tags:
            raise ValueError("vector() needs an untagged tensor")
        self._check_outs(outs)
        out_pos = [self.legs.index(n) for n in outs]
        odims = [self.dims[i] for i in out_pos]
        v = [self.field.zero] * int(np.prod(odims) if odims else 1)
        for k, c in self.terms.items():
            row = 0
            for i, d in zip(out_pos, odims):
                row = row * d + k[i]
            v[row] = v[row] + c
        return v
