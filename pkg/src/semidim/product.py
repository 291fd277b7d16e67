"""Direct products of finite semirings with componentwise operations."""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceededError, SemiringFormatError
from .semiring import SemiringTable, require_admissible, zero_divisors

MATERIALIZE_CAP = 4096


class ProductSemiring:
    """S_1 x ... x S_n.  Elements are tuples of factor indices.

    Enumeration is row-major: the last coordinate varies fastest, so the
    element order is ascending tuple order.
    """

    def __init__(self, factors: Sequence[SemiringTable]):
        if not factors:
            raise SemiringFormatError("a product needs at least one factor")
        self.factors = tuple(factors)
        self.orders = tuple(f.order for f in self.factors)
        self.order = math.prod(self.orders)

    def __len__(self) -> int:
        return len(self.factors)

    def __repr__(self) -> str:
        return f"<ProductSemiring {self.name}>"

    @property
    def name(self) -> str:
        return " x ".join(f.name or "?" for f in self.factors)

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(q) for q in self.orders))

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(f.add[x, y]) for f, x, y in zip(self.factors, a, b))

    def mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(f.mul[x, y]) for f, x, y in zip(self.factors, a, b))

    def index_of(self, a: Sequence[int]) -> int:
        i = 0
        for q, x in zip(self.orders, a):
            i = i * q + x
        return i

    def element_at(self, i: int) -> tuple[int, ...]:
        out = []
        for q in reversed(self.orders):
            i, r = divmod(i, q)
            out.append(r)
        return tuple(reversed(out))

    def label(self, a: Sequence[int]) -> str:
        return "(" + ",".join(f.labels[x] for f, x in zip(self.factors, a)) + ")"

    def permuted(self, order: Sequence[int]) -> ProductSemiring:
        return ProductSemiring([self.factors[i] for i in order])

    def _coordinates(self) -> list[np.ndarray]:
        idx = np.arange(self.order)
        coords = []
        for q in reversed(self.orders):
            idx, r = np.divmod(idx, q)
            coords.append(r)
        return coords[::-1]

    def table_elements(self) -> list[tuple[int, ...]]:
        """Element order used by :meth:`materialize`: zero, identity, then the rest ascending."""
        one = tuple(1 for _ in self.orders)
        rest = [a for a in self.elements() if a != one and any(a)]
        return [tuple(0 for _ in self.orders), one] + rest

    def materialize(self, cap: int = MATERIALIZE_CAP) -> SemiringTable:
        """The product as a single table, indexed as in :meth:`table_elements`."""
        if self.order > cap:
            raise CapExceededError(
                f"product of order {self.order} exceeds materialization cap {cap}"
            )
        elems = self.table_elements()
        perm = np.array([self.index_of(a) for a in elems])
        pos = np.empty(self.order, dtype=np.int64)
        pos[perm] = np.arange(self.order)
        coords = [c[perm] for c in self._coordinates()]
        add = np.zeros((self.order, self.order), dtype=np.int64)
        mul = np.zeros_like(add)
        for f, c in zip(self.factors, coords):
            add = add * f.order + f.add[c[:, None], c[None, :]]
            mul = mul * f.order + f.mul[c[:, None], c[None, :]]
        labels = [self.label(a) for a in elems]
        return SemiringTable(pos[add], pos[mul], labels, self.name)

def direct_product(factors: Sequence[SemiringTable]) -> ProductSemiring:
    if not factors:
        raise SemiringFormatError("a product needs at least one factor")
    for f in factors:
        require_admissible(f)
    return ProductSemiring(factors)


def zero_divisor_masks(p: ProductSemiring) -> list[np.ndarray]:
    """Per factor, a boolean membership vector for Z(S_i)."""
    masks = []
    for f in p.factors:
        m = np.zeros(f.order, dtype=bool)
        m[list(zero_divisors(f))] = True
        masks.append(m)
    return masks


def product_zero_divisors(p: ProductSemiring) -> tuple[list[tuple[int, ...]], int]:
    """Z(S) of the product: tuples with at least one coordinate in Z(S_i).

    Returns the tuples in ascending order together with their count.
    """
    masks = zero_divisor_masks(p)
    zs = [a for a in p.elements() if any(m[x] for m, x in zip(masks, a))]
    expected = p.order - math.prod(int((~m).sum()) for m in masks)
    assert len(zs) == expected
    return zs, len(zs)
