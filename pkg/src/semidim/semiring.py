"""Finite semirings as explicit operation tables.

Elements are the indices ``0..q-1``.  By convention index 0 is the additive
identity and index 1 the multiplicative identity; :meth:`SemiringTable.normalized`
re-indexes tables that use a different layout.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import CapExceededError, InadmissibleError, SemiringFormatError

ENUMERATION_CAP = 4

SEMIRING_AXIOMS = (
    "add_assoc",
    "add_comm",
    "add_identity",
    "mul_assoc",
    "mul_identity",
    "left_distrib",
    "right_distrib",
    "zero_annihilation",
)
AXIOMS = SEMIRING_AXIOMS + ("mul_comm", "antinegative", "z_closed")


@dataclass(frozen=True)
class Check:
    """Outcome of a yes/no property test, with a witness when it fails."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _as_table(rows, order: int, name: str) -> np.ndarray:
    if not isinstance(rows, (list, tuple, np.ndarray)):
        raise SemiringFormatError(f"{name}: expected a list of {order} rows")
    if len(rows) != order:
        raise SemiringFormatError(f"{name}: has {len(rows)} rows, expected {order}")
    out = np.empty((order, order), dtype=np.int64)
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple, np.ndarray)) or len(row) != order:
            got = len(row) if isinstance(row, (list, tuple, np.ndarray)) else type(row).__name__
            raise SemiringFormatError(f"{name}[{i}]: row has {got} entries, expected {order}")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise SemiringFormatError(f"{name}[{i}][{j}]: entry {v!r} is not an integer")
            if not 0 <= v < order:
                raise SemiringFormatError(
                    f"{name}[{i}][{j}]: entry {v} out of range [0, {order})"
                )
            out[i, j] = v
    out.setflags(write=False)
    return out


class SemiringTable:
    """A finite (candidate) semiring given by its addition and multiplication tables.

    Construction only checks the structure (square tables, entries in range).
    Whether the tables actually form a semiring is the job of :func:`verify_axioms`.
    """

    __slots__ = ("order", "add", "mul", "labels", "name")

    def __init__(self, add, mul, labels: Sequence[str] | None = None, name: str | None = None):
        order = len(add)
        if order < 2:
            raise SemiringFormatError(f"order must be at least 2, got {order}")
        self.order = order
        self.add = _as_table(add, order, "add")
        self.mul = _as_table(mul, order, "mul")
        if labels is None:
            labels = [str(i) for i in range(order)]
        if len(labels) != order:
            raise SemiringFormatError(f"labels: has {len(labels)} entries, expected {order}")
        self.labels = tuple(str(s) for s in labels)
        self.name = name

    def __repr__(self) -> str:
        tag = self.name or "SemiringTable"
        return f"<{tag} order={self.order}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SemiringTable):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.add.tobytes(), self.mul.tobytes()))

    def __getstate__(self):
        return (self.add.tolist(), self.mul.tolist(), self.labels, self.name)

    def __setstate__(self, state):
        add, mul, labels, name = state
        self.__init__(add, mul, labels, name)

    def label(self, i: int) -> str:
        return self.labels[i]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
        }

    def normalized(self) -> SemiringTable:
        """Re-index so that 0 is the additive and 1 the multiplicative identity.

        Tables without both identities (or with a single element playing both
        roles) are returned unchanged; the axiom checker reports them.
        """
        idx = np.arange(self.order)
        zeros = [e for e in idx if (self.add[e] == idx).all() and (self.add[:, e] == idx).all()]
        ones = [e for e in idx if (self.mul[e] == idx).all() and (self.mul[:, e] == idx).all()]
        if not zeros or not ones or zeros[0] == ones[0]:
            return self
        z, o = int(zeros[0]), int(ones[0])
        if (z, o) == (0, 1):
            return self
        perm = [z, o] + [e for e in range(self.order) if e not in (z, o)]
        pos = np.empty(self.order, dtype=np.int64)
        pos[perm] = np.arange(self.order)
        add = pos[self.add[np.ix_(perm, perm)]]
        mul = pos[self.mul[np.ix_(perm, perm)]]
        return SemiringTable(add, mul, [self.labels[p] for p in perm], self.name)


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    ok: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class AxiomReport:
    verdicts: dict[str, AxiomVerdict] = field(default_factory=dict)

    def __getitem__(self, axiom: str) -> AxiomVerdict:
        return self.verdicts[axiom]

    @property
    def is_semiring(self) -> bool:
        return all(self.verdicts[a].ok for a in SEMIRING_AXIOMS)

    @property
    def admissible(self) -> bool:
        return all(v.ok for v in self.verdicts.values())

    def failures(self) -> list[AxiomVerdict]:
        return [v for v in self.verdicts.values() if not v.ok]


def _first(mask: np.ndarray) -> tuple | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(x) for x in hits[0])


def _semiring_counterexamples(t: SemiringTable) -> dict[str, tuple | None]:
    A, M, q = t.add, t.mul, t.order
    idx = np.arange(q)
    a = idx[:, None, None]
    b = idx[None, :, None]
    c = idx[None, None, :]
    ab = A[a, b]
    bc = A[b, c]
    out = {
        "add_assoc": _first(A[ab, c] != A[a, bc]),
        "add_comm": _first(A != A.T),
        "add_identity": _first((A[0] != idx) | (A[:, 0] != idx)),
        "mul_assoc": _first(M[M[a, b], c] != M[a, M[b, c]]),
        "mul_identity": _first((M[1] != idx) | (M[:, 1] != idx)),
        # a(b+c) = ab + ac
        "left_distrib": _first(M[a, bc] != A[M[a, b], M[a, c]]),
        # (a+b)c = ac + bc
        "right_distrib": _first(M[ab, c] != A[M[a, c], M[b, c]]),
        "zero_annihilation": _first((M[0] != 0) | (M[:, 0] != 0)),
    }
    return out


def zero_divisors(t: SemiringTable) -> frozenset[int]:
    """Elements x with xy = 0 or yx = 0 for some y != 0."""
    M = t.mul
    hit = ((M[:, 1:] == 0) | (M[1:, :].T == 0)).any(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(hit))


def is_antinegative(t: SemiringTable) -> Check:
    mask = t.add == 0
    mask[0, 0] = False
    w = _first(mask)
    return Check(w is None, w)


def is_zclosed(t: SemiringTable) -> Check:
    z = sorted(zero_divisors(t))
    inz = np.zeros(t.order, dtype=bool)
    inz[z] = True
    sums = t.add[np.ix_(z, z)]
    w = _first(~inz[sums])
    if w is None:
        return Check(True)
    return Check(False, (z[w[0]], z[w[1]]))


def verify_axioms(t: SemiringTable) -> AxiomReport:
    """Exhaustively check every axiom over all element pairs/triples."""
    found = _semiring_counterexamples(t)
    found["mul_comm"] = _first(t.mul != t.mul.T)
    found["antinegative"] = is_antinegative(t).witness
    found["z_closed"] = is_zclosed(t).witness
    return AxiomReport({a: AxiomVerdict(a, found[a] is None, found[a]) for a in AXIOMS})


def require_admissible(t: SemiringTable) -> AxiomReport:
    report = verify_axioms(t)
    if not report.admissible:
        bad = ", ".join(f"{v.axiom} {v.counterexample}" for v in report.failures())
        raise InadmissibleError(f"{t.name or 'semiring'} is not admissible: {bad}")
    return report


class Kind(enum.Enum):
    BOOL = "BOOL"
    ZTYPE = "ZTYPE"
    RTYPE = "RTYPE"
    GENERIC = "GENERIC"


@dataclass(frozen=True)
class FactorKind:
    kind: Kind
    z: int
    u: int

    @property
    def order(self) -> int:
        return self.z + self.u


def classify_factor(t: SemiringTable) -> FactorKind:
    require_admissible(t)
    z = len(zero_divisors(t))
    u = t.order - z
    if t.order == 2:
        if t != catalog("BOOL"):
            # unreachable for admissible tables: 1+1=0 breaks antinegativity
            raise InadmissibleError("order-2 semiring is not isomorphic to the Boolean semiring")
        return FactorKind(Kind.BOOL, z, u)
    if u == 1:
        return FactorKind(Kind.ZTYPE, z, u)
    if z == 1:
        return FactorKind(Kind.RTYPE, z, u)
    return FactorKind(Kind.GENERIC, z, u)


# ---------------------------------------------------------------------------
# catalog


def _chain(k: int) -> SemiringTable:
    # index -> rank in the chain: 0 bottom, 1 top, 2..k-1 in between
    rank = np.array([0, k - 1] + list(range(1, k - 1)))
    by_rank = np.argsort(rank)
    add = by_rank[np.maximum(rank[:, None], rank[None, :])]
    mul = by_rank[np.minimum(rank[:, None], rank[None, :])]
    if k == 3:
        labels = ["0", "1", "a"]
    else:
        labels = ["0", "1"] + [f"a{i}" for i in range(1, k - 1)]
    return SemiringTable(add, mul, labels, f"CHAIN_{k}")


def _trunc(k: int) -> SemiringTable:
    x = np.arange(k)
    add = np.minimum(x[:, None] + x[None, :], k - 1)
    mul = np.minimum(x[:, None] * x[None, :], k - 1)
    return SemiringTable(add, mul, [str(i) for i in range(k)], f"TRUNC_{k}")


def _bxmodx2() -> SemiringTable:
    # index -> (constant, x-coefficient) over the Boolean semiring
    coeffs = [(0, 0), (1, 0), (0, 1), (1, 1)]
    pos = {c: i for i, c in enumerate(coeffs)}
    add = [[pos[(a0 | b0, a1 | b1)] for (b0, b1) in coeffs] for (a0, a1) in coeffs]
    mul = [[pos[(a0 & b0, (a0 & b1) | (a1 & b0))] for (b0, b1) in coeffs] for (a0, a1) in coeffs]
    return SemiringTable(add, mul, ["0", "1", "x", "1+x"], "BXMODX2")


def _t3() -> SemiringTable:
    # 0 < a < 1 under max; a*a = 0
    add = [[0, 1, 2], [1, 1, 1], [2, 1, 2]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 0]]
    return SemiringTable(add, mul, ["0", "1", "a"], "T3")


def catalog(name: str) -> SemiringTable:
    """Built-in semirings: BOOL, CHAIN_k, TRUNC_k, BXMODX2, T3."""
    key = name.strip().upper()
    if key == "BOOL":
        return SemiringTable([[0, 1], [1, 1]], [[0, 0], [0, 1]], ["0", "1"], "BOOL")
    if key == "BXMODX2":
        return _bxmodx2()
    if key == "T3":
        return _t3()
    for prefix, build in (("CHAIN_", _chain), ("TRUNC_", _trunc)):
        if key.startswith(prefix):
            try:
                k = int(key[len(prefix):])
            except ValueError:
                break
            if k < 2:
                raise SemiringFormatError(f"{prefix}k needs k >= 2, got {k}")
            return build(k)
    raise SemiringFormatError(f"unknown catalog semiring {name!r}")


CATALOG_NAMES = ("BOOL", "CHAIN_k", "TRUNC_k", "BXMODX2", "T3")


# ---------------------------------------------------------------------------
# enumeration


def _additions(q: int, antinegative: bool) -> Iterator[np.ndarray]:
    cells = [(i, j) for i in range(1, q) for j in range(i, q)]
    base = np.zeros((q, q), dtype=np.int64)
    base[0, :] = base[:, 0] = np.arange(q)
    idx = np.arange(q)
    a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    for values in itertools.product(range(q), repeat=len(cells)):
        if antinegative and 0 in values:
            continue
        A = base.copy()
        for (i, j), v in zip(cells, values):
            A[i, j] = A[j, i] = v
        if (A[A[a, b], c] == A[a, A[b, c]]).all():
            yield A


def enumerate_semirings(
    order: int,
    commutative: bool = False,
    antinegative: bool = False,
    zclosed: bool = False,
) -> Iterator[SemiringTable]:
    """Yield every semiring of the given order with 0 and 1 at indices 0 and 1.

    Emission order is lexicographic on the flattened addition table followed by
    the flattened multiplication table.  Isomorphic copies are all emitted.
    """
    if order > ENUMERATION_CAP:
        raise CapExceededError(f"enumeration is capped at order {ENUMERATION_CAP}, got {order}")
    if order < 2:
        raise SemiringFormatError(f"order must be at least 2, got {order}")
    q = order
    if commutative:
        cells = [(i, j) for i in range(2, q) for j in range(i, q)]
    else:
        cells = [(i, j) for i in range(2, q) for j in range(2, q)]
    mbase = np.zeros((q, q), dtype=np.int64)
    mbase[1, :] = mbase[:, 1] = np.arange(q)
    mbase[0, :] = mbase[:, 0] = 0
    for A in _additions(q, antinegative):
        for values in itertools.product(range(q), repeat=len(cells)):
            M = mbase.copy()
            for (i, j), v in zip(cells, values):
                M[i, j] = v
                if commutative:
                    M[j, i] = v
            t = SemiringTable(A, M)
            if any(w is not None for w in _semiring_counterexamples(t).values()):
                continue
            if commutative and not (M == M.T).all():
                continue
            if zclosed and not is_zclosed(t):
                continue
            yield t
