"""Closed-form dimension predictions for Γ₁ of direct products, and their witnesses.

The factors are assumed finite, commutative, antinegative, with Z(S_i)
closed under addition.  Each factor is summarized by its kind
(BOOL / ZTYPE / RTYPE / GENERIC) and the counts z_i = |Z(S_i)|,
u_i = |S_i| - z_i; the case analysis below only looks at those.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .errors import HypothesisError, InadmissibleError, UnsupportedCaseError
from .product import ProductSemiring, product_zero_divisors, zero_divisor_masks
from .semiring import FactorKind, Kind, classify_factor, is_antinegative, is_zclosed


class Case(enum.Enum):
    TRIVIAL = "TRIVIAL"
    ALL_BOOLEAN = "ALL_BOOLEAN"
    GENERIC = "GENERIC"
    HAUPT1 = "HAUPT1"
    HAUPT2 = "HAUPT2"
    UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True)
class CasePrediction:
    case: Case
    n_total: int
    m: int
    n_z: int
    zs: int
    s: int
    r: int | None
    predicted_dim: int | None
    kinds: tuple[FactorKind, ...]
    # factor order the witness construction works in (BOOLs before ZTYPEs, RTYPE first)
    factor_order: tuple[int, ...]
    formula: str = ""
    identity_ok: bool | None = None
    notes: tuple[str, ...] = ()

    @property
    def supported(self) -> bool:
        return self.case is not Case.UNSUPPORTED


@dataclass(frozen=True)
class WitnessConstruction:
    W: tuple
    classes: dict = field(default_factory=dict)
    punctured: dict = field(default_factory=dict)
    T: tuple = ()
    N: tuple = ()
    T_prime: tuple = ()
    T_double_prime: tuple = ()


def support(p: ProductSemiring) -> list[tuple[int, ...]]:
    """Tuples whose every coordinate is 0 or 1."""
    return list(itertools.product((0, 1), repeat=len(p)))


def _check_hypotheses(p: ProductSemiring) -> None:
    for f in p.factors:
        if not is_antinegative(f):
            raise HypothesisError(f"{f.name or 'factor'} is not antinegative")
        zc = is_zclosed(f)
        if not zc:
            raise HypothesisError(
                f"{f.name or 'factor'}: zero-divisors not closed under addition, witness {zc.witness}"
            )


def lower_bound(p: ProductSemiring) -> int:
    """|Z(S)| - 2^n + 1, reported unclamped."""
    _check_hypotheses(p)
    _, zs = product_zero_divisors(p)
    return zs - 2 ** len(p) + 1


def _kinds(p: ProductSemiring) -> tuple[FactorKind, ...]:
    try:
        return tuple(classify_factor(f) for f in p.factors)
    except InadmissibleError as exc:
        raise HypothesisError(str(exc)) from exc


def classify_product(p: ProductSemiring, strict: bool = False) -> CasePrediction:
    """Decide which closed form applies; the first matching case wins.

    ``strict`` requires both m >= 1 and n_z >= 1 for HAUPT2 instead of the
    weaker m + n_z >= 1.
    """
    _check_hypotheses(p)
    kinds = _kinds(p)
    n = len(kinds)
    _, zs = product_zero_divisors(p)
    s = p.order
    bools = [i for i, k in enumerate(kinds) if k.kind is Kind.BOOL]
    ztypes = [i for i, k in enumerate(kinds) if k.kind is Kind.ZTYPE]
    rtypes = [i for i, k in enumerate(kinds) if k.kind is Kind.RTYPE]
    m, n_z = len(bools), len(ztypes)
    ident = tuple(range(n))
    base = dict(n_total=n, m=m, n_z=n_z, zs=zs, s=s, kinds=kinds)

    if zs == 1:
        notes = ()
        if s == 2:
            notes = ("|S| = 2 with |Z(S)| = 1: handled like |S| >= 3, the graph is a single vertex",)
        return CasePrediction(
            Case.TRIVIAL, r=None, predicted_dim=0, factor_order=ident,
            formula="single vertex: dim = 0", notes=notes, **base,
        )

    if m == n:
        dim = n if n != 2 else 1
        formula = f"dim = n = {n}" if n != 2 else "dim = n - 1 = 1"
        return CasePrediction(
            Case.ALL_BOOLEAN, r=None, predicted_dim=dim, factor_order=ident,
            formula=formula, **base,
        )

    def separated(i: int) -> bool:
        return kinds[i].z >= 2 or any(kinds[j].u >= 2 for j in range(n) if j != i)

    if all(separated(i) for i in range(n)):
        dim = zs - 2**n + 1
        formula = f"|Z(S)| - 2^n + 1 = {zs} - {2**n} + 1 = {dim}"
        return CasePrediction(
            Case.GENERIC, r=None, predicted_dim=dim, factor_order=ident,
            formula=formula, **base,
        )

    k = m + n_z
    if not rtypes and m >= 1 and n_z >= 1 and k == n:
        dim = zs - 2**k + m + 1
        alt = s + m - 2**k
        formula = (
            f"|Z(S)| - 2^(m+n) + m + 1 = {zs} - {2**k} + {m} + 1 = {dim}; "
            f"|S| + m - 2^(m+n) = {s} + {m} - {2**k} = {alt}"
        )
        return CasePrediction(
            Case.HAUPT1, r=None, predicted_dim=dim, factor_order=tuple(bools + ztypes),
            formula=formula, identity_ok=(alt == dim and zs == s - 1), **base,
        )

    if len(rtypes) == 1 and k == n - 1 and k >= 1:
        r = kinds[rtypes[0]].order
        notes = ()
        if m * n_z == 0:
            msg = f"literal hypothesis m*n != 0 fails (m={m}, n={n_z}); "
            if strict:
                return CasePrediction(
                    Case.UNSUPPORTED, r=r, predicted_dim=None, factor_order=ident,
                    notes=(msg + "strict mode rejects this product",), **base,
                )
            notes = (msg + "formula applied under m + n >= 1",)
        dim = zs - 2 ** (k + 1) + 2
        alt = s - 2 ** (k + 1) - r + 3
        formula = (
            f"|Z(S)| - 2^(m+n+1) + 2 = {zs} - {2**(k + 1)} + 2 = {dim}; "
            f"|S| - 2^(m+n+1) - |R| + 3 = {s} - {2**(k + 1)} - {r} + 3 = {alt}"
        )
        return CasePrediction(
            Case.HAUPT2, r=r, predicted_dim=dim, factor_order=tuple(rtypes + bools + ztypes),
            formula=formula, identity_ok=(alt == dim and s == zs + r - 1), notes=notes, **base,
        )

    return CasePrediction(
        Case.UNSUPPORTED, r=None, predicted_dim=None, factor_order=ident,
        notes=("no case matched although the case analysis claims to be complete",), **base,
    )


def predict_dimension(p: ProductSemiring, strict: bool = False) -> int:
    c = classify_product(p, strict)
    if not c.supported:
        raise UnsupportedCaseError("; ".join(c.notes) or "unsupported product")
    if c.identity_ok is False:
        raise AssertionError(f"closed forms disagree: {c.formula}")
    return c.predicted_dim


def _pattern_classes(p: ProductSemiring) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """M_X for every non-empty coordinate set X (zero-divisors exactly on X)."""
    masks = zero_divisor_masks(p)
    zpart = [[x for x in range(f.order) if m[x]] for f, m in zip(p.factors, masks)]
    upart = [[x for x in range(f.order) if not m[x]] for f, m in zip(p.factors, masks)]
    n = len(p)
    out = {}
    for size in range(1, n + 1):
        for X in itertools.combinations(range(n), size):
            axes = [zpart[i] if i in X else upart[i] for i in range(n)]
            out[X] = list(itertools.product(*axes))
    return out


def _ebar(n: int, i: int, x: int = 0) -> tuple[int, ...]:
    return tuple(x if j == i else 1 for j in range(n))


def construct_witness(p: ProductSemiring, c: CasePrediction) -> WitnessConstruction:
    """Build the explicit resolving set that realizes ``c.predicted_dim``."""
    if not c.supported:
        raise UnsupportedCaseError("no construction for an unsupported case")
    n = len(p)
    if c.case is Case.TRIVIAL:
        return WitnessConstruction(W=())
    if c.case is Case.ALL_BOOLEAN:
        W = [(1, 0)] if n == 2 else [_ebar(n, i) for i in range(n)]
        return WitnessConstruction(W=tuple(sorted(W)), T_double_prime=tuple(sorted(W)))
    if c.case is Case.GENERIC:
        classes = _pattern_classes(p)
        punctured = {X: sorted(M)[1:] for X, M in classes.items()}
        W = sorted(a for M in punctured.values() for a in M)
        return WitnessConstruction(W=tuple(W), classes=classes, punctured=punctured)

    # HAUPT1 / HAUPT2: work with the factors reordered, then map back
    order = c.factor_order
    q = p.permuted(order)

    def back(a: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * n
        for k, x in enumerate(a):
            out[order[k]] = x
        return tuple(out)

    classes = _pattern_classes(q)
    zset, _ = product_zero_divisors(q)
    T = sorted(a for M in classes.values() if len(M) >= 2 for a in M)
    tset = set(T)
    N = [a for a in zset if a not in tset]
    supp = set(support(q))
    T1 = [a for a in T if a not in supp]
    if c.case is Case.HAUPT1:
        T2 = [_ebar(n, i) for i in range(c.m)]
    else:
        T2 = [_ebar(n, 0)]
    W = sorted(back(a) for a in set(T1) | set(T2))
    return WitnessConstruction(
        W=tuple(W),
        classes={tuple(sorted(order[i] for i in X)): sorted(back(a) for a in M) for X, M in classes.items()},
        T=tuple(sorted(back(a) for a in T)),
        N=tuple(sorted(back(a) for a in N)),
        T_prime=tuple(sorted(back(a) for a in T1)),
        T_double_prime=tuple(sorted(back(a) for a in T2)),
    )

