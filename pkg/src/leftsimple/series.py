"""Normal series, Schreier refinement, and composition series."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import groups
from .congruence import QuotientSemigroup, factor_group, is_group_with_identity, principal_congruence
from .errors import (
    NotDescending,
    NotLeftSimple,
    NotReflexiveUnitaryInPredecessor,
    NotSubsemigroup,
    ParentMismatch,
    PreconditionViolated,
    TheoremCheckFailed,
)
from .semigroup import ElemSet, IsoWitness, Semigroup, check_order, is_isomorphic, is_left_simple, set_product, view
from .subsets import (
    enumerate_ru_subsemigroups,
    is_left_unitary,
    is_reflexive,
    is_right_unitary,
    is_subsemigroup,
)

__all__ = [
    "NormalSeries",
    "SeriesFactors",
    "SeriesIso",
    "common_tail_refine",
    "compact",
    "enumerate_normal_series",
    "factors",
    "find_composition_series",
    "is_composition_series",
    "is_refinement",
    "jordan_holder_check",
    "JordanHolderReport",
    "schreier_refine",
    "series_isomorphic",
    "validate_series",
]


@dataclass(frozen=True)
class NormalSeries:
    parent: Semigroup
    chain: tuple[ElemSet, ...]

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(X.mask for X in self.chain)

    def __repr__(self) -> str:
        return " >= ".join(self.parent.format_set(X) for X in self.chain)


@dataclass(frozen=True)
class SeriesFactors:
    series: NormalSeries
    factors: tuple[QuotientSemigroup, ...]


@dataclass(frozen=True)
class SeriesIso:
    """``permutation[i] = i*`` (0-based); ``witnesses[i]`` maps factor i onto factor i*."""

    permutation: tuple[int, ...]
    witnesses: tuple[IsoWitness, ...]


def validate_series(parent: Semigroup, chain) -> NormalSeries:
    chain = tuple(chain)
    if not chain:
        raise NotDescending("a normal series needs at least the whole semigroup")
    for X in chain:
        if X.parent_order != parent.order:
            raise ParentMismatch("series term belongs to a different semigroup")
    if chain[0] != parent.full():
        raise NotDescending("the first term must be the whole semigroup")
    for i in range(1, len(chain)):
        prev, cur = chain[i - 1], chain[i]
        if not cur <= prev:
            raise NotDescending(f"term {i} is not contained in term {i - 1}")
        if not cur:
            raise NotSubsemigroup(i)
        v = is_subsemigroup(parent, cur)
        if not v:
            raise NotSubsemigroup(i, v.witness)
        sub = view(parent, prev)
        low = sub.lower(cur)
        for flag, pred in (("reflexive", is_reflexive), ("left unitary", is_left_unitary),
                           ("right unitary", is_right_unitary)):
            res = pred(sub.semigroup, low)
            if not res:
                a, b = res.witness
                raise NotReflexiveUnitaryInPredecessor(i, flag, (sub.elements[a], sub.elements[b]))
    return NormalSeries(parent, chain)


def compact(ns: NormalSeries) -> NormalSeries:
    """Drop repeated adjacent terms (display helper)."""
    chain = [ns.chain[0]]
    for X in ns.chain[1:]:
        if X != chain[-1]:
            chain.append(X)
    return NormalSeries(ns.parent, tuple(chain))


def factors(ns: NormalSeries) -> SeriesFactors:
    out = []
    for upper, lower in zip(ns.chain, ns.chain[1:]):
        v = view(ns.parent, upper)
        h_class = principal_congruence(v.semigroup, v.lower(lower)).h_class
        q = factor_group(ns.parent, upper, lower)
        if not is_group_with_identity(q, h_class):
            raise TheoremCheckFailed("factors", "a factor is not a group with identity the next term", (upper, lower))
        out.append(q)
    return SeriesFactors(ns, tuple(out))


def _factor_groups(ns: NormalSeries) -> list[Semigroup]:
    return [q.quotient for q in factors(ns).factors]


def series_isomorphic(a: NormalSeries, b: NormalSeries) -> SeriesIso | None:
    if a.length != b.length:
        return None
    fa, fb = _factor_groups(a), _factor_groups(b)
    used = [False] * len(fb)
    perm, wits = [], []
    for x in fa:
        for j, y in enumerate(fb):
            if used[j]:
                continue
            w = is_isomorphic(x, y)
            if w is not None:
                used[j] = True
                perm.append(j)
                wits.append(w)
                break
        else:
            return None
    return SeriesIso(tuple(perm), tuple(wits))


def is_refinement(fine: NormalSeries, coarse: NormalSeries) -> bool:
    terms = set(fine.chain)
    return fine.length >= coarse.length and all(X in terms for X in coarse.chain[1:])


def _require_same_left_simple(a: NormalSeries, b: NormalSeries) -> Semigroup:
    if a.parent != b.parent:
        raise PreconditionViolated("the two series live in different semigroups")
    if not is_left_simple(a.parent):
        raise NotLeftSimple("the semigroup is not left simple")
    return a.parent


def common_tail_refine(a: NormalSeries, b: NormalSeries) -> tuple[NormalSeries, NormalSeries]:
    """Extend each series by intersections so both end at S_k cap H_n."""
    S = _require_same_left_simple(a, b)
    last_a, last_b = a.chain[-1], b.chain[-1]
    ext_a = a.chain + tuple(last_a & H for H in b.chain[1:])
    ext_b = b.chain + tuple(last_b & X for X in a.chain[1:])
    try:
        ra, rb = validate_series(S, ext_a), validate_series(S, ext_b)
    except (NotDescending, NotSubsemigroup, NotReflexiveUnitaryInPredecessor) as exc:
        raise TheoremCheckFailed("common tail", "an extended chain is not a normal series", exc) from exc
    if ra.chain[-1] != rb.chain[-1]:
        raise TheoremCheckFailed("common tail", "extended series end differently", (ra, rb))
    if not (is_refinement(ra, a) and is_refinement(rb, b)):
        raise TheoremCheckFailed("common tail", "extension does not refine the input", (ra, rb))
    return ra, rb


def schreier_refine(a: NormalSeries, b: NormalSeries) -> tuple[NormalSeries, NormalSeries, SeriesIso]:
    """Isomorphic refinements by interpolating S_i(S_(i-1) cap H_j) and H_j(H_(j-1) cap S_i)."""
    S = _require_same_left_simple(a, b)
    sa, sb = a, b
    if a.chain[-1] != b.chain[-1]:
        sa, sb = common_tail_refine(a, b)
    s, h = sa.chain, sb.chain
    k, n = sa.length, sb.length
    if k == n == 0:
        return a, b, SeriesIso((), ())
    # a length-0 side (tails equal, so every term of the other is S) gets one repeat
    if k == 0:
        s, k = s + s, 1
    if n == 0:
        h, n = h + h, 1

    def s_term(j: int, i: int) -> ElemSet:
        return set_product(S, s[i], s[i - 1] & h[j])

    def h_term(j: int, i: int) -> ElemSet:
        return set_product(S, h[j], h[j - 1] & s[i])

    chain_s = [s[0]]
    for i in range(1, k + 1):
        if s_term(0, i) != s[i - 1] or s_term(n, i) != s[i]:
            raise TheoremCheckFailed("schreier", f"interpolation endpoints wrong at i={i}", i)
        chain_s += [s_term(j, i) for j in range(1, n + 1)]
    chain_h = [h[0]]
    for j in range(1, n + 1):
        if h_term(j, 0) != h[j - 1] or h_term(j, k) != h[j]:
            raise TheoremCheckFailed("schreier", f"interpolation endpoints wrong at j={j}", j)
        chain_h += [h_term(j, i) for i in range(1, k + 1)]
    try:
        rs, rh = validate_series(S, chain_s), validate_series(S, chain_h)
    except (NotDescending, NotSubsemigroup, NotReflexiveUnitaryInPredecessor) as exc:
        raise TheoremCheckFailed("schreier", "an interpolated chain is not a normal series", exc) from exc
    if not (is_refinement(rs, a) and is_refinement(rh, b)):
        raise TheoremCheckFailed("schreier", "output does not refine the input", (rs, rh))
    fs, fh = _factor_groups(rs), _factor_groups(rh)
    # factor (i, j) of the first chain sits at (i-1)*n + (j-1), factor (j, i) of the second at (j-1)*k + (i-1)
    perm = [0] * (k * n)
    wits = [None] * (k * n)
    for i in range(1, k + 1):
        for j in range(1, n + 1):
            p, q = (i - 1) * n + (j - 1), (j - 1) * k + (i - 1)
            w = is_isomorphic(fs[p], fh[q])
            if w is None:
                raise TheoremCheckFailed("schreier", f"paired factors ({i},{j}) are not isomorphic", (p, q))
            perm[p], wits[p] = q, w
    return rs, rh, SeriesIso(tuple(perm), tuple(wits))


@functools.lru_cache(maxsize=4096)
def _proper_ru_within(S: Semigroup, X: ElemSet) -> tuple[ElemSet, ...]:
    v = view(S, X)
    subs = enumerate_ru_subsemigroups(v.semigroup)
    return tuple(v.lift(T) for T in subs if len(T) < len(X))


def _maximal(sets: tuple[ElemSet, ...]) -> list[ElemSet]:
    return [T for T in sets if not any(T < U for U in sets)]


def is_composition_series(ns: NormalSeries) -> tuple[bool, str | None]:
    """Strict steps, no r.u. subsemigroup strictly between, and an r.u.-free last term.

    The factor-simplicity criterion is evaluated as well; disagreement is a bug.
    """
    S = ns.parent
    reason = None
    for i, (upper, lower) in enumerate(zip(ns.chain, ns.chain[1:]), start=1):
        if upper == lower:
            reason = f"term {i} repeats term {i - 1}"
            break
        between = [T for T in _proper_ru_within(S, upper) if lower < T]
        if between:
            reason = f"{S.format_set(between[0])} lies strictly between terms {i - 1} and {i}"
            break
    if reason is None and _proper_ru_within(S, ns.chain[-1]):
        reason = "the last term has a proper reflexive unitary subsemigroup"
    strict = all(u != l for u, l in zip(ns.chain, ns.chain[1:]))
    by_factors = (strict and all(groups.is_simple_group(G) for G in _factor_groups(ns))
                  and not _proper_ru_within(S, ns.chain[-1]))
    if by_factors != (reason is None):
        raise TheoremCheckFailed("composition", "maximality and simple-factor criteria disagree", ns)
    return reason is None, reason


def find_composition_series(S: Semigroup, all: bool = False) -> list[NormalSeries]:
    """Depth-first descent through maximal proper r.u. subsemigroups, lexicographic order."""
    check_order(S)
    if not is_left_simple(S):
        raise NotLeftSimple("the semigroup is not left simple")
    found: list[NormalSeries] = []

    def dfs(chain: list[ElemSet]) -> bool:
        children = _maximal(_proper_ru_within(S, chain[-1]))
        if not children:
            found.append(NormalSeries(S, tuple(chain)))
            return not all
        for T in children:
            if dfs(chain + [T]):
                return True
        return False

    dfs([S.full()])
    uniq = {ns.masks: ns for ns in found}
    return [uniq[key] for key in sorted(uniq)]


def enumerate_normal_series(S: Semigroup, limit: int | None = None) -> list[NormalSeries]:
    """Strictly descending normal series (every prefix counts), depth-first."""
    check_order(S)
    out: list[NormalSeries] = []

    def dfs(chain: list[ElemSet]) -> None:
        if limit is not None and len(out) >= limit:
            return
        out.append(NormalSeries(S, tuple(chain)))
        for T in _proper_ru_within(S, chain[-1]):
            dfs(chain + [T])

    dfs([S.full()])
    return out


@dataclass(frozen=True)
class JordanHolderReport:
    series: tuple[NormalSeries, ...]
    length: int
    factors: tuple[Semigroup, ...]
    pairs_checked: int


def jordan_holder_check(S: Semigroup) -> JordanHolderReport:
    all_series = find_composition_series(S, all=True)
    pairs = 0
    for x, y in itertools.combinations(all_series, 2):
        pairs += 1
        if series_isomorphic(x, y) is None:
            raise TheoremCheckFailed("jordan-holder", "two composition series are not isomorphic", (x, y))
    first = all_series[0]
    return JordanHolderReport(tuple(all_series), first.length, tuple(_factor_groups(first)), pairs)
