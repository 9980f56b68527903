"""Multiplicative subsets and the S-hyperideal machinery.

An n-ary multiplicative set (MS) is a non-empty subset closed under the
multiplication.  A proper hyperideal P is an S-hyperideal when every product
landing in P with a factor from S still lands in P after that factor is
replaced by the scalar identity; the S_r variant relaxes the target to the
radical of P.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import (
    EmptySubset,
    HypothesisViolation,
    InternalContradiction,
    NotMultiplicative,
)
from .ideals import (
    PASS,
    Verdict,
    _radical_bits,
    check_order,
    require_hyperideal,
    require_proper_hyperideal,
)
from .kernel import LENIENT, HyperRing, SubsetMask, check_mode


class SVerdict(Enum):
    S_HYPERIDEAL = "s-hyperideal"
    SR_ONLY = "sr-hyperideal-only"
    NEITHER = "neither"


@dataclass(frozen=True)
class SWitness:
    """A product in P with a factor from S whose unit substitution escapes."""

    tuple_: tuple[int, ...]
    position: int  # 1-based
    product: int
    substituted: int


@dataclass(frozen=True)
class SClassification:
    verdict: SVerdict
    witness: SWitness | None
    mode: str
    witnesses: tuple[SWitness, ...] = ()


@dataclass(frozen=True)
class MulSet:
    subset: SubsetMask
    contains_one: bool


@dataclass(frozen=True)
class SaturationResult:
    subset: SubsetMask
    one_in_s: bool
    proper: bool

    @property
    def vacuous(self) -> bool:
        return not self.proper


def is_multiplicative_set(ring: HyperRing, subset: SubsetMask) -> Verdict:
    """Exhaustive closure scan over all size-n multisets of the subset."""
    if subset.is_empty:
        raise EmptySubset("multiplicative set candidate must be non-empty")
    return _ms_verdict(ring, subset.bits)


@lru_cache(maxsize=None)
def _ms_verdict(ring: HyperRing, bits: int) -> Verdict:
    members = [i for i in range(ring.order) if bits >> i & 1]
    for key in combinations_with_replacement(members, ring.n):
        prod = ring.g_at(key)
        if not (bits >> prod & 1):
            return Verdict(False, "g-closure", key, f"product {ring.elements[prod]} escapes")
    return PASS


def multiplicative_set(ring: HyperRing, subset: SubsetMask) -> MulSet:
    verdict = is_multiplicative_set(ring, subset)
    if not verdict:
        raise NotMultiplicative(
            f"{subset!r} is not closed: product of "
            f"({','.join(ring.elements[i] for i in verdict.witness or ())}) escapes"
        )
    return MulSet(subset=subset, contains_one=ring.one in subset)


def enumerate_multiplicative_sets(ring: HyperRing) -> list[SubsetMask]:
    """All non-empty multiplicatively closed subsets, ascending mask order."""
    check_order(ring)
    return [SubsetMask(ring, bits) for bits in _ms_bits_list(ring)]


@lru_cache(maxsize=None)
def _ms_bits_list(ring: HyperRing) -> tuple[int, ...]:
    if ring.order <= 8:
        return tuple(
            bits for bits in range(1, ring.full_bits + 1) if _ms_verdict(ring, bits).ok
        )
    # Larger carriers: walk the lattice of closed sets instead of filtering
    # the whole power set.
    def closure(bits: int) -> int:
        while True:
            members = [i for i in range(ring.order) if bits >> i & 1]
            new = bits
            for key in combinations_with_replacement(members, ring.n):
                new |= 1 << ring.g_at(key)
            if new == bits:
                return bits
            bits = new

    seen: set[int] = set()
    frontier = []
    for x in range(ring.order):
        c = closure(1 << x)
        if c not in seen:
            seen.add(c)
            frontier.append(c)
    while frontier:
        current = frontier.pop()
        for x in range(ring.order):
            if current >> x & 1:
                continue
            c = closure(current | (1 << x))
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# S-classification


def _require_ms(ring: HyperRing, s: SubsetMask | MulSet) -> SubsetMask:
    if isinstance(s, MulSet):
        return s.subset
    multiplicative_set(ring, s)
    return s


def classify_s(
    ring: HyperRing,
    ideal: SubsetMask,
    s: SubsetMask | MulSet,
    mode: str = LENIENT,
    all_witnesses: bool = False,
) -> SClassification:
    """Joint S / S_r classification of a proper hyperideal against an MS.

    Scans every n-tuple in lexicographic order; the reported witness is the
    first failing (tuple, position) pair.
    """
    check_mode(mode)
    require_proper_hyperideal(ring, ideal, mode)
    s_mask = _require_ms(ring, s)
    if all_witnesses:
        return _classify_s_full(ring, ideal.bits, s_mask.bits, mode)
    return _classify_s_cached(ring, ideal.bits, s_mask.bits, mode)


@lru_cache(maxsize=None)
def _classify_s_cached(ring: HyperRing, p_bits: int, s_bits: int, mode: str) -> SClassification:
    return _classify_s_full(ring, p_bits, s_bits, mode, first_only=True)


def _classify_s_full(
    ring: HyperRing, p_bits: int, s_bits: int, mode: str, first_only: bool = False
) -> SClassification:
    rad = _radical_bits(ring, p_bits, mode)
    s_witness: SWitness | None = None
    sr_witness: SWitness | None = None
    collected: list[SWitness] = []
    for tup, prod, subs in ring.g_tuples:
        if not (p_bits >> prod & 1):
            continue
        for i in range(ring.n):
            if not (s_bits >> tup[i] & 1):
                continue
            sub = subs[i]
            if p_bits >> sub & 1:
                continue
            wit = SWitness(tuple_=tup, position=i + 1, product=prod, substituted=sub)
            if s_witness is None:
                s_witness = wit
            if not first_only:
                collected.append(wit)
            if not (rad >> sub & 1) and sr_witness is None:
                sr_witness = wit
            if first_only and s_witness is not None and sr_witness is not None:
                break
        if first_only and s_witness is not None and sr_witness is not None:
            break
    if s_witness is None:
        verdict, witness = SVerdict.S_HYPERIDEAL, None
    elif sr_witness is None:
        verdict, witness = SVerdict.SR_ONLY, s_witness
    else:
        verdict, witness = SVerdict.NEITHER, sr_witness
    return SClassification(
        verdict=verdict, witness=witness, mode=mode, witnesses=tuple(collected)
    )


def is_s_hyperideal(
    ring: HyperRing, ideal: SubsetMask, s: SubsetMask | MulSet, mode: str = LENIENT
) -> SClassification:
    """Membership test against the ideal itself: verdict S_HYPERIDEAL or not."""
    return classify_s(ring, ideal, s, mode)


def is_sr_hyperideal(
    ring: HyperRing, ideal: SubsetMask, s: SubsetMask | MulSet, mode: str = LENIENT
) -> SClassification:
    """Membership test against the radical: any verdict but NEITHER passes."""
    return classify_s(ring, ideal, s, mode)


def _is_s_bits(ring: HyperRing, p_bits: int, s_bits: int, mode: str) -> bool:
    return _classify_s_cached(ring, p_bits, s_bits, mode).verdict is SVerdict.S_HYPERIDEAL


# ---------------------------------------------------------------------------
# residuals and saturation


def residual(ring: HyperRing, ideal: SubsetMask, by: SubsetMask, mode: str = LENIENT) -> SubsetMask:
    """Elements whose product with every member of the given set stays in the
    ideal (division of the ideal by the set)."""
    check_mode(mode)
    require_hyperideal(ring, ideal, mode)
    if by.is_empty:
        raise EmptySubset("residual divisor must be non-empty")
    return SubsetMask(ring, _residual_bits(ring, ideal.bits, by.bits))


@lru_cache(maxsize=None)
def _residual_bits(ring: HyperRing, p_bits: int, x_bits: int) -> int:
    bp = ring._bp
    out = 0
    members = [i for i in range(ring.order) if x_bits >> i & 1]
    for a in range(ring.order):
        row = bp[a]
        if all(p_bits >> row[x] & 1 for x in members):
            out |= 1 << a
    return out


def saturation(
    ring: HyperRing, ideal: SubsetMask, s: SubsetMask | MulSet, mode: str = LENIENT
) -> SaturationResult:
    """Elements sent into the ideal by some member of the MS.

    With the identity in S this is the least S-hyperideal containing the
    ideal; the result records whether that hypothesis held and whether the
    outcome is proper (an improper saturation is flagged, never an error).
    """
    check_mode(mode)
    require_hyperideal(ring, ideal, mode)
    s_mask = _require_ms(ring, s)
    bits = _saturation_bits(ring, ideal.bits, s_mask.bits)
    return SaturationResult(
        subset=SubsetMask(ring, bits),
        one_in_s=bool(s_mask.bits >> ring.one & 1),
        proper=bits != ring.full_bits,
    )


@lru_cache(maxsize=None)
def _saturation_bits(ring: HyperRing, q_bits: int, s_bits: int) -> int:
    bp = ring._bp
    members = [i for i in range(ring.order) if s_bits >> i & 1]
    out = 0
    for x in range(ring.order):
        if any(q_bits >> bp[t][x] & 1 for t in members):
            out |= 1 << x
    return out


# ---------------------------------------------------------------------------
# extremal constructions


def maximal_ms_for(ring: HyperRing, ideal: SubsetMask, mode: str = LENIENT) -> MulSet:
    """The largest multiplicative set with respect to which the ideal keeps
    the substitution property, built by exhaustive scan and re-verified."""
    check_mode(mode)
    require_proper_hyperideal(ring, ideal, mode)
    bits = _maximal_ms_bits(ring, ideal.bits)
    verdict = _ms_verdict(ring, bits)
    if not verdict:
        raise InternalContradiction(
            f"candidate {ring.render_bits(bits)} is not multiplicatively closed at "
            f"({','.join(ring.elements[i] for i in verdict.witness or ())})"
        )
    return MulSet(subset=SubsetMask(ring, bits), contains_one=bool(bits >> ring.one & 1))


@lru_cache(maxsize=None)
def _maximal_ms_bits(ring: HyperRing, p_bits: int) -> int:
    out = 0
    for x in range(ring.order):
        good = True
        for rest in combinations_with_replacement(range(ring.order), ring.n - 1):
            if p_bits >> ring.g_at((x, *rest)) & 1 and not (
                p_bits >> ring.g_at((ring.one, *rest)) & 1
            ):
                good = False
                break
        if good:
            out |= 1 << x
    return out


def s_maximal_hyperideals(
    ring: HyperRing, s: SubsetMask | MulSet, mode: str = LENIENT
) -> list[SubsetMask]:
    """Inclusion-maximal members of the family of S-hyperideals."""
    check_mode(mode)
    s_mask = _require_ms(ring, s)
    from .ideals import _hyperideal_bits_list

    family = [
        bits
        for bits in _hyperideal_bits_list(ring, mode)
        if bits != ring.full_bits and _is_s_bits(ring, bits, s_mask.bits, mode)
    ]
    maximal = [
        bits
        for bits in family
        if not any(other != bits and not (bits & ~other) for other in family)
    ]
    return [SubsetMask(ring, bits) for bits in maximal]


def primary_decomposition(
    ring: HyperRing,
    ideal: SubsetMask,
    min_primes: list[SubsetMask],
    mode: str = LENIENT,
) -> list[SubsetMask]:
    """Components of an S-hyperideal for S the complement of a union of
    minimal primes: one saturation per prime, by its own complement.

    Preconditions are verified and named on failure; the caller (harness or
    test) owns the assertions that the intersection recovers the ideal.
    """
    check_mode(mode)
    require_proper_hyperideal(ring, ideal, mode)
    if not min_primes:
        raise HypothesisViolation("at least one minimal prime is required")
    from .ideals import special_sets

    actual = {q.bits for q in special_sets(ring, mode).min_primes}
    union = 0
    for q in min_primes:
        if q.bits not in actual:
            raise HypothesisViolation(f"{q!r} is not a minimal prime hyperideal")
        union |= q.bits
    s_bits = ring.full_bits & ~union
    if s_bits == 0:
        raise HypothesisViolation("the complement of the union is empty")
    verdict = _ms_verdict(ring, s_bits)
    if not verdict:
        raise HypothesisViolation("the complement of the union is not multiplicatively closed")
    if not _is_s_bits(ring, ideal.bits, s_bits, mode):
        raise HypothesisViolation("the ideal is not an S-hyperideal for the complement")
    components = []
    for q in min_primes:
        comp_bits = ring.full_bits & ~q.bits
        components.append(SubsetMask(ring, _saturation_bits(ring, ideal.bits, comp_bits)))
    return components
