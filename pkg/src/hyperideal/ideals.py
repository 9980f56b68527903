"""Hyperideal recognition, enumeration, and the classical classification layer.

Two hyperideal modes are supported.  "lenient" asks for zero membership,
closure under hyperaddition, and absorption under multiplication; "strict"
additionally requires closure under negation.  Lenient is the default: the
standard order-3 example ring treats {0,2} as a hyperideal even though it is
not negation closed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import (
    EmptySubset,
    ImproperIdeal,
    NotAHyperideal,
    OrderLimitExceeded,
)
from .kernel import LENIENT, HyperRing, SubsetMask, check_mode

DEFAULT_ORDER_LIMIT = 16
ORDER_LIMIT_ENV = "HYPERIDEAL_ORDER_LIMIT"


def order_limit() -> int:
    raw = os.environ.get(ORDER_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ORDER_LIMIT
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_ORDER_LIMIT


def check_order(ring: HyperRing) -> None:
    limit = order_limit()
    if ring.order > limit:
        raise OrderLimitExceeded(ring.order, limit)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single check; negative verdicts carry a witness tuple."""

    ok: bool
    clause: str | None = None
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


@dataclass(frozen=True)
class IdealProfile:
    """Classification record for one proper hyperideal."""

    subset: SubsetMask
    mode: str
    hyperideal: Verdict
    proper: bool
    prime: Verdict
    primary: Verdict
    semiprime: Verdict
    maximal: Verdict


@dataclass(frozen=True)
class SpecialSets:
    units: SubsetMask
    regulars: SubsetMask
    jacobson: SubsetMask
    min_primes: tuple[SubsetMask, ...]


@dataclass(frozen=True)
class PowerDiagnostic:
    """Whether membership in the radical is witnessed by some finite power."""

    element: int
    in_radical: bool
    exponent: int | None
    anomaly: bool


# ---------------------------------------------------------------------------
# hyperideal recognition


def is_hyperideal(ring: HyperRing, subset: SubsetMask, mode: str = LENIENT) -> Verdict:
    """Decide hyperideal-ness; the witness names the failing clause and tuple."""
    if subset.ring is not ring:
        raise ValueError("subset belongs to a different ring")
    if subset.is_empty:
        raise EmptySubset("hyperideal candidate must be non-empty")
    return _hyperideal_verdict(ring, subset.bits, check_mode(mode))


@lru_cache(maxsize=None)
def _hyperideal_verdict(ring: HyperRing, bits: int, mode: str) -> Verdict:
    if not (bits >> ring.zero & 1):
        return Verdict(False, "zero-membership", (ring.zero,), "zero is missing")
    members = [i for i in range(ring.order) if bits >> i & 1]
    for key in combinations_with_replacement(members, ring.m):
        value = ring.f_bits(key)
        if value & ~bits:
            out = next(i for i in range(ring.order) if (value & ~bits) >> i & 1)
            return Verdict(False, "f-closure", key, f"hyperaddition escapes via {ring.elements[out]}")
    for x in members:
        for rest in combinations_with_replacement(range(ring.order), ring.n - 1):
            prod = ring.g_at((x, *rest))
            if not (bits >> prod & 1):
                return Verdict(
                    False,
                    "g-absorption",
                    (x, *rest),
                    f"product {ring.elements[prod]} escapes",
                )
    if mode == "strict":
        for x in members:
            neg = ring.negation[x]
            if not (bits >> neg & 1):
                return Verdict(
                    False,
                    "negation-closure",
                    (x,),
                    f"-{ring.elements[x]} = {ring.elements[neg]} is missing",
                )
    return PASS


def require_hyperideal(ring: HyperRing, subset: SubsetMask, mode: str) -> None:
    verdict = is_hyperideal(ring, subset, mode)
    if not verdict:
        raise NotAHyperideal(
            f"{subset!r} fails {verdict.clause} at "
            f"({','.join(ring.elements[i] for i in verdict.witness or ())})"
        )


def require_proper_hyperideal(ring: HyperRing, subset: SubsetMask, mode: str) -> None:
    require_hyperideal(ring, subset, mode)
    if subset.is_full:
        raise ImproperIdeal("the whole ring is not a proper hyperideal")


# ---------------------------------------------------------------------------
# generation and enumeration


def generated_hyperideal(ring: HyperRing, seed: SubsetMask, mode: str = LENIENT) -> SubsetMask:
    """Least hyperideal (in the given mode) containing the seed set.

    Starts from all products g(r, x, 1^(n-2)) with x in the seed, then closes
    under hyperaddition, absorption, and (strict mode) negation.
    """
    check_mode(mode)
    if seed.is_empty:
        raise EmptySubset("generating set must be non-empty")
    one_pad = (ring.one,) * (ring.n - 2)
    bits = 0
    for x in seed:
        for r in range(ring.order):
            bits |= 1 << ring.g_at((r, x, *one_pad))
    while True:
        new = bits
        members = [i for i in range(ring.order) if new >> i & 1]
        for key in combinations_with_replacement(members, ring.m):
            new |= ring.f_bits(key)
        for x in members:
            for rest in combinations_with_replacement(range(ring.order), ring.n - 1):
                new |= 1 << ring.g_at((x, *rest))
        if mode == "strict":
            for x in members:
                new |= 1 << ring.negation[x]
        if new == bits:
            return SubsetMask(ring, bits)
        bits = new


def enumerate_hyperideals(ring: HyperRing, mode: str = LENIENT) -> list[SubsetMask]:
    """All hyperideals in ascending mask order, the whole ring included."""
    check_order(ring)
    return [SubsetMask(ring, bits) for bits in _hyperideal_bits_list(ring, check_mode(mode))]


@lru_cache(maxsize=None)
def _hyperideal_bits_list(ring: HyperRing, mode: str) -> tuple[int, ...]:
    zero_bit = 1 << ring.zero
    found = []
    for bits in range(1, ring.full_bits + 1):
        if not (bits & zero_bit):
            continue
        if _hyperideal_verdict(ring, bits, mode).ok:
            found.append(bits)
    return tuple(found)


def proper_hyperideals(ring: HyperRing, mode: str = LENIENT) -> list[SubsetMask]:
    return [s for s in enumerate_hyperideals(ring, mode) if not s.is_full]


# ---------------------------------------------------------------------------
# classification


@lru_cache(maxsize=None)
def _prime_verdict(ring: HyperRing, bits: int) -> Verdict:
    for tup, prod, _subs in ring.g_tuples:
        if bits >> prod & 1 and not any(bits >> x & 1 for x in tup):
            return Verdict(False, "prime", tup, "product lands in the ideal, no factor does")
    return PASS


@lru_cache(maxsize=None)
def _semiprime_verdict(ring: HyperRing, bits: int) -> Verdict:
    for p in range(ring.order):
        prod = ring.g_at((p,) * ring.n)
        if bits >> prod & 1 and not (bits >> p & 1):
            return Verdict(False, "semiprime", (p,), "n-th power lands in the ideal")
    return PASS


@lru_cache(maxsize=None)
def _primary_verdict(ring: HyperRing, bits: int, mode: str) -> Verdict:
    rad = _radical_bits(ring, bits, mode)
    for tup, prod, subs in ring.g_tuples:
        if not (bits >> prod & 1):
            continue
        if not any(bits >> tup[i] & 1 or rad >> subs[i] & 1 for i in range(ring.n)):
            return Verdict(
                False,
                "primary",
                tup,
                "no factor in the ideal and no substituted product in its radical",
            )
    return PASS


@lru_cache(maxsize=None)
def _maximal_verdict(ring: HyperRing, bits: int, mode: str) -> Verdict:
    for other in _hyperideal_bits_list(ring, mode):
        if other == bits or other == ring.full_bits:
            continue
        if not (bits & ~other):
            return Verdict(
                False,
                "maximal",
                tuple(i for i in range(ring.order) if other >> i & 1),
                "a proper hyperideal lies strictly above",
            )
    return PASS


def classify_ideal(ring: HyperRing, subset: SubsetMask, mode: str = LENIENT) -> IdealProfile:
    """Full classification of a proper hyperideal; pure and deterministic."""
    check_mode(mode)
    require_proper_hyperideal(ring, subset, mode)
    bits = subset.bits
    return IdealProfile(
        subset=subset,
        mode=mode,
        hyperideal=PASS,
        proper=True,
        prime=_prime_verdict(ring, bits),
        primary=_primary_verdict(ring, bits, mode),
        semiprime=_semiprime_verdict(ring, bits),
        maximal=_maximal_verdict(ring, bits, mode),
    )


def prime_hyperideals(ring: HyperRing, mode: str = LENIENT) -> list[SubsetMask]:
    return [SubsetMask(ring, bits) for bits in _prime_bits_list(ring, check_mode(mode))]


@lru_cache(maxsize=None)
def _prime_bits_list(ring: HyperRing, mode: str) -> tuple[int, ...]:
    return tuple(
        bits
        for bits in _hyperideal_bits_list(ring, mode)
        if bits != ring.full_bits and _prime_verdict(ring, bits).ok
    )


def radical(ring: HyperRing, subset: SubsetMask, mode: str = LENIENT) -> SubsetMask:
    """Intersection of all prime hyperideals containing the set; the whole
    ring when no prime contains it."""
    check_mode(mode)
    require_hyperideal(ring, subset, mode)
    return SubsetMask(ring, _radical_bits(ring, subset.bits, mode))


@lru_cache(maxsize=None)
def _radical_bits(ring: HyperRing, bits: int, mode: str) -> int:
    out = ring.full_bits
    found = False
    for prime in _prime_bits_list(ring, mode):
        if not (bits & ~prime):
            out &= prime
            found = True
    return out if found else ring.full_bits


def radical_power_diagnostic(
    ring: HyperRing, subset: SubsetMask, p: int, mode: str = LENIENT
) -> PowerDiagnostic:
    """Search for a power of p landing in the ideal.

    Radical membership should always be witnessed by such a power; an element
    of the radical whose whole power orbit misses the ideal is flagged as an
    anomaly rather than raising.
    """
    check_mode(mode)
    require_hyperideal(ring, subset, mode)
    in_radical = bool(_radical_bits(ring, subset.bits, mode) >> p & 1)
    seen = set()
    w = 1
    exponent = None
    while True:
        value = ring.power(p, w)
        if subset.bits >> value & 1:
            exponent = w
            break
        if value in seen:
            break
        seen.add(value)
        w += 1
    anomaly = in_radical and exponent is None
    return PowerDiagnostic(element=p, in_radical=in_radical, exponent=exponent, anomaly=anomaly)


# ---------------------------------------------------------------------------
# distinguished element sets


def minimal_primes_over(ring: HyperRing, subset: SubsetMask, mode: str = LENIENT) -> list[SubsetMask]:
    """Inclusion-minimal prime hyperideals containing the given hyperideal."""
    check_mode(mode)
    require_proper_hyperideal(ring, subset, mode)
    containing = [q for q in _prime_bits_list(ring, mode) if not (subset.bits & ~q)]
    minimal = [
        q
        for q in containing
        if not any(other != q and not (other & ~q) for other in containing)
    ]
    return [SubsetMask(ring, q) for q in minimal]


def special_sets(ring: HyperRing, mode: str = LENIENT) -> SpecialSets:
    """Units, regular elements, the Jacobson-style radical, and the minimal
    primes, each computed by exhaustive scan."""
    check_mode(mode)
    check_order(ring)
    one_pad = (ring.one,) * (ring.n - 2)
    units = 0
    for p in range(ring.order):
        if any(ring.g_at((p, q, *one_pad)) == ring.one for q in range(ring.order)):
            units |= 1 << p
    regulars = 0
    for p in range(ring.order):
        pn = ring.g_at((p,) * ring.n)
        found = False
        for rest in combinations_with_replacement(range(ring.order), ring.n - 1):
            if ring.g_at((pn, *rest)) == p:
                found = True
                break
        if found:
            regulars |= 1 << p
    jacobson = ring.full_bits
    for bits in _hyperideal_bits_list(ring, mode):
        if bits != ring.full_bits and _maximal_verdict(ring, bits, mode).ok:
            jacobson &= bits
    primes = list(_prime_bits_list(ring, mode))
    min_primes = tuple(
        SubsetMask(ring, q)
        for q in primes
        if not any(other != q and not (other & ~q) for other in primes)
    )
    return SpecialSets(
        units=SubsetMask(ring, units),
        regulars=SubsetMask(ring, regulars),
        jacobson=SubsetMask(ring, jacobson),
        min_primes=min_primes,
    )
