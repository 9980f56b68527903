"""Theorem catalog: one exhaustive checker per claim, with counterexample
reporting and hypothesis bookkeeping.

Each checker quantifies over every enumerable instance on a fixture ring
(ideal/MS pairs, minimal-prime selections, homomorphisms, products) that
satisfies the claim's hypotheses.  A claim whose hypotheses match nothing on
a fixture reports ``hypothesis-never-met`` rather than a vacuous pass, so a
suite can demand coverage from its fixture set.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations

from .constructions import (
    HyperRingHom,
    QuotientRing,
    cyclic_ring,
    identity_hom,
    product_ring,
    quotient_ring,
)
from .errors import (
    CosetsNotPartition,
    InducedOpIllDefined,
    UnknownFixture,
    UnknownTheorem,
)
from .ideals import (
    _hyperideal_bits_list,
    _hyperideal_verdict,
    _primary_verdict,
    _prime_bits_list,
    _prime_verdict,
    _radical_bits,
    check_order,
    special_sets,
)
from .kernel import (
    LENIENT,
    HyperRing,
    HyperRingSpec,
    SubsetMask,
    check_mode,
    require_ring,
)
from .multiplicative import (
    SVerdict,
    _classify_s_cached,
    _is_s_bits,
    _maximal_ms_bits,
    _ms_bits_list,
    _ms_verdict,
    _residual_bits,
    _saturation_bits,
)

MAX_COUNTEREXAMPLES = 10
AVOIDANCE_CONFIG_CAP = 10**6


@dataclass
class TheoremReport:
    id: str
    status: str  # holds | counterexample | hypothesis-never-met
    instances_checked: int
    hypothesis_met: int
    counterexamples: tuple[dict, ...]
    mode: str
    runtime_ms: float
    truncated: bool = False

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "hypothesis_met": self.hypothesis_met,
            "counterexamples": list(self.counterexamples),
            "mode": self.mode,
            "truncated": self.truncated,
        }
        if include_timings:
            out["runtime_ms"] = self.runtime_ms
        return out


@dataclass
class _Tally:
    """Mutable scratch state shared by all checkers."""

    instances: int = 0
    hypothesis: int = 0
    truncated: bool = False
    counterexamples: list[dict] = field(default_factory=list)

    def fail(self, **payload: str) -> None:
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(dict(payload))


# ---------------------------------------------------------------------------
# shared cached views


@lru_cache(maxsize=None)
def _proper_ideals(ring: HyperRing, mode: str) -> tuple[int, ...]:
    return tuple(b for b in _hyperideal_bits_list(ring, mode) if b != ring.full_bits)


@lru_cache(maxsize=None)
def _all_ideals(ring: HyperRing, mode: str) -> tuple[int, ...]:
    return _hyperideal_bits_list(ring, mode)


@lru_cache(maxsize=None)
def _ms_all(ring: HyperRing) -> tuple[int, ...]:
    return _ms_bits_list(ring)


@lru_cache(maxsize=None)
def _ms_with_one(ring: HyperRing) -> tuple[int, ...]:
    one_bit = 1 << ring.one
    return tuple(b for b in _ms_bits_list(ring) if b & one_bit)


@lru_cache(maxsize=None)
def _min_primes(ring: HyperRing, mode: str) -> tuple[int, ...]:
    primes = _prime_bits_list(ring, mode)
    return tuple(
        q for q in primes if not any(o != q and not (o & ~q) for o in primes)
    )


@lru_cache(maxsize=None)
def _strict_closed_ideals(ring: HyperRing, mode: str) -> tuple[int, ...]:
    """Proper hyperideals of the mode that are also negation closed."""
    out = []
    for bits in _proper_ideals(ring, mode):
        if all(bits >> ring.negation[x] & 1 for x in range(ring.order) if bits >> x & 1):
            out.append(bits)
    return tuple(out)


@lru_cache(maxsize=None)
def _s_family(ring: HyperRing, s_bits: int, mode: str) -> tuple[int, ...]:
    """Proper hyperideals satisfying the substitution property for this MS."""
    return tuple(
        b for b in _proper_ideals(ring, mode) if _is_s_bits(ring, b, s_bits, mode)
    )


@lru_cache(maxsize=None)
def _s_maximal_family(ring: HyperRing, s_bits: int, mode: str) -> tuple[int, ...]:
    family = _s_family(ring, s_bits, mode)
    return tuple(
        b for b in family if not any(o != b and not (b & ~o) for o in family)
    )


@lru_cache(maxsize=None)
def _quotient_or_none(ring: HyperRing, modulus_bits: int, mode: str) -> QuotientRing | None:
    try:
        return quotient_ring(ring, SubsetMask(ring, modulus_bits), mode)
    except (CosetsNotPartition, InducedOpIllDefined):
        return None


@lru_cache(maxsize=None)
def _homs(ring: HyperRing, mode: str) -> tuple[HyperRingHom, ...]:
    out = [identity_hom(ring)]
    for bits in _proper_ideals(ring, mode):
        q = _quotient_or_none(ring, bits, mode)
        if q is not None:
            out.append(q.projection)
    return tuple(out)


def _image_bits(hom: HyperRingHom, bits: int) -> int:
    out = 0
    for x in range(hom.source.order):
        if bits >> x & 1:
            out |= 1 << hom.mapping[x]
    return out


def _preimage_bits(hom: HyperRingHom, bits: int) -> int:
    out = 0
    for x in range(hom.source.order):
        if bits >> hom.mapping[x] & 1:
            out |= 1 << x
    return out


def _proper_s_ideal(ring: HyperRing, bits: int, s_bits: int, mode: str) -> bool:
    """Full conclusion check: proper hyperideal plus substitution property."""
    return (
        bits != ring.full_bits
        and _hyperideal_verdict(ring, bits, mode).ok
        and _is_s_bits(ring, bits, s_bits, mode)
    )


def _direct_sr_scan(ring: HyperRing, p_bits: int, s_bits: int, mode: str) -> bool:
    rad = _radical_bits(ring, p_bits, mode)
    for tup, prod, subs in ring.g_tuples:
        if not (p_bits >> prod & 1):
            continue
        for i in range(ring.n):
            if s_bits >> tup[i] & 1 and not (rad >> subs[i] & 1):
                return False
    return True


# ---------------------------------------------------------------------------
# checkers


def _check_t1_1(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """S-hyperideals are disjoint from their multiplicative set."""
    for p in _proper_ideals(ring, mode):
        for s in _ms_all(ring):
            tally.instances += 1
            if not _is_s_bits(ring, p, s, mode):
                continue
            tally.hypothesis += 1
            if p & s:
                tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                           overlap=ring.render_bits(p & s))


def _check_t1_2(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """The radical of an S-hyperideal is an S-hyperideal (when proper)."""
    for p in _proper_ideals(ring, mode):
        for s in _ms_all(ring):
            tally.instances += 1
            if not _is_s_bits(ring, p, s, mode):
                continue
            rad = _radical_bits(ring, p, mode)
            if rad == ring.full_bits:
                continue  # statement presumes a proper radical
            tally.hypothesis += 1
            if not _proper_s_ideal(ring, rad, s, mode):
                tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                           radical=ring.render_bits(rad))


def _check_t1_3(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Residuals of an S-hyperideal by outside sets are S-hyperideals."""
    for p in _proper_ideals(ring, mode):
        comp = ring.full_bits & ~p
        comp_members = [q for q in range(ring.order) if comp >> q & 1]
        singles = {q: _residual_bits(ring, p, 1 << q) for q in comp_members}
        for s in _ms_all(ring):
            if not _is_s_bits(ring, p, s, mode):
                continue
            verdicts: dict[int, bool] = {}
            inter: dict[int, int] = {0: ring.full_bits}
            sub = comp
            subsets = []
            while sub:
                subsets.append(sub)
                sub = (sub - 1) & comp
            for q_bits in sorted(subsets):
                tally.instances += 1
                tally.hypothesis += 1
                low = q_bits & -q_bits
                pq = inter[q_bits & (q_bits - 1)] & singles[low.bit_length() - 1]
                inter[q_bits] = pq
                ok = verdicts.get(pq)
                if ok is None:
                    ok = _proper_s_ideal(ring, pq, s, mode)
                    verdicts[pq] = ok
                if not ok:
                    tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                               Q=ring.render_bits(q_bits),
                               residual=ring.render_bits(pq))


def _check_p2(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Primes disjoint from S are S-hyperideals, and every ideal disjoint
    from S sits inside a prime S-hyperideal."""
    primes = _prime_bits_list(ring, mode)
    for s in _ms_all(ring):
        for p in primes:
            if p & s:
                continue
            tally.instances += 1
            tally.hypothesis += 1
            if not _is_s_bits(ring, p, s, mode):
                tally.fail(clause="prime-disjoint", P=ring.render_bits(p),
                           S=ring.render_bits(s))
        for q in _proper_ideals(ring, mode):
            if q & s:
                continue
            tally.instances += 1
            tally.hypothesis += 1
            cover = next(
                (p for p in primes
                 if not (q & ~p) and not (p & s) and _is_s_bits(ring, p, s, mode)),
                None,
            )
            if cover is None:
                tally.fail(clause="prime-extension", Q=ring.render_bits(q),
                           S=ring.render_bits(s))


def _check_t7(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Maximal S-hyperideals are prime (for S containing the identity)."""
    for s in _ms_with_one(ring):
        for p in _s_maximal_family(ring, s, mode):
            tally.instances += 1
            tally.hypothesis += 1
            if not _prime_verdict(ring, p).ok:
                tally.fail(P=ring.render_bits(p), S=ring.render_bits(s))


def _check_t6(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Minimal primes over an S-hyperideal are S-hyperideals."""
    primes = _prime_bits_list(ring, mode)
    for s in _ms_with_one(ring):
        for p in _proper_ideals(ring, mode):
            if not _is_s_bits(ring, p, s, mode):
                continue
            containing = [q for q in primes if not (p & ~q)]
            minimal = [q for q in containing
                       if not any(o != q and not (o & ~q) for o in containing)]
            for q in minimal:
                tally.instances += 1
                tally.hypothesis += 1
                if not _is_s_bits(ring, q, s, mode):
                    tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                               Q=ring.render_bits(q))


def _check_t3(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Every proper hyperideal admits a largest compatible MS."""
    for p in _proper_ideals(ring, mode):
        tally.instances += 1
        smax = _maximal_ms_bits(ring, p)
        if not _ms_verdict(ring, smax).ok:
            tally.fail(anomaly="candidate set is not multiplicatively closed",
                       P=ring.render_bits(p), S=ring.render_bits(smax))
            continue
        tally.hypothesis += 1
        if not _is_s_bits(ring, p, smax, mode):
            tally.fail(P=ring.render_bits(p), S=ring.render_bits(smax),
                       clause="not admissible for its own maximal set")
        for s in _ms_all(ring):
            if _is_s_bits(ring, p, s, mode) and s & ~smax:
                tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                           maximal=ring.render_bits(smax),
                           clause="admissible set escapes the maximal one")


def _check_t4(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Saturation is the least S-hyperideal containing a hyperideal."""
    for q in _all_ideals(ring, mode):
        for s in _ms_with_one(ring):
            tally.instances += 1
            sat = _saturation_bits(ring, q, s)
            if q & ~sat:
                tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                           clause="saturation does not contain the ideal")
                continue
            if sat == ring.full_bits:
                continue  # vacuous: no proper saturation to be least
            tally.hypothesis += 1
            if not _proper_s_ideal(ring, sat, s, mode):
                tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                           saturation=ring.render_bits(sat),
                           clause="saturation is not an S-hyperideal")
                continue
            if _saturation_bits(ring, sat, s) != sat:
                tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                           clause="saturation is not idempotent")
            for r in _proper_ideals(ring, mode):
                if not (q & ~r) and _is_s_bits(ring, r, s, mode) and sat & ~r:
                    tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                               smaller=ring.render_bits(r),
                               clause="a smaller S-hyperideal contains the ideal")
                    break


def _check_t5(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Substitution property, residual fixed points, and saturation fixed
    point are equivalent."""
    for p in _proper_ideals(ring, mode):
        for s in _ms_all(ring):
            tally.instances += 1
            tally.hypothesis += 1
            direct = _is_s_bits(ring, p, s, mode)
            residual_fixed = all(
                _residual_bits(ring, p, 1 << t) == p
                for t in range(ring.order)
                if s >> t & 1
            )
            saturation_fixed = _saturation_bits(ring, p, s) == p
            if not (direct == residual_fixed == saturation_fixed):
                tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                           direct=str(direct), residual=str(residual_fixed),
                           saturation=str(saturation_fixed))


def _check_tprimary_eq(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Against the complement of a minimal prime, S-hyperideal and primary
    with that radical are the same thing."""
    for q in _min_primes(ring, mode):
        s = ring.full_bits & ~q
        if not s or not _ms_verdict(ring, s).ok:
            tally.instances += 1
            tally.fail(anomaly="complement of a minimal prime is not an MS",
                       Q=ring.render_bits(q))
            continue
        for p in _proper_ideals(ring, mode):
            tally.instances += 1
            tally.hypothesis += 1
            lhs = _is_s_bits(ring, p, s, mode)
            rhs = (
                _primary_verdict(ring, p, mode).ok
                and _radical_bits(ring, p, mode) == q
            )
            if lhs != rhs:
                tally.fail(P=ring.render_bits(p), Q=ring.render_bits(q),
                           S=ring.render_bits(s), s_hyperideal=str(lhs),
                           q_primary=str(rhs))


def _check_tdecomp(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """S-hyperideals for S avoiding a union of minimal primes decompose as
    the intersection of their per-prime saturations."""
    minp = _min_primes(ring, mode)
    for k in range(1, len(minp) + 1):
        for combo in combinations(minp, k):
            union = 0
            for q in combo:
                union |= q
            s = ring.full_bits & ~union
            if not s or not _ms_verdict(ring, s).ok:
                tally.instances += 1
                tally.fail(anomaly="complement of the union is not an MS",
                           primes=",".join(ring.render_bits(q) for q in combo))
                continue
            for p in _proper_ideals(ring, mode):
                tally.instances += 1
                if not _is_s_bits(ring, p, s, mode):
                    continue
                tally.hypothesis += 1
                comps = [_saturation_bits(ring, p, ring.full_bits & ~q) for q in combo]
                inter = ring.full_bits
                for c in comps:
                    inter &= c
                if inter != p:
                    tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                               intersection=ring.render_bits(inter),
                               components=",".join(ring.render_bits(c) for c in comps))
                    continue
                for q, c in zip(combo, comps):
                    if c == ring.full_bits:
                        continue  # vacuous component: the ideal escapes this prime
                    if not (_primary_verdict(ring, c, mode).ok
                            and _radical_bits(ring, c, mode) == q):
                        tally.fail(P=ring.render_bits(p), Q=ring.render_bits(q),
                                   component=ring.render_bits(c),
                                   clause="component is not primary for its prime")


def _check_pint(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Intersections of S-hyperideals are S-hyperideals (pairs and triples)."""
    for s in _ms_all(ring):
        family = _s_family(ring, s, mode)
        for size in (2, 3):
            for combo in combinations(family, size):
                tally.instances += 1
                tally.hypothesis += 1
                inter = ring.full_bits
                for p in combo:
                    inter &= p
                if not _proper_s_ideal(ring, inter, s, mode):
                    tally.fail(S=ring.render_bits(s),
                               members=",".join(ring.render_bits(p) for p in combo),
                               intersection=ring.render_bits(inter))


def _check_p8(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """All proper hyperideals are S-hyperideals exactly when S sits inside
    the units."""
    units = special_sets(ring, mode).units.bits
    for s in _ms_with_one(ring):
        tally.instances += 1
        tally.hypothesis += 1
        lhs = all(_is_s_bits(ring, p, s, mode) for p in _proper_ideals(ring, mode))
        rhs = not (s & ~units)
        if lhs != rhs:
            tally.fail(S=ring.render_bits(s), all_ideals=str(lhs),
                       inside_units=str(rhs))


def _check_t9_fwd(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """In a hyperintegral domain with S the nonzero elements, the zero ideal
    is the only S-hyperideal."""
    tally.instances += 1
    domain = all(
        prod != ring.zero or ring.zero in tup for tup, prod, _ in ring.g_tuples
    )
    if not domain:
        return
    s = ring.full_bits & ~(1 << ring.zero)
    if not _ms_verdict(ring, s).ok:
        tally.fail(anomaly="nonzero elements of a domain fail closure",
                   S=ring.render_bits(s))
        return
    tally.hypothesis += 1
    zero_ideal = 1 << ring.zero
    if not _is_s_bits(ring, zero_ideal, s, mode):
        tally.fail(P=ring.render_bits(zero_ideal), S=ring.render_bits(s),
                   clause="zero ideal is not an S-hyperideal")
    for p in _proper_ideals(ring, mode):
        if p != zero_ideal and _is_s_bits(ring, p, s, mode):
            tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                       clause="a second S-hyperideal exists")


def _check_t10(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Hyperideals containing Q are S-hyperideals for S the identity-shifted
    image of Q; inside the Jacobson-style radical, Q sits in every maximal
    S-hyperideal.  Q must be negation closed for the shift argument."""
    zero_pad = (ring.zero,) * (ring.m - 2)
    jac = special_sets(ring, mode).jacobson.bits
    for q in _strict_closed_ideals(ring, mode):
        tally.instances += 1
        s = 0
        for x in range(ring.order):
            if q >> x & 1:
                s |= ring.f_bits((x, ring.one, *zero_pad))
        if not _ms_verdict(ring, s).ok:
            tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                       clause="shifted image is not multiplicatively closed")
            continue
        tally.hypothesis += 1
        for p in _proper_ideals(ring, mode):
            if q & ~p:
                continue
            if not _is_s_bits(ring, p, s, mode):
                tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                           P=ring.render_bits(p),
                           clause="ideal containing Q is not an S-hyperideal")
        if not (q & ~jac):
            for p in _s_maximal_family(ring, s, mode):
                if q & ~p:
                    tally.fail(Q=ring.render_bits(q), S=ring.render_bits(s),
                               P=ring.render_bits(p),
                               clause="maximal S-hyperideal misses Q")


def _check_t12(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Ideals closed under minimal-prime intersections are S-hyperideals for
    S avoiding every minimal prime."""
    minp = _min_primes(ring, mode)
    union = 0
    for q in minp:
        union |= q
    s = ring.full_bits & ~union
    if not s or not _ms_verdict(ring, s).ok:
        tally.instances += 1
        tally.fail(anomaly="complement of the minimal primes is not an MS",
                   S=ring.render_bits(s))
        return
    for p in _proper_ideals(ring, mode):
        tally.instances += 1
        hyp_ok = True
        for x in range(ring.order):
            if not (p >> x & 1):
                continue
            inter = ring.full_bits  # empty family: whole-ring convention
            for q in minp:
                if q >> x & 1:
                    inter &= q
            if inter & ~p:
                hyp_ok = False
                break
        if not hyp_ok:
            continue
        tally.hypothesis += 1
        if not _is_s_bits(ring, p, s, mode):
            tally.fail(P=ring.render_bits(p), S=ring.render_bits(s))


def _check_tavoid(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Avoidance: a hyperideal covered by n hyperideals, not covered once the
    S-hyperideal slot is removed, with every other slot meeting S, lies in
    the S-hyperideal slot."""
    pool = _all_ideals(ring, mode)
    ms_one = _ms_with_one(ring)
    n = ring.n
    if len(pool) < n:
        return
    for combo in combinations(pool, n):
        union = 0
        for b in combo:
            union |= b
        for t in range(n):
            pt = combo[t]
            if pt == ring.full_bits:
                continue
            rest = 0
            for j in range(n):
                if j != t:
                    rest |= combo[j]
            for p in pool:
                if p & ~union:
                    continue
                if not (p & ~rest):
                    continue  # covered without the slot: hypothesis fails
                for s in ms_one:
                    tally.instances += 1
                    if tally.instances > AVOIDANCE_CONFIG_CAP:
                        tally.truncated = True
                        return
                    if any(not (combo[j] & s) for j in range(n) if j != t):
                        continue
                    if not _is_s_bits(ring, pt, s, mode):
                        continue
                    tally.hypothesis += 1
                    if p & ~pt:
                        tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                                   slot=ring.render_bits(pt),
                                   cover=",".join(ring.render_bits(b) for b in combo))


def _check_thom_pre(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Preimages of image-MS hyperideals along homomorphisms keep the
    substitution property."""
    for hom in _homs(ring, mode):
        target = hom.target
        for s in _ms_all(ring):
            img_s = _image_bits(hom, s)
            if not _ms_verdict(target, img_s).ok:
                tally.instances += 1
                tally.fail(anomaly="image of an MS is not an MS",
                           S=ring.render_bits(s), hom=target.name)
                continue
            for q in _proper_ideals(target, mode):
                tally.instances += 1
                if not _is_s_bits(target, q, img_s, mode):
                    continue
                tally.hypothesis += 1
                pre = _preimage_bits(hom, q)
                if not _proper_s_ideal(ring, pre, s, mode):
                    tally.fail(hom=target.name, Q=target.render_bits(q),
                               S=ring.render_bits(s),
                               preimage=ring.render_bits(pre))


def _check_thom_img(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Images of S-hyperideals containing the kernel along epimorphisms are
    image-MS hyperideals."""
    for hom in _homs(ring, mode):
        if not hom.surjective:
            continue
        target = hom.target
        ker = _preimage_bits(hom, 1 << target.zero)
        for s in _ms_all(ring):
            img_s = _image_bits(hom, s)
            if not _ms_verdict(target, img_s).ok:
                continue
            for p in _proper_ideals(ring, mode):
                tally.instances += 1
                if ker & ~p:
                    continue
                if not _is_s_bits(ring, p, s, mode):
                    continue
                tally.hypothesis += 1
                img = _image_bits(hom, p)
                if not _proper_s_ideal(target, img, img_s, mode):
                    tally.fail(hom=target.name, P=ring.render_bits(p),
                               S=ring.render_bits(s),
                               image=target.render_bits(img))


def _check_tquot(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """An ideal over the modulus is an S-hyperideal exactly when its image in
    the quotient is a hyperideal for the image multiplicative set."""
    for modulus in _proper_ideals(ring, mode):
        q = _quotient_or_none(ring, modulus, mode)
        if q is None:
            continue
        proj = q.projection
        target = q.quotient
        for s in _ms_all(ring):
            img_s = _image_bits(proj, s)
            if not _ms_verdict(target, img_s).ok:
                continue
            for upper in _proper_ideals(ring, mode):
                if modulus & ~upper:
                    continue
                tally.instances += 1
                tally.hypothesis += 1
                lhs = _is_s_bits(ring, upper, s, mode)
                img = _image_bits(proj, upper)
                rhs = _proper_s_ideal(target, img, img_s, mode)
                if lhs != rhs:
                    tally.fail(modulus=ring.render_bits(modulus),
                               Q=ring.render_bits(upper),
                               S=ring.render_bits(s),
                               base=str(lhs), quotient=str(rhs))


@lru_cache(maxsize=None)
def _tprod_companion(m: int, n: int) -> HyperRing | None:
    if (m, n) == (2, 2):
        return fixtures("z2")
    if (m, n) == (3, 3):
        return fixtures("z2-as-33")
    return None


@lru_cache(maxsize=None)
def _tprod_product(ring: HyperRing) -> tuple[HyperRing, HyperRing] | None:
    companion = _tprod_companion(ring.m, ring.n)
    if companion is None:
        return None
    return product_ring([ring, companion], name=f"{ring.name}x{companion.name}"), companion


def _check_tprod(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """Componentwise S-hyperideal verdicts match the product-ring verdict
    (exercised for factors of order at most 4)."""
    if ring.order > 4:
        return
    built = _tprod_product(ring)
    if built is None:
        return
    prod, companion = built
    check_order(prod)
    o2 = companion.order
    for p1 in _proper_ideals(ring, mode):
        for p2 in _proper_ideals(companion, mode):
            pb = 0
            for x in range(ring.order):
                if p1 >> x & 1:
                    for y in range(o2):
                        if p2 >> y & 1:
                            pb |= 1 << (x * o2 + y)
            for s1 in _ms_all(ring):
                for s2 in _ms_all(companion):
                    sb = 0
                    for x in range(ring.order):
                        if s1 >> x & 1:
                            for y in range(o2):
                                if s2 >> y & 1:
                                    sb |= 1 << (x * o2 + y)
                    tally.instances += 1
                    tally.hypothesis += 1
                    lhs = _proper_s_ideal(prod, pb, sb, mode)
                    rhs = (_is_s_bits(ring, p1, s1, mode)
                           and _is_s_bits(companion, p2, s2, mode))
                    if lhs != rhs:
                        tally.fail(P1=ring.render_bits(p1), P2=companion.render_bits(p2),
                                   S1=ring.render_bits(s1), S2=companion.render_bits(s2),
                                   product=str(lhs), componentwise=str(rhs))


def _check_fw_sr(ring: HyperRing, mode: str, tally: _Tally) -> None:
    """The radical-target classifier: S-hyperideals are S_r-hyperideals, and
    the combined verdict agrees with a direct scan against the radical."""
    for p in _proper_ideals(ring, mode):
        for s in _ms_all(ring):
            tally.instances += 1
            sr_ok = _direct_sr_scan(ring, p, s, mode)
            cl = _classify_s_cached(ring, p, s, mode)
            if cl.verdict is SVerdict.S_HYPERIDEAL:
                tally.hypothesis += 1
                if not sr_ok:
                    tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                               clause="S-hyperideal fails the radical-target variant")
            if (cl.verdict is not SVerdict.NEITHER) != sr_ok:
                tally.fail(P=ring.render_bits(p), S=ring.render_bits(s),
                           clause="classifier disagrees with the direct scan",
                           verdict=cl.verdict.value, direct=str(sr_ok))


CATALOG: dict[str, tuple[str, object]] = {
    "T1.1": ("S-hyperideals avoid their multiplicative set", _check_t1_1),
    "T1.2": ("radicals of S-hyperideals stay S-hyperideals", _check_t1_2),
    "T1.3": ("residuals by outside sets stay S-hyperideals", _check_t1_3),
    "P2": ("disjoint primes are S-hyperideals and cover disjoint ideals", _check_p2),
    "T7": ("maximal S-hyperideals are prime", _check_t7),
    "T6": ("minimal primes over S-hyperideals are S-hyperideals", _check_t6),
    "T3": ("every proper hyperideal has a largest compatible MS", _check_t3),
    "T4": ("saturation is the least S-hyperideal over an ideal", _check_t4),
    "T5": ("substitution, residual, and saturation criteria agree", _check_t5),
    "TPRIMARY-EQ": ("complement-of-minimal-prime S-hyperideals are exactly the primaries", _check_tprimary_eq),
    "TDECOMP": ("saturations by prime complements decompose the ideal", _check_tdecomp),
    "PINT": ("intersections of S-hyperideals are S-hyperideals", _check_pint),
    "P8": ("all ideals are S-hyperideals iff S lies in the units", _check_p8),
    "T9-FWD": ("domains with S the nonzero elements admit only the zero S-hyperideal", _check_t9_fwd),
    "T10": ("identity-shifted ideals induce compatible multiplicative sets", _check_t10),
    "T12": ("minimal-prime-closed ideals avoid-all-minimal-primes S-hyperideals", _check_t12),
    "TAVOID": ("avoidance: covered ideals collapse into the S-hyperideal slot", _check_tavoid),
    "THOM-PRE": ("preimages along homomorphisms keep the property", _check_thom_pre),
    "THOM-IMG": ("images along epimorphisms keep the property", _check_thom_img),
    "TQUOT": ("quotient transfer matches the base verdict", _check_tquot),
    "TPROD": ("product verdicts match componentwise verdicts", _check_tprod),
    "FW-SR": ("the radical-target classifier is consistent", _check_fw_sr),
}


def check_theorem(ring: HyperRing, ident: str, mode: str = LENIENT) -> TheoremReport:
    """Run one catalog checker on one ring."""
    check_mode(mode)
    check_order(ring)
    if ident not in CATALOG:
        raise UnknownTheorem(ident)
    _, checker = CATALOG[ident]
    tally = _Tally()
    start = time.perf_counter()
    checker(ring, mode, tally)
    elapsed = (time.perf_counter() - start) * 1000.0
    if tally.counterexamples:
        status = "counterexample"
    elif tally.hypothesis >= 1:
        status = "holds"
    else:
        status = "hypothesis-never-met"
    return TheoremReport(
        id=ident,
        status=status,
        instances_checked=tally.instances,
        hypothesis_met=tally.hypothesis,
        counterexamples=tuple(tally.counterexamples),
        mode=mode,
        runtime_ms=elapsed,
        truncated=tally.truncated,
    )


@dataclass
class SuiteResult:
    entries: list[tuple[str, TheoremReport]]
    aggregate: str  # pass | counterexample | hypothesis-gap

    def to_json(self, include_timings: bool = False) -> str:
        rows = []
        for ring_name, report in self.entries:
            row = {"ring": ring_name}
            row.update(report.to_dict(include_timings=include_timings))
            rows.append(row)
        return json.dumps(rows, indent=2) + "\n"


def run_suite(
    rings: list[HyperRing],
    mode: str = LENIENT,
    only: list[str] | None = None,
) -> SuiteResult:
    """Full catalog x fixture matrix, merged in catalog order per ring."""
    check_mode(mode)
    idents = list(CATALOG) if only is None else list(only)
    for ident in idents:
        if ident not in CATALOG:
            raise UnknownTheorem(ident)
    entries: list[tuple[str, TheoremReport]] = []
    for ring in rings:
        for ident in idents:
            entries.append((ring.name, check_theorem(ring, ident, mode)))
    if any(r.status == "counterexample" for _, r in entries):
        aggregate = "counterexample"
    else:
        exercised = {ident: 0 for ident in idents}
        for _, r in entries:
            exercised[r.id] += r.hypothesis_met
        aggregate = "hypothesis-gap" if any(v == 0 for v in exercised.values()) else "pass"
    return SuiteResult(entries=entries, aggregate=aggregate)


# ---------------------------------------------------------------------------
# fixtures


def _paper_example_spec() -> HyperRingSpec:
    f = {
        (0, 0, 0): frozenset({0}),
        (0, 0, 1): frozenset({1}),
        (0, 0, 2): frozenset({2}),
        (0, 1, 1): frozenset({1}),
        (0, 1, 2): frozenset({0, 1, 2}),
        (0, 2, 2): frozenset({2}),
        (1, 1, 1): frozenset({1}),
        (1, 1, 2): frozenset({0, 1, 2}),
        (1, 2, 2): frozenset({0, 1, 2}),
        (2, 2, 2): frozenset({2}),
    }
    g = {
        (0, 0, 0): 0, (0, 0, 1): 0, (0, 0, 2): 0,
        (0, 1, 1): 0, (0, 1, 2): 0, (0, 2, 2): 0,
        (1, 1, 1): 1, (1, 1, 2): 2, (1, 2, 2): 2, (2, 2, 2): 2,
    }
    return HyperRingSpec(
        name="paper-example", m=3, n=3, elements=("0", "1", "2"),
        zero="0", one="1", f_table=f, g_table=g,
    )


def _z2_as_33_spec() -> HyperRingSpec:
    f = {
        key: frozenset({sum(key) % 2})
        for key in [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]
    }
    g = {key: (key[0] * key[1] * key[2]) % 2
         for key in [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]}
    return HyperRingSpec(
        name="z2-as-33", m=3, n=3, elements=("0", "1"),
        zero="0", one="1", f_table=f, g_table=g,
    )


FIXTURE_NAMES = (
    "paper-example", "z2", "z4", "z6", "z8", "z12",
    "z2xz3", "z6-mod-3", "z2-as-33",
)

DEFAULT_SUITE_FIXTURES = (
    "paper-example", "z2", "z4", "z6", "z8", "z12", "z2xz3", "z6-mod-3",
)


@lru_cache(maxsize=None)
def fixtures(name: str) -> HyperRing:
    """Deterministic, axiom-verified reference rings."""
    if name == "paper-example":
        return require_ring(_paper_example_spec())
    if name in ("z2", "z4", "z6", "z8", "z12"):
        return cyclic_ring(int(name[1:]))
    if name == "z2xz3":
        return product_ring([cyclic_ring(2), cyclic_ring(3)], name="z2xz3")
    if name == "z6-mod-3":
        z6 = fixtures("z6")
        q = quotient_ring(z6, z6.subset([0, 3]), LENIENT)
        return require_ring(replace(q.quotient.spec, name="z6-mod-3"))
    if name == "z2-as-33":
        return require_ring(_z2_as_33_spec())
    raise UnknownFixture(name)
