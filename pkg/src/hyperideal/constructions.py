"""Products, quotients, homomorphisms, and ideal transport.

Quotient construction never assumes well-definedness: cosets must partition
the carrier and both induced operations must be independent of the chosen
representatives, otherwise construction fails loudly.  Lenient-mode
hyperideals can and do break these conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .errors import (
    ArityMismatch,
    CosetsNotPartition,
    HypothesisViolation,
    InducedOpIllDefined,
    InternalContradiction,
    NotARing,
)
from .ideals import require_proper_hyperideal
from .kernel import (
    LENIENT,
    AxiomReport,
    HyperRing,
    HyperRingSpec,
    SubsetMask,
    check_mode,
    require_ring,
    verify_axioms,
)


@dataclass(frozen=True)
class HyperRingHom:
    """A verified structure-preserving map between rings of equal arities."""

    source: HyperRing
    target: HyperRing
    mapping: tuple[int, ...]
    surjective: bool

    def apply(self, x: int) -> int:
        return self.mapping[x]

    def image_of(self, subset: SubsetMask) -> SubsetMask:
        bits = 0
        for x in subset:
            bits |= 1 << self.mapping[x]
        return SubsetMask(self.target, bits)

    def preimage_of(self, subset: SubsetMask) -> SubsetMask:
        bits = 0
        for x in range(self.source.order):
            if self.mapping[x] in subset:
                bits |= 1 << x
        return SubsetMask(self.source, bits)

    @property
    def kernel(self) -> SubsetMask:
        return self.preimage_of(SubsetMask(self.target, 1 << self.target.zero))


@dataclass(frozen=True)
class QuotientRing:
    base: HyperRing
    modulus: SubsetMask
    cosets: tuple[SubsetMask, ...]
    quotient: HyperRing
    projection: HyperRingHom


@dataclass(frozen=True)
class HomViolation:
    """Homomorphism violation: failing clause plus witness tuple."""

    clause: str
    witness: tuple[int, ...]
    detail: str = ""


def check_homomorphism(
    source: HyperRing, target: HyperRing, mapping: dict[int, int] | tuple[int, ...]
) -> HyperRingHom | HomViolation:
    """Exhaustively verify the three homomorphism clauses; violations are
    returned as a value, never raised."""
    if source.m != target.m or source.n != target.n:
        raise ArityMismatch(source.m, target.m)
    if isinstance(mapping, dict):
        mapping = tuple(mapping[x] for x in range(source.order))
    if len(mapping) != source.order:
        raise ValueError("mapping must be total on the source")
    if mapping[source.one] != target.one:
        return HomViolation("identity", (source.one,), "the identity is not preserved")
    for key in combinations_with_replacement(range(source.order), source.m):
        image = 0
        bits = source.f_bits(key)
        i = 0
        while bits:
            if bits & 1:
                image |= 1 << mapping[i]
            bits >>= 1
            i += 1
        direct = target._hyperadd_bits(*(mapping[x] for x in key))
        if image != direct:
            return HomViolation("hyperaddition", key, "images of the sum differ")
    for key in combinations_with_replacement(range(source.order), source.n):
        if mapping[source.g_at(key)] != target.g_at(tuple(mapping[x] for x in key)):
            return HomViolation("multiplication", key, "images of the product differ")
    surjective = len(set(mapping)) == target.order
    return HyperRingHom(source=source, target=target, mapping=tuple(mapping), surjective=surjective)


def identity_hom(ring: HyperRing) -> HyperRingHom:
    hom = check_homomorphism(ring, ring, tuple(range(ring.order)))
    assert isinstance(hom, HyperRingHom)
    return hom


def transport_ideal(hom: HyperRingHom, direction: str, subset: SubsetMask) -> SubsetMask:
    """Pointwise image or preimage of a subset along a verified hom.

    Image transport requires a surjective hom whose kernel the set contains;
    those hypotheses are checked, not assumed.
    """
    if direction == "preimage":
        if subset.ring is not hom.target:
            raise ValueError("preimage expects a subset of the target")
        return hom.preimage_of(subset)
    if direction == "image":
        if subset.ring is not hom.source:
            raise ValueError("image expects a subset of the source")
        if not hom.surjective:
            raise HypothesisViolation("image transport requires a surjective homomorphism")
        if not hom.kernel.issubset(subset):
            raise HypothesisViolation("image transport requires the kernel inside the ideal")
        return hom.image_of(subset)
    raise ValueError(f"direction must be 'image' or 'preimage', got {direction!r}")


# ---------------------------------------------------------------------------
# products


def product_ring(rings: list[HyperRing], name: str = "") -> HyperRing:
    """Componentwise product; element names join the factor names with '|'.

    The resulting tables are re-verified as a sanity gate.
    """
    if not rings:
        raise ValueError("at least one factor is required")
    m, n = rings[0].m, rings[0].n
    for r in rings[1:]:
        if r.m != m or r.n != n:
            raise ArityMismatch(m, r.m)
    total = 1
    for r in rings:
        total *= r.order
    if total > 1 << 20:
        raise ValueError("product order is unreasonably large")
    tuples = list(product(*(range(r.order) for r in rings)))
    index_of = {t: i for i, t in enumerate(tuples)}
    names = tuple("|".join(r.elements[x] for r, x in zip(rings, t)) for t in tuples)
    zero = "|".join(r.elements[r.zero] for r in rings)
    one = "|".join(r.elements[r.one] for r in rings)

    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    for key in combinations_with_replacement(range(total), m):
        factor_bits = [
            r._hyperadd_bits(*(tuples[i][j] for i in key)) for j, r in enumerate(rings)
        ]
        pools = [[x for x in range(r.order) if factor_bits[j] >> x & 1] for j, r in enumerate(rings)]
        f_table[key] = frozenset(index_of[c] for c in product(*pools))
    g_table: dict[tuple[int, ...], int] = {}
    for key in combinations_with_replacement(range(total), n):
        value = tuple(r.g_at(tuple(tuples[i][j] for i in key)) for j, r in enumerate(rings))
        g_table[key] = index_of[value]

    spec = HyperRingSpec(
        name=name or "x".join(r.name for r in rings),
        m=m,
        n=n,
        elements=names,
        zero=zero,
        one=one,
        f_table=f_table,
        g_table=g_table,
    )
    result = verify_axioms(spec)
    if isinstance(result, AxiomReport):
        raise InternalContradiction("product of valid rings failed axiom verification")
    return result


def product_subset(ring: HyperRing, factors: list[HyperRing], masks: list[SubsetMask]) -> SubsetMask:
    """The mask of a componentwise product subset inside a product ring."""
    tuples = list(product(*(range(r.order) for r in factors)))
    bits = 0
    for i, t in enumerate(tuples):
        if all(t[j] in masks[j] for j in range(len(factors))):
            bits |= 1 << i
    return SubsetMask(ring, bits)


# ---------------------------------------------------------------------------
# quotients


def quotient_ring(ring: HyperRing, modulus: SubsetMask, mode: str = LENIENT) -> QuotientRing:
    """Quotient by a proper hyperideal via cosets f(x, P, 0^(m-2)).

    Raises CosetsNotPartition when two distinct cosets overlap and
    InducedOpIllDefined when an induced table entry depends on the chosen
    representatives.
    """
    check_mode(mode)
    require_proper_hyperideal(ring, modulus, mode)
    zero_pad = (ring.zero,) * (ring.m - 2)
    coset_bits = [
        ring._hyperadd_bits(x, modulus, *zero_pad) for x in range(ring.order)
    ]
    distinct: list[int] = []
    for bits in coset_bits:
        if bits not in distinct:
            distinct.append(bits)
    distinct.sort(key=lambda b: next(i for i in range(ring.order) if b >> i & 1))
    for i, a in enumerate(distinct):
        for b in distinct[i + 1 :]:
            if a & b:
                raise CosetsNotPartition(ring.names_of_bits(a), ring.names_of_bits(b))
    covered = 0
    for bits in distinct:
        covered |= bits
    if covered != ring.full_bits:
        raise CosetsNotPartition(ring.names_of_bits(covered), ())

    coset_index = [distinct.index(coset_bits[x]) for x in range(ring.order)]
    members = [[x for x in range(ring.order) if b >> x & 1] for b in distinct]
    order = len(distinct)
    names = tuple("+".join(ring.elements[x] for x in mem) for mem in members)

    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    for key in combinations_with_replacement(range(order), ring.m):
        value: frozenset[int] | None = None
        for reps in product(*(members[c] for c in key)):
            bits = ring.f_bits(reps)
            cosets = frozenset(coset_index[z] for z in range(ring.order) if bits >> z & 1)
            if value is None:
                value = cosets
            elif value != cosets:
                raise InducedOpIllDefined(
                    f"hyperaddition of cosets {tuple(names[c] for c in key)} "
                    "depends on the representatives"
                )
        assert value is not None
        f_table[key] = value
    g_table: dict[tuple[int, ...], int] = {}
    for key in combinations_with_replacement(range(order), ring.n):
        value_g: int | None = None
        for reps in product(*(members[c] for c in key)):
            c = coset_index[ring.g_at(reps)]
            if value_g is None:
                value_g = c
            elif value_g != c:
                raise InducedOpIllDefined(
                    f"multiplication of cosets {tuple(names[c] for c in key)} "
                    "depends on the representatives"
                )
        assert value_g is not None
        g_table[key] = value_g

    spec = HyperRingSpec(
        name=f"{ring.name}/{ring.render_bits(modulus.bits)}",
        m=ring.m,
        n=ring.n,
        elements=names,
        zero=names[coset_index[ring.zero]],
        one=names[coset_index[ring.one]],
        f_table=f_table,
        g_table=g_table,
    )
    result = verify_axioms(spec)
    if isinstance(result, AxiomReport):
        raise InducedOpIllDefined(
            "quotient tables are representative-independent but fail axiom "
            f"verification: {', '.join(result.failures())}"
        )
    quotient = result
    hom = check_homomorphism(ring, quotient, tuple(coset_index))
    if not isinstance(hom, HyperRingHom):
        raise InternalContradiction("canonical projection is not a homomorphism")
    return QuotientRing(
        base=ring,
        modulus=modulus,
        cosets=tuple(SubsetMask(ring, b) for b in distinct),
        quotient=quotient,
        projection=hom,
    )


# ---------------------------------------------------------------------------
# classical fixtures


def ring_from_ring_table(
    add_table: list[list[int]],
    mul_table: list[list[int]],
    zero: int,
    one: int,
    name: str = "ring",
    element_names: tuple[str, ...] | None = None,
) -> HyperRingSpec:
    """Present a finite commutative unital ring as a (2,2)-hyperring with
    singleton hyperaddition; the axiom verifier is the ring detector."""
    order = len(add_table)
    if element_names is None:
        element_names = tuple(str(i) for i in range(order))
    f_table: dict[tuple[int, ...], frozenset[int]] = {}
    g_table: dict[tuple[int, ...], int] = {}
    for key in combinations_with_replacement(range(order), 2):
        a, b = key
        f_table[key] = frozenset({add_table[a][b]})
        g_table[key] = mul_table[a][b]
        if add_table[a][b] != add_table[b][a] or mul_table[a][b] != mul_table[b][a]:
            raise NotARing("tables are not commutative")
    spec = HyperRingSpec(
        name=name,
        m=2,
        n=2,
        elements=element_names,
        zero=element_names[zero],
        one=element_names[one],
        f_table=f_table,
        g_table=g_table,
    )
    result = verify_axioms(spec)
    if isinstance(result, AxiomReport):
        failing = ", ".join(result.failures())
        raise NotARing(f"tables do not define a ring: {failing}")
    return spec


def cyclic_ring(k: int) -> HyperRing:
    """The integers modulo k as a (2,2)-hyperring."""
    if k < 2:
        raise ValueError("modulus must be at least 2")
    add = [[(a + b) % k for b in range(k)] for a in range(k)]
    mul = [[(a * b) % k for b in range(k)] for a in range(k)]
    return require_ring(ring_from_ring_table(add, mul, 0, 1, name=f"z{k}"))
