"""Acceptance criteria, one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines alongside the pytest statuses.
"""

import itertools
import json
import time

import pytest

from hyperideal import (
    CATALOG,
    DEFAULT_SUITE_FIXTURES,
    SVerdict,
    classify_s,
    enumerate_hyperideals,
    enumerate_multiplicative_sets,
    fixtures,
    parse_spec,
    product_ring,
    proper_hyperideals,
    residual,
    run_suite,
    saturation,
    serialize_spec,
    verify_axioms,
)
from hyperideal.cli import run as cli_run
from hyperideal.kernel import AxiomReport


def _verdict(line: str, ok: bool) -> None:
    print(f"ACCEPTANCE {line}: {'PASS' if ok else 'FAIL'}")
    assert ok


@pytest.fixture(scope="module")
def paper_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("acceptance") / "paper-example.json"
    path.write_text(serialize_spec(fixtures("paper-example").spec), encoding="utf-8")
    return str(path)


def test_criterion_1_paper_example_reproduction(paper_path, capsys):
    start = time.perf_counter()
    code_verify = cli_run(["verify", paper_path])
    code_classify = cli_run(
        ["classify", paper_path, "--ideal", "0,2", "--s", "2", "--mode", "lenient"]
    )
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    ok = (
        code_verify == 0
        and code_classify == 0
        and "all axioms hold" in out
        and "not an S-hyperideal" in out
        and "tuple (1,1,2)" in out
        and "position 3" in out
        and "g(1,1,2)=2 in P" in out
        and "g(1,1,1)=1 not in P" in out
        and elapsed < 1.0
    )
    with capsys.disabled():
        _verdict(f"1 (paper-example reproduction, {elapsed * 1000:.0f} ms)", ok)


def test_criterion_2_full_suite(capsys):
    rings = [fixtures(name) for name in DEFAULT_SUITE_FIXTURES]
    start = time.perf_counter()
    result = run_suite(rings, mode="lenient")
    elapsed = time.perf_counter() - start
    counterexamples = [
        (name, r.id, r.counterexamples)
        for name, r in result.entries
        if r.status == "counterexample"
    ]
    exercised = {ident: 0 for ident in CATALOG}
    for _, r in result.entries:
        exercised[r.id] += r.hypothesis_met
    uncovered = sorted(ident for ident, n in exercised.items() if n == 0)
    ok = not counterexamples and not uncovered and result.aggregate == "pass" and elapsed < 60.0
    with capsys.disabled():
        _verdict(
            f"2 (22-theorem suite on {len(rings)} fixtures, "
            f"{elapsed:.2f} s, counterexamples={len(counterexamples)}, "
            f"uncovered={uncovered})",
            ok,
        )


def test_criterion_3_tri_equivalence(capsys):
    disagreements = 0
    pairs = 0
    for name in DEFAULT_SUITE_FIXTURES:
        ring = fixtures(name)
        for s in enumerate_multiplicative_sets(ring):
            for p in proper_hyperideals(ring):
                pairs += 1
                direct = classify_s(ring, p, s).verdict is SVerdict.S_HYPERIDEAL
                res_fixed = all(residual(ring, p, ring.subset([t])) == p for t in s)
                sat_fixed = saturation(ring, p, s).subset == p
                if not (direct == res_fixed == sat_fixed):
                    disagreements += 1
    ok = disagreements == 0 and pairs > 0
    with capsys.disabled():
        _verdict(f"3 (tri-equivalence over {pairs} pairs, {disagreements} disagreements)", ok)


def test_criterion_4_saturation_minimality(capsys):
    violations = 0
    checked = 0
    for name in DEFAULT_SUITE_FIXTURES:
        ring = fixtures(name)
        one = ring.one
        ms_with_one = [s for s in enumerate_multiplicative_sets(ring) if one in s]
        for q in enumerate_hyperideals(ring):
            for s in ms_with_one:
                result = saturation(ring, q, s)
                if not result.proper:
                    continue
                checked += 1
                sat = result.subset
                family = [
                    r for r in proper_hyperideals(ring)
                    if q.issubset(r)
                    and classify_s(ring, r, s).verdict is SVerdict.S_HYPERIDEAL
                ]
                if sat not in family:
                    violations += 1
                    continue
                if any(not sat.issubset(r) for r in family):
                    violations += 1
    ok = violations == 0 and checked > 0
    with capsys.disabled():
        _verdict(f"4 (saturation minimality over {checked} cases, {violations} violations)", ok)


def test_criterion_5_product_cross_check(capsys):
    small = [
        fixtures(name)
        for name in ("paper-example", "z2", "z4", "z6-mod-3", "z2-as-33")
        if fixtures(name).order <= 4
    ]
    disagreements = 0
    compared = 0
    for r1, r2 in itertools.combinations_with_replacement(small, 2):
        if (r1.m, r1.n) != (r2.m, r2.n):
            continue
        prod = product_ring([r1, r2])
        o2 = r2.order
        for p1 in proper_hyperideals(r1):
            for p2 in proper_hyperideals(r2):
                pb = 0
                for x in p1:
                    for y in p2:
                        pb |= 1 << (x * o2 + y)
                p_mask = prod.subset_from_bits(pb)
                for s1 in enumerate_multiplicative_sets(r1):
                    for s2 in enumerate_multiplicative_sets(r2):
                        sb = 0
                        for x in s1:
                            for y in s2:
                                sb |= 1 << (x * o2 + y)
                        compared += 1
                        direct = (
                            classify_s(prod, p_mask, prod.subset_from_bits(sb)).verdict
                            is SVerdict.S_HYPERIDEAL
                        )
                        componentwise = (
                            classify_s(r1, p1, s1).verdict is SVerdict.S_HYPERIDEAL
                            and classify_s(r2, p2, s2).verdict is SVerdict.S_HYPERIDEAL
                        )
                        if direct != componentwise:
                            disagreements += 1
    ok = disagreements == 0 and compared > 0
    with capsys.disabled():
        _verdict(f"5 (product cross-check over {compared} tuples, {disagreements} disagreements)", ok)


def test_criterion_6_determinism_and_round_trip(capsys):
    round_trip_ok = True
    for name in DEFAULT_SUITE_FIXTURES:
        doc = serialize_spec(fixtures(name).spec)
        if serialize_spec(parse_spec(doc)) != doc:
            round_trip_ok = False
    rings = [fixtures(name) for name in ("paper-example", "z6")]
    first = run_suite(rings).to_json()
    second = run_suite(rings).to_json()
    reports_ok = first == second
    ok = round_trip_ok and reports_ok
    with capsys.disabled():
        _verdict(
            f"6 (round-trip byte-identity={round_trip_ok}, report determinism={reports_ok})",
            ok,
        )


# One documented single-entry mutation per axiom family, with the witness the
# verifier must report (lexicographically first in scan order).
MUTATIONS = [
    ("neutral-element", "f", "0,0,1", ["2"], (1, 0, 0)),
    ("unique-inverses", "f", "0,1,2", ["1", "2"], (1,)),
    ("zero-absorption", "g", "0,1,1", "1", (0, 1, 1)),
    ("scalar-identity", "g", "1,1,2", "1", (2, 1, 1)),
    ("distributivity", "f", "2,2,2", ["1", "2"], (1, 1, 1, 1, 2)),
]


def _mutation_violates(family, doc, witness):
    """Independent re-check that the reported witness is a genuine violation
    of its axiom family, straight from the mutated tables."""
    elements = doc["elements"]
    f = {k: set(v) for k, v in doc["f"].items()}
    g = dict(doc["g"])

    def f_of(ints):
        return f[",".join(elements[i] for i in sorted(ints))]

    def g_of(ints):
        return g[",".join(elements[i] for i in sorted(ints))]

    idx = {name: i for i, name in enumerate(elements)}
    if family == "neutral-element":
        x, *zeros = witness
        return f_of((x, *zeros)) != {elements[x]}
    if family == "unique-inverses":
        (x,) = witness
        inverses = [y for y in range(3) if "0" in f_of((x, y, 0))]
        return len(inverses) != 1
    if family == "zero-absorption":
        return g_of(witness) != "0"
    if family == "scalar-identity":
        x = witness[0]
        return g_of(witness) != elements[x]
    if family == "distributivity":
        q, p = witness[:3], witness[3:]
        image = {g_of((idx[t], *p)) for t in f_of(q)}
        summed = f_of(tuple(idx[g_of((qi, *p))] for qi in q))
        return not summed <= image
    raise AssertionError(family)


def test_criterion_7_mutation_sensitivity(capsys):
    base = json.loads(serialize_spec(fixtures("paper-example").spec))
    failures = []
    for family, table, key, value, expected_witness in MUTATIONS:
        doc = json.loads(json.dumps(base))
        doc[table][key] = value
        result = verify_axioms(parse_spec(json.dumps(doc)))
        if not isinstance(result, AxiomReport):
            failures.append(f"{family}: mutation not caught")
            continue
        status = result.entries[family]
        if status.ok:
            failures.append(f"{family}: targeted family still passes")
        elif status.witness != expected_witness:
            failures.append(f"{family}: witness {status.witness} != {expected_witness}")
        elif not _mutation_violates(family, doc, status.witness):
            failures.append(f"{family}: reported witness is not a real violation")
    ok = not failures
    with capsys.disabled():
        _verdict(f"7 (mutation sensitivity, 5 families, failures={failures})", ok)
