"""Acceptance gate: ten exhaustive checks over the ring family, exact equality throughout.

Each test prints one line ``criterion N: PASS|FAIL ...``.  Run on its own with
``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import itertools
import json
import random
import sys
import time

import pytest

from flatcheck.cli import main as cli_main
from flatcheck.decide import is_s_ring, pointwise_localization
from flatcheck.ideals import Ideal, is_idempotent_ideal, nilradical
from flatcheck.modules import PresentedModule, annihilator, flatness_witness
from flatcheck.rings import SeqRing, ZMod
from flatcheck.seqring import structured_idempotents
from flatcheck.suites import (FAMILY, SuiteConfig, distinct_flat_modules, run_suite,
                              universal_property_holds)

pytestmark = pytest.mark.slow


def report(capsys, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def timed_suite(name):
    start = time.perf_counter()
    res = run_suite(SuiteConfig(name, FAMILY, gen_bound=2, rel_bound=2))
    return res, time.perf_counter() - start


def _c1(capsys=None):
    res, t = timed_suite("th4")
    ok = res.passed and t < 300
    report(capsys, 1, ok, f"oracle <=> projective <=> locally free on {res.instances} modules "
                          f"({res.details}), {t:.1f}s, failure={res.failure}")
    return ok


def _c2(capsys=None):
    res, t = timed_suite("lemma3")
    z4 = ZMod(4)
    ann = annihilator(PresentedModule.cyclic(z4, 2))
    special = ann == Ideal(z4, [2]) and not is_idempotent_ideal(z4, ann)
    ok = res.passed and special
    report(capsys, 2, ok, f"{res.instances} idempotent Ann/I_n checks on flat modules, "
                          f"Ann(Z4/(2)) = (2) non-idempotent: {special}, {t:.1f}s")
    return ok


def _c3(capsys=None):
    res, t = timed_suite("lemma7")
    report(capsys, 3, res.passed, f"Ann(M/JM) = Ann(M) + J on {res.instances} pairs, {t:.1f}s")
    return res.passed


def _c4(capsys=None):
    a, ta = timed_suite("lemma2")
    b, tb = timed_suite("remark040")
    ok = a.passed and b.passed
    report(capsys, 4, ok, f"localized annihilator {a.instances} checks, support formula with "
                          f"annihilator {b.instances} checks, {ta + tb:.1f}s")
    return ok


def _c5(capsys=None):
    res, t = timed_suite("prop030")
    report(capsys, 5, res.passed, f"criterion vs oracle on {res.instances} ideals ({res.details}), {t:.1f}s")
    return res.passed


def random_relations(count=120, seed=2024):
    """(m, a, x) with sum a_i x_i = 0, drawn from flat sweep modules of the family."""
    rng = random.Random(seed)
    pools = [[m for m in distinct_flat_modules(r, 2, 2) if not m.is_zero] for r in FAMILY]
    out = []
    while len(out) < count:
        m = rng.choice(rng.choice(pools))
        r = m.ring
        elems = m.elements()
        n = rng.randint(1, 3 if r.size <= 9 else 2)
        x = tuple(rng.choice(elems) for _ in range(n))
        sols = [a for a in itertools.product(r.elements, repeat=n)
                if m.is_zero_element(m.combination(a, x))]
        nonzero = [a for a in sols if any(c != r.zero for c in a)]
        out.append((m, rng.choice(nonzero or sols), x))
    return out


def _c6(capsys=None):
    start = time.perf_counter()
    rels = random_relations()
    failures = sum(not flatness_witness(m, a, x).verify(m) for m, a, x in rels)
    t = time.perf_counter() - start
    ok = failures == 0 and len(rels) >= 100 and t < 60
    report(capsys, 6, ok, f"{len(rels)} relations, {failures} failures, {t:.1f}s")
    return ok


def _c7(capsys=None):
    res, t = timed_suite("theorem1")
    ok = res.passed and res.instances > 0
    report(capsys, 7, ok, f"independence lifts on {res.instances} subsets "
                          f"({res.skipped} with dependent images skipped), {t:.1f}s")
    return ok


def _c8(capsys=None):
    total, parts, ok = 0.0, [], True
    for name in ("th6", "th3", "coro5", "pointwise"):
        res, t = timed_suite(name)
        total += t
        ok = ok and res.passed
        parts.append(f"{name} {res.instances}")
    ok = ok and total < 300
    report(capsys, 8, ok, f"descent checks ({', '.join(parts)}), {total:.1f}s total")
    return ok


def _c9(capsys=None):
    count, ok = 0, True
    for r in FAMILY:
        for s in r.elements:
            loc = pointwise_localization(r, [s])
            good = loc.verify() and loc.kernel <= nilradical(r) and universal_property_holds(loc)
            ok = ok and good
            count += 1
    report(capsys, 9, ok, f"relations, kernel in nilradical and unique factorization for {count} singletons")
    return ok


def _c10(capsys=None):
    start = time.perf_counter()
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(["example1", "--base", "zmod2", "--samples", "200", "--seed", "7",
                         "--format", "json"])
    doc = json.loads(buf.getvalue())
    n_struct = len(structured_idempotents(SeqRing(ZMod(2))))
    cert_ok = (code == 0 and doc["status"] == "VALID" and len(doc["flat_samples"]) == 200
               and len(doc["refutations"]) == n_struct + 200)
    seq = is_s_ring(SeqRing(ZMod(2)))
    seq_ok = not seq.verdict and seq.certificate is not None and seq.certificate.valid
    finite_ok = all(is_s_ring(r).verdict for r in FAMILY)
    t = time.perf_counter() - start
    ok = cert_ok and seq_ok and finite_ok and t < 60
    report(capsys, 10, ok, f"certificate VALID with 200/200 triples and {len(doc['refutations'])} "
                           f"refutations: {cert_ok}; seq not S-ring: {seq_ok}; "
                           f"family all S-rings: {finite_ok}; {t:.1f}s")
    return ok


CRITERIA = (_c1, _c2, _c3, _c4, _c5, _c6, _c7, _c8, _c9, _c10)


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    assert CRITERIA[n - 1](capsys)


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
