"""The fourteen acceptance criteria, each exact and under its time limit.

Run with pytest (a summary section lists one PASS/FAIL line per criterion)
or directly: ``python3 tests/test_acceptance.py``.
"""
import time
from fractions import Fraction as F
from math import factorial

import pytest

from hyperoct import chars, fock, group, moments, pairpart, schur_weyl, type_d

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # running as a script from elsewhere
    ACCEPTANCE_LINES = []


def _record(num, title, limit, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    note = detail if ok else f"check failed: {detail}"
    if not in_time:
        note += f"; over the {limit:.0f} s limit"
    line = f"criterion {num}: {status}  {title}  ({elapsed:.2f} s / {limit:.0f} s)  {note}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok and in_time, line


# -- the checks ---------------------------------------------------------------------
def c1():
    bad = [n for n in range(1, 5) if not group.factorization_identity(n).equal]
    return not bad, "identity exact for n=1..4" if not bad else f"fails at n={bad}"


def c2():
    count = 0
    for n in range(1, 5):
        for s in group.enumerate_group(n):
            f = group.minimal_nonmixing_factorization(s)
            t = group.cycle_type(s, "padded")
            long_ = sum(r.kind == "long" for r in f)
            short = sum(r.kind == "short" for r in f)
            want = (t.rho_plus.norm + t.rho_minus.norm, t.rho_minus.length)
            if group.product(f, n) != s or (long_, short) != want:
                return False, f"element {s.word()}"
            count += 1
    return True, f"{count} elements"


def c3():
    for n in range(1, 5):
        rep = chars.rozklad_report(n)
        if not rep.ok:
            return False, f"n={n}: {rep.mismatches[0]}"
    return (rep.irreps, rep.classes) == (20, 20), "all classes, n<=4 (20 x 20 at n=4)"


GRID_QP = [F(0), F(1, 4), F(-1, 4), F(1, 3), F(-1, 3), F(1, 2), F(-1, 2), F(2, 5)]
GRID_QM = [F(0), F(1, 3), F(-1, 3), F(1), F(-1), F(3, 2)]


def c4():
    size4 = []
    for qp in GRID_QP:
        for qm in GRID_QM:
            res = chars.classify(qp, qm)
            hits = chars.scan_coefficients(qp, qm, 8, first_only=False)
            neg_sizes = {a.size + b.size for (a, b), _ in hits}
            if res.positive_definite != (not hits):
                return False, f"classifier vs scan at ({qp},{qm})"
            if not res.positive_definite and res.witness is None:
                return False, f"no witness at ({qp},{qm})"
            # phi on B(k) is sum over |lambda| = k of weight * chi, so its
            # Gram matrix is PSD iff no size-k coefficient is negative
            for k in (1, 2, 3):
                if chars.gram_psd(k, qp, qm) != (k not in neg_sizes):
                    return False, f"Gram on B({k}) at ({qp},{qm})"
            if hits and min(neg_sizes) == 4:
                w = res.witness
                if chars.gram_psd(4, qp, qm, allow_large=True):
                    return False, f"B(4) Gram PSD at ({qp},{qm})"
                if chars.isotypic_quadratic_form(w, qp, qm) >= 0:
                    return False, f"isotypic certificate at ({qp},{qm})"
                size4.append(f"({qp},{qm})")
    return True, f"48 points; size-4 witnesses confirmed on B(4) at {', '.join(size4)}"


def c5():
    cfgs = list(schur_weyl.all_configs(4, 3))
    bad = [c for c in cfgs if not schur_weyl.verify(c).ok]
    return not bad, f"{len(cfgs)} configurations" if not bad else f"fails at {bad[0]}"


def c6():
    for M, N, eps in [(1, 1, 1), (1, 1, -1), (2, 1, 1), (2, 1, -1), (3, 2, 1)]:
        if not chars.hirai_matches_phi(M, N, eps, 5):
            return False, f"(M,N,eps)=({M},{N},{eps})"
    for qm in (F(0), F(1, 2), F(-1, 2)):
        if not chars.hirai_degenerate_matches_phi(qm, 5):
            return False, f"degenerate qm={qm}"
    return True, "5 extreme + 3 degenerate parameter sets, n<=5"


def c7():
    rep = moments.cross_check(10)
    bad = [r for r in rep.rows if not r.equal]
    return rep.ok, "2n=2..10, five routes" if rep.ok else f"2n={bad[0].two_n}: {bad[0].first_difference}"


def c8():
    ok, count = fock.formula101_check(max_len=5, d=2)
    return ok and count == 62, f"{count} words"


def c9():
    return fock.commutation_check(d=2, max_level=3), "every basis vector, levels 0..3"


def c10():
    for M in (1, 2, 3):
        for N in (1, 2):
            r = fock.exclusion_check(M, N)
            if not (r["positive_through_M"] and r["zero_at_M_plus_1"]):
                return False, f"exclusion at ({M},{N})"
            if not moments.hankel_check(M, N).ok:
                return False, f"Hankel at ({M},{N})"
    return True, "M in 1..3, N in 1..2"


def c11():
    rows = moments.specializations(6)
    for r in rows:
        if not (r.semicircle and r.value_22 == r.expected_22 and r.value_20 == r.expected_20
                and r.total_count == r.expected_count):
            return False, f"n={r.n}"
    return True, "n=1..6"


def c12():
    for n in range(1, 7):
        polys = [pairpart.statistic_polynomial(2 * n, w) for w in ("cycles", "non_nested", "no_right_crossing")]
        if not polys[0] == polys[1] == polys[2]:
            return False, f"n={n}: {polys}"
    return True, f"n=1..6, n=6 polynomial {polys[0]}"


def c13():
    grid = [F(0)] + [F(s, k) for k in (1, 2, 3, 4, 5) for s in (1, -1)]
    for q in grid:
        r = type_d.classify_D(q)
        hits = type_d.scan_D(q, 8, first_only=True)
        if r.positive_definite != (not hits) or not type_d.b_consistent(r):
            return False, f"q={q}"
    for n in range(1, 5):
        if not type_d.splitting_matches_rule(n):
            return False, f"splitting at n={n}"
    return True, "11 values of q; splits exactly on even-part classes, n<=4"


def c14():
    for n in range(1, 6):
        elems = list(group.enumerate_group(n))
        if len(set(elems)) != 2 ** n * factorial(n) or group.group_order(n) != len(elems):
            return False, f"|B({n})|"
        if len(group.reflections(n)) != n * n:
            return False, f"reflections n={n}"
        if sum(group.class_size(t, n) for t in group.padded_cycle_types(n)) != len(elems):
            return False, f"class sizes n={n}"
        if sum(1 for _ in pairpart._enumerate(2 * n, True)) != 2 ** n * moments.double_factorial(2 * n - 1):
            return False, f"pair partitions n={n}"
    return True, "n=1..5"


CRITERIA = [
    (1, "factorization identity", 60, c1),
    (2, "minimal non-mixing factorizations", 60, c2),
    (3, "character expansion of phi", 120, c3),
    (4, "classification consistency", 180, c4),
    (5, "Schur-Weyl representation", 120, c5),
    (6, "Hirai-Hirai evaluator", 60, c6),
    (7, "five-route moments", 120, c7),
    (8, "creation/annihilation word formula", 120, c8),
    (9, "commutation relation", 60, c9),
    (10, "exclusion principle and Hankel", 30, c10),
    (11, "specializations", 30, c11),
    (12, "Drake equidistribution", 30, c12),
    (13, "type D", 60, c13),
    (14, "structural counts", 10, c14),
]


@pytest.mark.parametrize("num,title,limit,fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, title, limit, fn):
    ok, line = _record(num, title, limit, fn)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [_record(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
