"""Command-line interface.

Exit codes: 0 every check passed, 1 a verification failed (the report is
still written), 2 usage or configuration error (including budget refusals).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional

from . import __version__
from .kernels import BACKEND
from .report import Report, rational

DEFAULT_BUDGET = 1_000_000
BUDGET_ENV = "HYPEROCT_BUDGET"


class UsageError(Exception):
    """Bad arguments or a request beyond the budget (exit code 2)."""


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _int_list(text: str) -> List[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _partition(text: str):
    from .partitions import parse_partition

    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


class Context:
    def __init__(self, args):
        self.args = args
        self.seed = args.seed
        env = os.environ.get(BUDGET_ENV)
        if args.budget is not None:
            self.budget = args.budget
        elif env:
            try:
                self.budget = int(env)
            except ValueError:
                raise UsageError(f"{BUDGET_ENV} must be an integer, got {env!r}")
        else:
            self.budget = DEFAULT_BUDGET
        if self.budget <= 0:
            raise UsageError("--budget must be positive")

    def charge(self, what: str, units: int) -> None:
        if units > self.budget:
            raise UsageError(f"{what} needs about {units} work units, over the budget of {self.budget}; raise --budget")


def _order(n: int) -> int:
    return 2 ** n * factorial(n)


# -- subcommands ---------------------------------------------------------------------
def cmd_phi(ctx: Context, a) -> Report:
    from .group import CycleType, SignedPermutation, cycle_type, minimal_nonmixing_factorization, phi, reflection_lengths
    from .partitions import EMPTY

    rep = Report("phi")
    if a.word is not None:
        s = SignedPermutation(a.word)
        t = cycle_type(s)
        rep.parameters["word"] = s
        lengths = reflection_lengths(s)
        factors = minimal_nonmixing_factorization(s)
        counts = (sum(1 for r in factors if r.kind == "long"), sum(1 for r in factors if r.kind == "short"))
        rep.add("cycle_type", True, t)
        rep.add("reflection_lengths", counts == lengths, {"long": lengths[0], "short": lengths[1]})
    else:
        t = CycleType(a.rho_plus or EMPTY, a.rho_minus or EMPTY, "reduced")
        rep.add("cycle_type", True, t)
    if a.qp is None and a.qm is None:
        value = phi(t)
    else:
        if a.qp is None or a.qm is None:
            raise UsageError("give both --qp and --qm, or neither for the symbolic value")
        rep.parameters.update(qp=a.qp, qm=a.qm)
        value = phi(t, a.qp, a.qm)
    rep.add("phi", True, {"value": value, "text": str(value)})
    return rep


def cmd_classify(ctx: Context, a) -> Report:
    from .chars import classify, gram_psd, scan_coefficients

    rep = Report("classify", {"qp": a.qp, "qm": a.qm, "bound": a.bound, "scan": a.scan, "gram": a.gram})
    res = classify(a.qp, a.qm, a.bound)
    ev = {"verdict": res.verdict}
    if res.verdict == "extreme":
        ev.update(M=res.M, N=res.N, eps=res.eps)
    if res.witness is not None:
        ev.update(witness={"lambda_plus": list(res.witness[0]), "lambda_minus": list(res.witness[1])},
                  witness_value=res.witness_value)
    rep.add("classification", True, ev)
    neg = scan_coefficients(a.qp, a.qm, a.scan)
    if res.positive_definite:
        rep.add("coefficient_scan", not neg, {"negative_found": bool(neg)})
    elif neg:
        rep.add("coefficient_scan", True, {"negative_found": True, "size": neg[0][0][0].size + neg[0][0][1].size})
    else:
        rep.add("coefficient_scan", None, {"negative_found": False, "note": "no witness within the scan size"})
    if a.gram:
        ctx.charge("gram", _order(a.gram) ** 2)
        psd = all(gram_psd(k, a.qp, a.qm, allow_large=True) for k in range(1, a.gram + 1))
        if res.positive_definite:
            rep.add("gram_ldlt", psd, {"psd": psd, "max_rank": a.gram})
        elif not psd:
            rep.add("gram_ldlt", True, {"psd": False, "max_rank": a.gram})
        else:
            rep.add("gram_ldlt", None, {"psd": True, "max_rank": a.gram, "note": "witness needs a larger rank"})
    return rep


def cmd_classify_a(ctx: Context, a) -> Report:
    from .chars import classify_A

    res = classify_A(a.q, a.bound)
    rep = Report("classify-a", {"q": a.q, "bound": a.bound})
    ev = {"positive_definite": res.positive_definite}
    if res.witness is not None:
        ev.update(witness=list(res.witness), witness_value=res.witness_value)
    rep.add("classification", True, ev)
    return rep


def cmd_expand(ctx: Context, a) -> Report:
    from .chars import rozklad_report

    ctx.charge("expand", _order(a.n) * 20)
    rep = Report("expand", {"n": a.n, "normalized": not a.literal})
    for n in range(1, a.n + 1):
        r = rozklad_report(n, normalized=not a.literal)
        ev = {"classes": r.classes, "irreps": r.irreps}
        if r.mismatches:
            key, lhs, rhs = r.mismatches[0]
            ev["first_mismatch"] = {"class": key, "expansion": lhs, "phi": rhs, "count": len(r.mismatches)}
        rep.add(f"expansion_n{n}", r.ok, ev)
    return rep


def cmd_chartable(ctx: Context, a) -> Report:
    from .chars import character_table_B, column_orthogonality

    ctx.charge("chartable", _order(a.n))
    irreps, classes, table = character_table_B(a.n)
    rep = Report("chartable", {"n": a.n})
    labels = [f"({','.join(map(str, t.rho_plus))};{','.join(map(str, t.rho_minus))})" for t in classes]
    rows = []
    for lam, row in zip(irreps, table):
        rows.append([f"({','.join(map(str, lam[0]))};{','.join(map(str, lam[1]))})"] + list(row))
    rep.table("characters", ["irrep"] + labels, rows)
    rep.add("table", True, {"classes": labels, "rows": rows})
    rep.add("column_orthogonality", column_orthogonality(a.n))
    return rep


def cmd_gram(ctx: Context, a) -> Report:
    from .chars import classify, gram_psd, isotypic_quadratic_form

    ctx.charge("gram", _order(a.n) ** 2)
    rep = Report("gram", {"n": a.n, "qp": a.qp, "qm": a.qm, "backend": BACKEND})
    psd = gram_psd(a.n, a.qp, a.qm, allow_large=True)
    ev: Dict = {"psd": psd, "size": _order(a.n)}
    if not psd:
        res = classify(a.qp, a.qm)
        if res.witness is not None and res.witness[0].size + res.witness[1].size == a.n:
            ev["isotypic_certificate"] = {
                "lambda_plus": list(res.witness[0]),
                "lambda_minus": list(res.witness[1]),
                "quadratic_form": isotypic_quadratic_form(res.witness, a.qp, a.qm),
            }
    rep.add("psd", psd, ev)
    return rep


def cmd_factorize(ctx: Context, a) -> Report:
    from .group import (
        SignedPermutation,
        bfs_reflection_length,
        enumerate_group,
        factorization_identity,
        is_nonmixing,
        minimal_nonmixing_factorization,
        product,
        reflection_lengths,
    )

    rep = Report("factorize")

    def check(s: SignedPermutation):
        factors = minimal_nonmixing_factorization(s)
        counts = (sum(1 for r in factors if r.kind == "long"), sum(1 for r in factors if r.kind == "short"))
        return factors, product(factors, s.n) == s, counts == reflection_lengths(s), is_nonmixing(s, factors)

    if a.word is not None or a.cycles is not None:
        if a.word is not None:
            s = SignedPermutation(a.word)
        else:
            if a.n is None:
                raise UsageError("--cycles needs --n")
            s = SignedPermutation.from_cycles(a.n, json.loads(a.cycles))
        rep.parameters["word"] = s
        factors, prod_ok, count_ok, nm = check(s)
        rep.add("factors", True, factors)
        rep.add("product", prod_ok)
        rep.add("counts", count_ok, {"long": reflection_lengths(s)[0], "short": reflection_lengths(s)[1]})
        rep.add("non_mixing", nm)
        if s.n <= 4:
            rep.add("minimal_bfs", bfs_reflection_length(s) == len(factors), {"length": len(factors)})
    elif a.all is not None:
        ctx.charge("factorize --all", _order(a.all))
        rep.parameters["all"] = a.all
        for n in range(1, a.all + 1):
            bad = None
            for s in enumerate_group(n):
                _, p, c, nm = check(s)
                if not (p and c and nm):
                    bad = s
                    break
            rep.add(f"all_elements_n{n}", bad is None, {"elements": _order(n), "first_failure": bad})
    elif a.identity is not None:
        ctx.charge("factorize --identity", _order(a.identity) * 64)
        rep.parameters["identity"] = a.identity
        for n in range(1, a.identity + 1):
            r = factorization_identity(n)
            rep.add(f"identity_n{n}", r.equal, {"terms": len(r.lhs.items()), "reversed_order_equal": r.equal_reversed})
    else:
        raise UsageError("factorize needs --word, --cycles, --all or --identity")
    return rep


def cmd_schur_weyl(ctx: Context, a) -> Report:
    from .schur_weyl import BudgetExceeded, RepConfig, all_configs, verify

    if a.all:
        cfgs = list(all_configs(4, 3))
    else:
        if None in (a.M, a.N, a.n):
            raise UsageError("schur-weyl needs --M, --N and --n (or --all)")
        try:
            cfgs = [RepConfig(a.M, a.N, a.eps, a.n)]
        except ValueError as exc:
            raise UsageError(str(exc))
    rep = Report("schur-weyl", {"all": a.all} if a.all else {"M": a.M, "N": a.N, "eps": a.eps, "n": a.n})
    for c in cfgs:
        ctx.charge("schur-weyl", c.dim * _order(c.n))
        try:
            r = verify(c, seed=ctx.seed, max_dim=ctx.budget)
        except BudgetExceeded as exc:
            raise UsageError(str(exc))
        rep.add(f"M{c.M}_N{c.N}_eps{c.eps:+d}_n{c.n}", r.ok,
                {"homomorphism": r.homomorphism, "character": r.character, "sign_forms": r.sign_forms})
    return rep


def cmd_hirai(ctx: Context, a) -> Report:
    from .chars import hirai_degenerate_matches_phi, hirai_matches_phi

    rep = Report("hirai", {"n_max": a.n_max})
    if a.all:
        for M, N, e in ((1, 1, 1), (1, 1, -1), (2, 1, 1), (2, 1, -1), (3, 2, 1)):
            rep.add(f"extreme_M{M}_N{N}_eps{e:+d}", hirai_matches_phi(M, N, e, a.n_max))
        for qm in (Fraction(0), Fraction(1, 2), Fraction(-1, 2)):
            rep.add(f"degenerate_qm{rational(qm)}", hirai_degenerate_matches_phi(qm, a.n_max))
    elif a.degenerate is not None:
        rep.parameters["qm"] = a.degenerate
        if abs(a.degenerate) > 1:
            raise UsageError("the degenerate family needs |qm| <= 1")
        rep.add("degenerate", hirai_degenerate_matches_phi(a.degenerate, a.n_max))
    else:
        if a.M is None or a.N is None or a.M + a.N < 1:
            raise UsageError("hirai needs --M and --N with M+N >= 1, --degenerate QM, or --all")
        rep.parameters.update(M=a.M, N=a.N, eps=a.eps)
        rep.add("extreme", hirai_matches_phi(a.M, a.N, a.eps, a.n_max))
    return rep


def cmd_pairpart(ctx: Context, a) -> Report:
    from . import pairpart as pp
    from .moments import double_factorial

    rep = Report("pairpart")
    if a.blocks is not None:
        if a.n is None:
            raise UsageError("--blocks needs --n")
        try:
            p = pp.from_json(a.n, json.loads(a.blocks))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad pair partition: {exc}")
        rep.parameters.update(n=a.n, blocks=p)
        st = p.stats()
        dec = pp.decompose(p)
        h = pp.hat(p)
        rep.add("epsilon", True, "".join(p.epsilon()))
        rep.add("hat", h.is_noncrossing() and not h.covers_singleton(), h.blocks())
        rep.add("statistics", True, {"c": st.c, "c_minus": st.c_minus, "l_c": st.l_c, "l_sc": st.l_sc})
        rep.add("decomposition", dec.stats() == st, {
            "cycles": [{"sign": c.sign, "length": c.length} for c in dec.cycles],
            "semi_cycles": [{"length": s.length, "l_minus": s.l_minus, "r_minus": s.r_minus,
                             "l_plus": s.l_plus, "r_plus": s.r_plus} for s in dec.semi_cycles],
        })
        rep.add("tensor_order", True, pp.tensor_output_order(p))
        rep.add("weight", True, pp.weight(p))
    elif a.count is not None:
        ctx.charge("pairpart --count", 2 ** a.count * double_factorial(2 * a.count - 1))
        rep.parameters["count"] = a.count
        for n in range(1, a.count + 1):
            got = len(pp.enumerate_partitions(2 * n, perfect=True))
            want = 2 ** n * double_factorial(2 * n - 1)
            rep.add(f"perfect_symmetric_2n{2 * n}", got == want, {"count": got, "expected": want})
    elif a.eps is not None:
        eps = pp.parse_epsilon(a.eps)
        n = len(eps)
        rep.parameters["eps"] = "".join(eps)
        ps = pp.enumerate_partitions(n, eps=eps)
        rep.add("partitions", True, [{"blocks": p, "weight": pp.weight(p)} for p in ps])
    else:
        raise UsageError("pairpart needs --blocks, --count or --eps")
    return rep


def cmd_fock_verify(ctx: Context, a) -> Report:
    from . import fock

    checks = ["prop1", "annihilate", "adjoint", "commutation", "exclusion", "formula101", "gaussian"]
    chosen = checks if a.check == "all" else [a.check]
    rep = Report("fock-verify", {"d": a.d, "max_level": a.max_level, "word_length": a.word_length, "check": a.check})
    ctx.charge("fock level", a.d ** (2 * (a.max_level + 1)) * _order(a.max_level + 1))
    ctx.charge("fock words", a.d ** (2 * a.word_length) * 2 ** a.word_length)
    if "prop1" in chosen:
        for n in range(1, a.max_level + 2):
            rep.add(f"prop1_n{n}", fock.prop1_check(n))
    if "annihilate" in chosen:
        ok = True
        try:
            import random

            rng = random.Random(ctx.seed)
            x, y = fock.random_vector(a.d, rng), fock.random_vector(a.d, rng)
            for n in range(1, a.max_level + 2):
                for t in fock.level_basis(n, a.d):
                    fock.annihilate(x, y, fock.FockVector.basis(a.d, t))
        except fock.RouteMismatch:
            ok = False
        rep.add("annihilate_routes", ok, {"levels": a.max_level + 1})
    if "adjoint" in chosen:
        rep.add("adjoint", fock.adjoint_check(a.d, a.max_level, seed=ctx.seed))
    if "commutation" in chosen:
        rep.add("commutation", fock.commutation_check(a.d, a.max_level, seed=ctx.seed))
        rep.add("gamma_is_beta_bstar", fock.gamma_equals_beta_bstar(a.d, min(a.max_level, 2), seed=ctx.seed))
    if "exclusion" in chosen:
        pairs = [(a.M, a.N)] if a.M is not None and a.N is not None else [(M, N) for M in (1, 2, 3) for N in (1, 2)]
        for M, N in pairs:
            r = fock.exclusion_check(M, N)
            ok = r["positive_through_M"] and r["zero_at_M_plus_1"] and r["matches_product"]
            rep.add(f"exclusion_M{M}_N{N}", ok, {"norms": r["norms"]})
    if "formula101" in chosen:
        ok, count = fock.formula101_check(a.word_length, a.d, seed=ctx.seed)
        rep.add("formula101", ok, {"words": count})
    if "gaussian" in chosen:
        from .moments import jacobi_moments

        ok = all(fock.gaussian_moment_operator(k) == jacobi_moments(k) for k in range(0, 2 * a.word_length + 1))
        rep.add("gaussian_moments", ok, {"max_moment": 2 * a.word_length})
    return rep


def cmd_moments(ctx: Context, a) -> Report:
    from . import moments as mo
    from .moments import ROUTES

    if a.max > 12:
        raise UsageError("--max is limited to 12")
    routes = ROUTES if a.routes == "all" else tuple(r.strip() for r in a.routes.split(","))
    for r in routes:
        if r not in ROUTES:
            raise UsageError(f"unknown route {r!r}; choose from {', '.join(ROUTES)}")
    if "wick" in routes:
        ctx.charge("wick route", 2 ** (a.max // 2) * mo.double_factorial(a.max - 1))
    rep = Report("moments", {"max": a.max, "routes": list(routes)})
    cc = mo.cross_check(a.max, routes)
    rows = []
    for row in cc.rows:
        rep.add(f"m{row.two_n}", row.equal, {"value": row.routes[routes[0]], "first_difference": row.first_difference})
        for r in routes:
            for mono in row.routes[r].to_monomials():
                rows.append([row.two_n, r, mono["e_qp"], mono["e_qm"], mono["num"], mono["den"]])
    rep.table("moments", ["two_n", "route", "e_qp", "e_qm", "num", "den"], rows)
    if a.specializations:
        ctx.charge("specializations", 2 ** a.specializations * mo.double_factorial(2 * a.specializations - 1))
        spec_rows = []
        for s in mo.specializations(a.specializations):
            rep.add(f"specializations_n{s.n}", s.ok, s)
            spec_rows.append([s.n, s.semicircle, s.value_22, s.expected_22, s.value_20, s.expected_20,
                              s.total_count, s.expected_count, " ".join(map(str, s.drake["cycles"]))])
        rep.table("specializations", ["n", "semicircle", "x2y2", "expected_x2y2", "x2y0", "expected_x2y0",
                                      "count", "expected_count", "drake"], spec_rows)
    if a.hankel:
        for M in (1, 2, 3):
            for N in (1, 2):
                h = mo.hankel_check(M, N)
                rep.add(f"hankel_M{M}_N{N}", h.ok, {"order_M_plus_1": h.det_M1, "order_M_plus_2": h.det_M2})
    return rep


def cmd_typed(ctx: Context, a) -> Report:
    from . import type_d as D

    rep = Report("typed")
    if a.q is not None:
        rep.parameters.update(q=a.q, scan=a.scan)
        res = D.classify_D(a.q, a.bound)
        ev = {"verdict": res.verdict, "N": res.N}
        if res.witness is not None:
            ev.update(witness={"lambda": list(res.witness[0]), "mu": list(res.witness[1])}, witness_value=res.witness_value)
        rep.add("classification", True, ev)
        neg = D.scan_D(a.q, a.scan, first_only=True)
        if res.positive_definite or neg:
            rep.add("coefficient_scan", res.positive_definite == (not neg), {"negative_found": bool(neg)})
        else:
            rep.add("coefficient_scan", None, {"negative_found": False, "note": "no witness within the scan size"})
        rep.add("type_b_consistency", D.b_consistent(res), {"b_verdict": res.b_result.verdict,
                                                            "M": res.b_result.M, "N": res.b_result.N})
    elif a.classes is not None:
        ctx.charge("typed --classes", _order(a.classes) * 40)
        rep.parameters["classes"] = a.classes
        cl = D.classes_D(a.classes)
        rep.add("classes", sum(c.size for c in cl) == _order(a.classes) // 2,
                [{"label": c.label(), "size": c.size, "representative": c.representative} for c in cl])
        rep.add("splitting_rule", D.splitting_matches_rule(a.classes))
    else:
        raise UsageError("typed needs --q or --classes")
    return rep


COMMANDS: Dict[str, Callable] = {
    "phi": cmd_phi,
    "classify": cmd_classify,
    "classify-a": cmd_classify_a,
    "expand": cmd_expand,
    "chartable": cmd_chartable,
    "gram": cmd_gram,
    "factorize": cmd_factorize,
    "schur-weyl": cmd_schur_weyl,
    "hirai": cmd_hirai,
    "pairpart": cmd_pairpart,
    "fock-verify": cmd_fock_verify,
    "moments": cmd_moments,
    "typed": cmd_typed,
}


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                     help="write the JSON report")
    fmt.add_argument("--csv", action="store_true", default=argparse.SUPPRESS if suppress else False,
                     help="write CSV (tables where the command has them)")
    p.add_argument("--out", default=d, help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS if suppress else 0, help="random seed")
    p.add_argument("--budget", type=int, default=d,
                   help=f"work-unit cap (default {DEFAULT_BUDGET}, or ${BUDGET_ENV})")
    p.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="omit the timing field from JSON")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperoct", description="Signed reflection functions on hyperoctahedral groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        _global_flags(sp, suppress=True)
        return sp

    p = add("phi", "phi on an element or a cycle type")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", type=_int_list, help="window notation, e.g. -2,-4,-5,1,3,6")
    g.add_argument("--rho-plus", type=_partition)
    p.add_argument("--rho-minus", type=_partition)
    p.add_argument("--qp", type=_rational)
    p.add_argument("--qm", type=_rational)

    p = add("classify", "positive definiteness of phi on B(infinity)")
    p.add_argument("--qp", type=_rational, required=True)
    p.add_argument("--qm", type=_rational, required=True)
    p.add_argument("--bound", type=int, default=12, help="witness search size")
    p.add_argument("--scan", type=int, default=8, help="coefficient scan size")
    p.add_argument("--gram", type=int, default=3, help="Gram check up to this rank (0 to skip)")

    p = add("classify-a", "type A reflection function q^(n - #cycles)")
    p.add_argument("--q", type=_rational, required=True)
    p.add_argument("--bound", type=int, default=12)

    p = add("expand", "expansion of phi in irreducible characters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--literal", action="store_true", help="use the content products without hook normalization")

    p = add("chartable", "character table of B(n)")
    p.add_argument("--n", type=int, required=True)

    p = add("gram", "exact PSD test of the Gram matrix on B(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--qp", type=_rational, required=True)
    p.add_argument("--qm", type=_rational, required=True)

    p = add("factorize", "minimal non-mixing reflection factorizations")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--word", type=_int_list)
    g.add_argument("--cycles", help='JSON list of cycles, e.g. "[[1,-2,4],[3,-5,-3,5]]"')
    g.add_argument("--all", type=int, metavar="N", help="check every element of B(1..N)")
    g.add_argument("--identity", type=int, metavar="N", help="group algebra identity for B(1..N)")
    p.add_argument("--n", type=int)

    p = add("schur-weyl", "the tensor representation realizing phi")
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--all", action="store_true", help="all M+N <= 4, eps = +-1, n <= 3")

    p = add("hirai", "compare with the Hirai-Hirai extreme characters")
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--degenerate", type=_rational, metavar="QM")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--all", action="store_true")

    p = add("pairpart", "symmetric pair partitions, hat matchings, cycles")
    p.add_argument("--n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--blocks", help="JSON blocks, negative integers for barred points")
    g.add_argument("--count", type=int, metavar="N")
    g.add_argument("--eps", help="word over {*,1}, e.g. '**1'")

    p = add("fock-verify", "identities on the cyclic Fock space")
    p.add_argument("--check", default="all",
                   choices=("all", "prop1", "annihilate", "adjoint", "commutation", "exclusion", "formula101", "gaussian"))
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--max-level", type=int, default=3)
    p.add_argument("--word-length", type=int, default=5)
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)

    p = add("moments", "moment routes, specializations and Hankel checks")
    p.add_argument("--max", type=int, default=10)
    p.add_argument("--routes", default="all")
    p.add_argument("--specializations", type=int, default=0, metavar="N")
    p.add_argument("--hankel", action="store_true")

    p = add("typed", "type D restriction")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--q", type=_rational)
    g.add_argument("--classes", type=int, metavar="N")
    p.add_argument("--scan", type=int, default=8)
    p.add_argument("--bound", type=int, default=12)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required (see --help)")
        ctx = Context(args)
        start = time.perf_counter()
        report = COMMANDS[args.command](ctx, args)
        report.seconds = time.perf_counter() - start
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        text = report.to_json(timing=not args.no_timing)
    elif args.csv:
        text = report.to_csv()
    else:
        text = report.to_text()
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 1 if report.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
