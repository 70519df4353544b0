"""End-to-end acceptance checks over the bundled corpus.

Each ``criterion_*`` function returns ``(ok, detail)``.  ``run_all`` executes
them in order and collects timings.
"""

import math
import random
import time
from functools import reduce

from . import corpus
from .cluster import (
    check_intersection_formula,
    ideal_values,
    match_valuations,
    multiplicities_from_values,
)
from .constructions import (
    construct_pencil_with_dicriticals,
    construct_special_reduction,
    normal_sing_dicriticals,
    verify_reduction_2d,
)
from .core.field import QQ
from .core.laurent import AuxLaurent
from .core.poly import PolyRing
from .monomial import (
    ExtReesElement,
    MonomialIdeal,
    certify_reduction,
    ext_rees_check,
    find_element,
    find_reduction,
    rees_valuations,
    value_criterion,
    verify_power_decomposition,
)
from .oracles import gauss_shift_value, initial_form_dicriticals, power_decomposition_oracle, rank_oracle
from .pencil import DEFAULT_MAX_DEPTH, Pencil, principalize
from .valuation import INFINITY, MonomialValuation, ReesElement, gauss_eval, rees_ext_eval, staircase

NAMES = {2: ("x", "y"), 3: ("x", "y", "z")}


def _random_poly(R, rng, max_terms=3, max_exp=3):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(R.nvars))
        terms.append((e, QQ.convert(rng.choice([-5, -3, -2, -1, 1, 2, 4, 7]))))
    return R.from_terms(terms)


def _random_laurent(R, rng, support=6, low=-3, high=3):
    degrees = rng.sample(range(low, high + 1), rng.randint(1, support))
    return AuxLaurent(R, {n: _random_poly(R, rng) for n in degrees})


def _random_weights(rng, d):
    w = [rng.randint(1, 5) for _ in range(d)]
    g = reduce(math.gcd, w)
    return [x // g for x in w]


# -- 1 ---------------------------------------------------------------------------

def criterion_gauss(pairs=500, seed=1):
    rng = random.Random(seed)
    failures = []
    for k in range(pairs):
        d = rng.choice((2, 3))
        R = PolyRing(QQ, NAMES[d])
        v = MonomialValuation(_random_weights(rng, d))
        F, G = _random_laurent(R, rng), _random_laurent(R, rng)
        vf, vg = gauss_eval(v, F), gauss_eval(v, G)
        checks = {
            "product": gauss_eval(v, F * G) == vf + vg,
            "sum": gauss_eval(v, F + G) >= min(vf, vg),
            "strict sum": vf == vg or gauss_eval(v, F + G) == min(vf, vg),
            "negation": gauss_eval(v, -F) == vf,
            "unit": gauss_eval(v, F * QQ.convert(-3)) == vf,
            "zero": gauss_eval(v, F - F) == INFINITY,
        }
        nonneg = {n: f for n, f in F.components.items() if n >= 0} or {0: R.one}
        i = rng.randrange(d)
        xexp = tuple(1 if j == i else 0 for j in range(d))
        VI = v.monomial_value(xexp)
        lhs = rees_ext_eval(v, VI, ReesElement(R, nonneg))
        checks["rees shift"] = lhs == gauss_shift_value(v, VI, xexp, nonneg, R)
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            failures.append((k, bad))
    return not failures, f"{pairs} pairs, {len(failures)} failures" + (f": {failures[:3]}" if failures else "")


# -- 2 ---------------------------------------------------------------------------

def criterion_decomposition():
    ideals = corpus.normal_ideals()
    failures = []
    for I in ideals:
        for n in range(4):
            ours = verify_power_decomposition(I, n)
            oracle = power_decomposition_oracle(list(I.gens), n)
            if not (ours and oracle):
                failures.append((I.gens, n, ours, oracle))
    ok = len(ideals) >= 20 and not failures
    return ok, f"{len(ideals)} ideals x n=0..3, {len(failures)} failures"


# -- 3 ---------------------------------------------------------------------------

def criterion_find_element(seed=0):
    failures = []
    ideals = corpus.all_ideals()
    for I in ideals:
        x = find_element(I, seed=seed)
        h = len(rees_valuations(I))
        if not all(value_criterion(I, x, j) for j in range(h)):
            failures.append(I.gens)
    return not failures, f"{len(ideals)} ideals, {len(failures)} failures"


# -- 4 ---------------------------------------------------------------------------

def _dims_by_rank(I, J, n, R):
    """Ranks of the degree ``(n+1)D`` pieces of ``I^{n+1}`` and ``J I^n`` by sympy."""
    D = sum(I.gens[0])
    deg = (n + 1) * D
    big_polys = [R.monomial(g) for g in I.power_gens(n + 1)]
    small_polys = [f * R.monomial(m) for f in J for m in I.power_gens(n)]
    cols = sorted({e for p in big_polys + small_polys for e in p.terms if sum(e) == deg})
    index = {e: k for k, e in enumerate(cols)}

    def rows(polys):
        out = []
        for p in polys:
            row = [0] * len(cols)
            for e, c in p.terms.items():
                if sum(e) == deg:
                    row[index[e]] = c
            out.append(row)
        return out

    return [rank_oracle(rows(big_polys)), rank_oracle(rows(small_polys))]


def criterion_reduction(seed=0):
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens
    M2 = MonomialIdeal([(2, 0), (1, 1), (0, 2)])
    base = certify_reduction(M2, [x**2, y**2])
    problems = [] if base is not None and base["n"] == 1 else ["M^2 by (x^2, y^2)"]
    ideals = corpus.equigenerated_ideals()
    for I in ideals:
        found = find_reduction(I, seed=seed)
        J, cert = found["J"], found["certificate"]
        again = certify_reduction(I, J)
        if again != cert:
            problems.append((I.gens, "recertify"))
        if _dims_by_rank(I, J, cert["n"], J[0].ring) != cert["dims"]:
            problems.append((I.gens, "rank oracle"))
        if not all(v(f) == val for f in J for v, val in rees_valuations(I)):
            problems.append((I.gens, "values"))
    ok = not problems and len(ideals) >= 10
    return ok, f"M^2 n={base and base['n']}; {len(ideals)} ideals reduced, problems: {problems or 'none'}"


# -- 5 ---------------------------------------------------------------------------

def criterion_pencils(max_depth=DEFAULT_MAX_DEPTH):
    problems = []
    checked = 0
    entries = corpus.pencils()
    for p, oracle_applies in entries:
        report = principalize(p, max_depth)
        if report.depth_used > max_depth or not report.dicriticals:
            problems.append((str(p), "no dicriticals"))
            continue
        if oracle_applies:
            checked += 1
            ours = sorted((r.weights, r.kind) for r in report.dicriticals)
            theirs = sorted(initial_form_dicriticals(report.pencil.a, report.pencil.b))
            if ours != theirs:
                problems.append((str(p), ours, theirs))
    return not problems, f"{len(entries)} pencils, {checked} oracle comparisons, problems: {problems or 'none'}"


# -- 6 ---------------------------------------------------------------------------

def criterion_special_reduction(seed=0):
    R = PolyRing(QQ, ("x", "y"))
    _, y = R.gens
    U, n, m = [staircase((2, 3))], [1], 2
    formula = check_intersection_formula(U, n, y, m) and m * U[0](y) == 6
    t, a = construct_special_reduction(U, n, y, m, seed=seed)
    verified = verify_reduction_2d(Pencil(a, y ** (m * t)), U, n, t)
    values = ideal_values(U, n)
    back = multiplicities_from_values(U, values)
    round_trip = back is not None and [int(v) for v in back] == n and all(v.denominator == 1 for v in back)
    ok = formula and t == 1 and verified and round_trip
    return ok, f"formula={formula} t={t} a={a} verified={verified} round_trip={round_trip}"


# -- 7 ---------------------------------------------------------------------------

def criterion_normal_singularity():
    first = normal_sing_dicriticals(3, ["X", "Y"])
    ok = first["count"] == 2 and first["prime_generators"] == [["z", "x'"], ["z", "y'"]] and first["relation_ok"]
    forms = {2: ["X", "Y"], 3: ["X", "Y", "X+Y"]}
    counts = []
    for m, k in ((3, 2), (5, 3), (4, 3)):
        rep = normal_sing_dicriticals(m, forms[k])
        counts.append((m, k, rep["count"]))
        ok = ok and rep["count"] == k and rep["relation_ok"]
    return ok, f"m=3 forms X,Y -> {first['count']} {first['prime_generators']}; counts {counts}"


# -- 8 ---------------------------------------------------------------------------

def criterion_realize(seed=0):
    targets = [[(1, 1)], [(2, 3)], [(1, 1), (1, 2)]]
    problems = []
    for weights in targets:
        U = [staircase(w) for w in weights]
        p = construct_pencil_with_dicriticals(U, seed=seed)
        if not match_valuations(principalize(p).valuations(), U):
            problems.append(weights)
    special = 0
    for p, _ in corpus.pencils():
        report = principalize(p)
        if report.special:
            special += 1
            kinds = {r.kind for r in report.dicriticals}
            if not kinds <= {"sharp", "flat"}:
                problems.append((str(p), sorted(kinds)))
    return not problems, f"{len(targets)} round trips, {special} special pencils, problems: {problems or 'none'}"


# -- 9 ---------------------------------------------------------------------------

def _random_ext_element(I, rng):
    R = I.ring()
    comps = {}
    allow_negative = rng.random() < 0.3
    for n in rng.sample(range(-2 if allow_negative else 0, 4), rng.randint(1, 3)):
        if n < 0:
            comps[n] = _random_poly(R, rng)
            continue
        level = n + (1 if rng.random() < 0.5 else 0)
        total = R.zero
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(I.power_gens(level))
            extra = tuple(rng.randint(0, 1) for _ in range(I.d))
            total = total + QQ.convert(rng.randint(1, 4)) * R.monomial(tuple(a + b for a, b in zip(g, extra)))
        comps[n] = total
    return ExtReesElement(R, comps, I)


def criterion_extended_rees(samples=200, seed=2):
    rng = random.Random(seed)
    ideals = [I for I in corpus.all_ideals() if I.d == 2] + [I for I in corpus.all_ideals() if I.d == 3]
    problems, both = [], set()
    for k in range(samples):
        I = ideals[k % len(ideals)]
        f = _random_ext_element(I, rng)
        rep = ext_rees_check(f, I)
        if not rep["split_ok"] or rep.get("equivalent") is False:
            problems.append((I.gens, k))
        if "z_f_in_ext" in rep:
            both.add(rep["z_f_in_ext"])
    for I in corpus.all_ideals():
        rep = ext_rees_check(ExtReesElement(I.ring(), {0: I.ring().one}, I), I)
        if not all(item["ok"] for item in rep["w_zinv"]):
            problems.append((I.gens, "w_zinv"))
    ok = not problems and both == {True, False}
    return ok, f"{samples} elements (membership outcomes seen: {sorted(both)}), problems: {problems or 'none'}"


CRITERIA = [
    ("1 gauss extension axioms and Rees shift", criterion_gauss),
    ("2 power decomposition of normal ideals", criterion_decomposition),
    ("3 elements attaining every Rees value", criterion_find_element),
    ("4 reductions of equigenerated ideals", criterion_reduction),
    ("5 pencil dicriticals vs initial forms", criterion_pencils),
    ("6 special reduction for weights (2,3)", criterion_special_reduction),
    ("7 normal singularity z^m = f_1...f_n", criterion_normal_singularity),
    ("8 realizing prescribed dicriticals", criterion_realize),
    ("9 extended Rees algebra checks", criterion_extended_rees),
]


def run_all():
    """``[(name, ok, detail, seconds)]`` for every criterion."""
    rows = []
    for name, fn in CRITERIA:
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash counts as a failure, reported not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append((name, ok, detail, time.perf_counter() - start))
    return rows
