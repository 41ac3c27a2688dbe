"""Power moments, the Griesmer bound, and the table-verification harness."""

import csv
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import ceil

from .bch import C, C_TILDE, bose_distance, build_code
from .cyclotomic import closed_form_leader, coset_table
from .errors import (
    BCHError,
    BudgetExceeded,
    MalformedReference,
    NonIntegerSolution,
    SingularSystem,
    UnsupportedM,
)
from .tables import (
    PARAM_TABLES,
    WORKED_EXAMPLES,
    m3_conjecture,
    table_for,
    worked_example,
)
from .weights import (
    DEFAULT_BUDGET,
    _check_budget,
    dual_generator_matrix,
    dual_min_distance,
    enumeration_work,
    macwilliams,
    matrix_weight_distribution,
    secret_sharing_ratio_holds,
    weight_distribution,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped(budget)"
SCOPES = ("lemmas", "weight-tables", "param-tables", "examples", "charsums", "duals")

LEMMA_QS = (2, 3, 4, 5, 7, 8, 9)
LEMMA_CAP = 10**7
DELTA2_GRID = ((2, 4), (2, 5), (2, 6), (2, 7), (3, 3), (3, 4), (3, 5))
DELTA3_GRID = ((2, 4), (2, 5), (2, 6), (3, 4), (3, 5))
CHARSUM_GRID = ((3, 3), (3, 4), (3, 5), (5, 3))
CENSUS_GRID = ((3, 4), (3, 5))
GAUSS_QS = (3, 5, 7, 11, 13)
DUAL_EXPECTED = {
    # (delta index, variant): (odd m, even m)
    (2, C_TILDE): (5, 3),
    (3, C_TILDE): (7, 5),
    (3, C): (8, 6),
}
GRIESMER_QS = (2, 3, 4)
GRIESMER_MAX_M = 6
M3_QS = (3, 4, 5)


# ---------------------------------------------------------------------------
# power moments and bounds


def moment_rhs(n, q, k):
    """Right-hand sides of the first three power moments for dual distance >= 3."""
    return (
        q**k - 1,
        q ** (k - 1) * n * (q - 1),
        q ** (k - 2) * n * (q - 1) * (n * (q - 1) + 1),
    )


def _solve3(A, b):
    A = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(3):
        piv = next((r for r in range(c, 3) if A[r][c] != 0), None)
        if piv is None:
            raise SingularSystem("moment system is singular")
        A[c], A[piv] = A[piv], A[c]
        for r in range(3):
            if r != c and A[r][c]:
                f = A[r][c] / A[c][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[r][3] / A[r][r] for r in range(3)]


def pless_solve(n, q, k, weights):
    """Counts [A_w1, A_w2, A_w3] of a three-weight code from the power moments."""
    w = list(weights)
    if len(w) != 3:
        raise ValueError("exactly three weights are required")
    if len(set(w)) != 3:
        raise SingularSystem(f"weights must be distinct, got {w}")
    A = [[1, 1, 1], w, [x * x for x in w]]
    sol = _solve3(A, moment_rhs(n, q, k))
    if any(s.denominator != 1 or s < 0 for s in sol):
        raise NonIntegerSolution(f"moment solution {sol} is not a nonnegative integer vector")
    return [int(s) for s in sol]


def griesmer_sum(k, d, q):
    return sum(ceil(Fraction(d, q**i)) for i in range(k))


def griesmer_check(n, k, d, q):
    """Compare n with the Griesmer sum of ceil(d / q^i), i < k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    g = griesmer_sum(k, d, q)
    return {"meets": g == n, "exceeds_bound_impossible": g > n, "slack": n - g,
            "griesmer_sum": g}


# ---------------------------------------------------------------------------
# report


@dataclass
class CheckResult:
    check_id: str
    params: dict
    expected: object
    measured: object
    status: str
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def to_json(self):
        out = asdict(self)
        if not out["notes"]:
            del out["notes"]
        return out


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)

    def add(self, result):
        self.results.append(result)

    def extend(self, other):
        self.results.extend(other.results)

    @property
    def ok(self):
        return all(r.status != FAIL for r in self.results)

    def exit_code(self):
        return 0 if self.ok else 1

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.results:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def find(self, check_id, **params):
        return [r for r in self.results
                if r.check_id == check_id
                and all(r.params.get(k) == v for k, v in params.items())]

    def to_json(self, timing=True):
        rows = [r.to_json() for r in self.results]
        if not timing:
            for row in rows:
                row.pop("seconds")
        return rows

    def dumps(self, timing=True):
        return json.dumps(self.to_json(timing), indent=1, sort_keys=True)

    def to_markdown(self):
        lines = ["| check | params | status | expected | measured | s |",
                 "|---|---|---|---|---|---:|"]
        for r in self.results:
            p = ", ".join(f"{k}={v}" for k, v in r.params.items() if v is not None)
            lines.append(f"| {r.check_id} | {p} | {r.status} | {_short(r.expected)} "
                         f"| {_short(r.measured)} | {r.seconds:.2f} |")
        c = self.counts()
        lines.append("")
        lines.append(f"{c[PASS]} pass, {c[FAIL]} fail, {c[SKIPPED]} skipped")
        return "\n".join(lines) + "\n"


def _short(value, limit=80):
    text = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
    return text if len(text) <= limit else text[: limit - 3] + "..."


def _params(q=None, m=None, delta=None, variant=None, **extra):
    out = {"q": q, "m": m, "delta": delta, "variant": variant}
    out.update(extra)
    return out


def _run(report, check_id, params, fn):
    """Run ``fn() -> (expected, measured, ok[, notes])`` and record the outcome."""
    t0 = time.perf_counter()
    try:
        res = fn()
    except BudgetExceeded as exc:
        report.add(CheckResult(check_id, params, None, None, SKIPPED,
                               round(time.perf_counter() - t0, 4),
                               {"required": exc.required, "budget": exc.budget}))
        return None
    except (BCHError, AssertionError) as exc:
        report.add(CheckResult(check_id, params, None, f"{type(exc).__name__}: {exc}", FAIL,
                               round(time.perf_counter() - t0, 4)))
        return None
    expected, measured, ok = res[:3]
    notes = res[3] if len(res) > 3 else {}
    result = CheckResult(check_id, params, expected, measured, PASS if ok else FAIL,
                         round(time.perf_counter() - t0, 4), notes)
    report.add(result)
    return result


def _dist_json(dist):
    return {str(w): c for w, c in dist.counts.items()}


# ---------------------------------------------------------------------------
# scopes


def check_lemmas(report, qs=LEMMA_QS, cap=LEMMA_CAP):
    for q in qs:
        m = 2
        while q**m - 1 <= cap:
            table = coset_table(q, m, cap=cap)
            for k in (1, 2, 3):
                def fn(k=k, m=m, table=table):
                    if k > len(table.leaders):
                        scanned = None
                    else:
                        scanned = [table.leaders[-k], table.sizes[-k]]
                    try:
                        closed = list(closed_form_leader(k, q, m))
                    except UnsupportedM:
                        return "excluded", scanned, k == 3 and m == 2
                    return closed, scanned, closed == scanned
                _run(report, f"lemma/leader{k}", _params(q, m), fn)
            m += 1
    return report


def _enumerate(code, budget, cache_dir, workers):
    return weight_distribution(code, budget=budget, cache_dir=cache_dir, workers=workers)


def _code_params(code):
    return _params(code.q, code.m, code.delta, code.variant)


def check_weight_tables(report, budget=DEFAULT_BUDGET, cache_dir=None, workers=1,
                        delta2_grid=DELTA2_GRID, delta3_grid=DELTA3_GRID):
    from .trace import TraceCodeSpec, trace_weight_distribution

    families = {(2, C_TILDE): "delta2", (2, C): "delta2-full",
                (3, C_TILDE): "delta3", (3, C): "delta3-full"}
    for index, grid in ((2, delta2_grid), (3, delta3_grid)):
        for q, m in grid:
            table = table_for(q, m, index)
            for variant in (C_TILDE, C):
                code = build_code(q, m, f"auto{index}", variant)
                params = _code_params(code)
                holder = {}

                def enum(code=code):
                    if "dist" not in holder:
                        holder["dist"] = _enumerate(code, budget, cache_dir, workers)
                    return holder["dist"]

                if variant == C_TILDE and table is not None:
                    def fn(table=table, enum=enum):
                        exp = table.evaluate(q, m)
                        got = enum()
                        return _dist_json(exp), _dist_json(got), exp == got
                    _run(report, f"weights/{table.identifier}", params, fn)

                    def pless(table=table, code=code):
                        exp = table.evaluate(q, m)
                        if len(exp.weights) != 3:
                            return "n/a", "n/a", True
                        solved = pless_solve(code.n, q, code.k, exp.weights)
                        want = [exp[w] for w in exp.weights]
                        return want, solved, solved == want
                    if index == 2:
                        _run(report, "pless/three-weight", params, pless)

                def equiv(code=code, variant=variant, enum=enum):
                    spec = TraceCodeSpec(q, m, families[index, variant])
                    _check_budget(q, code.k, code.n, budget)
                    tdist, mult = trace_weight_distribution(spec, budget=budget, workers=workers)
                    got = enum()
                    return _dist_json(got), _dist_json(tdist), tdist == got, {"multiplicity": mult}
                _run(report, "equivalence/trace-form", params, equiv)

                def bounds(code=code, enum=enum):
                    dist = enum()
                    d = dist.min_weight
                    out = {"d": d, "delta": code.delta, "bch_bound": d >= code.delta}
                    ok = out["bch_bound"]
                    if variant == C:
                        out["bose"] = bose_distance(code)
                        out["charpin"] = d <= out["bose"] + 4
                        ok = ok and out["charpin"]
                    return "d >= delta and d <= d_B + 4", out, ok
                _run(report, "bounds/bch-charpin", params, bounds)

                if variant == C_TILDE and m >= 5:
                    def ratio(enum=enum):
                        dist = enum()
                        lo, hi = dist.min_weight, dist.max_weight
                        holds = secret_sharing_ratio_holds(lo, hi, q)
                        return f"w_min/w_max > {q - 1}/{q}", {"w_min": lo, "w_max": hi,
                                                              "holds": holds}, holds
                    _run(report, "secret-sharing/ratio", params, ratio)
    return report


def check_param_tables(report, budget=DEFAULT_BUDGET, cache_dir=None, workers=1):
    for name, rows in PARAM_TABLES.items():
        for row in rows:
            code = build_code(row.q, row.m, row.delta, row.variant)
            params = _code_params(code)

            def fn(row=row, code=code):
                dist = _enumerate(code, budget, cache_dir, workers)
                exp = [row.n, row.k, row.d]
                got = [code.n, code.k, dist.min_weight]
                return exp, got, exp == got, ({"correction": row.note} if row.note else {})
            _run(report, f"params/{name}", params, fn)
    check_griesmer(report, budget, cache_dir, workers)
    check_m3_conjecture(report, budget, cache_dir, workers)
    return report


def check_griesmer(report, budget=DEFAULT_BUDGET, cache_dir=None, workers=1):
    for q in GRIESMER_QS:
        for m in range(2, GRIESMER_MAX_M + 1):
            delta1 = closed_form_leader(1, q, m)[0]
            if delta1 < 2:
                continue
            for variant, k, d in ((C_TILDE, m, delta1 + 1), (C, m + 1, delta1)):
                code = build_code(q, m, delta1, variant)

                def fn(code=code, k=k, d=d):
                    dist = _enumerate(code, budget, cache_dir, workers)
                    got = [code.n, code.k, dist.min_weight]
                    g = griesmer_check(*got, q)
                    return [code.n, k, d], got, got == [code.n, k, d] and g["meets"], g
                _run(report, "griesmer/delta1", _code_params(code), fn)


def check_m3_conjecture(report, budget=DEFAULT_BUDGET, cache_dir=None, workers=1):
    """Experiment only: the status is pass once both distances are measured."""
    for q in M3_QS:
        delta, d_tilde, d = m3_conjecture(q)

        def fn(q=q, delta=delta, d_tilde=d_tilde, d=d):
            got = {}
            for variant in (C_TILDE, C):
                code = build_code(q, 3, delta, variant)
                dist = _enumerate(code, budget, cache_dir, workers)
                got[variant] = {"k": code.k, "d": dist.min_weight}
            exp = {C_TILDE: {"k": 7, "d": d_tilde}, C: {"k": 8, "d": d}}
            return exp, got, True, {"conjecture_matches": got == exp}
        _run(report, "experiment/m3-conjecture", _params(q, 3, delta, None), fn)


def check_examples(report, budget=DEFAULT_BUDGET, cache_dir=None, workers=1):
    for q, m in WORKED_EXAMPLES:
        code = build_code(q, m, "auto3", C_TILDE)

        def fn(q=q, m=m, code=code):
            exp = worked_example(q, m)
            got = _enumerate(code, budget, cache_dir, workers)
            return exp.enumerator(), got.enumerator(), exp == got
        _run(report, "example/enumerator", _code_params(code), fn)
    return report


def check_charsums(report, budget=DEFAULT_BUDGET):
    from .trace import (
        TraceCodeSpec,
        character_identity_holds,
        charsum_check,
        exponent_congruence_check,
        gauss_closed_form,
        gauss_sum,
        legendre,
        min_weight_census,
        scaled_gauss,
        structure_facts,
    )

    for q in GAUSS_QS:
        def g(q=q):
            got, exp = gauss_sum(q), gauss_closed_form(q)
            rel = abs(got - exp) / abs(exp)
            return [exp.real, exp.imag], [got.real, got.imag], rel < 1e-9, {"relative_error": rel}
        _run(report, "gauss/closed-form", _params(q), g)

        def scaled(q=q):
            base = gauss_sum(q)
            worst = max(abs(scaled_gauss(q, a) - legendre(a, q) * base) for a in range(1, q))
            return "G(eta, chi_a) = eta(a) G(eta, chi_1)", {"max_abs_error": worst}, worst < 1e-9 * q**0.5
        _run(report, "gauss/scaled", _params(q), scaled)

    for q, m in CHARSUM_GRID:
        spec = TraceCodeSpec(q, m)

        def cs(spec=spec):
            _check_budget(q, 2 * m, q**m - 1, budget, "pairwise weights")
            rep = charsum_check(spec)
            return "closed form = direct sum = enumeration", rep, rep["ok"]
        _run(report, "charsum/three-way", _params(q, m, None, None, family="delta2"), cs)

        def facts(q=q, m=m):
            rep = structure_facts(q, m)
            return "permutation and quadratic-character facts", rep, rep["ok"]
        _run(report, "facts/structure", _params(q, m), facts)

    for q, m in CENSUS_GRID:
        spec = TraceCodeSpec(q, m)

        def census(spec=spec, q=q, m=m):
            exp = table_for(q, m, 2).evaluate(q, m)
            rep = min_weight_census(spec)
            want = exp[exp.min_weight]
            return want, rep, rep["sets_equal"] and rep["codewords"] == want
        _run(report, "charsum/min-weight-census", _params(q, m, None, None, family="delta2"),
             census)

    for q, m in ((3, 3), (3, 4), (5, 3), (9, 3), (3, 6)):
        _run(report, "charsum/character-identity", _params(q, m),
             lambda q=q, m=m: (True, character_identity_holds(q, m),
                               character_identity_holds(q, m)))
    for q, m in ((2, 5), (3, 5), (5, 5), (2, 7), (3, 7)):
        _run(report, "charsum/exponent-congruence", _params(q, m),
             lambda q=q, m=m: (True, exponent_congruence_check(q, m),
                               exponent_congruence_check(q, m)))
    return report


def check_duals(report, budget=DEFAULT_BUDGET, cache_dir=None, workers=1):
    """Dual distances by every method that fits: dual enumeration, MacWilliams
    from the exact primary distribution, and the exhaustive low-weight search."""
    for m in (5, 6):
        for (index, variant), pair in DUAL_EXPECTED.items():
            code = build_code(2, m, f"auto{index}", variant)
            want = pair[m % 2 == 0]

            def fn(code=code, want=want):
                got = {}
                kd = code.n - code.k
                if enumeration_work(code.q, kd, code.n) <= budget:
                    G = dual_generator_matrix(code)
                    got["enumeration"] = matrix_weight_distribution(G, code.q, budget).min_weight
                dist = _enumerate(code, budget, cache_dir, workers)
                got["macwilliams"] = macwilliams(dist).min_weight
                got["search"] = dual_min_distance(code, budget, method="search")
                return want, got, all(v == want for v in got.values())
            _run(report, "dual/min-distance", _code_params(code), fn)
    return report


def verify_tables(scope="all", budget=DEFAULT_BUDGET, cache_dir=None, workers=1):
    """Run one scope (or ``'all'``) and return a VerificationReport."""
    scopes = SCOPES if scope == "all" else (scope,)
    report = VerificationReport()
    for s in scopes:
        if s == "lemmas":
            check_lemmas(report)
        elif s == "weight-tables":
            check_weight_tables(report, budget, cache_dir, workers)
        elif s == "param-tables":
            check_param_tables(report, budget, cache_dir, workers)
        elif s == "examples":
            check_examples(report, budget, cache_dir, workers)
        elif s == "charsums":
            check_charsums(report, budget)
        elif s == "duals":
            check_duals(report, budget, cache_dir, workers)
        else:
            raise ValueError(f"unknown scope {s!r}; choose from {SCOPES + ('all',)}")
    return report


# ---------------------------------------------------------------------------
# external reference


def load_reference(path):
    """Read rows ``n,k,q,best_d[,kind]``; ``kind`` may be 'optimal' or 'best-known'."""
    ref = {}
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), 1):
            row = [c.strip() for c in row]
            if not row or not any(row) or row[0].startswith("#"):
                continue
            if lineno == 1 and row[0].lower() == "n":
                continue
            if len(row) not in (4, 5):
                raise MalformedReference(f"line {lineno}: expected 4 or 5 columns, got {len(row)}")
            try:
                n, k, q, best = (int(x) for x in row[:4])
            except ValueError:
                raise MalformedReference(f"line {lineno}: non-integer field in {row}") from None
            kind = row[4] if len(row) == 5 else "optimal"
            if kind not in ("optimal", "best-known"):
                raise MalformedReference(f"line {lineno}: unknown kind {kind!r}")
            ref[(n, k, q)] = (best, kind)
    return ref


def classify(n, k, q, d, reference):
    entry = reference.get((n, k, q))
    if entry is None:
        return {"verdict": "unknown"}
    best, kind = entry
    if d >= best:
        return {"verdict": kind, "best_d": best}
    return {"verdict": "suboptimal", "best_d": best, "gap": best - d}


def reference_compare(report, reference_file):
    """Annotate every measured (n, k, d) in the report against the reference file."""
    ref = load_reference(reference_file)
    for r in report.results:
        if r.status == SKIPPED or not isinstance(r.measured, list) or len(r.measured) != 3:
            continue
        n, k, d = r.measured
        r.notes["reference"] = classify(n, k, r.params["q"], d, ref)
    return report
