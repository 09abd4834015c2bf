"""Execute scenario jobs and render reports.

The structured ("records") output is line-delimited and byte-deterministic
for a fixed scenario and seed; timings appear only in text mode and only on
request.  Exit status contract: 0 iff no job failed (flagged jobs pass with
a warning).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import algebra, bar, constructions
from .homology import homology_table
from .loopgroup import kan_loop_group, sample_identity_check
from .scenario import Scenario, ScenarioError
from .sset import CapExceeded


@dataclass
class JobResult:
    kind: str
    instance: str
    status: str  # pass | fail | flagged
    details: list = field(default_factory=list)
    witness: str = ""
    seconds: float = 0.0
    rows: list = field(default_factory=list)  # machine rows for records mode


@dataclass
class Report:
    scenario_seed: int
    results: list = field(default_factory=list)

    def exit_code(self):
        return 1 if any(r.status == "fail" for r in self.results) else 0


def emit(report: Report, fmt="text", timings=False) -> str:
    lines = []
    if fmt == "records":
        for i, r in enumerate(report.results):
            head = f"record {i} kind={r.kind} instance={r.instance} status={r.status}"
            if r.witness:
                head += f" witness={r.witness}"
            lines.append(head)
            for d in (r.rows or r.details):
                lines.append(f"  {d}")
    else:
        lines.append(f"nervelab report (seed {report.scenario_seed})")
        for r in report.results:
            mark = {"pass": "ok", "fail": "FAIL", "flagged": "flagged"}[r.status]
            tail = f"  [{r.seconds:.2f}s]" if timings else ""
            lines.append(f"[{mark}] {r.kind} {r.instance}{tail}")
            for d in r.details:
                lines.append(f"    {d}")
            if r.witness:
                lines.append(f"    witness: {r.witness}")
    return "\n".join(lines) + "\n"


class SpaceBuilder:
    """Builds named or inline space expressions, memoized per scenario run."""

    def __init__(self, sc: Scenario):
        self.sc = sc
        self.cache = {}

    def build(self, toks):
        key = tuple(toks)
        if key in self.cache:
            return self.cache[key]
        out, end = self._build_at(list(toks), 0)
        assert end == len(toks)
        self.cache[key] = out
        return out

    def _build_at(self, toks, pos):
        head = toks[pos]
        sc = self.sc
        if head in sc.loaded_spaces:
            return sc.loaded_spaces[head], pos + 1
        if head in sc.space_exprs:
            return self.build(sc.space_exprs[head]), pos + 1
        if head == "circle":
            return constructions.simplicial_circle(sc.trunc), pos + 1
        if head == "point":
            return constructions.point(sc.trunc), pos + 1
        if head == "simplex":
            n = int(toks[pos + 1])
            return constructions.std_simplex(n, max(n, sc.trunc)), pos + 2
        if head == "sphere":
            n = int(toks[pos + 1])
            return constructions.minimal_sphere(n, max(n, sc.trunc)), pos + 2
        if head == "nerve":
            return bar.nerve(sc.monoids[toks[pos + 1]], sc.trunc, cap=sc.cap), pos + 2
        if head == "wedgeofnerve":
            m = sc.monoids[toks[pos + 1]]
            sit = algebra.submonoid_situation(m, m.elements)
            return bar.generalized_wedge_sset(sit, sc.trunc, cap=sc.cap), pos + 2
        if head == "wedgeof":
            sit = sc.situations[toks[pos + 1]]
            return bar.generalized_wedge_sset(sit, sc.trunc, cap=sc.cap), pos + 2
        if head in ("product", "wedge", "smash"):
            a, pos = self._build_at(toks, pos + 1)
            b, pos = self._build_at(toks, pos)
            if head == "product":
                return constructions.product(a, b, cap=sc.cap), pos
            fn = constructions.wedge if head == "wedge" else constructions.smash
            return fn(a, b), pos
        if head == "corrupt":
            a, pos = self._build_at(toks, pos + 1)
            return constructions.corrupt_face(a), pos
        raise ScenarioError(0, f"unknown space head {head!r}")


def _expr_str(toks):
    return " ".join(toks)


def _run_one(sc, builder, job) -> JobResult:
    t0 = time.perf_counter()
    try:
        result = _run_job(sc, builder, job)
    except CapExceeded as exc:
        rest = job.text.split(None, 1)
        result = JobResult(job.kind, rest[1] if len(rest) > 1 else job.text,
                           "flagged",
                           [f"resource cap exceeded at degree {exc.degree}: "
                            f"{exc.count} > {exc.cap}"])
    result.seconds = time.perf_counter() - t0
    return result


def run(sc: Scenario, parallel=0) -> Report:
    """Execute all jobs; report order is scenario order regardless of workers.

    Jobs are independent (all objects immutable), so parallel mode simply
    fans them out to worker processes, each with its own space cache.
    """
    report = Report(sc.seed)
    if parallel and len(sc.jobs) > 1:
        import multiprocessing as mp
        with mp.Pool(min(parallel, len(sc.jobs))) as pool:
            report.results = pool.map(_pool_entry,
                                      [(sc, i) for i in range(len(sc.jobs))])
        return report
    builder = SpaceBuilder(sc)
    for job in sc.jobs:
        report.results.append(_run_one(sc, builder, job))
    return report


def _pool_entry(packed):
    sc, index = packed
    return _run_one(sc, SpaceBuilder(sc), sc.jobs[index])


def _run_job(sc: Scenario, builder: SpaceBuilder, job) -> JobResult:
    kind, args = job.kind, job.args
    if kind == "build":
        X = builder.build(args["space"])
        details = [f"nondegenerate counts: {X.nondegenerate_counts()}",
                   f"euler characteristic: {X.euler_characteristic()}"]
        return JobResult(kind, _expr_str(args["space"]), "pass", details)
    if kind == "verify":
        X = builder.build(args["space"])
        bad = X.validate()
        if bad:
            return JobResult(kind, _expr_str(args["space"]), "fail",
                             [f"{len(bad)} identity violations"], witness=str(bad[0]))
        return JobResult(kind, _expr_str(args["space"]), "pass",
                         [f"simplicial identities hold up to degree {X.trunc}"])
    if kind == "regression":
        # passes exactly when the verifier catches something
        X = builder.build(args["space"])
        bad = X.validate()
        if bad:
            return JobResult(kind, _expr_str(args["space"]), "pass",
                             [f"verifier caught {len(bad)} violations as intended"],
                             witness=str(bad[0]))
        return JobResult(kind, _expr_str(args["space"]), "fail",
                         ["expected identity violations, found none"])
    if kind == "homology":
        X = builder.build(args["space"])
        upto = args.get("upto", X.trunc)
        table = homology_table(X, upto=upto)
        details = [f"H_{n} = {h}" + ("" if h.reliable else "  (unreliable: at truncation)")
                   for n, h in enumerate(table)]
        rows = [f"h degree={n} betti={h.betti} "
                f"torsion={','.join(map(str, h.torsion)) or '-'} "
                f"reliable={'yes' if h.reliable else 'no'}"
                for n, h in enumerate(table)]
        return JobResult(kind, _expr_str(args["space"]), "pass", details, rows=rows)
    if kind == "pi0":
        X = builder.build(args["space"])
        got = X.pi0()
        want = args.get("expect")
        status = "pass" if want is None or got == want else "fail"
        return JobResult(kind, _expr_str(args["space"]), status,
                         [f"pi0 = {got}" + (f" (expected {want})" if want is not None else "")])
    if kind == "suspension":
        X = builder.build(args["space"])
        upto = args.get("upto", min(3, sc.trunc - 1))
        return _suspension_job(sc, X, _expr_str(args["space"]), upto)
    if kind == "loopgroup":
        X = builder.build(args["space"])
        if len(X.rosters[0]) != 1:
            return JobResult(kind, _expr_str(args["space"]), "fail",
                             ["base is not reduced (needs a single vertex)"])
        G = kan_loop_group(X)
        rep = sample_identity_check(G, samples=args.get("samples", 200), seed=sc.seed)
        status = "pass" if rep.ok() else "fail"
        details = [f"generator counts: {[G.generator_count(n) for n in range(G.trunc + 1)]}",
                   str(rep),
                   "homotopy-level claims not certified (word level only)"]
        return JobResult(kind, _expr_str(args["space"]), status, details,
                         witness="" if rep.ok() else str(rep.violations[0]))
    if kind == "counterexample":
        return _counterexample_job(sc, args)
    if kind == "comparison":
        return _comparison_job(sc, args)
    if kind == "cyclicbar-pi0":
        m = sc.monoids[args["monoid"]]
        cb = bar.cyclic_bar(m, algebra.translation_action(m),
                            min(2, sc.trunc), cap=sc.cap)
        got = cb.pi0()
        want = args.get("expect", algebra.conjugacy_class_count(m))
        status = "pass" if got == want else "fail"
        return JobResult(kind, args["monoid"], status,
                         [f"pi0(cyclic bar) = {got}, conjugacy classes = "
                          f"{algebra.conjugacy_class_count(m)}"])
    if kind == "shear":
        name = args["monoid"]
        if name in sc.actions:
            act = sc.actions[name]
        else:
            act = algebra.translation_action(sc.monoids[name])
        rep = bar.shear_map(act)
        want = args.get("expect")
        ok = (want is None or
              (want == "bijective" and rep.bijective) or
              (want == "witness" and not rep.bijective))
        return JobResult(kind, name, "pass" if ok else "fail", [str(rep)])
    raise ScenarioError(job.line_no, f"unhandled job kind {kind!r}")


def _suspension_job(sc, X, name, upto) -> JobResult:
    if X.basepoint is None:
        return JobResult("suspension", name, "fail", ["space is not pointed"])
    ssit = bar.pointed_space_situation(X)
    W = bar.generalized_wedge(ssit, sc.trunc, cap=sc.cap)
    from .bisset import diagonal
    D = diagonal(W)
    left = homology_table(D, reduced=True)
    right = homology_table(X, reduced=True)
    details = ["homological surrogate: reduced H_(q+1)(diag wedge) vs reduced H_q"]
    ok = True
    for q1 in range(1, upto + 1):
        lh = left[q1] if q1 < len(left) else None
        rh = right[q1 - 1] if q1 - 1 < len(right) else None
        if lh is None or rh is None or not lh.reliable or not rh.reliable:
            details.append(f"H~_{q1}(diag) vs H~_{q1 - 1}: outside reliable range, skipped")
            continue
        same = (lh.betti, lh.torsion) == (rh.betti, rh.torsion)
        ok = ok and same
        details.append(f"H~_{q1}(diag) = {lh} vs H~_{q1 - 1} = {rh}: "
                       + ("agree" if same else "DISAGREE"))
    return JobResult("suspension", name, "pass" if ok else "fail", details)


def _counterexample_job(sc, args) -> JobResult:
    m = sc.monoids[args["monoid"]]
    sub = args.get("sub", ("1", "0"))
    p = args.get("p", 3)
    sit = algebra.submonoid_situation(m, sub)
    if isinstance(sit, algebra.AxiomViolation):
        return JobResult("counterexample", args["monoid"], "fail", [str(sit)])
    comp = set(bar.composable_tuples(m, sub, p))
    wtuples = set(bar.wedge_tuples(sit, p))
    extra = sorted(comp - wtuples)
    details = [
        "composability convention: iterated product defined left-to-right",
        f"|composable {p}-tuples| = {len(comp)}, |degree-{p} wedge| = {len(wtuples)}",
    ]
    if extra:
        details.append(f"composable but not in the wedge: {extra[0]} "
                       f"(+{len(extra) - 1} more)")
        return JobResult("counterexample", f"{args['monoid']} sub={','.join(sub)} p={p}",
                         "pass", details, witness=str(extra[0]))
    return JobResult("counterexample", f"{args['monoid']} sub={','.join(sub)} p={p}",
                     "fail", details + ["no discrepancy found"])


def _comparison_job(sc, args) -> JobResult:
    upto = args.get("upto", 3)
    if "augmentation" in args:
        name = args["augmentation"]
        aug = sc.augmentations[name]
    else:
        name = args["monoid"]
        aug = algebra.pointed_translation_instance(sc.monoids[name])
    suite = bar.comparison_suite(aug, upto, cap=sc.cap)
    checks = [
        ("intermediate object simplicial", not suite.middle.validate()),
        ("source simplicial", not suite.source.validate()),
        ("target simplicial", not suite.target.validate()),
        ("u is a simplicial map", not suite.u.verify()),
        ("v is a simplicial map", not suite.v.verify()),
        ("w is a simplicial map", not suite.w.verify()),
        ("u = w.v and shear factorizations", not suite.check_factorizations()),
        ("u degreewise bijective", not suite.bijectivity()),
    ]
    details = [f"instance: G={aug.g_monoid.name} acting on {aug.sit.name} "
               f"(free pointed), degrees 0..{upto}"]
    details += [f"{check}: {'ok' if good else 'FAILED'}" for check, good in checks]
    ok = all(good for _, good in checks)
    return JobResult("comparison", name, "pass" if ok else "fail", details)
