"""Seeded random instance generation and the batch verification runner.

The instance stream is a pure function of (seed, config): draws go through
getrandbits only, and rejection sampling discards isotropic forms until an
anisotropic pair is found.  The first instance is the forced tightness
witness p = q = <<t1, t2>> (when the base has two variables), so every suite
report exhibits equality in the main bound.  Workers only verify; generation
stays in the parent, so reports are identical for any worker count.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CapExceeded
from .forms import QuasilinearForm, form, isotropy_index, quasi_pfister
from .gf2poly import Polynomial2, RationalFunction
from .serialize import content_hash, form_to_dict
from .splitting import verify_all
from .towers import Caps, FieldTower, element0, make_base_field

_MAX_DRAWS = 100_000


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 1
    count: int = 10
    dim_p: tuple = (2, 5)
    dim_q: tuple = (2, 5)
    max_terms: int = 3
    max_degree: int = 3
    base_vars: int = 2
    trdeg_cap: int = 8
    include_tightness_witness: bool = True

    def to_dict(self):
        return {
            "seed": self.seed,
            "count": self.count,
            "dim_p": list(self.dim_p),
            "dim_q": list(self.dim_q),
            "max_terms": self.max_terms,
            "max_degree": self.max_degree,
            "base_vars": self.base_vars,
            "trdeg_cap": self.trdeg_cap,
            "include_tightness_witness": self.include_tightness_witness,
        }


def _rand_below(rng: random.Random, n: int) -> int:
    """Uniform in [0, n) built on getrandbits for cross-version stability."""
    if n <= 1:
        return 0
    k = (n - 1).bit_length()
    while True:
        v = rng.getrandbits(k)
        if v < n:
            return v


def _draw_poly(rng, arity, max_terms, max_degree) -> Polynomial2:
    """Nonzero polynomial with at most max_terms terms of total degree <= max_degree."""
    while True:
        nterms = 1 + _rand_below(rng, max_terms)
        vecs = []
        for _ in range(nterms):
            exps = [0] * arity
            total = _rand_below(rng, max_degree + 1)
            for _ in range(total):
                exps[_rand_below(rng, arity)] += 1
            vecs.append(tuple(exps))
        p = Polynomial2.from_exponents(vecs, arity)
        if not p.is_zero:
            return p


def _draw_anisotropic_form(rng, K: FieldTower, dim_range, max_terms, max_degree):
    """Rejection-sample an anisotropic form; returns (form, rejections)."""
    lo, hi = dim_range
    rejections = 0
    for _ in range(_MAX_DRAWS):
        dim = lo + _rand_below(rng, hi - lo + 1)
        coeffs = tuple(
            element0(RationalFunction.from_poly(_draw_poly(rng, K.trdeg, max_terms, max_degree)))
            for _ in range(dim)
        )
        candidate = form(K, coeffs)
        if isotropy_index(candidate) == 0:
            return candidate, rejections
        rejections += 1
    raise CapExceeded("rejection sampling exceeded the draw budget")


def base_field_for(config: SuiteConfig) -> FieldTower:
    names = tuple(f"t{i + 1}" for i in range(config.base_vars))
    return make_base_field(names, Caps(trdeg_cap=config.trdeg_cap))


def generate_instances(config: SuiteConfig):
    """Deterministic stream of (index, p, q, rejections)."""
    K = base_field_for(config)
    rng = random.Random(config.seed)
    forced = config.include_tightness_witness and config.base_vars >= 2
    for index in range(config.count):
        if index == 0 and forced:
            pf = quasi_pfister(K, [K.gen("t1"), K.gen("t2")]).expanded
            yield index, pf, pf, 0
            continue
        p, rej_p = _draw_anisotropic_form(
            rng, K, config.dim_p, config.max_terms, config.max_degree
        )
        q, rej_q = _draw_anisotropic_form(
            rng, K, config.dim_q, config.max_terms, config.max_degree
        )
        yield index, p, q, rej_p + rej_q


def run_instance(p: QuasilinearForm, q: QuasilinearForm) -> dict:
    started = time.monotonic()
    try:
        report = verify_all(p, q)
        status = "PASS" if report["all_pass"] else "FAIL"
    except CapExceeded as exc:
        report = {"error": {"code": exc.code, "message": str(exc)}}
        status = "SKIPPED"
    return {
        "status": status,
        "report": report,
        "timing": {"elapsed_s": time.monotonic() - started},
    }


def _run_serialized(payload):
    from .serialize import form_from_dict

    p_obj, q_obj = payload
    p = form_from_dict(p_obj)
    q = form_from_dict(q_obj, field=p.field)
    return run_instance(p, q)


def run_suite(config: SuiteConfig, workers: int = 1) -> dict:
    """Run the suite; the report is deterministic apart from timing fields."""
    started = time.monotonic()
    instances = []
    payloads = []
    for index, p, q, rejections in generate_instances(config):
        p_obj = form_to_dict(p)
        q_obj = form_to_dict(q)
        instances.append(
            {
                "index": index,
                "p": p_obj,
                "q": q_obj,
                "instance_hash": content_hash({"p": p_obj, "q": q_obj}),
                "rejections": rejections,
            }
        )
        payloads.append((p_obj, q_obj))
    if workers > 1 and payloads:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_serialized, payloads, chunksize=1))
    else:
        results = [_run_serialized(payload) for payload in payloads]
    for record, result in zip(instances, results):
        record.update(result)
    aggregate = _aggregate(instances)
    return {
        "config": config.to_dict(),
        "instances": instances,
        "aggregate": aggregate,
        "timing": _timing_summary(instances, time.monotonic() - started),
    }


def _aggregate(instances) -> dict:
    passed = sum(1 for r in instances if r["status"] == "PASS")
    failed = sum(1 for r in instances if r["status"] == "FAIL")
    skipped = sum(1 for r in instances if r["status"] == "SKIPPED")
    rejections = sum(r["rejections"] for r in instances)
    equality = {"main": 0, "kmt": 0}
    isotropic = 0
    for r in instances:
        verdicts = r["report"].get("verdicts")
        if not verdicts:
            continue
        if verdicts["main"].get("equality"):
            equality["main"] += 1
        if not verdicts["kmt"]["vacuous"] and verdicts["kmt"]["lhs"] == verdicts["kmt"]["rhs"]:
            equality["kmt"] += 1
        if r["report"]["quantities"]["i0_qFp"] > 0:
            isotropic += 1
    return {
        "count": len(instances),
        "pass": passed,
        "fail": failed,
        "skipped": skipped,
        "rejections": rejections,
        "isotropic_instances": isotropic,
        "equality_attained": equality,
    }


def _timing_summary(instances, total) -> dict:
    times = sorted(r["timing"]["elapsed_s"] for r in instances) or [0.0]

    def pct(p):
        idx = min(len(times) - 1, max(0, round(p * (len(times) - 1))))
        return times[idx]

    return {
        "total_s": total,
        "p50_s": pct(0.50),
        "p90_s": pct(0.90),
        "max_s": times[-1],
    }
