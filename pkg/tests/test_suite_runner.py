import json

from qlform.forms import isotropy_index, quasi_pfister
from qlform.suite import SuiteConfig, base_field_for, generate_instances, run_suite


def masked(report):
    def walk(obj):
        if isinstance(obj, dict):
            return {k: ("MASKED" if k == "timing" else walk(v)) for k, v in obj.items()}
        if isinstance(obj, list):
            return [walk(v) for v in obj]
        return obj

    return walk(report)


class TestGeneration:
    def test_stream_is_pure_function_of_config(self):
        cfg = SuiteConfig(seed=42, count=6)
        a = [(p.coeffs, q.coeffs) for _, p, q, _ in generate_instances(cfg)]
        b = [(p.coeffs, q.coeffs) for _, p, q, _ in generate_instances(cfg)]
        assert a == b

    def test_different_seeds_differ(self):
        a = list(generate_instances(SuiteConfig(seed=1, count=3)))
        b = list(generate_instances(SuiteConfig(seed=2, count=3)))
        assert any(
            (pa.coeffs, qa.coeffs) != (pb.coeffs, qb.coeffs)
            for (_, pa, qa, _), (_, pb, qb, _) in zip(a[1:], b[1:])
        )

    def test_all_anisotropic_within_dims(self):
        cfg = SuiteConfig(seed=3, count=8, dim_p=(2, 5), dim_q=(2, 5))
        for _, p, q, _ in generate_instances(cfg):
            assert isotropy_index(p) == 0 and isotropy_index(q) == 0
            assert 2 <= p.dim <= 5 and 2 <= q.dim <= 5

    def test_forced_tightness_instance_first(self):
        cfg = SuiteConfig(seed=5, count=2)
        stream = list(generate_instances(cfg))
        K = base_field_for(cfg)
        pf = quasi_pfister(K, [K.gen("t1"), K.gen("t2")]).expanded
        assert stream[0][1] == pf and stream[0][2] == pf

    def test_forcing_disabled(self):
        cfg = SuiteConfig(seed=5, count=2, include_tightness_witness=False)
        stream = list(generate_instances(cfg))
        K = base_field_for(cfg)
        pf = quasi_pfister(K, [K.gen("t1"), K.gen("t2")]).expanded
        assert stream[0][1] != pf or stream[0][2] != pf


class TestRunner:
    def test_deterministic_reports(self):
        cfg = SuiteConfig(seed=1, count=4)
        r1 = run_suite(cfg)
        r2 = run_suite(cfg)
        assert json.dumps(masked(r1), sort_keys=True) == json.dumps(
            masked(r2), sort_keys=True
        )

    def test_worker_counts_agree(self):
        cfg = SuiteConfig(seed=1, count=4)
        serial = run_suite(cfg, workers=1)
        parallel = run_suite(cfg, workers=4)
        assert json.dumps(masked(serial), sort_keys=True) == json.dumps(
            masked(parallel), sort_keys=True
        )

    def test_all_pass_and_tightness_attained(self):
        report = run_suite(SuiteConfig(seed=1, count=5))
        agg = report["aggregate"]
        assert agg["pass"] == 5 and agg["fail"] == 0 and agg["skipped"] == 0
        assert agg["equality_attained"]["main"] >= 1
        assert report["instances"][0]["report"]["verdicts"]["main"]["equality"]

    def test_empty_suite(self):
        report = run_suite(SuiteConfig(seed=1, count=0))
        assert report["instances"] == []
        assert report["aggregate"]["count"] == 0
