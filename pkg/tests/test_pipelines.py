from fractions import Fraction

import pytest

from operadlab import targets as T
from operadlab.arith import QQq
from operadlab.morphisms import twist_signs
from operadlab.operad import module_equal, s3_closure
from operadlab.pipelines import (PIPELINES, dendriform_extraction, diassociative_extraction,
                                 run_pipeline, verify_specialization)
from operadlab.report import PipelineReport


@pytest.fixture(scope="module")
def reports():
    return {name: run_pipeline(name) for name in PIPELINES}


def test_every_pipeline_passes(reports):
    for name, rep in reports.items():
        assert rep.passed, (name, [c.name for c in rep.failures])


@pytest.mark.parametrize("name", list(PIPELINES))
def test_reports_are_deterministic(reports, name):
    again = run_pipeline(name)
    assert again.to_json(timing=False) == reports[name].to_json(timing=False)


@pytest.mark.parametrize("name", list(PIPELINES))
def test_report_json_round_trip(reports, name):
    rep = reports[name]
    back = PipelineReport.from_dict(rep.to_dict(timing=False))
    assert back.to_json(timing=False) == rep.to_json(timing=False)
    assert back.matrices == rep.matrices
    assert back.relations == rep.relations


def test_generator_counts(reports):
    assert reports["dend-deform"].summary["generators"] == 3
    assert reports["dias-deform"].summary["generators"] == 5
    assert reports["polarize-assoc"].summary["minimized_rows"] == [2, 5]


def test_ring_membership_keeps_more_rows():
    assert len(dendriform_extraction("ring")["generators"]) == 9
    assert len(diassociative_extraction("ring")["generators"]) == 11
    rep = run_pipeline("dend-deform", membership="ring")
    assert not rep.passed


def test_deformed_modules_are_orthogonal():
    dend = s3_closure(dendriform_extraction()["generators"])
    dias = s3_closure(diassociative_extraction()["generators"])
    signs = twist_signs(48)
    for r in dend.rows:
        for s in dias.rows:
            acc = QQq.zero
            for x, y, e in zip(r, s, signs):
                acc = acc + x * y * e
            assert not acc


def test_specializations():
    for q0 in (0, 1):
        assert verify_specialization(q0).passed
    rep = verify_specialization(Fraction(2))
    assert rep.passed
    assert rep.summary["dendriform_rank"] == 18
    assert rep.summary["diassociative_rank"] == 30


def test_polarize_assoc_delta_option():
    rep = run_pipeline("polarize-assoc", delta=Fraction(3, 4))
    assert rep.passed
    assert rep.summary["delta"] == "3/4"
    with pytest.raises(ValueError):
        run_pipeline("polarize-assoc", delta=Fraction(1, 8))
    with pytest.raises(KeyError):
        run_pipeline("nope")


def test_printed_generators_lie_in_computed_module(reports):
    assert module_equal(reports["dend-deform"].relations, T.deformed_dendriform_relations())
    assert module_equal(reports["dias-deform"].relations, T.deformed_diassociative_relations())


def test_elapsed_under_ten_seconds(reports):
    for rep in reports.values():
        assert rep.elapsed_ms < 10_000
