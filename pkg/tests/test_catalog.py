import cmath
import json
import math

import pytest

from lerchlab import catalog as cat
from lerchlab.specfun import PoleError


ENTRIES = cat.build_catalog()
BY_ID = {e.id: e for e in ENTRIES}


class TestStructure:
    def test_count_and_unique_ids(self):
        assert len(ENTRIES) >= 10
        ids = [e.id for e in ENTRIES]
        assert len(ids) == len(set(ids))
        assert ids == sorted(ids)

    def test_forms(self):
        assert BY_ID["3.1.3.48"].form == "single"
        assert BY_ID["3.1.3.62"].form == "pair"
        assert BY_ID["3.1.3.63"].form == "pair_log_loglog"
        for eid in ("3.1.3.64", "3.1.3.65", "3.1.3.66", "3.1.3.67",
                    "3.1.3.68", "3.1.3.69", "3.1.3.70"):
            assert BY_ID[eid].form == "pair"
            assert BY_ID[eid].params.k == -1.0

    def test_closed_forms_evaluate_finite(self):
        for e in ENTRIES:
            z = complex(e.closed_form())
            assert math.isfinite(z.real) and math.isfinite(z.imag)


class TestParams:
    def test_rejects_nonfinite(self):
        with pytest.raises(Exception):
            cat.IntegralParams(m=float("nan"), k=0.0)
        with pytest.raises(Exception):
            cat.IntegralParams(m=-0.5, k=0.0, q=0.0)

    def test_theorem_form_poles(self):
        with pytest.raises(PoleError):
            cat.IntegralParams(m=2.0, k=0.0).validate_theorem_form()
        with pytest.raises(PoleError):
            cat.IntegralParams(m=-0.5, k=0.0, p=0.5, q=0.25).validate_theorem_form()

    def test_domain_classify(self):
        strict = cat.DomainClass.classify(complex(-0.5, -0.6))
        assert strict is cat.DomainClass.PAPER_STRICT
        ext = cat.DomainClass.classify(-0.5)
        assert ext is cat.DomainClass.ANALYTIC_EXTENSION
        # both exponents of a pair must sit in the box
        assert cat.DomainClass.classify(
            complex(-0.5, -0.6), -0.75) is cat.DomainClass.ANALYTIC_EXTENSION


class TestClosedForms:
    def test_theorem_collapse_at_k0(self):
        params = cat.IntegralParams(m=complex(-0.5, -0.6), k=0.0,
                                    a=1.0, p=1.0, q=0.25)
        lhs = cat.rhs_main_theorem(params)
        rhs = cat.cf_3_1_3_48(params)
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_cf62_pole(self):
        with pytest.raises(PoleError):
            cat.cf_3_1_3_62(-1.0)

    def test_cf62_at_k1_is_8pi2_over_3(self):
        want = 8 * math.pi ** 2 / 3
        assert abs(cat.cf_3_1_3_62(1.0) - want) <= 1e-12 * want

    def test_duplicate_statement_64_69(self):
        assert BY_ID["3.1.3.64"].closed_form() == BY_ID["3.1.3.69"].closed_form()

    def test_hypergeometric_family_matches_log_constant(self):
        # the 2F1 difference form at (m,t) = (-1/2,-3/4) reduces to the
        # elementary constant of the duplicated entries
        want = 4.0 * math.log(4.0 - 2.0 * math.sqrt(3.0))
        got = cat.cf_2f1_family(-0.5, -0.75)
        assert abs(got - want) <= 1e-11

    def test_dispute_flags(self):
        flagged = {e.id for e in ENTRIES if e.dispute_eligible}
        assert flagged == {"3.1.3.59", "3.1.3.63", "3.1.3.70"}


class TestSerialization:
    def test_schema_and_roundtrip(self):
        doc = json.loads(cat.catalog_to_json())
        assert doc["schema"] == "lerchlab-catalog/1"
        assert len(doc["entries"]) == len(ENTRIES)
        e48 = next(d for d in doc["entries"] if d["id"] == "3.1.3.48")
        assert e48["params"]["m"] == [-0.5, -0.6]
        assert e48["form"] == "single"

    def test_byte_stable(self):
        assert cat.catalog_to_json() == cat.catalog_to_json()
