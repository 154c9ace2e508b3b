import json

import pytest

from liftcalc import ParameterError
from liftcalc._model import parse_levels
from liftcalc.model import (
    ComputeReport,
    Identity,
    IdentityRow,
    Model,
    OutputFormat,
    StrEnum,
    UnknownModelAttributeWarning,
    VerifyReport,
    schema_version,
)


class E(StrEnum):
    a = "a"
    b = "b"
    c = "c"


class ECaps(StrEnum):
    a = "A"
    b = "B"
    c = "C"


class TestEnumCaseInsensitive:
    def test_all_caps(self):
        assert E["A"] is E.a
        assert E["C"] is E.c

    def test_all_lowercase_caps_keys(self):
        assert ECaps["a"] is ECaps.a
        assert ECaps["b"] is ECaps.b

    def test_values_unchanged(self):
        for e in ECaps:
            assert e.upper() == e

    def test_lookup_by_value(self):
        assert OutputFormat("CSV") is OutputFormat.csv

    def test_dashed_name_lookup(self):
        assert Identity["field-axioms"] is Identity.field_axioms
        assert Identity["GL2-Pairing"] is Identity.gl2_pairing

    def test_dashed_value_lookup(self):
        assert Identity("pd-identity") is Identity.pd_identity

    def test_unknown_raises(self):
        with pytest.raises(ValueError):
            Identity("no-such-identity")

    def test_str_is_name(self):
        assert str(Identity.volume_telescoping) == "volume_telescoping"

    def test_identity_count(self):
        assert len([i for i in Identity if i is not Identity.all]) == 22


class TestParseLevels:
    @pytest.mark.parametrize(
        "text, levels", [("0..2", (0, 2)), ("3..3", (3, 3)), (" 1 .. 4", (1, 4))]
    )
    def test_valid(self, text, levels):
        assert parse_levels(text) == levels

    @pytest.mark.parametrize("text", ["2..1", "-1..2", "1", "1..2..3", "a..b", ""])
    def test_invalid_raises(self, text):
        with pytest.raises(ParameterError):
            parse_levels(text)


def compute_report(**overrides) -> ComputeReport:
    values = dict(
        q=3,
        ext="ramified",
        level=1,
        precision=12,
        gamma="a=0:0+1*j;b=0:0",
        mu="a=0:0;b=1:1",
        index="3/1",
        v_x="1/1",
    )
    values.update(overrides)
    return ComputeReport(**values)


class TestModel:
    def test_enum_in_model(self):
        class C(Model):
            v: E

        c = C(v=E.a)
        assert c.model_dump_json() == '{"v":"a"}'

    def test_unknown_attribute_ignored(self):
        class Data(Model):
            i: int

        with pytest.warns(UnknownModelAttributeWarning):
            data = Data(i=1, u=2)

        with pytest.raises(AttributeError):
            assert data.u
        assert "u" not in data.model_dump_json()


class TestReport:
    def test_schema_serialised_by_alias(self):
        data = json.loads(compute_report().to_json())
        assert data["schema"] == schema_version == "liftcalc/1"
        assert "schema_id" not in data

    def test_json_ends_with_newline(self):
        assert compute_report().to_json().endswith("}\n")

    def test_missing_values_are_null(self):
        data = json.loads(compute_report().to_json())
        assert data["v_abar"] is None

    def test_read_back_by_alias(self):
        data = json.loads(compute_report().to_json())
        assert ComputeReport(**data).model_dump() == compute_report().model_dump()

    def test_insufficient(self):
        assert not compute_report().insufficient
        assert compute_report(v_y="InsufficientPrecision").insufficient

    def test_failed_rows(self):
        rows = [
            IdentityRow(
                name="field-axioms",
                samples=3,
                failures=0,
                skipped=0,
                max_discrepancy="0/1",
            ),
            IdentityRow(
                name="phi-bound",
                samples=3,
                failures=1,
                skipped=0,
                max_discrepancy="1/3",
            ),
        ]
        report = VerifyReport(
            q=3,
            ext="unramified",
            level=1,
            precision=12,
            gl2_level=2,
            samples=3,
            seed=0,
            rows=rows,
        )
        assert [row.name for row in report.failed_rows] == ["phi-bound"]

    @pytest.mark.parametrize(
        "samples, skipped, unresolved", [(0, 4, True), (1, 3, False), (0, 0, False)]
    )
    def test_row_unresolved(self, samples, skipped, unresolved):
        row = IdentityRow(
            name="gl2-vy",
            samples=samples,
            failures=0,
            skipped=skipped,
            max_discrepancy="0/1",
        )
        assert row.unresolved is unresolved

    def test_unresolved_rows(self):
        rows = [
            IdentityRow(
                name="gl2-vy",
                samples=0,
                failures=0,
                skipped=4,
                max_discrepancy="0/1",
            ),
            IdentityRow(
                name="phi-bound",
                samples=0,
                failures=0,
                skipped=0,
                max_discrepancy="0/1",
            ),
        ]
        report = VerifyReport(
            q=3,
            ext="unramified",
            level=2,
            precision=12,
            gl2_level=2,
            samples=2,
            seed=0,
            rows=rows,
        )
        assert [row.name for row in report.unresolved_rows] == ["gl2-vy"]
        assert report.failed_rows == []
