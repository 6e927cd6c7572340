from fractions import Fraction

import pytest

from tverberg import Vector, radon_partition, tverberg_partition
from tverberg.fileio import (
    ParseError,
    detect_format,
    emit_certificate,
    load_certificate,
    load_points,
    parse_certificate,
    parse_points_csv,
    parse_points_json,
    points_csv,
    save_certificate,
)


class TestCsvPoints:
    def test_basic(self):
        ps = parse_points_csv("0,0\n1,0\n1/2,-3\n0.5,2\n")
        assert ps.dimension == 2
        assert ps.points[2] == Vector((Fraction(1, 2), -3))
        assert ps.points[3] == Vector((Fraction(1, 2), 2))

    def test_blank_lines_skipped(self):
        ps = parse_points_csv("1\n\n2\n \n3\n")
        assert len(ps.points) == 3

    def test_ragged_rows_rejected(self):
        with pytest.raises(ParseError):
            parse_points_csv("1,2\n3\n")

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_points_csv("")

    def test_inexact_literal_rejected(self):
        with pytest.raises(ParseError):
            parse_points_csv("0.333...\n1\n")

    def test_round_trip_through_csv(self):
        points = (Vector((Fraction(1, 3), -2)), Vector((0, Fraction(7, 2))))
        assert parse_points_csv(points_csv(points)).points == points


class TestJsonPoints:
    def test_basic_with_labels(self):
        ps = parse_points_json(
            '{"dimension": 2, "points": [["0","0"], [1, "1/2"]], "labels": ["a", "b"]}'
        )
        assert ps.dimension == 2
        assert ps.points[1] == Vector((1, Fraction(1, 2)))
        assert ps.labels == ("a", "b")

    def test_dimension_zero(self):
        ps = parse_points_json('{"dimension": 0, "points": [[], [], []]}')
        assert ps.points == (Vector(()),) * 3

    def test_float_rejected(self):
        with pytest.raises(ParseError):
            parse_points_json('{"dimension": 1, "points": [[0.5]]}')

    def test_missing_fields(self):
        with pytest.raises(ParseError):
            parse_points_json('{"points": [[1]]}')

    def test_row_width_mismatch(self):
        with pytest.raises(ParseError):
            parse_points_json('{"dimension": 2, "points": [[1]]}')

    def test_label_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_points_json('{"dimension": 1, "points": [[1]], "labels": ["a", "b"]}')

    def test_invalid_json(self):
        with pytest.raises(ParseError):
            parse_points_json("{truncated")


class TestFormatDetection:
    def test_by_extension(self):
        assert detect_format("points.csv") == "csv"
        assert detect_format("points.JSON".lower()) == "json"

    def test_override_wins(self):
        assert detect_format("points.txt", "csv") == "csv"

    def test_unknown_rejected(self):
        with pytest.raises(ParseError):
            detect_format("points.txt")
        with pytest.raises(ParseError):
            detect_format("points.csv", "xml")

    def test_load_points_autodetect(self, tmp_path):
        path = tmp_path / "p.csv"
        path.write_text("1\n2\n3\n", encoding="utf-8")
        assert load_points(path).dimension == 1

    def test_load_points_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_points(tmp_path / "absent.csv")


class TestCertificateFiles:
    def _radon(self):
        return radon_partition([Vector((0,)), Vector((1,)), Vector((2,))])

    def _tverberg(self):
        return tverberg_partition([Vector((i,)) for i in (1, 2, 3, 4, 5)], 3)

    def test_radon_round_trip(self):
        cert = self._radon()
        assert parse_certificate(emit_certificate(cert)) == cert

    def test_tverberg_round_trip(self):
        cert = self._tverberg()
        parsed = parse_certificate(emit_certificate(cert))
        assert parsed == cert
        assert parsed.iterations == cert.iterations

    def test_emit_is_deterministic(self):
        cert = self._tverberg()
        assert emit_certificate(cert) == emit_certificate(cert)

    def test_save_and_load(self, tmp_path):
        cert = self._radon()
        path = tmp_path / "cert.json"
        save_certificate(cert, path)
        assert load_certificate(path) == cert

    def test_truncated_rejected(self):
        text = emit_certificate(self._radon())
        with pytest.raises(ParseError):
            parse_certificate(text[: len(text) // 2])

    def test_missing_field_rejected(self):
        import json

        doc = json.loads(emit_certificate(self._radon()))
        del doc["weights"]
        with pytest.raises(ParseError):
            parse_certificate(json.dumps(doc))

    def test_unknown_kind_rejected(self):
        import json

        doc = json.loads(emit_certificate(self._radon()))
        doc["kind"] = "banana"
        with pytest.raises(ParseError):
            parse_certificate(json.dumps(doc))

    def test_group_count_mismatch_rejected(self):
        import json

        doc = json.loads(emit_certificate(self._tverberg()))
        doc["r"] = 2
        with pytest.raises(ParseError):
            parse_certificate(json.dumps(doc))

    def test_inexact_weight_rejected(self):
        import json

        doc = json.loads(emit_certificate(self._radon()))
        doc["weights"][0] = "0.333..."
        with pytest.raises(ParseError):
            parse_certificate(json.dumps(doc))

    def test_metadata_consistency_enforced(self):
        import json

        doc = json.loads(emit_certificate(self._radon()))
        doc["n_points"] = 7
        with pytest.raises(ParseError):
            parse_certificate(json.dumps(doc))
