"""Tests for model and signal files."""

import json
from pathlib import Path

import numpy as np
import pytest

from lpvkit_core.errors import ModelFileError
from lpvkit_core.io import (
    AlpvFile,
    LfrFile,
    dump_model,
    format_table,
    parse_model,
    read_model,
    read_table,
    to_document,
    write_model,
    write_table,
)
from lpvkit_core.models import AlpvModel, LfrModel

SIGMA_DOC = {
    "kind": "alpv",
    "np": 1,
    "nx": 2,
    "nu": 1,
    "ny": 1,
    "A": [[[1, 0], [0, 0.2]], [[0, 2], [1, 1]]],
    "B": [[[1], [0]], [[0], [1]]],
    "C": [[[1, 0]], [[0, 1]]],
    "D": [[[0]], [[0]]],
}


class TestModelFiles:
    """Parsing and writing of JSON model documents."""

    def test_parse_alpv(self, sigma: AlpvModel) -> None:
        model = parse_model(json.dumps(SIGMA_DOC))
        assert isinstance(model, AlpvModel)
        assert model.max_deviation(sigma) == 0.0

    def test_parse_lfr(self, lfr_m: LfrModel) -> None:
        text = dump_model(lfr_m)
        assert '"blockSizes"' in text
        model = parse_model(text)
        assert isinstance(model, LfrModel)
        assert model.block_sizes == (2, 3)

    def test_write_then_read_is_exact(self, tmp_path: Path, lfr_m_hat: LfrModel) -> None:
        path = write_model(lfr_m_hat, tmp_path / "models" / "m_hat.json")
        model = read_model(path)
        assert isinstance(model, LfrModel)
        assert model.max_deviation(lfr_m_hat) == 0.0

    def test_document_uses_aliases(self, sigma: AlpvModel) -> None:
        doc = to_document(sigma)
        assert isinstance(doc, AlpvFile)
        dumped = json.loads(doc.model_dump_json(by_alias=True))
        assert {"np", "nx", "nu", "ny"} <= dumped.keys()

    def test_zero_state_dimension(self) -> None:
        sigma = AlpvModel.from_matrices(
            A=[np.zeros((0, 0))], B=[np.zeros((0, 1))], C=[np.zeros((1, 0))], D=[[[3.0]]]
        )
        model = parse_model(dump_model(sigma))
        assert isinstance(model, AlpvModel)
        assert model.n_x == 0
        assert model.D[0][0, 0] == 3.0

    def test_syntax_error_has_position(self) -> None:
        with pytest.raises(ModelFileError) as exc:
            parse_model('{\n  "kind": "alpv",\n  "np": ,\n}', "broken.json")
        assert exc.value.line == 3
        assert exc.value.column is not None
        assert str(exc.value).startswith("broken.json:3:")

    def test_unknown_field_is_rejected(self) -> None:
        with pytest.raises(ModelFileError, match="comment"):
            parse_model(json.dumps({**SIGMA_DOC, "comment": "x"}))

    def test_unknown_kind(self) -> None:
        with pytest.raises(ModelFileError):
            parse_model(json.dumps({**SIGMA_DOC, "kind": "lti"}))

    def test_wrong_matrix_count(self) -> None:
        with pytest.raises(ModelFileError, match="declared np"):
            parse_model(json.dumps({**SIGMA_DOC, "np": 2}))

    def test_declared_shape_mismatch(self) -> None:
        with pytest.raises(ModelFileError, match="declared"):
            parse_model(json.dumps({**SIGMA_DOC, "nx": 3}))

    def test_ragged_rows(self) -> None:
        doc = {**SIGMA_DOC, "A": [[[1, 0], [0]], [[0, 2], [1, 1]]]}
        with pytest.raises(ModelFileError, match="ragged"):
            parse_model(json.dumps(doc))

    def test_block_size_count(self, lfr_m: LfrModel) -> None:
        doc = json.loads(dump_model(lfr_m))
        doc["d"] = 3
        with pytest.raises(ModelFileError, match="blockSizes"):
            parse_model(json.dumps(doc))

    def test_non_finite_entry(self) -> None:
        text = json.dumps(SIGMA_DOC).replace('"D": [[[0]]', '"D": [[[NaN]]')
        with pytest.raises(ModelFileError, match="non-finite"):
            parse_model(text)

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ModelFileError, match="cannot read"):
            read_model(tmp_path / "absent.json")

    def test_lfr_document_fields(self, lfr_m: LfrModel) -> None:
        doc = to_document(lfr_m)
        assert isinstance(doc, LfrFile)
        assert (doc.p, doc.m, doc.d) == (1, 1, 2)


class TestSignalTables:
    """Whitespace-separated signal tables."""

    def test_read_with_comments(self, tmp_path: Path) -> None:
        path = tmp_path / "u.txt"
        path.write_text("# input\n1.0 2.0\n3.0 4.0\n")
        assert np.array_equal(read_table(path, width=2), [[1.0, 2.0], [3.0, 4.0]])

    def test_single_column(self, tmp_path: Path) -> None:
        path = tmp_path / "p.txt"
        path.write_text("0.5\n-0.5\n")
        assert read_table(path).shape == (2, 1)

    def test_wrong_width(self, tmp_path: Path) -> None:
        path = tmp_path / "u.txt"
        path.write_text("1 2\n")
        with pytest.raises(ModelFileError, match="expected 1"):
            read_table(path, width=1)

    def test_non_numeric(self, tmp_path: Path) -> None:
        path = tmp_path / "u.txt"
        path.write_text("1 x\n")
        with pytest.raises(ModelFileError):
            read_table(path)

    def test_missing(self, tmp_path: Path) -> None:
        with pytest.raises(ModelFileError, match="cannot read"):
            read_table(tmp_path / "none.txt")

    def test_format_with_time_column(self) -> None:
        assert format_table(np.array([[1.0], [0.1]])) == "0 1.0\n1 0.1\n"

    def test_write_then_read(self, tmp_path: Path) -> None:
        values = np.array([[0.1, -2.5], [1e-17, 3.0]])
        path = write_table(values, tmp_path / "y.txt")
        assert np.array_equal(read_table(path), values)
