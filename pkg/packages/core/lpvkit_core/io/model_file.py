"""JSON model files.

ALPV::

    {"kind": "alpv", "np": 1, "nx": 2, "nu": 1, "ny": 1,
     "A": [[[1, 0], [0, 0.2]], [[0, 2], [1, 1]]], "B": [...], "C": [...], "D": [...]}

LFR::

    {"kind": "lfr", "p": 1, "m": 1, "d": 2, "blockSizes": [2, 3],
     "A": [[...]], "B": [[...]], "C": [[...]], "D": [[0]]}

Floats are written in shortest round-trip form, so write -> read is exact.
"""

import json
from pathlib import Path
from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from lpvkit_core.errors import LpvKitError, ModelFileError
from lpvkit_core.models import AlpvModel, LfrModel
from lpvkit_core.numerics import Matrix

Rows = list[list[float]]


class _FileModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class AlpvFile(_FileModel):
    kind: Literal["alpv"] = "alpv"
    n_p: int = Field(alias="np", ge=0)
    n_x: int = Field(alias="nx", ge=0)
    n_u: int = Field(alias="nu", ge=1)
    n_y: int = Field(alias="ny", ge=1)
    A: list[Rows]
    B: list[Rows]
    C: list[Rows]
    D: list[Rows]


class LfrFile(_FileModel):
    kind: Literal["lfr"] = "lfr"
    p: int = Field(ge=1)
    m: int = Field(ge=1)
    d: int = Field(ge=1)
    block_sizes: list[Annotated[int, Field(ge=0)]] = Field(alias="blockSizes")
    A: Rows
    B: Rows
    C: Rows
    D: Rows


ModelFile = Annotated[AlpvFile | LfrFile, Field(discriminator="kind")]
_adapter: TypeAdapter[AlpvFile | LfrFile] = TypeAdapter(ModelFile)


def _matrix(rows: Rows, shape: tuple[int, int], what: str, source: str) -> Matrix:
    try:
        X = np.array(rows, dtype=float)
    except ValueError as e:
        raise ModelFileError(source, f"{what}: ragged rows ({e})") from e
    if X.size == 0 and 0 in shape:
        return np.zeros(shape)
    if X.shape != shape:
        raise ModelFileError(source, f"{what} has shape {X.shape}, declared {shape}")
    return X


def _family(
    mats: list[Rows], count: int, shape: tuple[int, int], what: str, source: str
) -> tuple[Matrix, ...]:
    if len(mats) != count:
        raise ModelFileError(
            source, f"{what} holds {len(mats)} matrices, declared np + 1 = {count}"
        )
    return tuple(_matrix(m, shape, f"{what}[{i}]", source) for i, m in enumerate(mats))


def _to_model(doc: AlpvFile | LfrFile, source: str) -> AlpvModel | LfrModel:
    if isinstance(doc, AlpvFile):
        q = doc.n_p + 1
        nx, nu, ny = doc.n_x, doc.n_u, doc.n_y
        return AlpvModel(
            _family(doc.A, q, (nx, nx), "A", source),
            _family(doc.B, q, (nx, nu), "B", source),
            _family(doc.C, q, (ny, nx), "C", source),
            _family(doc.D, q, (ny, nu), "D", source),
        )
    if len(doc.block_sizes) != doc.d:
        raise ModelFileError(
            source, f"blockSizes has {len(doc.block_sizes)} entries, declared d = {doc.d}"
        )
    n = sum(doc.block_sizes)
    return LfrModel(
        tuple(doc.block_sizes),
        _matrix(doc.A, (n, n), "A", source),
        _matrix(doc.B, (n, doc.m), "B", source),
        _matrix(doc.C, (doc.p, n), "C", source),
        _matrix(doc.D, (doc.p, doc.m), "D", source),
    )


def parse_model(text: str, source: str = "<string>") -> AlpvModel | LfrModel:
    """Parse a model document.

    Raises:
        ModelFileError: With line and column for JSON syntax errors.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelFileError(source, e.msg, e.lineno, e.colno) from e
    try:
        doc = _adapter.validate_python(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise ModelFileError(source, f"{where}: {first['msg']}" if where else first["msg"]) from e
    try:
        return _to_model(doc, source)
    except ModelFileError:
        raise
    except LpvKitError as e:
        raise ModelFileError(source, str(e)) from e


def read_model(path: Path | str) -> AlpvModel | LfrModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ModelFileError(path, f"cannot read file: {e.strerror or e}") from e
    return parse_model(text, str(path))


def to_document(model: AlpvModel | LfrModel) -> AlpvFile | LfrFile:
    if isinstance(model, AlpvModel):
        return AlpvFile(
            n_p=model.n_p,
            n_x=model.n_x,
            n_u=model.n_u,
            n_y=model.n_y,
            A=[a.tolist() for a in model.A],
            B=[b.tolist() for b in model.B],
            C=[c.tolist() for c in model.C],
            D=[d.tolist() for d in model.D],
        )
    return LfrFile(
        p=model.p,
        m=model.m,
        d=model.d,
        block_sizes=list(model.block_sizes),
        A=model.A.tolist(),
        B=model.B.tolist(),
        C=model.C.tolist(),
        D=model.D.tolist(),
    )


def dump_model(model: AlpvModel | LfrModel) -> str:
    """Serialize a model to a JSON document."""
    return to_document(model).model_dump_json(by_alias=True, indent=2)


def write_model(model: AlpvModel | LfrModel, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_model(model) + "\n", encoding="utf-8")
    return path
