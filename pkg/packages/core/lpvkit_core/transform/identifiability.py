"""Falsification of structural identifiability on finite parameter samples.

A parametrization is identifiable when distinct parameters never give
equivalent models. A sample can only refute this: any pair of distinct
thetas with equivalent models is a witness. A clean report means "not
falsified on this sample".
"""

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from pydantic import BaseModel, Field

from lpvkit_core.alpv.equivalence import alpv_io_equivalent
from lpvkit_core.errors import SampleError
from lpvkit_core.lfr.equivalence import lfr_formally_equivalent
from lpvkit_core.models import AlpvModel, LfrModel
from lpvkit_core.numerics import DEFAULT_TOLERANCE, RankTolerance
from lpvkit_core.tracing import SpanAttributes, get_tracer
from lpvkit_core.transform.conversion import lpv_to_lfr_mr
from lpvkit_core.transform.equivalence import lpv_lfr_io_equivalent

_tracer = get_tracer("lpvkit.transform")

Theta = tuple[float, ...]


@dataclass(frozen=True, eq=False)
class SampleEntry:
    theta: Theta
    model: AlpvModel | LfrModel


@dataclass(frozen=True, eq=False)
class ParametrizationSample:
    """Models of one parametrization at finitely many distinct parameter values."""

    entries: tuple[SampleEntry, ...]

    def __post_init__(self) -> None:
        entries = tuple(
            SampleEntry(tuple(float(t) for t in e.theta), e.model) for e in self.entries
        )
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise SampleError(f"a sample needs at least 2 entries, got {len(entries)}")
        if len({len(e.theta) for e in entries}) != 1:
            raise SampleError("all parameter vectors must have the same length")
        if len({e.theta for e in entries}) != len(entries):
            raise SampleError("parameter values must be pairwise distinct")
        kinds = {type(e.model) for e in entries}
        if len(kinds) != 1:
            raise SampleError("a sample cannot mix ALPV and LFR models")
        if len({e.model.signature for e in entries}) != 1:
            raise SampleError("all models must share their signature dimensions")

    @classmethod
    def from_function(
        cls,
        parametrization: Callable[[Theta], AlpvModel | LfrModel],
        thetas: Iterable[Sequence[float] | float],
    ) -> "ParametrizationSample":
        """Evaluate a parametrization at every theta (scalars become 1-vectors)."""
        entries = []
        for raw in thetas:
            theta = tuple(float(t) for t in np.atleast_1d(np.asarray(raw, dtype=float)))
            entries.append(SampleEntry(theta, parametrization(theta)))
        return cls(tuple(entries))

    @property
    def kind(self) -> str:
        return "alpv" if isinstance(self.entries[0].model, AlpvModel) else "lfr"


class PairVerdict(BaseModel):
    """Equivalence verdicts for one pair of sampled parameters.

    ALPV samples fill ``io`` and ``mr_formal`` (formal equivalence of the MR
    transforms); LFR samples fill ``formal`` and ``io`` (equivalence of the
    associated ALPVs). ``agree`` compares the two verdicts.
    """

    first: Theta
    second: Theta
    equivalent: bool
    io: bool | None = None
    formal: bool | None = None
    mr_formal: bool | None = None
    agree: bool = True


class IdentifiabilityReport(BaseModel):
    kind: str
    pairs: list[PairVerdict] = Field(default_factory=list)

    @property
    def witnesses(self) -> list[tuple[Theta, Theta]]:
        return [(p.first, p.second) for p in self.pairs if p.equivalent]

    @property
    def falsified(self) -> bool:
        return any(p.equivalent for p in self.pairs)

    @property
    def verdicts_agree(self) -> bool:
        return all(p.agree for p in self.pairs)


def identifiability_falsify(
    sample: ParametrizationSample,
    tol: RankTolerance = DEFAULT_TOLERANCE,
    word_budget: int = 4096,
) -> IdentifiabilityReport:
    """Test every pair of sampled models for equivalence.

    Raises:
        NotLpvLfrError: If an LFR sample holds a model that is not an LPV-LFR.
    """
    with _tracer.start_as_current_span("transform.identifiability") as span:
        report = IdentifiabilityReport(kind=sample.kind)
        mr_cache: dict[int, LfrModel] = {}

        for (ia, a), (ib, b) in combinations(enumerate(sample.entries), 2):
            if isinstance(a.model, AlpvModel) and isinstance(b.model, AlpvModel):
                io = alpv_io_equivalent(a.model, b.model, tol, word_budget)
                for idx, e in ((ia, a), (ib, b)):
                    if idx not in mr_cache and isinstance(e.model, AlpvModel):
                        mr_cache[idx] = lpv_to_lfr_mr(e.model, tol)
                mr_formal = lfr_formally_equivalent(mr_cache[ia], mr_cache[ib], tol, word_budget)
                verdict = PairVerdict(
                    first=a.theta,
                    second=b.theta,
                    equivalent=io,
                    io=io,
                    mr_formal=mr_formal,
                    agree=io == mr_formal,
                )
            elif isinstance(a.model, LfrModel) and isinstance(b.model, LfrModel):
                formal = lfr_formally_equivalent(a.model, b.model, tol, word_budget)
                io = lpv_lfr_io_equivalent(a.model, b.model, tol, word_budget)
                verdict = PairVerdict(
                    first=a.theta,
                    second=b.theta,
                    equivalent=formal,
                    io=io,
                    formal=formal,
                    agree=io == formal,
                )
            else:
                raise SampleError("a sample cannot mix ALPV and LFR models")
            report.pairs.append(verdict)

        span.set_attribute(SpanAttributes.VERDICT, report.falsified)
        return report
