"""Result records returned by the analysis operations."""

from dataclasses import dataclass
from enum import StrEnum
from typing import Generic, TypeVar

from pydantic import BaseModel, Field


class ReductionReport(BaseModel):
    """Dimensions before and after each stage of a minimization.

    ALPV reports carry one entry per tuple, LFR reports one entry per channel.
    """

    kind: str
    original: tuple[int, ...]
    reachable: tuple[int, ...]
    final: tuple[int, ...]
    reach_steps: int = 0
    observe_steps: int = 0

    @property
    def original_dim(self) -> int:
        return sum(self.original)

    @property
    def final_dim(self) -> int:
        return sum(self.final)

    @property
    def changed(self) -> bool:
        return self.original != self.final

    def summary(self) -> str:
        return (
            f"{self.kind}: {list(self.original)} -> reachable {list(self.reachable)} "
            f"-> minimal {list(self.final)} (dim {self.original_dim} -> {self.final_dim})"
        )


class IsomorphismStatus(StrEnum):
    FOUND = "found"
    NOT_EQUIVALENT = "not_equivalent"
    INFEASIBLE = "infeasible"
    INCONCLUSIVE = "inconclusive"
    DIMENSION_MISMATCH = "dimension_mismatch"


IsoT = TypeVar("IsoT")


@dataclass(frozen=True)
class IsomorphismOutcome(Generic[IsoT]):
    """Result of an isomorphism search.

    ``method`` is ``"reachability"`` when both models were minimal and the
    transformation was read off matching reachability data, ``"affine"``
    when the full linear system was solved.
    """

    status: IsomorphismStatus
    isomorphism: IsoT | None = None
    method: str = ""
    residual: float = float("nan")
    solution_dim: int = -1
    draws: int = 0
    detail: str = ""

    @property
    def found(self) -> bool:
        return self.status == IsomorphismStatus.FOUND


class ClauseResult(BaseModel):
    """One checked claim: ``lhs`` and ``rhs`` are the two sides of a biconditional or implication."""

    name: str
    holds: bool
    lhs: bool | None = None
    rhs: bool | None = None
    detail: str = ""


class HarnessReport(BaseModel):
    """Pass/fail per clause of a theorem harness run."""

    clauses: list[ClauseResult] = Field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(
        self,
        name: str,
        holds: bool,
        lhs: bool | None = None,
        rhs: bool | None = None,
        detail: str = "",
    ) -> ClauseResult:
        result = ClauseResult(name=name, holds=holds, lhs=lhs, rhs=rhs, detail=detail)
        self.clauses.append(result)
        return result
