"""Tests for ``lpvkit check``: RESULT lines and exit codes."""

from collections.abc import Callable
from pathlib import Path

import pytest

Run = Callable[..., tuple[int, str, str]]


class TestMinimal:
    def test_minimal_alpv(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "minimal", models["sigma"])
        assert code == 0
        assert out == "RESULT: true minimal (n_x=2)\n"

    def test_non_minimal_lfr(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "minimal", models["m"])
        assert code == 1
        assert out.startswith("RESULT: false not_observable")

    def test_rounded_lfr_is_minimal(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "minimal", models["m_hat"])
        assert code == 0
        assert "blocks=[2, 2]" in out


class TestEquivalence:
    """equiv, lpv-io-equiv and lpv-equiv."""

    def test_reference_lfrs_are_equivalent(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "equiv", models["m"], models["m_alt"])
        assert code == 0
        assert out == "RESULT: true formal equivalence of LFRs\n"

    def test_rounded_lfr_needs_loose_match(self, run: Run, models: dict[str, Path]) -> None:
        code, _, _ = run("check", "equiv", models["m"], models["m_hat"])
        assert code == 1
        code, _, _ = run("check", "equiv", models["m"], models["m_hat"], "--match-tol", "2e-2")
        assert code == 0

    def test_alpv_against_itself(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "equiv", models["sigma"], models["sigma"])
        assert code == 0
        assert "ALPVs" in out

    def test_mixed_kinds(self, run: Run, models: dict[str, Path]) -> None:
        code, out, err = run("check", "equiv", models["sigma"], models["m"])
        assert code == 2
        assert out == ""
        assert "expected an ALPV model" in err

    def test_lpv_io_equiv(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "lpv-io-equiv", models["m"], models["m_alt"])
        assert code == 0
        assert out.startswith("RESULT: true")

    def test_lpv_io_equiv_rejects_general_lfr(self, run: Run, models: dict[str, Path]) -> None:
        code, out, err = run("check", "lpv-io-equiv", models["m"], models["general"])
        assert code == 3
        assert out == ""
        assert "error:" in err

    def test_lpv_equiv(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "lpv-equiv", models["m"])
        assert code == 0
        assert out == "RESULT: true minimization cross-check agrees\n"


class TestStructureAndIsomorphism:
    def test_lpv_structure_holds(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "lpv-structure", models["m_alt"])
        assert code == 0
        assert out.startswith("RESULT: true largest F[i,j] entry")

    def test_general_lfr_is_not_lpv(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "lpv-structure", models["general"])
        assert code == 1
        assert out.startswith("RESULT: false")

    def test_reference_lfrs_not_isomorphic(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "isomorphic", models["m"], models["m_alt"])
        assert code == 1
        assert out.startswith("RESULT: false")

    def test_model_isomorphic_to_itself(self, run: Run, models: dict[str, Path]) -> None:
        code, out, _ = run("check", "isomorphic", models["sigma"], models["sigma"])
        assert code == 0
        assert out.startswith("RESULT: true found")


class TestUsage:
    """Malformed invocations exit with 2."""

    @pytest.mark.parametrize(
        ("mode", "count"),
        [("minimal", 2), ("equiv", 1), ("lpv-io-equiv", 3)],
    )
    def test_wrong_arity(
        self, run: Run, models: dict[str, Path], mode: str, count: int
    ) -> None:
        code, out, err = run("check", mode, *[models["m"]] * count)
        assert code == 2
        assert out == ""
        assert "model file(s)" in err

    def test_unknown_mode(self, run: Run, models: dict[str, Path]) -> None:
        code, _, _ = run("check", "observable", models["m"])
        assert code == 2

    def test_structure_needs_lfr(self, run: Run, models: dict[str, Path]) -> None:
        code, _, _ = run("check", "lpv-structure", models["sigma"])
        assert code == 2

    def test_broken_model_file(self, run: Run, tmp_path: Path) -> None:
        broken = tmp_path / "broken.json"
        broken.write_text('{"kind": "alpv",')
        code, out, err = run("check", "minimal", broken)
        assert code == 2
        assert out == ""
        assert "broken.json" in err

    def test_missing_model_file(self, run: Run, tmp_path: Path) -> None:
        code, _, err = run("check", "minimal", tmp_path / "absent.json")
        assert code == 2
        assert "cannot read" in err

    def test_non_positive_tolerance(self, run: Run, models: dict[str, Path]) -> None:
        code, _, _ = run("check", "minimal", models["sigma"], "--rel-tol", "0")
        assert code == 2
