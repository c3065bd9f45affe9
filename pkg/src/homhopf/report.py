"""Check reports and the comparison helper every checker uses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class Witness:
    """First failing multi-index (group indices, then basis indices) with both sides."""

    indices: tuple[int, ...]
    names: tuple[str, ...]
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "index_names": list(self.names),
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
        }

    def __str__(self):
        where = ", ".join(f"{n}={i}" for n, i in zip(self.names, self.indices))
        return f"at {where}: lhs={list(self.lhs)} rhs={list(self.rhs)}"


@dataclass(frozen=True)
class CheckResult:
    axiom: str
    equation: str
    passed: bool
    witness: Witness | None = None
    cases: int = 0
    context: str = ""

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failing check {self.axiom!r} must carry a witness")


@dataclass(frozen=True)
class CheckReport:
    results: tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __add__(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.results + other.results)

    def with_context(self, context: str) -> "CheckReport":
        return CheckReport(tuple(
            CheckResult(r.axiom, r.equation, r.passed, r.witness, r.cases,
                        f"{context}; {r.context}" if r.context else context)
            for r in self.results
        ))

    def by_equation(self, label: str) -> list[CheckResult]:
        return [r for r in self.results if r.equation == label]

    def verdict(self, equation: str) -> bool:
        found = self.by_equation(equation)
        if not found:
            raise KeyError(f"no check with equation label {equation!r}")
        return all(r.passed for r in found)

    def summary(self) -> str:
        lines = []
        for r in self.results:
            ctx = f" [{r.context}]" if r.context else ""
            lines.append(f"{r.equation:>8}  {r.axiom}{ctx}  {'PASS' if r.passed else 'FAIL'}")
            if r.witness is not None:
                lines.append(f"          witness {r.witness}")
        return "\n".join(lines)


@dataclass
class _Cell:
    axiom: str
    equation: str
    cases: int = 0
    witness: Witness | None = None


@dataclass
class Collector:
    """Accumulates exact comparisons into one result per (axiom, equation).

    Callers evaluate group tuples in lexicographic order; the first mismatch
    seen becomes the witness and later evaluations of that axiom are skipped.
    """

    context: str = ""
    _cells: dict = field(default_factory=dict)

    def failed(self, axiom: str, equation: str) -> bool:
        cell = self._cells.get((axiom, equation))
        return cell is not None and cell.witness is not None

    def _cell(self, axiom, equation) -> _Cell:
        key = (axiom, equation)
        if key not in self._cells:
            self._cells[key] = _Cell(axiom, equation)
        return self._cells[key]

    def compare(self, axiom: str, equation: str, lhs, rhs,
                group: Sequence[int] = (), group_names: Sequence[str] = (),
                basis_names: Sequence[str] = ()) -> bool:
        """Compare two arrays whose leading ``len(basis_names)`` axes index basis inputs."""
        cell = self._cell(axiom, equation)
        lhs = np.asarray(lhs, dtype=np.int64)
        rhs = np.asarray(rhs, dtype=np.int64)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{axiom}: side shapes differ {lhs.shape} vs {rhs.shape}")
        nin = len(basis_names)
        in_shape = lhs.shape[:nin]
        cell.cases += int(np.prod(in_shape, dtype=np.int64))
        if cell.witness is not None:
            return False
        l2 = lhs.reshape(int(np.prod(in_shape, dtype=np.int64)), -1)
        r2 = rhs.reshape(l2.shape)
        bad = np.nonzero((l2 != r2).any(axis=1))[0]
        if bad.size == 0:
            return True
        row = int(bad[0])
        basis = tuple(int(i) for i in np.unravel_index(row, in_shape)) if nin else ()
        cell.witness = Witness(
            tuple(int(g) for g in group) + basis,
            tuple(group_names) + tuple(basis_names),
            tuple(int(x) for x in l2[row]),
            tuple(int(x) for x in r2[row]),
        )
        return False

    def require(self, axiom: str, equation: str, ok: bool, indices: Sequence[int] = (),
                names: Sequence[str] = (), lhs: Iterable[int] = (), rhs: Iterable[int] = ()) -> bool:
        """Record a single condition that is not naturally an array comparison."""
        cell = self._cell(axiom, equation)
        cell.cases += 1
        if ok or cell.witness is not None:
            return ok
        cell.witness = Witness(tuple(int(i) for i in indices), tuple(names),
                               tuple(int(x) for x in lhs), tuple(int(x) for x in rhs))
        return False

    def report(self) -> CheckReport:
        return CheckReport(tuple(
            CheckResult(c.axiom, c.equation, c.witness is None, c.witness, c.cases, self.context)
            for c in self._cells.values()
        ))
