"""Boundary-link Seifert matrices: representation, validation, standard forms.

A Seifert matrix for an m-component boundary link is a square integer matrix
partitioned into m^2 blocks A_ij, with det(A_ii - A_ii^T) = +-1 for every i
and A_ij = A_ji^T for i != j.  Matrices are immutable values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from . import intmat
from .intmat import IntMatrix


class StructureError(ValueError):
    """Input is not even shaped like a partitioned square matrix."""


@dataclass(frozen=True)
class SeifertMatrix:
    m: int
    block_sizes: tuple[int, ...]
    entries: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(int(b) for b in self.block_sizes))
        object.__setattr__(self, "entries", intmat.freeze(self.entries))
        if self.m < 0:
            raise StructureError("component count must be non-negative")
        if len(self.block_sizes) != self.m:
            raise StructureError(
                f"expected {self.m} block sizes, got {len(self.block_sizes)}")
        if any(b < 0 for b in self.block_sizes):
            raise StructureError("block sizes must be non-negative")
        n = sum(self.block_sizes)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise StructureError(
                f"entries must be a {n}x{n} matrix matching the partition")

    @property
    def side(self) -> int:
        return sum(self.block_sizes)

    def offset(self, k: int) -> int:
        return sum(self.block_sizes[:k])

    def block(self, i: int, j: int) -> IntMatrix:
        oi, oj = self.offset(i), self.offset(j)
        return tuple(row[oj:oj + self.block_sizes[j]]
                     for row in self.entries[oi:oi + self.block_sizes[i]])

    def component_of(self, index: int) -> int:
        for k in range(self.m):
            if index < self.offset(k) + self.block_sizes[k]:
                return k
        raise IndexError(index)

    def to_json(self) -> str:
        doc = {"m": self.m,
               "block_sizes": list(self.block_sizes),
               "rows": [list(row) for row in self.entries]}
        return json.dumps(doc, separators=(", ", ": "))

    @classmethod
    def from_json(cls, text: str) -> "SeifertMatrix":
        try:
            doc, end = json.JSONDecoder().raw_decode(text)
        except json.JSONDecodeError as exc:
            raise StructureError(f"bad JSON: {exc}") from exc
        if text[end:].strip():
            raise StructureError("trailing data after JSON document")
        if not isinstance(doc, dict) or set(doc) != {"m", "block_sizes", "rows"}:
            raise StructureError("matrix document must have keys m, block_sizes, rows")
        try:
            return cls(doc["m"], tuple(doc["block_sizes"]), intmat.freeze(doc["rows"]))
        except (TypeError, ValueError) as exc:
            if isinstance(exc, StructureError):
                raise
            raise StructureError(f"malformed matrix document: {exc}") from exc


@dataclass(frozen=True)
class Violation:
    rule: str
    blocks: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def validate(matrix: SeifertMatrix) -> ValidationReport:
    """Check the boundary-link Seifert matrix invariants.

    Structural problems (non-square, partition mismatch) are raised as
    StructureError when the SeifertMatrix is built; this reports the
    mathematical invariants only.
    """
    violations: list[Violation] = []
    for i in range(matrix.m):
        aii = matrix.block(i, i)
        d = intmat.det(intmat.sub(aii, intmat.transpose(aii)))
        if d not in (1, -1):
            violations.append(Violation(
                "diagonal-unimodular", (i,),
                f"det(A_{i}{i} - A_{i}{i}^T) = {d}, expected +-1"))
    for i in range(matrix.m):
        for j in range(i + 1, matrix.m):
            if matrix.block_sizes[i] == 0 or matrix.block_sizes[j] == 0:
                continue    # degenerate blocks are transposes vacuously
            if matrix.block(i, j) != intmat.transpose(matrix.block(j, i)):
                violations.append(Violation(
                    "offdiagonal-transpose", (i, j),
                    f"A_{i}{j} != A_{j}{i}^T"))
    return ValidationReport(valid=not violations, violations=tuple(violations))


def is_valid(matrix: SeifertMatrix) -> bool:
    return validate(matrix).valid


def require_valid(matrix: SeifertMatrix) -> SeifertMatrix:
    report = validate(matrix)
    if not report.valid:
        raise ValueError("invalid Seifert matrix: "
                         + "; ".join(v.detail for v in report.violations))
    return matrix


def intersection_form(matrix: SeifertMatrix) -> list[IntMatrix]:
    """Per-component list of A_ii - A_ii^T (unimodular antisymmetric blocks)."""
    require_valid(matrix)
    return [intmat.sub(matrix.block(i, i), intmat.transpose(matrix.block(i, i)))
            for i in range(matrix.m)]


def null_matrix(m: int) -> SeifertMatrix:
    return SeifertMatrix(m, (0,) * m, ())


def whitehead_double_matrix(m: int, eps: Sequence[int],
                            assignment: Sequence[int] | None = None) -> SeifertMatrix:
    """Block-diagonal sum of [[0, eps_i], [1-eps_i, 0]] pairs.

    By default pair i sits on component i (one genus-one surface per
    component); `assignment` may instead place pair i on component
    assignment[i], with several pairs per component allowed.
    """
    eps = tuple(int(e) for e in eps)
    if any(e not in (0, 1) for e in eps):
        raise ValueError("clasp signs must be 0 or 1")
    if assignment is None:
        if len(eps) != m:
            raise ValueError("default assignment needs one sign per component")
        assignment = tuple(range(m))
    else:
        assignment = tuple(int(a) for a in assignment)
        if len(assignment) != len(eps):
            raise ValueError("assignment and eps lengths differ")
        if any(a < 0 or a >= m for a in assignment):
            raise ValueError("assignment component out of range")
    block_sizes = tuple(2 * assignment.count(k) for k in range(m))
    n = 2 * len(eps)
    rows = [[0] * n for _ in range(n)]
    # pairs grouped by component, in pair order
    pos = 0
    for k in range(m):
        for i, a in enumerate(assignment):
            if a == k:
                rows[pos][pos + 1] = eps[i]
                rows[pos + 1][pos] = 1 - eps[i]
                pos += 2
    return SeifertMatrix(m, block_sizes, intmat.freeze(rows))
