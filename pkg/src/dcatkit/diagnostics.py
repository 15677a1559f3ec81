"""Parse diagnostics shared by the concrete-syntax readers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class Diagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


@dataclass(slots=True)
class ParseDiagnostics:
    errors: list[Diagnostic] = field(default_factory=list)
    warnings: list[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def error(self, line: int, column: int, message: str) -> None:
        self.errors.append(Diagnostic(line, column, message))

    def warn(self, line: int, column: int, message: str) -> None:
        self.warnings.append(Diagnostic(line, column, message))
