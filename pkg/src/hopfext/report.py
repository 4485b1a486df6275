"""Verification reports: one entry per axiom, with a witness on failure."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .legs import Tensor
from .linalg import VectorSpace
from .scalars import Field


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    labels: tuple[str, ...]
    lhs: str
    rhs: str

    def __str__(self):
        return f"at ({', '.join(self.labels)}): {self.lhs} != {self.rhs}"


@dataclass(frozen=True)
class AxiomResult:
    label: str
    passed: bool
    witness: Witness | None = None
    required: bool = True
    note: str = ""

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing axiom carries no witness")

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        if not self.required:
            status += " (informational)"
        text = f"{self.label:<34} {status}"
        if self.witness is not None:
            text += f"  {self.witness}"
        if self.note:
            text += f"  [{self.note}]"
        return text


@dataclass
class VerificationReport:
    title: str = ""
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results if r.required)

    def __bool__(self):
        return self.ok

    def add(self, result: AxiomResult) -> AxiomResult:
        self.results.append(result)
        return result

    def check(self, label: str, passed: bool, note: str = "", required: bool = True) -> AxiomResult:
        """Record a boolean fact that has no natural basis-tuple witness."""
        w = None if passed else Witness((), (), "holds", "fails")
        return self.add(AxiomResult(label, bool(passed), w, required, note))

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for r in other.results:
            self.results.append(AxiomResult(prefix + r.label, r.passed, r.witness, r.required, r.note))
        return self

    def __getitem__(self, label: str) -> AxiomResult:
        for r in self.results:
            if r.label == label:
                return r
        raise KeyError(label)

    def __contains__(self, label: str) -> bool:
        return any(r.label == label for r in self.results)

    def labels(self) -> list[str]:
        return [r.label for r in self.results]

    def failed(self) -> list[str]:
        return [r.label for r in self.results if not r.passed and r.required]

    def format(self) -> str:
        head = f"{self.title}: {'PASS' if self.ok else 'FAIL'}" if self.title else ("PASS" if self.ok else "FAIL")
        return "\n".join([head] + ["  " + r.line() for r in self.results])

    def __str__(self):
        return self.format()


def format_combination(coeffs: dict[tuple, object], spaces: Sequence[VectorSpace], field: Field) -> str:
    if not coeffs:
        return "0"
    parts = []
    for idx in sorted(coeffs):
        c = coeffs[idx]
        name = "⊗".join(s.labels[i] for s, i in zip(spaces, idx)) or "1"
        if c == 1:
            parts.append(name)
        elif c == -1 and not field.modulus:
            parts.append("-" + name)
        else:
            parts.append(f"{field.format(c)}*{name}")
    return " + ".join(parts)


def compare(label: str, lhs: Tensor, rhs: Tensor, outs: Sequence[str],
            tag_spaces: Sequence[VectorSpace], out_spaces: Sequence[VectorSpace],
            rhs_outs: Sequence[str] | None = None, required: bool = True) -> AxiomResult:
    """Compare two tagged tensors on every tag tuple; the first mismatch in
    lexicographic order becomes the witness."""
    r_outs = list(rhs_outs if rhs_outs is not None else outs)
    if sorted(lhs.legs) == sorted(lhs.tags + tuple(outs)) and \
            sorted(rhs.legs) == sorted(rhs.tags + tuple(r_outs)) and lhs.tags == rhs.tags:
        lk = lhs.reorder(list(lhs.tags) + list(outs)).terms
        rk = rhs.reorder(list(rhs.tags) + r_outs).terms
        if lk == rk:
            return AxiomResult(label, True, None, required)
    L = lhs.table(outs)
    R = rhs.table(r_outs)
    for tag in lhs.tag_tuples():
        a, b = L.get(tag, {}), R.get(tag, {})
        if a != b:
            labels = tuple(s.labels[i] for s, i in zip(tag_spaces, tag))
            w = Witness(tag, labels, format_combination(a, out_spaces, lhs.field),
                        format_combination(b, out_spaces, lhs.field))
            return AxiomResult(label, False, w, required)
    return AxiomResult(label, True, None, required)


def merge(title: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    out = VerificationReport(title)
    for r in reports:
        out.extend(r)
    return out
