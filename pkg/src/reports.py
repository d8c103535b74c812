"""
Report models emitted by the CLI
Exact integers serialise as decimal strings so JSON consumers never lose digits.
"""

from typing import Annotated, ClassVar, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, PlainSerializer

BigCount = Annotated[int, Field(ge=0), PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]


class Report(BaseModel):
    """Common base: nested fields are left out of CSV, trailing optionals only when populated"""

    nested_fields: ClassVar[Tuple[str, ...]] = ()
    sparse_columns: ClassVar[Tuple[str, ...]] = ()

    def summary_line(self) -> Optional[str]:
        """One-line table rendering, or None to fall back to a column table"""
        return None


class MatrixReport(Report):
    family: str
    d: int
    n: Optional[int] = None
    x: Optional[str] = None
    entries: List[List[Union[int, str]]]
    permanent: Optional[str] = None
    engine: Optional[str] = None

    nested_fields: ClassVar[Tuple[str, ...]] = ("entries",)
    sparse_columns: ClassVar[Tuple[str, ...]] = ("n", "x", "permanent", "engine")

    def summary_line(self) -> str:
        cells = [[str(v) for v in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        lines = [" ".join(c.rjust(width) for c in row) for row in cells]
        if self.permanent is not None:
            lines.append(f"per = {self.permanent}  [{self.engine}]")
        return "\n".join(lines)


class VolumeReport(Report):
    d: int
    n: int
    volume: Optional[BigCount] = None
    engine: str
    error: Optional[str] = None

    sparse_columns: ClassVar[Tuple[str, ...]] = ("error",)

    def summary_line(self) -> str:
        if self.volume is None:
            return f"V({self.d},{self.n}) = ?  [{self.engine}: {self.error}]"
        return f"V({self.d},{self.n}) = {self.volume}"


class OmegaReport(Report):
    d: int
    x: Optional[str] = None
    value: Optional[str] = None
    coeffs: Optional[List[BigInt]] = None
    shifted: bool = False

    nested_fields: ClassVar[Tuple[str, ...]] = ("coeffs",)
    sparse_columns: ClassVar[Tuple[str, ...]] = ("x", "value")

    def summary_line(self) -> Optional[str]:
        lines = []
        if self.value is not None:
            lines.append(self.value)
        if self.coeffs is not None:
            lines.append("[" + ", ".join(str(c) for c in self.coeffs) + "]")
        return "\n".join(lines) if lines else None


class IdentityReport(Report):
    name: str
    parameters: Dict[str, int]
    lhs: BigInt
    rhs: BigInt
    holds: bool
    checks: List["IdentityReport"] = []

    nested_fields: ClassVar[Tuple[str, ...]] = ("checks",)

    @classmethod
    def compare(cls, name: str, parameters: Dict[str, int], lhs: int, rhs: int,
                checks: Optional[List["IdentityReport"]] = None) -> "IdentityReport":
        checks = checks or []
        return cls(
            name=name,
            parameters=parameters,
            lhs=lhs,
            rhs=rhs,
            holds=lhs == rhs and all(c.holds for c in checks),
            checks=checks,
        )

    def summary_line(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "holds" if self.holds else "FAILS"
        failed = sum(1 for c in self.checks if not c.holds)
        extra = f" ({len(self.checks)} sub-checks, {failed} failed)" if self.checks else ""
        return f"{self.name}({params}): {self.lhs} vs {self.rhs} {status}{extra}"


class BoundReport(Report):
    d: int
    n: int
    ln_old: float
    ln_new: float
    ln_omega_d: float
    ln_exact: Optional[float] = None
    gv_floor: Optional[BigCount] = None
    packing_ceiling: Optional[BigCount] = None

    sparse_columns: ClassVar[Tuple[str, ...]] = ("gv_floor", "packing_ceiling")


class CrossoverReport(Report):
    d: int
    n_max: int
    first_n: Optional[int] = None
    last_n: Optional[int] = None
    ln_omega_d: float
    omega_margin: float

    def summary_line(self) -> str:
        if self.first_n is None:
            return f"d={self.d}: the omega bound never beats the plain bound for n <= {self.n_max}"
        return f"d={self.d}: the omega bound beats the plain bound for {self.first_n} <= n <= {self.last_n}"


class CodeBoundsReport(Report):
    n: int
    dist: int
    gv_floor: BigCount
    packing_ceiling: BigCount


class CodeReport(Report):
    n: int
    dist: int
    method: str
    size: int
    words: Optional[List[List[int]]] = None

    nested_fields: ClassVar[Tuple[str, ...]] = ("words",)

    def summary_line(self) -> str:
        lines = [f"code n={self.n} dist={self.dist} ({self.method}): size {self.size}"]
        for word in self.words or []:
            lines.append(",".join(str(v) for v in word))
        return "\n".join(lines)


IdentityReport.model_rebuild()
