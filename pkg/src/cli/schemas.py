"""
CLI 入力の JSON スキーマ

pydantic のモデルで入力を検証し、ドメインのオブジェクトへ変換する。
検証に失敗した場合は SpecError（終了コード 1）にする。
"""

from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, ValidationError, field_validator, model_validator

from src.core.field import FieldSpec
from src.core.group import MatrixGroup, group_from_literals
from src.core.harness import InstanceSpec, SweepConfig, zoo_entry, zoo_group
from src.core.invsys import GradedIdeal
from src.core.linalg import Subspace
from src.core.polyring import PolyRing, parse_monomial_key
from src.utils.error_handler import SpecError

M = TypeVar('M', bound=BaseModel)

ScalarLiteral = Union[StrictInt, StrictStr]
FieldLiteral = Union[StrictStr, Dict[str, StrictInt]]
MatrixLiteral = List[List[ScalarLiteral]]


def parse_model(model: Type[M], data: Any) -> M:
    """
    JSON データをモデルで検証する

    Raises:
        SpecError: 検証に失敗した場合（最初のエラーを 1 行にまとめる）
    """
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise SpecError(f"invalid input at {where}: {first['msg']}") from None


def _unwrap_character(value: Any) -> Any:
    # Character.to_json() の形 {"generator_values": [...]} も受け付ける
    if isinstance(value, dict) and set(value) == {"generator_values"}:
        return value["generator_values"]
    return value


class GroupModel(BaseModel):
    """
    群の指定

    組み込み群の名前 ``zoo`` か、生成元の行列 ``generators`` のどちらか一方を与える。
    """
    model_config = ConfigDict(extra="forbid")

    field: FieldLiteral = "Q"
    n: Optional[int] = Field(default=None, ge=1)
    zoo: Optional[str] = None
    generators: Optional[List[MatrixLiteral]] = None

    @model_validator(mode="after")
    def _one_source(self) -> 'GroupModel':
        if (self.zoo is None) == (self.generators is None):
            raise ValueError("give exactly one of 'zoo' or 'generators'")
        if self.generators is not None and not self.generators:
            raise ValueError("'generators' must not be empty")
        return self

    def field_spec(self) -> FieldSpec:
        return FieldSpec.from_json(self.field)

    def generator_literals(self) -> Tuple[Any, ...]:
        """生成元をリテラル行列で返す（n の食い違いは SpecError）"""
        if self.zoo is not None:
            entry = zoo_entry(self.zoo)
            gens: Tuple[Any, ...] = entry.generators
            size = entry.n
        else:
            gens = tuple(self.generators or ())
            size = len(gens[0])
        if self.n is not None and self.n != size:
            raise SpecError(f"n = {self.n} does not match {size}x{size} generators")
        return gens

    def to_group(self, cap: Optional[int] = None) -> MatrixGroup:
        """
        群を閉包して返す

        Raises:
            SpecError: 指定が不正な場合
            TrivialGroupError: 自明群の場合
            CharacteristicDividesOrderError: 標数が位数を割る場合
            GroupClosureError: 閉包が上限を超えた場合
        """
        k = self.field_spec()
        if self.zoo is not None:
            self.generator_literals()
            return zoo_group(self.zoo, k, cap)
        return group_from_literals(k, self.generator_literals(), cap)


class InvariantsRequest(GroupModel):
    min_degree: int = Field(default=0, ge=0)
    max_degree: Optional[int] = Field(default=None, ge=0)


class FunctionalModel(BaseModel):
    """
    汎関数の指定（値の無い単項式は 0）

    n を省略すると単項式キーの長さから決める。character は生成元での値で、
    群（zoo か generators）も与えると閉包上の指標に拡張して同変性を調べる。
    """
    model_config = ConfigDict(extra="forbid")

    n: Optional[int] = Field(default=None, ge=1)
    field: FieldLiteral = "Q"
    degree: int
    values: Dict[str, ScalarLiteral]
    character: Optional[List[ScalarLiteral]] = Field(default=None, min_length=1)
    zoo: Optional[str] = None
    generators: Optional[List[MatrixLiteral]] = None

    @field_validator("character", mode="before")
    @classmethod
    def _character_shape(cls, value: Any) -> Any:
        return _unwrap_character(value)

    @model_validator(mode="after")
    def _at_most_one_group(self) -> 'FunctionalModel':
        if self.zoo is not None and self.generators is not None:
            raise ValueError("give at most one of 'zoo' or 'generators'")
        return self

    def field_spec(self) -> FieldSpec:
        return FieldSpec.from_json(self.field)

    def group_model(self) -> Optional[GroupModel]:
        if self.zoo is None and self.generators is None:
            return None
        return GroupModel(field=self.field, n=self.n, zoo=self.zoo, generators=self.generators)

    def ring_dim(self, group: Optional[MatrixGroup] = None) -> int:
        """
        変数の個数

        Raises:
            SpecError: 決められない、または食い違う場合
        """
        if group is not None:
            return group.n
        if self.n is not None:
            return self.n
        lengths = {len(parse_monomial_key(key)) for key in self.values}
        if len(lengths) != 1:
            raise SpecError("cannot infer n from the monomial keys; give 'n'")
        return lengths.pop()


class InstanceModel(GroupModel):
    """
    検証インスタンスの指定

    values を省略すると (seed, index) から乱数で汎関数を作る。
    """
    degree: int
    values: Optional[Dict[str, ScalarLiteral]] = None
    character: Optional[List[ScalarLiteral]] = None
    seed: int = Field(default=0, ge=0)
    index: int = Field(default=0, ge=0)
    twisted: bool = False
    bound: Optional[int] = Field(default=None, ge=1)

    @field_validator("character", mode="before")
    @classmethod
    def _character_shape(cls, value: Any) -> Any:
        return _unwrap_character(value)

    def to_instance(self, seed: Optional[int] = None, default_bound: int = 2) -> InstanceSpec:
        return InstanceSpec(
            field=self.field_spec(),
            generators=self.generator_literals(),
            degree=self.degree,
            values=self.values,
            character=None if self.character is None else tuple(self.character),
            seed=self.seed if seed is None else seed,
            index=self.index,
            twisted=self.twisted,
            bound=self.bound or default_bound,
        )


class SweepModel(BaseModel):
    """スイープ設定"""
    model_config = ConfigDict(extra="forbid")

    groups: List[str] = Field(min_length=1)
    fields: List[FieldLiteral] = Field(min_length=1)
    degrees: List[int] = Field(min_length=1)
    count: int = Field(default=10, ge=0)
    seed: int = Field(default=0, ge=0)
    twisted: bool = False
    bound: Optional[int] = Field(default=None, ge=1)

    def to_config(
        self,
        seed: Optional[int] = None,
        count: Optional[int] = None,
        default_bound: int = 2,
    ) -> SweepConfig:
        return SweepConfig(
            groups=tuple(self.groups),
            fields=tuple(FieldSpec.from_json(f) for f in self.fields),
            degrees=tuple(self.degrees),
            count=self.count if count is None else count,
            seed=self.seed if seed is None else seed,
            twisted=self.twisted,
            bound=self.bound or default_bound,
        )


DEFAULT_SWEEP: Dict[str, Any] = {
    "groups": ["cyclic3", "a3_perm", "cyclic5", "pm_identity"],
    "fields": ["Q", {"Fp": 5}, {"Fp": 7}],
    "degrees": [2, 3, 4],
    "count": 10,
}


# --- 出力 ---

class ReportModel(BaseModel):
    """出力 JSON の形の検証用（未知のキーは拒否する）"""
    model_config = ConfigDict(extra="forbid")


class CharacterModel(ReportModel):
    generator_values: List[ScalarLiteral] = Field(min_length=1)


class IdealPieceModel(ReportModel):
    degree: int = Field(ge=0)
    dim: int = Field(ge=0)
    basis: List[Dict[str, ScalarLiteral]]

    @model_validator(mode="after")
    def _dim_matches_basis(self) -> 'IdealPieceModel':
        if self.dim != len(self.basis):
            raise ValueError(f"piece {self.degree} has dim {self.dim} but {len(self.basis)} basis vectors")
        return self


class IdealModel(ReportModel):
    """construct の出力"""
    n: int = Field(ge=1)
    field: FieldLiteral
    top: int = Field(ge=0)
    pieces: List[IdealPieceModel]
    character: Optional[CharacterModel] = None
    equivariant: Optional[bool] = None
    g_invariant: Optional[bool] = None

    @model_validator(mode="after")
    def _covers_degrees(self) -> 'IdealModel':
        if [p.degree for p in self.pieces] != list(range(self.top + 1)):
            raise ValueError("pieces must list degrees 0..top in order")
        return self

    def to_ideal(self) -> GradedIdeal:
        """基底からイデアルを組み立て直す"""
        ring = PolyRing(FieldSpec.from_json(self.field), self.n)
        pieces = tuple(
            Subspace.span(ring.field, ring.dim(p.degree), [ring.from_json(b).coeffs for b in p.basis])
            for p in self.pieces
        )
        return GradedIdeal(ring, self.top, pieces)


class InvariantDegreeModel(ReportModel):
    degree: int = Field(ge=0)
    dim: int = Field(ge=0)
    basis: List[Dict[str, ScalarLiteral]]

    @model_validator(mode="after")
    def _dim_matches_basis(self) -> 'InvariantDegreeModel':
        if self.dim != len(self.basis):
            raise ValueError(f"degree {self.degree} has dim {self.dim} but {len(self.basis)} invariants")
        return self


class InvariantsModel(ReportModel):
    """invariants の出力"""
    n: int = Field(ge=1)
    field: FieldLiteral
    group_order: int = Field(ge=2)
    degrees: List[InvariantDegreeModel]


class OneDimVerdictModel(ReportModel):
    """check-group の出力"""
    exists: bool
    witness_prime: Optional[int] = None
    r: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _witness_iff_exists(self) -> 'OneDimVerdictModel':
        if self.exists != (self.witness_prime is not None):
            raise ValueError("a witness prime is reported exactly when a representation exists")
        return self


class QuotientModel(ReportModel):
    hilbert: List[int]
    gorenstein: bool
    socle_degree: Optional[int] = None
    a_invariant: Optional[int] = None


class InvariantQuotientModel(ReportModel):
    dims: List[int]
    gorenstein: bool
    socle_degree: Optional[int] = None
    a_invariant: Optional[int] = None


class VerdictReportModel(ReportModel):
    """verify の出力"""
    degree: int = Field(ge=1)
    hypothesis_holds: bool
    witness_prime: Optional[int] = None
    r: Optional[int] = None
    group_order: int = Field(ge=2)
    commutator_order: int = Field(ge=1)
    functional: FunctionalModel
    functional_equivariant: bool
    ideal_g_invariant: bool
    quotient: QuotientModel
    invariant_quotient: Optional[InvariantQuotientModel] = None
    socle_character_trivial: Optional[bool] = None
    induced_fixed_dims_match: Optional[bool] = None
    theorem_satisfied: Optional[bool] = None
    counterexample: bool


class MismatchModel(ReportModel):
    quantity: str
    expected: Any
    actual: Any


class ReplicationModel(ReportModel):
    """replicate の出力"""
    example: str
    matched: bool
    mismatches: List[MismatchModel]
    hilbert_series: str
    ideal: IdealModel
    report: VerdictReportModel
    notes: List[str]

    @model_validator(mode="after")
    def _matched_iff_no_mismatch(self) -> 'ReplicationModel':
        if self.matched == bool(self.mismatches):
            raise ValueError("matched must mean an empty mismatch list")
        return self


class CellModel(ReportModel):
    group: str
    field: FieldLiteral
    degree: int


class SweepInstanceModel(VerdictReportModel):
    index: int = Field(ge=0)
    cell: CellModel
    instance: int = Field(ge=0)


class SkippedInstanceModel(ReportModel):
    index: int = Field(ge=0)
    cell: CellModel
    instance: int = Field(ge=0)
    reason: str


class DistributionModel(ReportModel):
    quotient: Dict[str, int]
    invariant_quotient: Dict[str, int]


class SweepReportModel(ReportModel):
    """sweep の出力"""
    config: SweepModel
    instances_total: int = Field(ge=0)
    instances_run: int = Field(ge=0)
    instances_skipped: int = Field(ge=0)
    hypothesis_holds: int = Field(ge=0)
    counterexamples: int = Field(ge=0)
    invariant_quotient_not_gorenstein: int = Field(ge=0)
    a_invariant_distribution: DistributionModel
    unrealizable_cells: List[Dict[str, Any]]
    skipped: List[SkippedInstanceModel]
    instances: List[SweepInstanceModel]

    @model_validator(mode="after")
    def _counts_add_up(self) -> 'SweepReportModel':
        if self.instances_run != len(self.instances) or self.instances_skipped != len(self.skipped):
            raise ValueError("instance counts disagree with the listed instances")
        if self.instances_run + self.instances_skipped != self.instances_total:
            raise ValueError("run and skipped instances must add up to the total")
        return self
