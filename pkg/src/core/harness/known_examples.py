"""
既知の計算例の再現

G = {±I_2} ⊂ GL_2(ℚ) と指標 η(σ) = -1 でねじった三次の汎関数二つについて
パイプライン全体を実行し、既知の値と全項目を突き合わせる。
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Sequence, Tuple

from src.core.action import GAction
from src.core.algebra import ArtinQuotient
from src.core.field import FieldSpec
from src.core.group import character_or_trivial
from src.core.invsys import Functional, build_inverse_system
from src.core.linalg import Subspace
from src.core.polyring import PolyRing
from src.utils.error_handler import SpecError

from .group_zoo import zoo_group
from .verifier import VerdictReport, evaluate

logger = logging.getLogger(__name__)

EXAMPLE_IDS = ("ex34", "ex35")


@dataclass(frozen=True)
class ExampleData:
    """
    再現する例の入力と既知の値

    Attributes:
        values: 汎関数の値
        character: 指標の生成元での値
        ideal: 次数ごとのイデアルの生成元 {次数: [{単項式: 係数}]}
        hilbert: A/Q のヒルベルト関数
        quotient_gorenstein: A/Q が Gorenstein か
        socle_degree: A/Q のソークルの次数
        a_quotient: a(A/Q)
        invariant_dims: A^G/Q^G の次元
        invariant_gorenstein: A^G/Q^G が Gorenstein か
        a_invariant_quotient: a(A^G/Q^G)
        notes: 補足
    """
    values: Dict[str, str]
    character: Tuple[str, ...]
    ideal: Dict[int, List[Dict[str, int]]]
    hilbert: Tuple[int, ...]
    quotient_gorenstein: bool
    socle_degree: int
    a_quotient: int
    invariant_dims: Tuple[int, ...]
    invariant_gorenstein: bool
    a_invariant_quotient: int
    notes: Tuple[str, ...] = ()


EXAMPLES: Dict[str, ExampleData] = {
    "ex34": ExampleData(
        values={"[3,0]": "1", "[2,1]": "1", "[1,2]": "0", "[0,3]": "0"},
        character=("-1",),
        ideal={
            1: [],
            2: [{"[0,2]": 1}],
            3: [{"[3,0]": 1, "[2,1]": -1}, {"[1,2]": 1}, {"[0,3]": 1}],
        },
        hilbert=(1, 2, 2, 1),
        quotient_gorenstein=True,
        socle_degree=3,
        a_quotient=3,
        invariant_dims=(1, 0, 2, 0),
        invariant_gorenstein=False,
        a_invariant_quotient=2,
        notes=(
            "the degree-3 generator printed as 'X_3 - X^2Y' is read as X^3 - X^2Y, "
            "the only reading consistent with alpha(X^3) = alpha(X^2Y) = 1",
        ),
    ),
    "ex35": ExampleData(
        values={"[3,0]": "1", "[2,1]": "0", "[1,2]": "0", "[0,3]": "0"},
        character=("-1",),
        ideal={
            1: [{"[0,1]": 1}],
            2: [{"[1,1]": 1}, {"[0,2]": 1}],
            3: [{"[2,1]": 1}, {"[1,2]": 1}, {"[0,3]": 1}],
        },
        hilbert=(1, 1, 1, 1),
        quotient_gorenstein=True,
        socle_degree=3,
        a_quotient=3,
        invariant_dims=(1, 0, 1, 0),
        invariant_gorenstein=True,
        a_invariant_quotient=2,
        notes=("a(A^G/I^G) = 2 < 3 = a(A/I)",),
    ),
}


@dataclass
class ReplicationReport:
    """
    再現結果

    Attributes:
        example: 例の ID
        report: パイプラインの検証結果
        ideal: 計算したイデアル（JSON）
        hilbert_series: A/Q のヒルベルト級数
        mismatches: 既知の値との食い違い
        notes: 補足
    """
    example: str
    report: VerdictReport
    ideal: Dict[str, Any]
    hilbert_series: str
    mismatches: List[Dict[str, Any]] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)

    @property
    def matched(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "example": self.example,
            "matched": self.matched,
            "mismatches": self.mismatches,
            "hilbert_series": self.hilbert_series,
            "ideal": self.ideal,
            "report": self.report.to_dict(),
            "notes": self.notes,
        }


def _expected_piece(ring: PolyRing, degree: int, gens: Sequence[Dict[str, int]]) -> Subspace:
    polys = [ring.from_json(g) for g in gens]
    return Subspace.span(ring.field, ring.dim(degree), [p.coeffs for p in polys])


def replicate_example(example_id: str, force_trivial_character: bool = False) -> ReplicationReport:
    """
    既知の例を再現して既知の値と突き合わせる

    Args:
        example_id: "ex34" または "ex35"
        force_trivial_character: 指標を自明に置き換えるか（同変性が崩れることの確認用）

    Returns:
        ReplicationReport: 食い違いの一覧を含む結果

    Raises:
        SpecError: 未知の ID の場合
    """
    if example_id not in EXAMPLES:
        raise SpecError(f"unknown example {example_id!r}; expected one of {', '.join(EXAMPLE_IDS)}")
    data = EXAMPLES[example_id]
    k = FieldSpec.rationals()
    group = zoo_group("pm_identity", k)
    action = GAction(group)
    ring = action.ring
    chi = character_or_trivial(group, None if force_trivial_character else list(data.character))
    functional = Functional.from_values(ring, 3, data.values, chi)
    ideal = build_inverse_system(functional)
    base = ArtinQuotient(ideal)
    report = evaluate(group, action, functional)

    mismatches: List[Dict[str, Any]] = []

    def expect(quantity: str, expected: Any, actual: Any) -> None:
        if expected != actual:
            mismatches.append({"quantity": quantity, "expected": expected, "actual": actual})

    expect("functional_equivariant", True, report.functional_equivariant)
    expect("hypothesis_holds", False, report.hypothesis_holds)
    expect("ideal_g_invariant", True, report.ideal_g_invariant)
    for degree, gens in sorted(data.ideal.items()):
        expected_piece = _expected_piece(ring, degree, gens)
        if ideal.piece(degree) != expected_piece:
            mismatches.append({
                "quantity": f"I_{degree}",
                "expected": [ring.from_coords(degree, v).to_json() for v in expected_piece.basis],
                "actual": [p.to_json() for p in ideal.basis(degree)],
            })
    qv = report.quotient
    expect("hilbert", list(data.hilbert), list(qv.hilbert))
    expect("quotient_gorenstein", data.quotient_gorenstein, qv.is_gorenstein)
    expect("socle_degree", data.socle_degree, qv.socle_degree)
    expect("a_quotient", data.a_quotient, qv.a_invariant)
    iv = report.invariant_quotient
    expect("invariant_dims", list(data.invariant_dims), None if iv is None else list(iv.hilbert))
    expect("invariant_gorenstein", data.invariant_gorenstein, None if iv is None else iv.is_gorenstein)
    expect("a_invariant_quotient", data.a_invariant_quotient, None if iv is None else iv.a_invariant)

    result = ReplicationReport(
        example=example_id,
        report=report,
        ideal=ideal.to_json(),
        hilbert_series=base.hilbert_series_string(),
        mismatches=mismatches,
        notes=list(data.notes),
    )
    if result.matched:
        logger.info(f"{example_id} を再現しました: ヒルベルト級数 {result.hilbert_series}")
    else:
        logger.warning(f"{example_id} の再現で {len(mismatches)} 件の食い違いがあります")
    return result
