"""
不変部分環の商に関する定理の検証パイプライン

仮定: G が非自明な一次元表現を持たない。前提: A/Q が Gorenstein で Q が G 不変。
結論: A^G/Q^G も Gorenstein で a(A/Q) = a(A^G/Q^G)。
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from src.core.action import GAction
from src.core.algebra import ArtinQuotient, GorensteinVerdict, InvariantQuotient, socle_character
from src.core.field import FieldSpec
from src.core.group import (
    Character,
    MatrixGroup,
    commutator_subgroup,
    enumerate_characters,
    group_from_literals,
    has_nontrivial_onedim_rep,
)
from src.core.invsys import (
    Functional,
    GradedIdeal,
    build_inverse_system,
    check_g_invariance,
    random_functional_in,
)
from src.utils.error_handler import InstanceSkipped, SpecError, TheoremCounterexampleError

logger = logging.getLogger(__name__)

SKIP_INVARIANTS_VANISH = "invariants_vanish_in_degree_m"
SKIP_NO_EQUIVARIANT = "no_equivariant_functional_in_degree_m"


@dataclass(frozen=True)
class InstanceSpec:
    """
    検証する一つのインスタンス

    values が None なら乱数で汎関数を作る。乱数は (seed, cell, index) から再現できる。

    Attributes:
        field: 係数体
        generators: 生成元（リテラル行列）
        degree: 汎関数の次数 m
        values: 汎関数の値 {"[3,0]": "1", ...}
        character: 指標の生成元での値
        seed: 乱数の種
        cell: スイープのセル番号
        index: セル内のインスタンス番号
        twisted: 非自明な指標でねじった汎関数を選ぶか
        bound: ℚ の乱数係数の絶対値上限
    """
    field: FieldSpec
    generators: Tuple[Any, ...]
    degree: int
    values: Optional[Mapping[str, Any]] = None
    character: Optional[Tuple[Any, ...]] = None
    seed: int = 0
    cell: int = 0
    index: int = 0
    twisted: bool = False
    bound: int = 2

    def rng(self) -> np.random.Generator:
        return np.random.default_rng([self.seed, self.cell, self.index])


@dataclass
class VerdictReport:
    """
    一つのインスタンスの検証結果

    theorem_satisfied は「仮定 ∧ 前提 ⇒ 結論」の真偽、counterexample はその否定。
    """
    degree: int
    hypothesis_holds: bool
    witness_prime: Optional[int]
    r: int
    group_order: int
    commutator_order: int
    functional_equivariant: bool
    ideal_g_invariant: bool
    quotient: GorensteinVerdict
    invariant_quotient: Optional[GorensteinVerdict]
    socle_character_trivial: Optional[bool]
    induced_fixed_dims_match: Optional[bool]
    theorem_satisfied: bool
    counterexample: bool
    functional: Dict[str, Any] = dc_field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        iq = self.invariant_quotient
        return {
            "degree": self.degree,
            "hypothesis_holds": self.hypothesis_holds,
            "witness_prime": self.witness_prime,
            "r": self.r,
            "group_order": self.group_order,
            "commutator_order": self.commutator_order,
            "functional": self.functional,
            "functional_equivariant": self.functional_equivariant,
            "ideal_g_invariant": self.ideal_g_invariant,
            "quotient": self.quotient.to_dict(),
            "invariant_quotient": None if iq is None else iq.to_dict(dims_key="dims"),
            "socle_character_trivial": self.socle_character_trivial,
            "induced_fixed_dims_match": self.induced_fixed_dims_match,
            "theorem_satisfied": self.theorem_satisfied,
            "counterexample": self.counterexample,
        }


def _choose_character(group: MatrixGroup, rng: np.random.Generator) -> Character:
    nontrivial = [c for c in enumerate_characters(group) if not c.is_trivial()]
    if not nontrivial:
        return Character.trivial(group)
    return nontrivial[int(rng.integers(0, len(nontrivial)))]


def build_functional(spec: InstanceSpec, action: GAction) -> Functional:
    """
    インスタンスの汎関数を作る

    明示値があればそれを使う。無ければ、自明指標では A^G_m 上のランダムな η から
    φ = η∘ρ を作り、ねじる場合は χ 同変な汎関数の空間からランダムに選ぶ。

    Raises:
        InstanceSkipped: 該当する汎関数が存在しない場合
    """
    group = action.group
    chi = None
    if spec.character is not None:
        chi = Character.from_generator_values(group, list(spec.character))
    if spec.values is not None:
        return Functional.from_values(action.ring, spec.degree, spec.values, chi)

    rng = spec.rng()
    k = group.field
    if chi is None and spec.twisted:
        chi = _choose_character(group, rng)
    if chi is not None:
        space = action.equivariant_functionals(spec.degree, chi)
        if space.is_zero():
            raise InstanceSkipped(SKIP_NO_EQUIVARIANT)
        return random_functional_in(space, action.ring, spec.degree, rng, spec.bound, chi)

    invariants = action.fixed_subspace(spec.degree)
    if invariants.is_zero():
        raise InstanceSkipped(SKIP_INVARIANTS_VANISH)
    values = k.sample_values(spec.bound)
    while True:
        eta = [values[int(i)] for i in rng.integers(0, len(values), size=invariants.dim)]
        if any(v != 0 for v in eta):
            break
    return action.lift_functional(spec.degree, eta)


def evaluate(group: MatrixGroup, action: GAction, functional: Functional) -> VerdictReport:
    """
    与えられた群と汎関数でパイプライン全体を実行する

    Args:
        group: 群 G
        action: G の作用
        functional: 汎関数 φ

    Returns:
        VerdictReport: 検証結果
    """
    onedim = has_nontrivial_onedim_rep(group)
    hypothesis = not onedim.exists
    equivariant = action.check_equivariant(functional)
    ideal: GradedIdeal = build_inverse_system(functional)
    g_invariant = check_g_invariance(ideal, action)
    base = ArtinQuotient(ideal)
    qv = base.gorenstein_verdict()

    iv = None
    socle_trivial = None
    fixed_match = None
    if g_invariant:
        bq = InvariantQuotient(base, action)
        iv = bq.gorenstein_verdict()
        fixed_match = bq.induced_fixed_dims_match()
        if qv.is_gorenstein:
            socle_trivial = socle_character(base, action).is_trivial()

    premises = qv.is_gorenstein and g_invariant
    conclusion = iv is not None and iv.is_gorenstein and iv.a_invariant == qv.a_invariant
    counterexample = hypothesis and premises and not conclusion
    return VerdictReport(
        degree=functional.degree,
        hypothesis_holds=hypothesis,
        witness_prime=onedim.witness_prime,
        r=onedim.r,
        group_order=group.order,
        commutator_order=commutator_subgroup(group).order,
        functional_equivariant=equivariant,
        ideal_g_invariant=g_invariant,
        quotient=qv,
        invariant_quotient=iv,
        socle_character_trivial=socle_trivial,
        induced_fixed_dims_match=fixed_match,
        theorem_satisfied=not counterexample,
        counterexample=counterexample,
        functional=functional.to_json(),
    )


def verify_theorem(
    spec: InstanceSpec,
    strict: bool = True,
    group: Optional[MatrixGroup] = None,
    action: Optional[GAction] = None,
) -> VerdictReport:
    """
    インスタンスについて定理の結論を検証する

    Args:
        spec: インスタンス
        strict: 反例で例外を送出するか
        group: 構築済みの群（スイープでの再利用用）
        action: 構築済みの作用

    Returns:
        VerdictReport: 検証結果

    Raises:
        SpecError: インスタンスが不正な場合
        TrivialGroupError: 自明群の場合
        CharacteristicDividesOrderError: 標数が位数を割る場合
        InstanceSkipped: 汎関数が作れない場合
        TheoremCounterexampleError: strict で反例が見つかった場合
    """
    if group is None:
        if not spec.generators:
            raise SpecError("instance needs at least one generator")
        group = group_from_literals(spec.field, spec.generators)
    if action is None:
        action = GAction(group)
    functional = build_functional(spec, action)
    report = evaluate(group, action, functional)
    if report.counterexample:
        logger.critical(f"反例を検出しました: {report.to_dict()}")
        if strict:
            raise TheoremCounterexampleError("theorem conclusion failed although hypothesis and premises hold")
    else:
        logger.debug(
            f"検証完了: m={spec.degree}, 仮定={report.hypothesis_holds}, "
            f"結論成立={report.theorem_satisfied}"
        )
    return report
