"""
非自明な一次元表現の存在判定

r = |G| / |[G, G]| の素因数 p について k が 1 の原始 p 乗根を持つかで決まる。
総当たりのオラクルと、体ごとの十分条件も併せて提供する。
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from sympy import primefactors

from src.core.field import has_primitive_pth_root
from src.core.field.exact_field import Raw
from src.utils.error_handler import CharacterError, InvalidFieldError, NonFiniteFieldError

from .character import Character
from .matrix_group import MatrixGroup, commutator_subgroup

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_ORDER = 101


@dataclass(frozen=True)
class OneDimRepVerdict:
    """
    判定結果

    Attributes:
        exists: 非自明な準同型 G → k^* が存在するか
        witness_prime: 最小の証拠となる素数
        r: |G| / |[G, G]|
    """
    exists: bool
    witness_prime: Optional[int]
    r: int

    def to_dict(self) -> Dict[str, Any]:
        return {"exists": self.exists, "witness_prime": self.witness_prime, "r": self.r}


def has_nontrivial_onedim_rep(group: MatrixGroup) -> OneDimRepVerdict:
    """
    非自明な一次元表現が存在するかを判定する

    Args:
        group: 群 G

    Returns:
        OneDimRepVerdict: exists, witness_prime, r
    """
    derived = commutator_subgroup(group)
    r = group.order // derived.order
    for p in primefactors(r):
        if has_primitive_pth_root(group.field, p):
            logger.debug(f"一次元表現あり: r={r}, p={p}")
            return OneDimRepVerdict(True, int(p), r)
    return OneDimRepVerdict(False, None, r)


def _candidate_values(group: MatrixGroup) -> List[Any]:
    k = group.field
    if k.is_rational:
        # ℚ^* の有限位数の元は ±1
        return [k.one(), k.neg(k.one())]
    return [v for v in range(1, k.p) if k.power(v, group.order) == 1]  # type: ignore[arg-type]


def enumerate_characters(group: MatrixGroup) -> List[Character]:
    """
    全ての準同型 G → k^* を列挙する

    生成元への値の割り当てを総当たりし、語に沿って拡張したうえで
    Cayley 表全体で検査する。先頭は常に自明指標。

    Args:
        group: 群 G

    Returns:
        List[Character]: 指標のリスト
    """
    candidates = _candidate_values(group)
    found: List[Character] = []
    seen = set()
    for assignment in itertools.product(candidates, repeat=len(group.generators)):
        try:
            chi = Character.from_generator_values(group, assignment)
        except CharacterError:
            continue
        if chi.values not in seen:
            seen.add(chi.values)
            found.append(chi)
    found.sort(key=lambda c: (not c.is_trivial(), c.values))
    return found


def _element_maps(group: MatrixGroup) -> List[Tuple[Raw, ...]]:
    # 元を番号順に深さ優先で割り当てる。g の候補は x^{ord g} = 1 を満たす 𝔽_q^* の元
    k = group.field
    n = group.order
    choices = [
        [v for v in range(1, k.p) if k.power(v, group.element_order(i)) == 1]  # type: ignore[arg-type]
        for i in range(n)
    ]
    values: List[Raw] = [k.zero()] * n
    found: List[Tuple[Raw, ...]] = []

    def consistent(i: int) -> bool:
        for a in range(i + 1):
            for b in range(i + 1):
                c = group.mul(a, b)
                if c <= i and i in (a, b, c) and values[c] != k.mul(values[a], values[b]):
                    return False
        return True

    def assign(i: int) -> None:
        if i == n:
            found.append(tuple(values))
            return
        for v in choices[i]:
            values[i] = v
            if consistent(i):
                assign(i + 1)

    assign(0)
    return found


def enumerate_onedim_reps_oracle(group: MatrixGroup, max_order: Optional[int] = None) -> List[Character]:
    """
    有限体 𝔽_q 上の群について一次元表現を総当たりで列挙する

    生成元は使わず、元から 𝔽_q^* への写像を全て辿って準同型だけを残す。

    Args:
        group: 𝔽_q 上の群
        max_order: q の上限（None なら設定値 oracle.max_field_order）

    Returns:
        List[Character]: 全ての準同型（先頭は自明指標）

    Raises:
        NonFiniteFieldError: 体が有限でない場合
        InvalidFieldError: q が上限を超える場合
    """
    k = group.field
    if k.is_rational:
        raise NonFiniteFieldError("the one-dimensional representation oracle needs a finite field")
    if max_order is None:
        from src.config import get_settings
        max_order = int(get_settings().get("oracle", "max_field_order", DEFAULT_ORACLE_MAX_ORDER))
    if k.p > max_order:  # type: ignore[operator]
        raise InvalidFieldError(f"oracle supports fields of order at most {max_order}, got {k.p}")
    found = [Character(group, values) for values in _element_maps(group)]
    found.sort(key=lambda c: (not c.is_trivial(), c.values))
    logger.debug(f"オラクル: 𝔽_{k.p} 上で準同型 {len(found)} 個")
    return found


def table_sufficient_condition(group: MatrixGroup) -> bool:
    """
    非自明な一次元表現が存在しないための体ごとの十分条件

    ℚ: |G| が奇数。𝔽_2: G が完全群または |G| が奇数。
    𝔽_q: G が完全群、または |G| の全ての素因数 p で p ∤ q-1。

    Args:
        group: 群 G

    Returns:
        bool: 十分条件が成り立つか
    """
    k = group.field
    primes = primefactors(group.order)
    if k.is_rational:
        return 2 not in primes
    perfect = commutator_subgroup(group).order == group.order
    if k.p == 2:
        return perfect or 2 not in primes
    return perfect or all((k.p - 1) % p != 0 for p in primes)  # type: ignore[operator]
