"""
逆系（inverse system）による次数付きイデアル I(φ) の構成

I_j = {a ∈ A_j : φ(a A_{m-j}) = 0}、I_m = ker φ、I_0 = 0、j > m では I_j = A_j。
"""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, List, Sequence, Tuple

from src.core.linalg import MatrixK, Subspace, kernel
from src.core.polyring import HPoly, PolyRing
from src.utils.error_handler import DimensionMismatchError, InvalidDegreeError, SpecError

from .functional import Functional

if TYPE_CHECKING:
    from src.core.action import GAction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedIdeal:
    """
    斉次イデアル I = ⊕ I_d

    Attributes:
        ring: 多項式環
        top: これより上の次数では I_d = A_d
        pieces: d = 0..top の I_d（A_d の座標の部分空間）
    """
    ring: PolyRing
    top: int
    pieces: Tuple[Subspace, ...]

    def __post_init__(self) -> None:
        if self.top < 0 or len(self.pieces) != self.top + 1:
            raise DimensionMismatchError(f"graded ideal with top {self.top} needs {self.top + 1} pieces")
        for d, piece in enumerate(self.pieces):
            if piece.ambient_dim != self.ring.dim(d) or piece.field != self.ring.field:
                raise DimensionMismatchError(f"piece {d} does not live in A_{d}")

    def piece(self, d: int) -> Subspace:
        if d < 0:
            raise InvalidDegreeError(f"negative degree {d}")
        if d > self.top:
            return Subspace.full(self.ring.field, self.ring.dim(d))
        return self.pieces[d]

    def dims(self) -> List[int]:
        return [p.dim for p in self.pieces]

    def contains(self, f: HPoly) -> bool:
        if f.ring != self.ring:
            raise DimensionMismatchError("polynomial is not in the ring of the ideal")
        if f.degree > self.top:
            return True
        return self.pieces[f.degree].contains(f.coeffs)

    def basis(self, d: int) -> List[HPoly]:
        return [HPoly(self.ring, d, v) for v in self.piece(d).basis]

    def check_closure(self) -> bool:
        """
        X_i I_d ⊂ I_{d+1} が d < top の全ての次数で成り立つか
        """
        for d in range(self.top):
            upper = self.pieces[d + 1]
            for u in self.pieces[d].basis:
                for i in range(self.ring.n):
                    if not upper.contains(self.ring.multiply_by_variable(i, d, u)):
                        return False
        return True

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.ring.n,
            "field": self.ring.field.to_json(),
            "top": self.top,
            "pieces": [
                {
                    "degree": d,
                    "dim": piece.dim,
                    "basis": [HPoly(self.ring, d, v).to_json() for v in piece.basis],
                }
                for d, piece in enumerate(self.pieces)
            ],
        }


def pairing_matrix(functional: Functional, j: int) -> MatrixK:
    """
    ペアリング行列 P_j

    行は ν ∈ basis(m-j)、列は μ ∈ basis(j)、成分は φ(μν)。

    Args:
        functional: 汎関数 φ（次数 m）
        j: 0 ≤ j ≤ m

    Returns:
        MatrixK: dim A_{m-j} × dim A_j 行列
    """
    m = functional.degree
    if not 0 <= j <= m:
        raise InvalidDegreeError(f"pairing degree {j} outside [0, {m}]")
    ring = functional.ring
    top_index = ring.basis(m)
    index = {mono: i for i, mono in enumerate(top_index)}
    cols = ring.basis(j)
    data = tuple(
        tuple(functional.coeffs[index[tuple(a + b for a, b in zip(mu, nu))]] for mu in cols)
        for nu in ring.basis(m - j)
    )
    return MatrixK(ring.field, len(data), len(cols), data)


def build_inverse_system(functional: Functional) -> GradedIdeal:
    """
    汎関数 φ から Gorenstein イデアル I(φ) を構成する

    Args:
        functional: 非自明な汎関数 φ: A_m → k

    Returns:
        GradedIdeal: top = m のイデアル
    """
    ring = functional.ring
    m = functional.degree
    pieces: List[Subspace] = [Subspace.zero(ring.field, 1)]
    for j in range(1, m + 1):
        pieces.append(kernel(pairing_matrix(functional, j)))
    ideal = GradedIdeal(ring, m, tuple(pieces))
    logger.debug(f"逆系を構成しました: m={m}, dim I_j={ideal.dims()}")
    return ideal


def check_g_invariance(ideal: GradedIdeal, action: 'GAction') -> bool:
    """
    全ての生成元 σ と各成分の基底 u について σ·u が同じ成分に入るか

    Args:
        ideal: 斉次イデアル
        action: 群作用

    Returns:
        bool: G 不変かどうか
    """
    if action.ring != ideal.ring:
        raise DimensionMismatchError("ideal and action live on different rings")
    for gi in action.group.generator_indices():
        for d, piece in enumerate(ideal.pieces):
            if piece.is_zero():
                continue
            m = action.action_matrix(gi, d)
            for u in piece.basis:
                if not piece.contains(m.apply(u)):
                    return False
    return True


def ideal_from_generators(ring: PolyRing, generators: Sequence[HPoly], top: int) -> GradedIdeal:
    """
    斉次な生成元で生成され、top より上の次数では全体となるイデアル

    Args:
        ring: 多項式環
        generators: 斉次多項式
        top: 明示的に持つ最大次数

    Returns:
        GradedIdeal: 生成元の単項式倍が張るイデアル
    """
    for g in generators:
        if g.ring != ring:
            raise SpecError("generator is not in the ring")
    pieces = []
    for d in range(top + 1):
        vectors = []
        for g in generators:
            if g.degree <= d:
                for mono in ring.basis(d - g.degree):
                    vectors.append((ring.monomial(mono) * g).coeffs)
        pieces.append(Subspace.span(ring.field, ring.dim(d), vectors))
    return GradedIdeal(ring, top, tuple(pieces))
