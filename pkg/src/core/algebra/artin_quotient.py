"""
アルティン次数付き代数 A/Q

商空間 (A/Q)_d の座標は Q_d の非ピボット列（補空間の単項式）で取り、
剰余は RREF 基底による簡約で求める。
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.core.field import FieldSpec
from src.core.linalg import MatrixK, Subspace, Vector, kernel
from src.core.invsys import GradedIdeal
from src.core.polyring import HPoly, PolyRing
from src.utils.error_handler import DegenerateQuotientError, DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GorensteinVerdict:
    """
    Gorenstein 判定の結果

    Attributes:
        is_gorenstein: ソークルの全次元が 1 か
        socle_dims: 次数ごとのソークルの次元
        socle_degree: ソークルが一つの次数に集中していればその次数
        a_invariant: 0 でない成分の最大次数
        hilbert: 次数ごとの次元
    """
    is_gorenstein: bool
    socle_dims: Tuple[int, ...]
    socle_degree: Optional[int]
    a_invariant: int
    hilbert: Tuple[int, ...]

    @classmethod
    def from_dims(cls, hilbert: Sequence[int], socle_dims: Sequence[int]) -> 'GorensteinVerdict':
        nonzero = [d for d, s in enumerate(socle_dims) if s]
        socle_degree = nonzero[0] if len(nonzero) == 1 else None
        a_invariant = max((d for d, h in enumerate(hilbert) if h), default=0)
        return cls(sum(socle_dims) == 1, tuple(socle_dims), socle_degree, a_invariant, tuple(hilbert))

    def hilbert_is_symmetric(self) -> bool:
        """h_d = h_{a-d}"""
        h = self.hilbert[:self.a_invariant + 1]
        return h == h[::-1]

    def to_dict(self, dims_key: str = "hilbert") -> Dict[str, Any]:
        return {
            dims_key: list(self.hilbert),
            "gorenstein": self.is_gorenstein,
            "socle_degree": self.socle_degree,
            "a_invariant": self.a_invariant,
        }


def hilbert_series_string(hilbert: Sequence[int], variable: str = "z") -> str:
    """
    ヒルベルト級数を "1+2z+2z^2+z^3" の形に整形する
    """
    terms = []
    for d, h in enumerate(hilbert):
        if h == 0:
            continue
        if d == 0:
            terms.append(str(h))
            continue
        power = variable if d == 1 else f"{variable}^{d}"
        terms.append(power if h == 1 else f"{h}{power}")
    return "+".join(terms) or "0"


class ArtinQuotient:
    """
    斉次イデアル Q による商 A/Q

    Q_0 = 0 を要求し（h_0 = 1）、top より上の次数は 0 として扱う。
    """

    def __init__(self, ideal: GradedIdeal):
        """
        初期化

        Args:
            ideal: 斉次イデアル Q

        Raises:
            DegenerateQuotientError: Q_0 ≠ 0（Q = A）の場合
        """
        if not ideal.piece(0).is_zero():
            raise DegenerateQuotientError("ideal contains the constants, so the quotient is zero")
        self.ideal = ideal
        self.ring: PolyRing = ideal.ring
        self.top = ideal.top
        self.complements: Tuple[Tuple[int, ...], ...] = tuple(
            ideal.piece(d).complement_coords() for d in range(self.top + 1)
        )
        self.hilbert: Tuple[int, ...] = tuple(len(c) for c in self.complements)
        self._socle: Optional[Tuple[Subspace, ...]] = None
        logger.debug(f"商環を構成しました: ヒルベルト関数={list(self.hilbert)}")

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def total_dim(self) -> int:
        return sum(self.hilbert)

    # --- 正規形 ---

    def reduce_coords(self, d: int, coords: Sequence[Any]) -> Vector:
        """A_d の座標を (A/Q)_d の座標に射影する（d > top なら空）"""
        if d > self.top:
            return ()
        if len(coords) != self.ring.dim(d):
            raise DimensionMismatchError(f"{len(coords)} coordinates for A_{d}")
        residue = self.ideal.piece(d).reduce(coords)
        return tuple(residue[c] for c in self.complements[d])

    def reduce(self, f: HPoly) -> Vector:
        """
        f を (A/Q)_d の座標に簡約する

        Args:
            f: 斉次多項式

        Returns:
            商の基底に関する座標（次数が top を超えれば空ベクトル）
        """
        if f.ring != self.ring:
            raise DimensionMismatchError("polynomial is not in the ring of the quotient")
        return self.reduce_coords(f.degree, f.coeffs)

    def lift_coords(self, d: int, u: Sequence[Any]) -> Vector:
        """商の座標を補空間の単項式で A_d に持ち上げる"""
        if len(u) != self.hilbert[d]:
            raise DimensionMismatchError(f"{len(u)} coordinates for (A/Q)_{d} of dimension {self.hilbert[d]}")
        out = [self.field.zero()] * self.ring.dim(d)
        for c, x in zip(self.complements[d], u):
            out[c] = x
        return tuple(out)

    def lift(self, d: int, u: Sequence[Any]) -> HPoly:
        return HPoly(self.ring, d, self.lift_coords(d, u))

    def basis_monomials(self, d: int) -> List[HPoly]:
        """(A/Q)_d の基底（補空間の単項式）"""
        return [self.ring.monomial(self.ring.basis(d)[c]) for c in self.complements[d]]

    def multiply(self, d: int, u: Sequence[Any], e: int, w: Sequence[Any]) -> Vector:
        """商の元の積 u·w を (A/Q)_{d+e} の座標で返す"""
        return self.reduce(self.lift(d, u) * self.lift(e, w))

    # --- ソークル ---

    def variable_map(self, i: int, d: int) -> MatrixK:
        """X_i 倍写像 (A/Q)_d → (A/Q)_{d+1} の行列"""
        rows = self.hilbert[d + 1] if d + 1 <= self.top else 0
        columns = []
        for c in self.complements[d]:
            unit = [self.field.zero()] * self.ring.dim(d)
            unit[c] = self.field.one()
            shifted = self.ring.multiply_by_variable(i, d, unit)
            columns.append(self.reduce_coords(d + 1, shifted))
        return MatrixK.from_columns(self.field, columns, rows)

    def socle(self) -> Tuple[Subspace, ...]:
        """
        ソークル (0 : m) を次数ごとに求める

        次数 d の成分は全ての変数倍写像の積み重ねの零空間。次数 top は全体がソークル。

        Returns:
            d = 0..top の (A/Q)_d 座標の部分空間
        """
        if self._socle is not None:
            return self._socle
        k = self.field
        pieces = []
        for d in range(self.top + 1):
            h = self.hilbert[d]
            if d == self.top or h == 0:
                pieces.append(Subspace.full(k, h))
                continue
            blocks = [self.variable_map(i, d) for i in range(self.ring.n)]
            pieces.append(kernel(MatrixK.vstack(k, blocks, h)))
        self._socle = tuple(pieces)
        return self._socle

    def gorenstein_verdict(self) -> GorensteinVerdict:
        """
        ソークルの次元から Gorenstein 判定と a 不変量を求める
        """
        verdict = GorensteinVerdict.from_dims(self.hilbert, [s.dim for s in self.socle()])
        logger.debug(
            f"A/Q の判定: gorenstein={verdict.is_gorenstein}, ソークル={list(verdict.socle_dims)}, "
            f"a={verdict.a_invariant}"
        )
        return verdict

    def hilbert_series_string(self) -> str:
        return hilbert_series_string(self.hilbert)


def quotient(ideal: GradedIdeal) -> ArtinQuotient:
    """商環 A/Q を作る"""
    return ArtinQuotient(ideal)
