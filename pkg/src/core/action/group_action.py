"""
G の A への線形作用

変数の置換は X_j ↦ Σ_i σ_ij X_i（左作用）。A_1 上の作用行列は σ 自身で、
作用行列は乗法的 M_{στ,d} = M_{σ,d} M_{τ,d}。
"""

import logging
import threading
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.core.field import FieldSpec
from src.core.group import Character, GMatrix, MatrixGroup
from src.core.invsys.functional import Functional
from src.core.linalg import MatrixK, Subspace, Vector, kernel
from src.core.polyring import HPoly, PolyRing
from src.utils.error_handler import (
    CharacterError,
    DimensionMismatchError,
    InvariantsVanishError,
    ZeroFunctionalError,
)

Element = Union[GMatrix, int]


class GAction:
    """
    有限群 G の多項式環 A への作用

    (元, 次数) ごとの作用行列・Reynolds 行列・固定部分空間をメモ化する。
    メモはロックで保護され、複数スレッドから共有できる。
    """

    def __init__(self, group: MatrixGroup, ring: Optional[PolyRing] = None):
        """
        初期化

        Args:
            group: 群 G
            ring: 多項式環（None なら group と同じ体・変数の個数）

        Raises:
            DimensionMismatchError: 変数の個数や体が群と合わない場合
        """
        self.group = group
        self.ring = ring if ring is not None else PolyRing(group.field, group.n)
        if self.ring.n != group.n or self.ring.field != group.field:
            raise DimensionMismatchError(
                f"group acts on {group.n} variables over {group.field}, ring has {self.ring.n} over {self.ring.field}"
            )
        self.logger = logging.getLogger(__name__)
        self._lock = threading.RLock()
        self._images: Dict[Tuple[int, int], List[Vector]] = {}
        self._matrices: Dict[Tuple[int, int], MatrixK] = {}
        self._reynolds: Dict[int, MatrixK] = {}
        self._fixed: Dict[int, Subspace] = {}

    @property
    def field(self) -> FieldSpec:
        return self.group.field

    def _element_index(self, g: Element) -> int:
        if isinstance(g, int):
            return g
        return self.group.index_of(g)

    # --- 作用行列 ---

    def _basis_images(self, i: int, d: int) -> List[Vector]:
        """σ_i による A_d の単項式基底の像（座標）"""
        key = (i, d)
        cached = self._images.get(key)
        if cached is not None:
            return cached
        k = self.field
        n = self.ring.n
        sigma = self.group.element(i)
        if d == 0:
            images = [(k.one(),)]
        else:
            forms = [self.ring.from_coords(1, sigma.matrix.column(j)) for j in range(n)]
            previous = self._basis_images(i, d - 1)
            images = []
            for m in self.ring.basis(d):
                j = next(idx for idx, e in enumerate(m) if e > 0)
                rest = tuple(e - 1 if idx == j else e for idx, e in enumerate(m))
                prev = self.ring.from_coords(d - 1, previous[self.ring.index(rest)])
                images.append((forms[j] * prev).coeffs)
        self._images[key] = images
        return images

    def action_matrix(self, g: Element, d: int) -> MatrixK:
        """
        f ↦ σ·f の A_d 上の行列（列は基底の像）

        Args:
            g: 群の元または元の位置
            d: 次数

        Returns:
            MatrixK: dim A_d 次の正方行列

        Raises:
            ElementNotInGroupError: g が群に属さない場合
        """
        i = self._element_index(g)
        key = (i, d)
        with self._lock:
            cached = self._matrices.get(key)
            if cached is None:
                cached = MatrixK.from_columns(self.field, self._basis_images(i, d), self.ring.dim(d))
                self._matrices[key] = cached
            return cached

    def apply(self, g: Element, f: HPoly) -> HPoly:
        """
        σ·f を返す

        Raises:
            ElementNotInGroupError: g が群に属さない場合
        """
        if f.ring != self.ring:
            raise DimensionMismatchError("polynomial is not in the ring acted on")
        m = self.action_matrix(g, f.degree)
        return HPoly(self.ring, f.degree, m.apply(f.coeffs))

    # --- Reynolds 作用素と不変式 ---

    def reynolds_matrix(self, d: int) -> MatrixK:
        """ρ = (1/|G|) Σ_σ M_σ の A_d 上の行列"""
        with self._lock:
            cached = self._reynolds.get(d)
            if cached is not None:
                return cached
            k = self.field
            total = MatrixK.zeros(k, self.ring.dim(d), self.ring.dim(d))
            for i in range(self.group.order):
                total = total + self.action_matrix(i, d)
            cached = total.scale(k.inv(k.normalize(self.group.order)))
            self._reynolds[d] = cached
            return cached

    def reynolds(self, f: HPoly) -> HPoly:
        """
        Reynolds 作用素 ρ(f) = (1/|G|) Σ_σ σ·f

        Args:
            f: 斉次多項式

        Returns:
            HPoly: A^G_d の元
        """
        r = self.reynolds_matrix(f.degree)
        return HPoly(self.ring, f.degree, r.apply(f.coeffs))

    def fixed_subspace(self, d: int) -> Subspace:
        """
        不変式の斉次成分 A^G_d

        生成元ごとの (M_σ - id) を積んだ行列の零空間として求める。
        """
        with self._lock:
            cached = self._fixed.get(d)
            if cached is not None:
                return cached
            eye = MatrixK.identity(self.field, self.ring.dim(d))
            blocks = [self.action_matrix(gi, d) - eye for gi in self.group.generator_indices()]
            cached = kernel(MatrixK.vstack(self.field, blocks, self.ring.dim(d)))
            self._fixed[d] = cached
            self.logger.debug(f"A^G_{d} の次元: {cached.dim} / {self.ring.dim(d)}")
            return cached

    def invariant_basis(self, d: int) -> List[HPoly]:
        return [HPoly(self.ring, d, v) for v in self.fixed_subspace(d).basis]

    # --- 汎関数の同変性 ---

    def _resolve_character(self, functional: Functional, character: Optional[Character]) -> Character:
        chi = character if character is not None else functional.character_on(self.group)
        if chi.group != self.group:
            raise CharacterError("character belongs to a different group")
        return chi

    def check_equivariant(self, functional: Functional, character: Optional[Character] = None) -> bool:
        """
        φ(σa) = χ(σ) φ(a) が全ての σ と A_m の単項式基底で成り立つか

        Args:
            functional: 汎関数 φ
            character: 指標 χ（None なら φ の指標）

        Returns:
            bool: 同変かどうか
        """
        if functional.ring != self.ring:
            raise DimensionMismatchError("functional is not defined on the ring acted on")
        chi = self._resolve_character(functional, character)
        k = self.field
        for i in range(self.group.order):
            pulled = self.action_matrix(i, functional.degree).apply_left(functional.coeffs)
            expected = tuple(k.mul(chi.values[i], c) for c in functional.coeffs)
            if pulled != expected:
                return False
        return True

    def lift_functional(self, m: int, eta_values: Sequence[Any]) -> Functional:
        """
        A^G_m 上の非自明な η から φ = η∘ρ を作る（自明指標）

        η は A^G_m の階段形基底に関する値で与える。

        Args:
            m: 次数
            eta_values: 基底ベクトルごとの η の値

        Returns:
            Functional: 同変な汎関数

        Raises:
            InvariantsVanishError: A^G_m = 0 の場合
            DimensionMismatchError: η の値の個数が合わない場合
            ZeroFunctionalError: η ≡ 0 の場合
        """
        space = self.fixed_subspace(m)
        if space.is_zero():
            raise InvariantsVanishError(f"A^G_{m} is zero")
        if len(eta_values) != space.dim:
            raise DimensionMismatchError(f"{len(eta_values)} values for A^G_{m} of dimension {space.dim}")
        k = self.field
        eta = [k.normalize(v) for v in eta_values]
        if all(v == 0 for v in eta):
            raise ZeroFunctionalError("eta must be non-trivial")
        r = self.reynolds_matrix(m)
        coeffs = [k.zero()] * r.cols
        for e, pivot in zip(eta, space.pivots):
            if e != 0:
                coeffs = [k.add(x, k.mul(e, y)) for x, y in zip(coeffs, r.data[pivot])]
        return Functional(self.ring, m, tuple(coeffs))

    def equivariant_functionals(self, m: int, character: Optional[Character] = None) -> Subspace:
        """
        χ 同変な汎関数 φ ∈ A_m^* 全体（生成元ごとの M_σ^T - χ(σ) id の零空間）
        """
        chi = character if character is not None else Character.trivial(self.group)
        if chi.group != self.group:
            raise CharacterError("character belongs to a different group")
        k = self.field
        dim = self.ring.dim(m)
        eye = MatrixK.identity(k, dim)
        blocks = [
            self.action_matrix(gi, m).transpose() - eye.scale(chi.values[gi])
            for gi in self.group.generator_indices()
        ]
        return kernel(MatrixK.vstack(k, blocks, dim))

    # --- 剰余環への誘導作用 ---

    def induced_action_matrix(self, g: Element, d: int, piece: Subspace) -> MatrixK:
        """
        G 不変な部分空間 Q_d による商 A_d / Q_d 上の誘導作用の行列

        商の座標は piece の非ピボット列。

        Args:
            g: 群の元
            d: 次数
            piece: イデアルの次数 d 成分

        Returns:
            MatrixK: h_d 次の正方行列
        """
        m = self.action_matrix(g, d)
        comp = piece.complement_coords()
        columns = []
        for c in comp:
            image = piece.reduce(m.column(c))
            columns.append(tuple(image[j] for j in comp))
        return MatrixK.from_columns(self.field, columns, len(comp))
