"""
不変部分環の商 A^G/Q^G

B_d は A^G_d を Q_d で簡約した (A/Q)_d の部分空間として表す（Q^G_d = Q_d ∩ A^G_d）。
B は標準次数付きではないので、ソークルは全ての正次数 e との積で判定する。
"""

import logging
from typing import List, Optional, Tuple

from src.core.action import GAction
from src.core.group import Character
from src.core.invsys import check_g_invariance
from src.core.linalg import MatrixK, Subspace, kernel
from src.utils.error_handler import CharacterError, DegenerateQuotientError, NonInvariantIdealError

from .artin_quotient import ArtinQuotient, GorensteinVerdict

logger = logging.getLogger(__name__)


class InvariantQuotient:
    """
    A^G/Q^G を (A/Q) の中の部分空間の族として持つ
    """

    def __init__(self, base: ArtinQuotient, action: GAction):
        """
        初期化

        Args:
            base: 商環 A/Q
            action: 群作用

        Raises:
            NonInvariantIdealError: Q が G 不変でない場合
        """
        if not check_g_invariance(base.ideal, action):
            raise NonInvariantIdealError("ideal is not G-invariant")
        self.base = base
        self.action = action
        self.top = base.top
        k = base.field
        self.pieces: Tuple[Subspace, ...] = tuple(
            Subspace.span(
                k,
                base.hilbert[d],
                [base.reduce_coords(d, v) for v in action.fixed_subspace(d).basis],
            )
            for d in range(self.top + 1)
        )
        self.dims: Tuple[int, ...] = tuple(p.dim for p in self.pieces)
        self._socle: Optional[Tuple[Subspace, ...]] = None
        logger.debug(f"不変部分環の商を構成しました: 次元={list(self.dims)}")

    def _products(self, d: int, e: int) -> List[MatrixK]:
        """B_d の基底係数 c ↦ (Σ c_k b_k)·w を B_e の基底 w ごとに並べた行列"""
        base = self.base
        k = base.field
        rows = base.hilbert[d + e]
        lifts = [base.lift(d, b) for b in self.pieces[d].basis]
        out = []
        for w in self.pieces[e].basis:
            w_lift = base.lift(e, w)
            columns = [base.reduce(b * w_lift) for b in lifts]
            out.append(MatrixK.from_columns(k, columns, rows))
        return out

    def socle(self) -> Tuple[Subspace, ...]:
        """
        B のソークル {u ∈ B_d : u·B_e = 0 (1 ≤ e ≤ top - d)}

        Returns:
            d = 0..top の (A/Q)_d 座標の部分空間
        """
        if self._socle is not None:
            return self._socle
        k = self.base.field
        result = []
        for d in range(self.top + 1):
            piece = self.pieces[d]
            blocks: List[MatrixK] = []
            for e in range(1, self.top - d + 1):
                blocks.extend(self._products(d, e))
            if piece.is_zero() or not blocks:
                result.append(piece)
                continue
            coeffs = kernel(MatrixK.vstack(k, blocks, piece.dim))
            vectors = []
            for c in coeffs.basis:
                v = [k.zero()] * piece.ambient_dim
                for ck, bk in zip(c, piece.basis):
                    if ck != 0:
                        v = [k.add(x, k.mul(ck, y)) for x, y in zip(v, bk)]
                vectors.append(v)
            result.append(Subspace.span(k, piece.ambient_dim, vectors))
        self._socle = tuple(result)
        return self._socle

    def gorenstein_verdict(self) -> GorensteinVerdict:
        """
        B = A^G/Q^G の Gorenstein 判定（a 不変量は b_d ≠ 0 となる最大次数）
        """
        verdict = GorensteinVerdict.from_dims(self.dims, [s.dim for s in self.socle()])
        logger.debug(
            f"A^G/Q^G の判定: gorenstein={verdict.is_gorenstein}, ソークル={list(verdict.socle_dims)}, "
            f"a={verdict.a_invariant}"
        )
        return verdict

    def induced_fixed_dims(self) -> Tuple[int, ...]:
        """
        (A/Q)_d への誘導作用の固定部分空間の次元
        """
        base = self.base
        k = base.field
        dims = []
        for d in range(self.top + 1):
            h = base.hilbert[d]
            if h == 0:
                dims.append(0)
                continue
            eye = MatrixK.identity(k, h)
            piece = base.ideal.piece(d)
            blocks = [
                self.action.induced_action_matrix(gi, d, piece) - eye
                for gi in self.action.group.generator_indices()
            ]
            dims.append(kernel(MatrixK.vstack(k, blocks, h)).dim)
        return tuple(dims)

    def induced_fixed_dims_match(self) -> bool:
        return self.induced_fixed_dims() == self.dims


def invariant_quotient(base: ArtinQuotient, action: GAction) -> InvariantQuotient:
    """A^G/Q^G を作る"""
    return InvariantQuotient(base, action)


def gorenstein_verdict_invariant(bq: InvariantQuotient) -> GorensteinVerdict:
    return bq.gorenstein_verdict()


def socle_character(base: ArtinQuotient, action: GAction) -> Character:
    """
    一次元のソークルへの G の作用 σ·u = a_σ u を指標として返す

    Args:
        base: Gorenstein な A/Q（Q は G 不変）
        action: 群作用

    Returns:
        Character: σ ↦ a_σ

    Raises:
        DegenerateQuotientError: ソークルが一次元でない場合
        NonInvariantIdealError: Q が G 不変でない場合
    """
    verdict = base.gorenstein_verdict()
    if not verdict.is_gorenstein or verdict.socle_degree is None:
        raise DegenerateQuotientError("socle is not one-dimensional")
    if not check_g_invariance(base.ideal, action):
        raise NonInvariantIdealError("ideal is not G-invariant")
    s = verdict.socle_degree
    u = base.socle()[s].basis[0]
    pivot = next(i for i, x in enumerate(u) if x != 0)
    k = base.field
    values = []
    for gi in action.group.generator_indices():
        image = base.reduce(action.apply(gi, base.lift(s, u)))
        a = k.div(image[pivot], u[pivot])
        if image != tuple(k.mul(a, x) for x in u):
            raise CharacterError("group does not act on the socle by a scalar")
        values.append(a)
    return Character.from_generator_values(action.group, values)
