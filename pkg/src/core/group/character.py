"""
一次元表現（指標）η: G → k^*
"""

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.core.field import FieldSpec
from src.core.field.exact_field import Raw
from src.utils.error_handler import CharacterError

from .matrix_group import GMatrix, MatrixGroup


def normalize_generator_values(field: FieldSpec, generator_values: Sequence[Any]) -> List[Raw]:
    """
    生成元での指標の値を正規形にする

    Raises:
        CharacterError: 0 が含まれる場合
    """
    values = [field.normalize(v) for v in generator_values]
    if any(v == 0 for v in values):
        raise CharacterError("character values must be nonzero")
    return values


@dataclass(frozen=True)
class Character:
    """
    群準同型 G → k^*

    値は群の全元について保持し、構築時に Cayley 表全体で準同型性を検査する。

    Attributes:
        group: 群 G
        values: elements の順に並んだ値（0 でない）
    """
    group: MatrixGroup
    values: Tuple[Raw, ...]

    def __post_init__(self) -> None:
        g = self.group
        k = g.field
        if len(self.values) != g.order:
            raise CharacterError(f"{len(self.values)} character values for a group of order {g.order}")
        if any(v == 0 for v in self.values):
            raise CharacterError("character values must be nonzero")
        if self.values[g.identity_index] != k.one():
            raise CharacterError("character must send the identity to 1")
        for i in range(g.order):
            for j in range(g.order):
                if self.values[g.mul(i, j)] != k.mul(self.values[i], self.values[j]):
                    raise CharacterError("values do not define a homomorphism")

    @classmethod
    def trivial(cls, group: MatrixGroup) -> 'Character':
        one = group.field.one()
        return cls(group, tuple(one for _ in range(group.order)))

    @classmethod
    def from_generator_values(cls, group: MatrixGroup, generator_values: Sequence[Any]) -> 'Character':
        """
        生成元での値から指標を復元する

        生成元の語を幅優先で辿って全元に拡張し、最後に Cayley 表で検査する。

        Args:
            group: 群 G
            generator_values: group.generators と同じ順の値

        Returns:
            Character: 拡張された指標

        Raises:
            CharacterError: 個数が合わない、または準同型にならない場合
        """
        if len(generator_values) != len(group.generators):
            raise CharacterError(
                f"{len(generator_values)} generator values for {len(group.generators)} generators"
            )
        k = group.field
        gen_vals = normalize_generator_values(k, generator_values)
        gen_idx = group.generator_indices()
        values: Dict[int, Raw] = {group.identity_index: k.one()}
        queue = deque([group.identity_index])
        while queue:
            x = queue.popleft()
            for gi, gv in zip(gen_idx, gen_vals):
                y = group.mul(x, gi)
                val = k.mul(values[x], gv)
                if y not in values:
                    values[y] = val
                    queue.append(y)
                elif values[y] != val:
                    raise CharacterError("generator values are inconsistent with the group relations")
        return cls(group, tuple(values[i] for i in range(group.order)))

    def value(self, g: Union[GMatrix, int]) -> Raw:
        i = g if isinstance(g, int) else self.group.index_of(g)
        return self.values[i]

    def is_trivial(self) -> bool:
        one = self.group.field.one()
        return all(v == one for v in self.values)

    def generator_values(self) -> List[Raw]:
        return [self.values[i] for i in self.group.generator_indices()]

    def to_json(self) -> Dict[str, Any]:
        k = self.group.field
        return {"generator_values": [k.format(v) for v in self.generator_values()]}


def character_or_trivial(group: MatrixGroup, generator_values: Optional[Sequence[Any]]) -> Character:
    """生成元の値が None なら自明指標"""
    if generator_values is None:
        return Character.trivial(group)
    return Character.from_generator_values(group, generator_values)
