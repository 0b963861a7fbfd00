"""
有限行列群（Matrix Group）サブパッケージ
"""

from .matrix_group import (
    GMatrix,
    MatrixGroup,
    close,
    group_from_literals,
    commutator_subgroup,
    is_special_linear,
)
from .character import Character, character_or_trivial, normalize_generator_values
from .one_dim_reps import (
    OneDimRepVerdict,
    has_nontrivial_onedim_rep,
    enumerate_characters,
    enumerate_onedim_reps_oracle,
    table_sufficient_condition,
)

__all__ = [
    'GMatrix',
    'MatrixGroup',
    'close',
    'group_from_literals',
    'commutator_subgroup',
    'is_special_linear',
    'Character',
    'character_or_trivial',
    'normalize_generator_values',
    'OneDimRepVerdict',
    'has_nontrivial_onedim_rep',
    'enumerate_characters',
    'enumerate_onedim_reps_oracle',
    'table_sufficient_condition'
]
