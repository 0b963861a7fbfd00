"""
検証ハーネス（Harness）サブパッケージ
既知の例の再現、定理の検証、乱数スイープを提供します
"""

from .group_zoo import ZooEntry, zoo_names, zoo_entry, zoo_group, is_realizable
from .verifier import (
    InstanceSpec,
    VerdictReport,
    build_functional,
    evaluate,
    verify_theorem,
    SKIP_INVARIANTS_VANISH,
    SKIP_NO_EQUIVARIANT,
)
from .known_examples import EXAMPLE_IDS, ReplicationReport, replicate_example
from .sweep import SweepConfig, SweepResult, plan_cells, run_sweep

__all__ = [
    'ZooEntry',
    'zoo_names',
    'zoo_entry',
    'zoo_group',
    'is_realizable',
    'InstanceSpec',
    'VerdictReport',
    'build_functional',
    'evaluate',
    'verify_theorem',
    'SKIP_INVARIANTS_VANISH',
    'SKIP_NO_EQUIVARIANT',
    'EXAMPLE_IDS',
    'ReplicationReport',
    'replicate_example',
    'SweepConfig',
    'SweepResult',
    'plan_cells',
    'run_sweep'
]
