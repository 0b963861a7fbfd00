"""
乱数インスタンスによる一括検証（スイープ）

セル = 群 × 体 × 次数。各セルで count 個のインスタンスを並列に実行し、
完了順に依らずインスタンス番号順に集計する。
"""

import logging
import sys
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from src.core.action import GAction
from src.core.field import FieldSpec
from src.core.group import MatrixGroup
from src.utils.error_handler import InstanceSkipped, SpecError

from .group_zoo import is_realizable, zoo_entry, zoo_group
from .verifier import InstanceSpec, VerdictReport, verify_theorem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepConfig:
    """
    スイープの設定

    Attributes:
        groups: 組み込み群の名前
        fields: 係数体
        degrees: 汎関数の次数 m
        count: セルごとのインスタンス数
        seed: 乱数の種
        twisted: 非自明な指標でねじった汎関数を使うか
        bound: ℚ の乱数係数の絶対値上限
    """
    groups: Tuple[str, ...]
    fields: Tuple[FieldSpec, ...]
    degrees: Tuple[int, ...]
    count: int
    seed: int = 0
    twisted: bool = False
    bound: int = 2

    def __post_init__(self) -> None:
        if self.count < 0:
            raise SpecError(f"count must be nonnegative, got {self.count}")
        if self.seed < 0:
            raise SpecError(f"seed must be unsigned, got {self.seed}")
        for name in self.groups:
            zoo_entry(name)
        for m in self.degrees:
            if m < 1:
                raise SpecError(f"degrees must be at least 1, got {m}")

    def to_json(self) -> Dict[str, Any]:
        return {
            "groups": list(self.groups),
            "fields": [f.to_json() for f in self.fields],
            "degrees": list(self.degrees),
            "count": self.count,
            "seed": self.seed,
            "twisted": self.twisted,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class Cell:
    index: int
    group: str
    field: FieldSpec
    degree: int

    def to_json(self) -> Dict[str, Any]:
        return {"group": self.group, "field": self.field.to_json(), "degree": self.degree}


@dataclass
class SweepResult:
    """
    スイープの結果（report は JSON にそのまま書ける純粋なデータ）
    """
    report: Dict[str, Any]
    wall_time: float = 0.0
    reports: List[VerdictReport] = dc_field(default_factory=list)


def plan_cells(config: SweepConfig) -> Tuple[List[Cell], List[Dict[str, Any]]]:
    """
    セルの一覧と実現できない (群, 体) の一覧を作る
    """
    cells: List[Cell] = []
    unrealizable: List[Dict[str, Any]] = []
    for name in config.groups:
        for k in config.fields:
            if not is_realizable(name, k):
                unrealizable.append({"group": name, "field": k.to_json()})
                continue
            for m in config.degrees:
                cells.append(Cell(len(cells), name, k, m))
    return cells, unrealizable


def _run_one(
    config: SweepConfig,
    cell: Cell,
    i: int,
    group: MatrixGroup,
    action: GAction,
) -> Union[VerdictReport, InstanceSkipped]:
    spec = InstanceSpec(
        field=cell.field,
        generators=(),
        degree=cell.degree,
        seed=config.seed,
        cell=cell.index,
        index=i,
        twisted=config.twisted,
        bound=config.bound,
    )
    try:
        return verify_theorem(spec, strict=False, group=group, action=action)
    except InstanceSkipped as e:
        return e


def _distribution(values: Sequence[int]) -> Dict[str, int]:
    counts = Counter(values)
    return {str(k): counts[k] for k in sorted(counts)}


def run_sweep(
    config: SweepConfig,
    workers: Optional[int] = None,
    progress: bool = False,
) -> SweepResult:
    """
    スイープを実行して集計する

    Args:
        config: スイープの設定
        workers: 並列数（None なら設定値 sweep.workers）
        progress: 進捗バーを stderr に表示するか

    Returns:
        SweepResult: 集計結果と実行時間
    """
    if workers is None:
        from src.config import get_settings
        workers = int(get_settings().get("sweep", "workers", 4))
    started = time.perf_counter()
    cells, unrealizable = plan_cells(config)
    shared: Dict[Tuple[str, FieldSpec], Tuple[MatrixGroup, GAction]] = {}
    for cell in cells:
        key = (cell.group, cell.field)
        if key not in shared:
            group = zoo_group(cell.group, cell.field)
            shared[key] = (group, GAction(group))

    jobs = [(cell, i) for cell in cells for i in range(config.count)]
    logger.info(f"スイープを開始します: セル {len(cells)} 個, インスタンス {len(jobs)} 個")
    results: Dict[int, Union[VerdictReport, InstanceSkipped]] = {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = {
            executor.submit(_run_one, config, cell, i, *shared[(cell.group, cell.field)]): n
            for n, (cell, i) in enumerate(jobs)
        }
        with tqdm(total=len(jobs), desc="sweep", file=sys.stderr, disable=not progress) as bar:
            for future in as_completed(futures):
                results[futures[future]] = future.result()
                bar.update(1)

    instances: List[Dict[str, Any]] = []
    skipped: List[Dict[str, Any]] = []
    reports: List[VerdictReport] = []
    for n, (cell, i) in enumerate(jobs):
        outcome = results[n]
        if isinstance(outcome, InstanceSkipped):
            skipped.append({"index": n, "cell": cell.to_json(), "instance": i, "reason": outcome.reason})
            continue
        reports.append(outcome)
        entry = {"index": n, "cell": cell.to_json(), "instance": i}
        entry.update(outcome.to_dict())
        instances.append(entry)

    counterexamples = sum(1 for r in reports if r.counterexample)
    not_gorenstein = sum(
        1 for r in reports if r.invariant_quotient is not None and not r.invariant_quotient.is_gorenstein
    )
    report = {
        "config": config.to_json(),
        "instances_total": len(jobs),
        "instances_run": len(reports),
        "instances_skipped": len(skipped),
        "hypothesis_holds": sum(1 for r in reports if r.hypothesis_holds),
        "counterexamples": counterexamples,
        "invariant_quotient_not_gorenstein": not_gorenstein,
        "a_invariant_distribution": {
            "quotient": _distribution([r.quotient.a_invariant for r in reports]),
            "invariant_quotient": _distribution(
                [r.invariant_quotient.a_invariant for r in reports if r.invariant_quotient is not None]
            ),
        },
        "unrealizable_cells": unrealizable,
        "skipped": skipped,
        "instances": instances,
    }
    wall_time = time.perf_counter() - started
    if counterexamples:
        logger.critical(f"スイープで反例が {counterexamples} 件見つかりました")
    logger.info(
        f"スイープ完了: 実行 {len(reports)} / スキップ {len(skipped)} / 反例 {counterexamples} "
        f"({wall_time:.2f} 秒)"
    )
    return SweepResult(report=report, wall_time=wall_time, reports=reports)
