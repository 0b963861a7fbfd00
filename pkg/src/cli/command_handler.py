"""
コマンドラインのフロントエンド

サブコマンド:
    construct    汎関数から逆系イデアルを作る
    invariants   不変式 A^G_d の次元と基底
    check-group  非自明な一次元表現の有無
    replicate    既知の例 ex34 / ex35 の再現
    verify       一つのインスタンスで定理を検証
    sweep        乱数インスタンスの一括検証

終了コード: 0 成功 / 1 ドメインエラー（stderr に 1 行 JSON）/ 2 使い方の誤り /
3 replicate で既知の値と食い違い
"""

import argparse
import io
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Type

from pydantic import BaseModel

from src.config import SettingsManager, get_settings
from src.core.action import GAction
from src.core.algebra import ArtinQuotient
from src.core.group import (
    character_or_trivial,
    commutator_subgroup,
    has_nontrivial_onedim_rep,
    normalize_generator_values,
)
from src.core.harness import EXAMPLE_IDS, replicate_example, run_sweep, verify_theorem
from src.core.invsys import Functional, build_inverse_system, check_g_invariance
from src.core.polyring import PolyRing
from src.utils import get_version
from src.utils.error_handler import ErrorHandler, SpecError, TheoremCounterexampleError
from src.utils.file_manager import FileManager
from src.utils.logger import setup_logging

from .schemas import (
    DEFAULT_SWEEP,
    FunctionalModel,
    GroupModel,
    IdealModel,
    InstanceModel,
    InvariantsModel,
    InvariantsRequest,
    OneDimVerdictModel,
    ReplicationModel,
    SweepModel,
    SweepReportModel,
    VerdictReportModel,
    parse_model,
)
from .table_renderer import TableRenderer

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 3
DEFAULT_MAX_DEGREE = 4


def _unsigned(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """引数パーサーを作る（未知のフラグは使い方の誤りとして終了コード 2）"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="入力 JSON のパス、または '{' で始まるインライン JSON")
    common.add_argument("--output", "-o", help="出力先のパス（省略時は標準出力）")
    common.add_argument("--format", "-f", choices=("json", "table"), help="出力形式")
    common.add_argument("--seed", type=_unsigned, help="乱数の種")
    common.add_argument("--config", help="設定ファイル config.yml のパス")
    common.add_argument("--verbose", "-v", action="count", default=0, help="ログを詳しくする（-vv でデバッグ）")

    parser = argparse.ArgumentParser(
        prog="gorinv",
        description="有限群で不変な Gorenstein イデアルと不変部分環の商の検証ツール",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_version()}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("construct", parents=[common], help="汎関数から逆系イデアルを作る")

    invariants = sub.add_parser("invariants", parents=[common], help="不変式の次元と基底")
    invariants.add_argument("--max-degree", type=_unsigned, help=f"最大次数（既定 {DEFAULT_MAX_DEGREE}）")

    sub.add_parser("check-group", parents=[common], help="非自明な一次元表現の有無を判定する")

    replicate = sub.add_parser("replicate", parents=[common], help="既知の例を再現する")
    replicate.add_argument("example", choices=EXAMPLE_IDS)
    replicate.add_argument(
        "--force-trivial-character",
        action="store_true",
        help="指標を自明に置き換える（同変性が崩れることの確認用）",
    )

    sub.add_parser("verify", parents=[common], help="一つのインスタンスで定理を検証する")

    sweep = sub.add_parser("sweep", parents=[common], help="乱数インスタンスで一括検証する")
    sweep.add_argument("--count", type=_unsigned, help="セルごとのインスタンス数")
    sweep.add_argument("--workers", type=_unsigned, help="並列数")
    sweep.add_argument("--progress", action="store_true", help="進捗バーを表示する")
    return parser


class CommandHandler:
    """
    CLI のコマンドを振り分けて実行するクラス

    Attributes:
        stdout (TextIO): レポートの出力先
        stderr (TextIO): エラー JSON の出力先
        settings (SettingsManager): 設定
        file_manager (FileManager): JSON の読み書き
    """

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.settings: SettingsManager = get_settings()
        self.file_manager = FileManager()
        self._commands: Dict[str, Callable[[argparse.Namespace], int]] = {
            "construct": self.construct,
            "invariants": self.invariants,
            "check-group": self.check_group,
            "replicate": self.replicate,
            "verify": self.verify,
            "sweep": self.sweep,
        }

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        コマンドラインを解釈して実行する

        Args:
            argv: 引数（None なら sys.argv[1:]）

        Returns:
            int: 終了コード
        """
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else ErrorHandler.EXIT_USAGE_ERROR

        boundary = ErrorHandler.get_instance().error_boundary(stream=self.stderr)
        return boundary(self._dispatch)(args)

    def _dispatch(self, args: argparse.Namespace) -> int:
        # 設定の誤り（ConfigError）も終了コード 1 の JSON にする
        if args.config:
            self.settings = SettingsManager.get_instance(args.config)
        setup_logging(self.settings.get_app_config("logging"), args.verbose)
        self.file_manager = FileManager(indent=int(self.settings.get("output", "indent", 2)))
        return self._commands[args.command](args)

    # --- 入出力 ---

    def _load_input(self, args: argparse.Namespace, default: Any = None) -> Any:
        if args.input is None:
            if default is not None:
                return default
            raise SpecError(f"{args.command} needs --input (a JSON file or inline JSON)")
        return self.file_manager.load_json(args.input)

    def _format(self, args: argparse.Namespace) -> str:
        return args.format or str(self.settings.get("output", "format", "json"))

    def _emit(
        self,
        args: argparse.Namespace,
        data: Any,
        model: Type[BaseModel],
        render: Callable[[TableRenderer], None],
    ) -> None:
        # 出力の形を応答モデルで確かめてから書く
        model.model_validate(data)
        if self._format(args) == "table":
            buffer = io.StringIO()
            render(TableRenderer(buffer))
            self.file_manager.write_text(buffer.getvalue(), args.output, self.stdout)
        else:
            self.file_manager.write_json(data, args.output, self.stdout)

    def _closure_cap(self) -> int:
        return self.settings.closure_cap

    # --- サブコマンド ---

    def construct(self, args: argparse.Namespace) -> int:
        """汎関数 → 逆系イデアル I(φ)（群を添えると同変性と G 不変性も調べる）"""
        request = parse_model(FunctionalModel, self._load_input(args))
        k = request.field_spec()
        group_request = request.group_model()
        group = None if group_request is None else group_request.to_group(self._closure_cap())
        ring = PolyRing(k, request.ring_dim(group))
        functional = Functional.from_values(ring, request.degree, request.values)
        ideal = build_inverse_system(functional)
        hilbert = ArtinQuotient(ideal).hilbert
        logger.info(f"逆系イデアルを構築しました: ヒルベルト関数 {hilbert}")

        data = ideal.to_json()
        if group is not None:
            action = GAction(group, ring)
            character = character_or_trivial(group, request.character)
            data["character"] = character.to_json()
            data["equivariant"] = action.check_equivariant(functional, character)
            data["g_invariant"] = check_g_invariance(ideal, action)
            if not data["equivariant"]:
                logger.warning("汎関数は指定の指標について同変ではありません")
        elif request.character is not None:
            values = normalize_generator_values(k, request.character)
            data["character"] = {"generator_values": [k.format(v) for v in values]}

        def render(r: TableRenderer) -> None:
            rows = [
                (d, ideal.piece(d).dim, hilbert[d], [str(p) for p in ideal.basis(d)])
                for d in range(ideal.top + 1)
            ]
            r.render_ideal(f"I(phi), n={ring.n}, field={ring.field}, m={ideal.top}", rows)

        self._emit(args, data, IdealModel, render)
        return ErrorHandler.EXIT_OK

    def invariants(self, args: argparse.Namespace) -> int:
        """群 → 各次数の不変式の次元と基底"""
        request = parse_model(InvariantsRequest, self._load_input(args))
        group = request.to_group(self._closure_cap())
        action = GAction(group)
        top = args.max_degree
        if top is None:
            top = request.max_degree if request.max_degree is not None else DEFAULT_MAX_DEGREE
        if top < request.min_degree:
            raise SpecError(f"max degree {top} is below min degree {request.min_degree}")

        degrees: List[Dict[str, Any]] = []
        rows = []
        for d in range(request.min_degree, top + 1):
            basis = action.invariant_basis(d)
            degrees.append({"degree": d, "dim": len(basis), "basis": [p.to_json() for p in basis]})
            rows.append((d, len(basis), [str(p) for p in basis]))
        data = {"n": group.n, "field": group.field.to_json(), "group_order": group.order, "degrees": degrees}
        self._emit(args, data, InvariantsModel, lambda r: r.render_invariants(group.order, rows))
        return ErrorHandler.EXIT_OK

    def check_group(self, args: argparse.Namespace) -> int:
        """群 → 非自明な一次元表現の有無"""
        request = parse_model(GroupModel, self._load_input(args))
        group = request.to_group(self._closure_cap())
        verdict = has_nontrivial_onedim_rep(group).to_dict()
        self._emit(
            args,
            verdict,
            OneDimVerdictModel,
            lambda r: r.render_group_check(verdict, group.order, commutator_subgroup(group).order),
        )
        return ErrorHandler.EXIT_OK

    def replicate(self, args: argparse.Namespace) -> int:
        """既知の例の再現（食い違いがあれば 3）"""
        result = replicate_example(args.example, force_trivial_character=args.force_trivial_character)
        data = result.to_dict()
        self._emit(args, data, ReplicationModel, lambda r: r.render_replication(data))
        if not result.matched:
            logger.warning(f"{args.example} は既知の値と一致しませんでした")
            return EXIT_MISMATCH
        return ErrorHandler.EXIT_OK

    def verify(self, args: argparse.Namespace) -> int:
        """インスタンス → 検証結果（反例なら 1）"""
        request = parse_model(InstanceModel, self._load_input(args))
        bound = int(self.settings.get("sweep", "rational_sample_bound", 2))
        spec = request.to_instance(seed=args.seed, default_bound=bound)
        group = request.to_group(self._closure_cap())
        report = verify_theorem(spec, strict=True, group=group).to_dict()
        self._emit(args, report, VerdictReportModel, lambda r: r.render_report(report))
        return ErrorHandler.EXIT_OK

    def sweep(self, args: argparse.Namespace) -> int:
        """スイープ（反例があればレポートを書いたうえで 1）"""
        request = parse_model(SweepModel, self._load_input(args, default=DEFAULT_SWEEP))
        bound = int(self.settings.get("sweep", "rational_sample_bound", 2))
        config = request.to_config(seed=args.seed, count=args.count, default_bound=bound)
        workers = args.workers if args.workers else int(self.settings.get("sweep", "workers", 4))
        progress = args.progress or bool(self.settings.get("sweep", "progress", False))
        result = run_sweep(config, workers=workers, progress=progress)
        self._emit(
            args,
            result.report,
            SweepReportModel,
            lambda r: r.render_sweep(result.report, result.wall_time),
        )
        counterexamples = result.report["counterexamples"]
        if counterexamples:
            raise TheoremCounterexampleError(f"sweep found {counterexamples} counterexample(s)")
        return ErrorHandler.EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    """CLI のエントリポイント"""
    return CommandHandler().run(argv)
