"""
表形式の出力（rich）

JSON 出力と同じデータを人が読む用の表にする。
"""

from typing import Any, Dict, Iterable, List, Optional, TextIO, Tuple

from rich import box
from rich.console import Console
from rich.table import Table


def _yes_no(value: Optional[bool]) -> str:
    if value is None:
        return "-"
    return "YES" if value else "NO"


def _dims(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


class TableRenderer:
    """
    レポートを rich の表で描画するクラス

    Attributes:
        console (Console): 出力先に結び付いたコンソール
    """

    def __init__(self, stream: TextIO, width: int = 100):
        """
        コンストラクタ

        Args:
            stream: 出力先
            width: 表の幅
        """
        self.console = Console(
            file=stream,
            width=width,
            color_system=None,
            highlight=False,
            markup=False,
            emoji=False,
        )

    def _key_value(self, title: str, rows: List[List[str]]) -> None:
        table = Table(title=title, box=box.SIMPLE, show_header=False)
        table.add_column("key", style="bold")
        table.add_column("value")
        for key, value in rows:
            table.add_row(key, value)
        self.console.print(table)

    def render_ideal(self, title: str, rows: List[Tuple[int, int, int, List[str]]]) -> None:
        """
        construct の結果

        Args:
            title: 表題
            rows: (次数, dim I_d, dim (A/I)_d, 基底の表示) の並び
        """
        table = Table(title=title, box=box.SIMPLE)
        table.add_column("degree", justify="right")
        table.add_column("dim I_d", justify="right")
        table.add_column("dim (A/I)_d", justify="right")
        table.add_column("basis")
        for degree, dim, h, basis in rows:
            table.add_row(str(degree), str(dim), str(h), "; ".join(basis) or "-")
        self.console.print(table)

    def render_invariants(self, order: int, rows: List[Tuple[int, int, List[str]]]) -> None:
        """invariants の結果"""
        table = Table(title=f"invariants (|G| = {order})", box=box.SIMPLE)
        table.add_column("degree", justify="right")
        table.add_column("dim A^G_d", justify="right")
        table.add_column("basis")
        for degree, dim, basis in rows:
            table.add_row(str(degree), str(dim), "; ".join(basis) or "-")
        self.console.print(table)

    def render_group_check(self, verdict: Dict[str, Any], order: int, commutator_order: int) -> None:
        """check-group の結果"""
        self._key_value("one-dimensional representations", [
            ["|G|", str(order)],
            ["|[G,G]|", str(commutator_order)],
            ["r", str(verdict["r"])],
            ["non-trivial character exists", _yes_no(verdict["exists"])],
            ["witness prime", "-" if verdict["witness_prime"] is None else str(verdict["witness_prime"])],
        ])

    def render_report(self, report: Dict[str, Any], title: str = "verdict") -> None:
        """VerdictReport の辞書"""
        q = report["quotient"]
        iq = report["invariant_quotient"]
        rows = [
            ["degree m", str(report["degree"])],
            ["|G| / |[G,G]|", f"{report['group_order']} / {report['commutator_order']} (r = {report['r']})"],
            ["hypothesis holds", _yes_no(report["hypothesis_holds"])],
            ["functional equivariant", _yes_no(report["functional_equivariant"])],
            ["ideal G-invariant", _yes_no(report["ideal_g_invariant"])],
            ["hilbert A/Q", _dims(q["hilbert"])],
            ["quotient Gorenstein", _yes_no(q["gorenstein"])],
            ["a(A/Q)", str(q["a_invariant"])],
        ]
        if iq is not None:
            rows += [
                ["dims A^G/Q^G", _dims(iq["dims"])],
                ["invariant quotient Gorenstein", _yes_no(iq["gorenstein"])],
                ["a(A^G/Q^G)", str(iq["a_invariant"])],
            ]
        rows += [
            ["socle character trivial", _yes_no(report["socle_character_trivial"])],
            ["theorem satisfied", _yes_no(report["theorem_satisfied"])],
        ]
        self._key_value(title, rows)

    def render_replication(self, data: Dict[str, Any]) -> None:
        """replicate の結果"""
        self.render_report(data["report"], title=f"{data['example']}: {data['hilbert_series']}")
        if data["mismatches"]:
            table = Table(title="mismatches", box=box.SIMPLE)
            table.add_column("quantity")
            table.add_column("expected")
            table.add_column("actual")
            for m in data["mismatches"]:
                table.add_row(m["quantity"], str(m["expected"]), str(m["actual"]))
            self.console.print(table)
        else:
            self.console.print("all stated values matched")
        iq = data["report"]["invariant_quotient"]
        self.console.print(f"quotient Gorenstein: {_yes_no(data['report']['quotient']['gorenstein'])}")
        self.console.print(f"invariant quotient Gorenstein: {_yes_no(None if iq is None else iq['gorenstein'])}")
        for note in data["notes"]:
            self.console.print(f"note: {note}")

    def render_sweep(self, report: Dict[str, Any], wall_time: float) -> None:
        """sweep の集計"""
        dist = report["a_invariant_distribution"]
        self._key_value("sweep", [
            ["instances", f"{report['instances_run']} run / {report['instances_skipped']} skipped "
                          f"/ {report['instances_total']} total"],
            ["hypothesis holds", str(report["hypothesis_holds"])],
            ["counterexamples", str(report["counterexamples"])],
            ["invariant quotient not Gorenstein", str(report["invariant_quotient_not_gorenstein"])],
            ["a(A/Q)", ", ".join(f"{k}: {v}" for k, v in dist["quotient"].items()) or "-"],
            ["a(A^G/Q^G)", ", ".join(f"{k}: {v}" for k, v in dist["invariant_quotient"].items()) or "-"],
            ["unrealizable cells", str(len(report["unrealizable_cells"]))],
            ["wall time", f"{wall_time:.2f} s"],
        ])
