import json
import logging
import traceback
import sys
from types import TracebackType
from functools import wraps
from typing import Optional, Any, Callable, TypeVar, Type, Dict
from dataclasses import dataclass
from enum import Enum, auto


F = TypeVar('F', bound=Callable[..., Any])


class ErrorLevel(Enum):
    """エラーレベルを定義する列挙型"""
    DEBUG = auto()
    INFO = auto()
    WARNING = auto()
    ERROR = auto()
    CRITICAL = auto()


@dataclass
class ErrorConfig:
    """エラー処理の設定を保持するデータクラス"""
    log_traceback: bool = False
    raise_on_error: bool = False


class GorinvError(Exception):
    """
    gorinv の基本例外クラス

    すべてのドメインエラーは機械可読な ``code`` を持ち、
    CLI では 1 行の JSON として標準エラー出力に書き出される。
    """
    code = "domain_error"


# --- 体・線形代数 ---

class FieldMismatchError(GorinvError):
    code = "field_mismatch"


class InversionOfZeroError(GorinvError):
    code = "inversion_of_zero"


class InvalidFieldError(GorinvError):
    code = "invalid_field"


class DimensionMismatchError(GorinvError):
    code = "dimension_mismatch"


class SingularMatrixError(GorinvError):
    code = "singular_matrix"


# --- 多項式環 ---

class DegreeBoundError(GorinvError):
    code = "degree_bound"


# --- 群 ---

class GroupClosureError(GorinvError):
    code = "closure_cap_exceeded"


class TrivialGroupError(GorinvError):
    code = "trivial_group"

    def __init__(self, message: str = "group must be non-trivial") -> None:
        super().__init__(message)


class CharacteristicDividesOrderError(GorinvError):
    code = "characteristic_divides_order"


class ElementNotInGroupError(GorinvError):
    code = "element_not_in_group"


class NonFiniteFieldError(GorinvError):
    code = "field_not_finite"


class CharacterError(GorinvError):
    code = "invalid_character"


# --- 汎関数・イデアル・商環 ---

class ZeroFunctionalError(GorinvError):
    code = "zero_functional"


class InvalidDegreeError(GorinvError):
    code = "invalid_degree"


class InvariantsVanishError(GorinvError):
    code = "invariants_vanish_in_degree_m"


class NonInvariantIdealError(GorinvError):
    code = "non_invariant_ideal"


class DegenerateQuotientError(GorinvError):
    code = "degenerate_quotient"


# --- 入力・ハーネス ---

class SpecError(GorinvError):
    code = "invalid_spec"


class ConfigError(GorinvError):
    code = "invalid_config"


class TheoremCounterexampleError(GorinvError):
    code = "theorem_counterexample"


class InstanceSkipped(GorinvError):
    """インスタンスを実行できない場合の通知（エラーではなくスキップ理由を運ぶ）"""
    code = "instance_skipped"

    def __init__(self, reason: str, message: Optional[str] = None) -> None:
        super().__init__(message or reason)
        self.reason = reason


class ErrorHandler:
    """
    エラー処理を管理するユーティリティクラス

    以下の機能を提供:
    - 構造化されたエラーメッセージ（1 行 JSON）
    - エラーログ記録
    - CLI 終了コードへの変換
    - グローバル例外ハンドリング

    Attributes:
        logger (logging.Logger): ロガーインスタンス
        config (ErrorConfig): エラー処理の設定
    """

    EXIT_OK = 0
    EXIT_DOMAIN_ERROR = 1
    EXIT_USAGE_ERROR = 2

    _instance: Optional['ErrorHandler'] = None

    def __init__(self, logger: Optional[logging.Logger] = None, config: Optional[ErrorConfig] = None) -> None:
        """
        コンストラクタ

        Args:
            logger: ロガーインスタンス（Noneの場合は新規作成）
            config: エラー処理の設定
        """
        self.logger = logger or logging.getLogger(__name__)
        self.config = config or ErrorConfig()

    @classmethod
    def get_instance(cls) -> 'ErrorHandler':
        """
        シングルトンインスタンスを取得する

        Returns:
            ErrorHandler: シングルトンインスタンス
        """
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def error_payload(self, error: BaseException) -> Dict[str, str]:
        """
        例外を機械可読な辞書に変換する

        Args:
            error: 例外オブジェクト

        Returns:
            Dict[str, str]: {"error": コード, "message": メッセージ}
        """
        code = getattr(error, "code", None) or "internal_error"
        return {"error": code, "message": str(error)}

    def format_error(self, error: BaseException) -> str:
        """エラーを 1 行の JSON 文字列にする"""
        return json.dumps(self.error_payload(error), ensure_ascii=False)

    def _log_error(self, error: BaseException, level: ErrorLevel, message: Optional[str] = None) -> None:
        """
        エラーをログに記録する

        Args:
            error: 例外オブジェクト
            level: エラーレベル
            message: 追加のエラーメッセージ
        """
        base_message = message or "エラーが発生しました"
        error_message = f"{base_message}: [{type(error).__name__}] {error}"

        if self.config.log_traceback:
            error_message += "\n" + ''.join(
                traceback.format_exception(type(error), error, error.__traceback__)
            )

        log_method = getattr(self.logger, level.name.lower())
        log_method(error_message)

    def handle_error(
        self,
        error: BaseException,
        message: Optional[str] = None,
        level: ErrorLevel = ErrorLevel.DEBUG,
        raise_error: Optional[bool] = None,
        stream: Any = None
    ) -> str:
        """
        例外を処理し、1 行 JSON を標準エラー出力へ書き出す

        Args:
            error: 例外オブジェクト
            message: ログ用の追加メッセージ
            level: ログレベル
            raise_error: 例外を再発生させるかどうか
            stream: 出力先（Noneの場合は sys.stderr）

        Returns:
            str: 書き出した JSON 文字列

        Raises:
            Exception: raise_errorがTrueの場合、元の例外を再発生
        """
        self._log_error(error, level, message)
        line = self.format_error(error)
        (stream or sys.stderr).write(line + "\n")

        should_raise = raise_error if raise_error is not None else self.config.raise_on_error
        if should_raise:
            raise error
        return line

    def error_boundary(self, stream: Any = None) -> Callable[[F], F]:
        """
        CLI コマンドを包み、例外を終了コードに変換するデコレータ

        - GorinvError: JSON を出力して 1
        - JSON デコードエラー: invalid_spec として 1
        - その他の例外: internal_error として 1（トレースバックはログへ）

        Args:
            stream: エラー JSON の出力先

        Returns:
            Callable: 関数デコレータ
        """
        def decorator(func: F) -> F:
            @wraps(func)
            def wrapper(*args: Any, **kwargs: Any) -> int:
                try:
                    return func(*args, **kwargs)
                except GorinvError as e:
                    self.handle_error(e, f"{func.__name__} でドメインエラー", stream=stream)
                    return self.EXIT_DOMAIN_ERROR
                except json.JSONDecodeError as e:
                    wrapped = SpecError(f"malformed JSON: {e}")
                    self.handle_error(wrapped, f"{func.__name__} で JSON 解析エラー", stream=stream)
                    return self.EXIT_DOMAIN_ERROR
                except Exception as e:
                    self.logger.error(
                        f"{func.__name__} で予期しない例外:\n{traceback.format_exc()}"
                    )
                    self.handle_error(e, stream=stream)
                    return self.EXIT_DOMAIN_ERROR
            return wrapper  # type: ignore
        return decorator

    @staticmethod
    def setup_global_exception_handler(logger: Optional[logging.Logger] = None) -> None:
        """
        グローバル例外ハンドラを設定する

        Args:
            logger: ロガーインスタンス
        """
        handler = ErrorHandler.get_instance()
        log = logger or handler.logger

        def global_exception_handler(
            exctype: Type[BaseException],
            value: BaseException,
            tb: Optional[TracebackType]
        ) -> None:
            """未ハンドルの例外をキャッチするハンドラ"""
            error_message = ''.join(traceback.format_exception(exctype, value, tb))
            log.critical(f"未ハンドルの例外が発生しました:\n{error_message}")
            sys.__excepthook__(exctype, value, tb)

        sys.excepthook = global_exception_handler
        log.debug("グローバル例外ハンドラを設定しました")
