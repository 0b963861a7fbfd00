import sys
from pathlib import Path
import signal
sys.path.append(str(Path(__file__).parent.parent))

from src.cli import CommandHandler
from src.utils.error_handler import ErrorHandler


def main(argv=None) -> int:
    # Ctrl+C のシグナルハンドリングを有効化
    signal.signal(signal.SIGINT, signal.SIG_DFL)

    # 境界の外で起きた例外もログに残す
    ErrorHandler.setup_global_exception_handler()

    # コマンドの実行（例外は終了コードに変換される）
    return CommandHandler().run(argv)


if __name__ == "__main__":
    sys.exit(main())
