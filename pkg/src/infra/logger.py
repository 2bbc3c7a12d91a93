"""구조화된 로깅 시스템.

structlog ProcessorFormatter 기반 콘솔 핸들러 + 선택적 로테이팅 파일 핸들러.
stdout은 데이터 출력 전용이므로 모든 로그는 stderr로 보낸다.
setup_logger(name) 시그니처를 유지한다.
"""

from __future__ import annotations

import contextlib
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

import structlog

_ENV_LEVEL = "PLAM_LOG_LEVEL"
_DEFAULT_LEVEL = "WARNING"
_MAX_BYTES = 5 * 1024 * 1024  # 5 MB
_BACKUP_COUNT = 3
_ROOT_NAME = "src"

_PRE_CHAIN: list[structlog.types.Processor] = [
    structlog.stdlib.add_log_level,
    structlog.stdlib.add_logger_name,
    structlog.processors.TimeStamper(fmt="iso"),
]


def _resolve_level(configured: str | None = None) -> int:
    """PLAM_LOG_LEVEL > 설정 파일 > WARNING 순으로 레벨을 결정한다."""
    name = os.environ.get(_ENV_LEVEL) or configured or _DEFAULT_LEVEL
    return getattr(logging, name.upper(), logging.WARNING)


def _build_console_handler(level: int) -> logging.Handler:
    """structlog 컬러 렌더러를 쓰는 stderr 핸들러를 생성한다."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            processor=structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()),
            foreign_pre_chain=_PRE_CHAIN,
        )
    )
    return handler


def _build_file_handler(path: Path, level: int) -> logging.Handler:
    """JSON 한 줄씩 기록하는 로테이팅 파일 핸들러를 생성한다."""
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(
        path,
        maxBytes=_MAX_BYTES,
        backupCount=_BACKUP_COUNT,
        encoding="utf-8",
    )
    handler.setLevel(level)
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            processor=structlog.processors.JSONRenderer(),
            foreign_pre_chain=_PRE_CHAIN,
        )
    )
    return handler


def _configured_logging() -> tuple[str | None, str | None]:
    """설정에서 (level, file)을 읽는다. 설정 로드 실패 시 (None, None)."""
    try:
        from src.infra.config import get_settings

        section = get_settings().logging
    except Exception:
        return None, None
    return section.level, section.file


def setup_logger(name: str) -> logging.Logger:
    """프로젝트 표준 로거를 생성한다.

    핸들러는 패키지 루트 로거("src")에 한 번만 붙이고,
    하위 모듈 로거는 전파로 출력한다.

    Args:
        name: 로거 이름 (보통 __name__)

    Returns:
        설정된 Logger 인스턴스
    """
    root = logging.getLogger(_ROOT_NAME)
    if not root.handlers:
        level_name, log_file = _configured_logging()
        level = _resolve_level(level_name)
        root.setLevel(level)
        root.addHandler(_build_console_handler(level))
        if log_file:
            with contextlib.suppress(OSError):
                root.addHandler(_build_file_handler(Path(log_file), level))
        root.propagate = False

    return logging.getLogger(name)


def set_level(level: int | str) -> None:
    """패키지 로거와 모든 핸들러의 레벨을 바꾼다 (CLI -v 용)."""
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.WARNING)
    root = logging.getLogger(_ROOT_NAME)
    root.setLevel(level)
    for handler in root.handlers:
        handler.setLevel(level)
