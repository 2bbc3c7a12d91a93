"""pydantic-settings 기반 애플리케이션 설정.

계층형 오버라이드: 환경변수 > config/default.yaml > 기본값
PLAM_ 접두사로 환경변수를 자동 인식한다 (예: PLAM_VERIFY__MAX_SIZE=5).
설정은 생략된 CLI 플래그의 기본값과 로그 레벨만 결정한다.
"""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from src.core.exceptions import ConfigError

_DEFAULT_CONFIG_PATH = Path(__file__).parent.parent.parent / "config" / "default.yaml"


class LoggingSettings(BaseModel):
    """로깅 설정."""

    level: str = "WARNING"
    file: str | None = None


class CountingSettings(BaseModel):
    """계수 표와 급수 출력의 기본 범위."""

    max_size: int = Field(default=10, ge=0)
    max_vars: int = Field(default=6, ge=0)
    series_terms: int = Field(default=10, ge=1)


class VerifySettings(BaseModel):
    """전단사 검증 범위.

    KR: slow_max_size는 pytest의 slow 마커 계층에서만 쓰인다.
    EN: slow_max_size is only used by the slow pytest tier.
    """

    max_size: int = Field(default=6, ge=1)
    slow_max_size: int = Field(default=7, ge=1)


class AppSettings(BaseSettings):
    """애플리케이션 전체 설정.

    중첩 모델을 포함한 단일 진입점.
    PLAM_ 접두사 환경변수를 자동 인식한다.
    """

    model_config = SettingsConfigDict(
        env_prefix="PLAM_",
        env_nested_delimiter="__",
    )

    logging: LoggingSettings = LoggingSettings()
    counting: CountingSettings = CountingSettings()
    verify: VerifySettings = VerifySettings()

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """환경변수가 YAML에서 온 초기화 인자보다 우선하도록 순서를 바꾼다."""
        return env_settings, init_settings


_settings: AppSettings | None = None


def get_settings() -> AppSettings:
    """싱글톤 AppSettings 인스턴스를 반환한다.

    최초 호출 시 config/default.yaml을 읽어 생성하고 이후에는 캐시된 인스턴스를 반환한다.

    Returns:
        AppSettings 인스턴스
    """
    global _settings
    if _settings is None:
        _settings = load_config()
    return _settings


def reset_settings() -> None:
    """캐시된 설정을 비운다 (테스트용)."""
    global _settings
    _settings = None


def load_config(path: Path | None = None) -> AppSettings:
    """YAML 설정 파일을 읽어 AppSettings에 오버라이드한 뒤 반환한다.

    파일이 없거나 읽기 실패 시 기본값을 사용한다.

    Args:
        path: 설정 파일 경로. None이면 config/default.yaml 사용.

    Returns:
        AppSettings 인스턴스

    Raises:
        ConfigError: 값이 검증을 통과하지 못함 (예: 음수 크기)
    """
    config_path = path or _DEFAULT_CONFIG_PATH
    if not config_path.exists():
        return _build({})

    try:
        with open(config_path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError):
        return _build({})
    if not isinstance(data, dict):
        return _build({})

    overrides: dict[str, object] = {}
    _apply_section(overrides, "logging", data.get("logging", {}))
    _apply_section(overrides, "counting", data.get("counting", {}))
    _apply_section(overrides, "verify", data.get("verify", {}))

    return _build(overrides)


def _build(overrides: dict[str, object]) -> AppSettings:
    try:
        return AppSettings(**overrides)  # type: ignore[arg-type]
    except ValidationError as exc:
        raise ConfigError(f"설정 값이 잘못되었습니다: {exc.error_count()}개 오류") from exc


def _apply_section(overrides: dict[str, object], key: str, section: object) -> None:
    """YAML 섹션이 비어 있지 않은 dict이면 overrides에 추가한다 (None 값은 건너뜀)."""
    if isinstance(section, dict) and section:
        overrides[key] = {k: v for k, v in section.items() if v is not None}
