"""
Configurações centralizadas da aplicação usando Pydantic Settings.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator
from pathlib import Path


class Settings(BaseSettings):
    """Configurações da aplicação com validação automática."""

    # Aplicação
    APP_NAME: str = "Cyclic Quotient Class Verifier"
    APP_VERSION: str = "1.0.0"

    # Enumeração de grupos
    ORDER_CAP: int = 10_000
    CLASS_SCAN_LIMIT: int = 2_000  # acima disso só o representante da classe é varrido

    # Matrizes L(n) e R(n)
    MATRIX_N_CAP: int = 500

    # Execução do corpus
    CORPUS_DIR: str = "corpus"
    CONCURRENT_TASKS: int = 4
    SHOW_PROGRESS: bool = True

    # Logs
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = "logs/verificacao.log"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"
    )

    @field_validator('LOG_LEVEL')
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Aceita o nível em qualquer caixa ("debug", "Info"...)."""
        level = v.strip().upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Nível de log inválido: {v}")
        return level

    @field_validator('ORDER_CAP', 'MATRIX_N_CAP', 'CONCURRENT_TASKS', 'CLASS_SCAN_LIMIT')
    @classmethod
    def require_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("O valor deve ser um inteiro positivo")
        return v

    @property
    def base_dir(self) -> Path:
        """Retorna o diretório base do projeto."""
        return Path(__file__).parent.parent

    @property
    def corpus_path(self) -> Path:
        """Diretório do corpus de grupos (relativo à raiz do projeto)."""
        path = Path(self.CORPUS_DIR)
        return path if path.is_absolute() else self.base_dir / path


# Instância global de configurações
settings = Settings()
