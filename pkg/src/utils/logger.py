"""
Sistema de logging centralizado usando Loguru.

Cada registro carrega o campo extra ``check`` (nome da verificação em curso,
"-" fora delas), que aparece no console e no arquivo.
"""
from loguru import logger
from config.settings import settings
from src.models.schemas import VerificationReport
import sys


CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<magenta>{extra[check]: <18}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[check]: <18} | {name}:{function}:{line} - {message}"


def setup_logger():
    """Configura o sistema de logging da aplicação."""

    # Remove handlers padrão
    logger.remove()
    logger.configure(extra={"check": "-"})

    # Console output (stderr: stdout fica reservado para os relatórios)
    logger.add(
        sys.stderr,
        format=CONSOLE_FORMAT,
        level=settings.LOG_LEVEL,
        colorize=True
    )

    # File output
    if settings.LOG_FILE:
        log_file = settings.base_dir / settings.LOG_FILE
        logger.add(
            log_file,
            format=FILE_FORMAT,
            level=settings.LOG_LEVEL,
            rotation="10 MB",
            retention="30 days",
            compression="zip",
            encoding="utf-8"
        )

    logger.debug(
        f"Sistema de logging inicializado - Level: {settings.LOG_LEVEL}, "
        f"ORDER_CAP={settings.ORDER_CAP}, MATRIX_N_CAP={settings.MATRIX_N_CAP}"
    )

    return logger


def log_report(report: VerificationReport) -> VerificationReport:
    """
    Registra o desfecho de uma verificação com ``check`` preenchido.

    Aprovações vão para DEBUG; reprovações para WARNING, com a primeira
    asserção divergente e as testemunhas.
    """
    bound = app_logger.bind(check=report.check_name)
    if report.passed:
        bound.debug(f"✅ [{report.subject}] {len(report.details)} asserções")
    else:
        first = report.failures[0]
        bound.warning(
            f"❌ [{report.subject}] {len(report.failures)}/{len(report.details)} falharam; "
            f"primeira: {first.label} (esperado {first.expected}, obtido {first.actual}); "
            f"testemunhas: {report.witnesses}"
        )
    return report


# Inicializa o logger
app_logger = setup_logger()
