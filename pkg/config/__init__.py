"""
Pacote de configuração do sistema.
"""
from .settings import settings

__all__ = ["settings"]
