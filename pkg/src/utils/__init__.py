"""
Utilitários do sistema.
"""
