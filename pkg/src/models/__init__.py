"""
Modelos de dados do sistema.
"""
