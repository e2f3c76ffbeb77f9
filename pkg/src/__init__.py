"""
Verificação exata de classes de conjugação em grupos com quociente cíclico.
"""
__version__ = "1.0.0"
