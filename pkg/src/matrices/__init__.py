"""
Matrizes indexadas por pares de divisores e seu espectro exato.
"""
