"""
Aritmética de divisores e funções multiplicativas.
"""
