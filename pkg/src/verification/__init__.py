"""
Verificação dos resultados sobre grupos concretos e execução do corpus.
"""
