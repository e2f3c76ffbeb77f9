"""
Núcleo de grupos finitos: permutações, enumeração e estrutura de classes laterais.
"""
