"""
Geometria das classes de conjugação relativa ao quociente cíclico.
"""
