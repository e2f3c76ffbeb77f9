"""
Ponto de entrada da linha de comando.

Uso:
    python app.py classes --group corpus/s4_a4.txt
    python app.py verify --group corpus/s4_a4.txt --output json
    python app.py matrix --n 12
    python app.py corpus --n-max 60
"""
from src.cli import cli


if __name__ == "__main__":
    cli()
