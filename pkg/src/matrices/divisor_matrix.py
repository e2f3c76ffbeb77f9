"""
Matrizes L(n) e R(n) indexadas por pares de divisores (i, j), i | j | n.

A linha (i, j) de L é o lado esquerdo da equação linear obtida ao contar as
classes inteiras de (K_j, K_i) contidas em K_i; a de R é o lado direito,
obtido contando as classes numa classe lateral geradora de K_j/K_i. A coluna
(d, c) guarda o coeficiente de N_d^c.
"""
import csv
import functools
from math import gcd
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from sympy import ImmutableMatrix, Integer, Rational, eye, kronecker_product, zeros

from config.settings import settings
from src.arith.functions import coprime_part, divisors, lcm, totient
from src.matrices.linalg import determinant, exact, inverse
from src.utils.logger import app_logger
from src.utils.validators import validator


Pair = Tuple[int, int]


@functools.lru_cache(maxsize=None)
def divisor_pairs(n: int) -> Tuple[Pair, ...]:
    """
    Índice canônico: pares (i, j) com j | n e i | j, j crescente e depois i.

    Raises:
        ValueError: Se n < 1
    """
    validator.require_positive(n)
    return tuple((i, j) for j in divisors(n) for i in divisors(j))


class DivisorMatrix:
    """
    Matriz quadrada de racionais exatos indexada por divisor_pairs(n).

    Linhas e colunas usam o mesmo índice. O conteúdo é uma
    ``ImmutableMatrix`` do sympy, então instâncias memorizadas podem ser
    compartilhadas sem cópia.
    """

    __slots__ = ("n", "index", "matrix", "_position")

    def __init__(self, n: int, entries):
        self.n = n
        self.index = divisor_pairs(n)
        matrix = ImmutableMatrix(entries)
        side = len(self.index)
        if matrix.shape != (side, side):
            raise ValueError(f"Matriz de n={n} deve ser {side}x{side}")
        self.matrix: ImmutableMatrix = matrix
        self._position: Dict[Pair, int] = {pair: k for k, pair in enumerate(self.index)}

    @classmethod
    def zeros(cls, n: int) -> "DivisorMatrix":
        side = len(divisor_pairs(n))
        return cls(n, zeros(side, side))

    @classmethod
    def identity(cls, n: int) -> "DivisorMatrix":
        return cls(n, eye(len(divisor_pairs(n))))

    @property
    def side(self) -> int:
        return len(self.index)

    @property
    def entries(self) -> List[List[Rational]]:
        return self.matrix.tolist()

    def position(self, pair: Pair) -> int:
        try:
            return self._position[pair]
        except KeyError:
            raise ValueError(f"Par {pair} fora do índice de n={self.n}") from None

    def entry(self, row: Pair, col: Pair) -> Rational:
        return self.matrix[self.position(row), self.position(col)]

    def row(self, pair: Pair) -> List[Rational]:
        return list(self.matrix.row(self.position(pair)))

    def trace(self) -> Rational:
        return self.matrix.trace()

    def _same_shape(self, other: "DivisorMatrix") -> None:
        if not isinstance(other, DivisorMatrix) or other.n != self.n:
            raise ValueError("Operação entre matrizes de parâmetros diferentes")

    def __matmul__(self, other: "DivisorMatrix") -> "DivisorMatrix":
        self._same_shape(other)
        return DivisorMatrix(self.n, self.matrix * other.matrix)

    def __sub__(self, other: "DivisorMatrix") -> "DivisorMatrix":
        self._same_shape(other)
        return DivisorMatrix(self.n, self.matrix - other.matrix)

    def __add__(self, other: "DivisorMatrix") -> "DivisorMatrix":
        self._same_shape(other)
        return DivisorMatrix(self.n, self.matrix + other.matrix)

    def scaled(self, factor) -> "DivisorMatrix":
        return DivisorMatrix(self.n, exact(factor) * self.matrix)

    def inverse(self) -> "DivisorMatrix":
        return DivisorMatrix(self.n, inverse(self.matrix))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DivisorMatrix):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    __hash__ = None

    def mismatches(self, other: "DivisorMatrix") -> List[Tuple[Pair, Pair]]:
        """Posições (linha, coluna) em que as duas matrizes diferem, por linha."""
        self._same_shape(other)
        difference = self.matrix - other.matrix
        return [
            (self.index[r], self.index[c])
            for r, c in sorted(difference.todok())
        ]

    def to_csv(self, path: Path) -> Path:
        """
        Grava a matriz em CSV com os rótulos (i,j) na primeira linha e coluna.

        Racionais não inteiros são escritos como "p/q".
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        labels = [f"({i},{j})" for i, j in self.index]
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow([""] + labels)
            for label, row in zip(labels, self.entries):
                writer.writerow([label] + [str(x) for x in row])
        return path

    def __repr__(self) -> str:
        return f"<DivisorMatrix(n={self.n}, side={self.side})>"


def _check_cap(n: int) -> None:
    validator.require_positive(n)
    if n > settings.MATRIX_N_CAP:
        raise ValueError(f"n={n} excede o limite configurado MATRIX_N_CAP={settings.MATRIX_N_CAP}")


def build_L(n: int) -> DivisorMatrix:
    """
    Matriz L(n), memorizada.

    Entrada (i,j),(d,c) = φ(d)·n/mmc(j,c) quando d | i e j | mmc(i,c).

    Raises:
        ValueError: Se n < 1 ou n acima de MATRIX_N_CAP
    """
    _check_cap(n)
    return _build_L(n)


@functools.lru_cache(maxsize=64)
def _build_L(n: int) -> DivisorMatrix:
    index = divisor_pairs(n)
    entries = [
        [
            totient(d) * n // lcm(j, c) if i % d == 0 and lcm(i, c) % j == 0 else 0
            for d, c in index
        ]
        for i, j in index
    ]
    app_logger.debug(f"L({n}) construída: {len(index)}x{len(index)}")
    return DivisorMatrix(n, entries)


def build_R(n: int) -> DivisorMatrix:
    """
    Matriz R(n).

    Na linha (i,j), com v o maior divisor de i coprimo com j/i e u = i/v:
    para cada d | v e cada c | n com d | c e j | mmc(i,c), soma
    u·φ(d)·n/mmc(j,c) na coluna (j·d/v, c).

    Raises:
        ValueError: Se n < 1 ou n acima de MATRIX_N_CAP
    """
    _check_cap(n)
    return _build_R(n)


@functools.lru_cache(maxsize=64)
def _build_R(n: int) -> DivisorMatrix:
    index = divisor_pairs(n)
    position = {pair: k for k, pair in enumerate(index)}
    entries = [[0] * len(index) for _ in index]
    for r, (i, j) in enumerate(index):
        v = coprime_part(i, j // i)
        u = i // v
        for d in divisors(v):
            weight = u * totient(d)
            for c in divisors(n):
                if c % d or lcm(i, c) % j:
                    continue
                entries[r][position[(j * d // v, c)]] += weight * (n // lcm(j, c))
    app_logger.debug(f"R({n}) construída: {len(index)}x{len(index)}")
    return DivisorMatrix(n, entries)


def det_exact(M: DivisorMatrix) -> Rational:
    """Determinante exato."""
    return determinant(M.matrix)


def det_L_formula(n: int) -> int:
    """Produto da diagonal de L(n): Π φ(i)·n/j sobre os pares (i, j)."""
    result = 1
    for i, j in divisor_pairs(n):
        result *= totient(i) * n // j
    return result


def kronecker(M1: DivisorMatrix, M2: DivisorMatrix) -> DivisorMatrix:
    """
    Produto tensorial com a identificação (i,j)⊗(I,J) ↦ (iI, jJ).

    O produto de Kronecker do sympy indexa a linha (a, b) por a·lado(M2) + b;
    o resultado é reordenado para o índice canônico de n = m·M.

    Raises:
        ValueError: Se os parâmetros não forem coprimos
    """
    if gcd(M1.n, M2.n) != 1:
        raise ValueError(f"Parâmetros {M1.n} e {M2.n} não são coprimos")
    n = M1.n * M2.n
    position = {pair: k for k, pair in enumerate(divisor_pairs(n))}
    source = [0] * len(position)
    for a, (i, j) in enumerate(M1.index):
        for b, (I, J) in enumerate(M2.index):
            source[position[(i * I, j * J)]] = a * M2.side + b
    product = kronecker_product(M1.matrix, M2.matrix)
    return DivisorMatrix(n, product.extract(source, source))


def w_vector(p: int, a: int, b: int) -> List[Integer]:
    """
    Vetor linha w^b no índice de p^a.

    Entradas: 1 em (p^b, p^b), p²−1 em (p^b, p^{b+1}), −p em (p^{b+1}, p^{b+1}).

    Raises:
        ValueError: Se p não for primo, a < 1 ou b fora de [0, a−1]
    """
    validator.require_prime(p)
    validator.require_positive(a, "a")
    if isinstance(b, bool) or not isinstance(b, int) or not 0 <= b <= a - 1:
        raise ValueError(f"b={b!r} fora do intervalo [0, {a - 1}]")
    index = divisor_pairs(p ** a)
    position = {pair: k for k, pair in enumerate(index)}
    vector = [Integer(0)] * len(index)
    vector[position[(p ** b, p ** b)]] = Integer(1)
    vector[position[(p ** b, p ** (b + 1))]] = Integer(p * p - 1)
    vector[position[(p ** (b + 1), p ** (b + 1))]] = Integer(-p)
    return vector


def dump_matrices(n: int, directory: Path, matrices: Optional[Dict[str, DivisorMatrix]] = None) -> List[Path]:
    """
    Grava L, R e RL⁻¹ de n como CSV em ``directory``.

    Returns:
        Caminhos dos arquivos gravados
    """
    if matrices is None:
        L, R = build_L(n), build_R(n)
        matrices = {"L": L, "R": R, "RLinv": R @ L.inverse()}
    directory = Path(directory)
    paths = [M.to_csv(directory / f"{name}_{n}.csv") for name, M in matrices.items()]
    app_logger.info(f"📄 Matrizes de n={n} gravadas em {directory}")
    return paths
