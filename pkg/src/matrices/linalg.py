"""
Álgebra linear exata sobre os racionais com sympy.

Posto, determinante e inversa passam pela ``DomainMatrix`` sobre QQ, a
representação densa do sympy com elementos do corpo dos racionais; nenhum
ponto flutuante e nenhuma expressão simbólica no caminho.
"""
from fractions import Fraction
from typing import Union

from sympy import QQ, Matrix, Rational, eye
from sympy.matrices import MatrixBase
from sympy.polys.matrices import DomainMatrix


Exact = Union[int, Fraction, Rational]


def exact(value: Exact) -> Rational:
    """Converte int, Fraction ou Rational para Rational do sympy."""
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def over_rationals(M: MatrixBase) -> DomainMatrix:
    return DomainMatrix.from_Matrix(Matrix(M)).convert_to(QQ).to_dense()


def rank(M: MatrixBase) -> int:
    """Posto exato de uma matriz racional."""
    if M.rows == 0 or M.cols == 0:
        return 0
    return over_rationals(M).rank()


def nullity(M: MatrixBase) -> int:
    """Dimensão do núcleo à direita."""
    return M.cols - rank(M)


def determinant(M: MatrixBase) -> Rational:
    """
    Determinante exato de uma matriz racional quadrada.

    Raises:
        ValueError: Se a matriz não for quadrada
    """
    if not M.is_square:
        raise ValueError("Determinante exige matriz quadrada")
    if M.rows == 0:
        return Rational(1)
    return QQ.to_sympy(over_rationals(M).det())


def inverse(M: MatrixBase) -> Matrix:
    """
    Inversa exata.

    Raises:
        ValueError: Se a matriz for singular ou não quadrada
    """
    if not M.is_square:
        raise ValueError("Inversa exige matriz quadrada")
    domain_matrix = over_rationals(M)
    if domain_matrix.rank() < M.rows:
        raise ValueError("Matriz não invertível")
    return domain_matrix.inv().to_Matrix()


def eigenspace_dimension(M: MatrixBase, lam: Exact) -> int:
    """dim ker(M − λI); 0 quando λ não é autovalor."""
    return nullity(M - exact(lam) * eye(M.rows))
