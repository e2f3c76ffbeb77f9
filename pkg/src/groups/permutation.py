"""
Permutações: ponte entre tuplas de imagens e ``sympy.combinatorics.Permutation``.

Os elementos circulam pelo pacote como tuplas de imagens 0-based (a forma
``array_form`` do sympy), cuja ordem lexicográfica é a ordem canônica. Toda a
aritmética passa pelo sympy. O produto ``multiply(p, q)`` aplica p e depois q,
a mesma convenção de ``p*q`` no sympy.
"""
import re
from typing import List, Tuple

from sympy.combinatorics import Permutation as SympyPermutation

from src.groups.errors import GroupSpecError


Permutation = Tuple[int, ...]

CYCLE_PATTERN = re.compile(r'\(([^()]*)\)')
PERMUTATION_PATTERN = re.compile(r'^(\s*\([^()]*\)\s*)+$')
POINT_PATTERN = re.compile(r'[0-9]+')


def to_sympy(p: Permutation) -> SympyPermutation:
    return SympyPermutation(list(p))


def from_sympy(p: SympyPermutation) -> Permutation:
    return tuple(p.array_form)


def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def multiply(p: Permutation, q: Permutation) -> Permutation:
    """Produto pq: primeiro p, depois q."""
    return from_sympy(to_sympy(p) * to_sympy(q))


def inverse(p: Permutation) -> Permutation:
    return from_sympy(~to_sympy(p))


def conjugate(g: Permutation, t: Permutation) -> Permutation:
    """g^t = t⁻¹ g t."""
    return from_sympy(to_sympy(g) ^ to_sympy(t))


def power(p: Permutation, k: int) -> Permutation:
    """p^k (k negativo usa a inversa)."""
    return from_sympy(to_sympy(p) ** k)


def order(p: Permutation) -> int:
    return int(to_sympy(p).order())


def cycles(p: Permutation) -> List[List[int]]:
    """Ciclos não triviais, cada um começando pelo menor ponto."""
    return to_sympy(p).cyclic_form


def format_cycles(p: Permutation) -> str:
    """Notação de ciclos com pontos 1-based; a identidade é ``()``."""
    parts = ["(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles(p)]
    return "".join(parts) or "()"


def parse_cycles(text: str, degree: int) -> Permutation:
    """
    Lê uma permutação em notação de ciclos, pontos 1-based.

    Args:
        text: Ex.: "(1 2)(3 4)" ou "()" para a identidade
        degree: Grau da permutação

    Returns:
        Tupla de imagens 0-based

    Raises:
        GroupSpecError: Notação malformada, ponto fora do grau ou ponto repetido
    """
    if not PERMUTATION_PATTERN.match(text):
        raise GroupSpecError(f"Notação de ciclos malformada: {text!r}")

    cyclic_form = []
    used = set()
    for body in CYCLE_PATTERN.findall(text):
        tokens = body.split()
        # só dígitos ASCII
        if not all(POINT_PATTERN.fullmatch(t) for t in tokens):
            raise GroupSpecError(f"Ciclo malformado: ({body})")
        points = [int(t) for t in tokens]
        for x in points:
            if x < 1 or x > degree:
                raise GroupSpecError(f"Ponto {x} fora do grau {degree} em {text!r}")
            if x in used:
                raise GroupSpecError(f"Ponto {x} repetido em {text!r}")
            used.add(x)
        if len(points) > 1:
            cyclic_form.append([x - 1 for x in points])

    if not cyclic_form:
        return identity(degree)
    return from_sympy(SympyPermutation(cyclic_form, size=degree))
