"""
Grupos finitos de permutações com enumeração completa dos elementos.

A estrutura (ordem, pertinência, subgrupos, normalidade, centralizadores) vem
do ``PermutationGroup`` do sympy; a lista de elementos em ordem canônica é
mantida ao lado porque os oráculos de força bruta percorrem o grupo inteiro.
"""
from math import gcd
from typing import Dict, Iterable, Iterator, Optional, Sequence

from sympy.combinatorics import PermutationGroup

from config.settings import settings
from src.groups.errors import GroupSpecError, GroupTooLargeError
from src.groups.permutation import Permutation, from_sympy, identity, power, to_sympy
from src.utils.logger import app_logger


class FiniteGroup:
    """
    Grupo finito de permutações de grau fixo.

    Os elementos ficam em ordem lexicográfica das tuplas de imagens; essa
    ordem fixa todas as escolhas de representantes do pacote.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Iterable[Permutation]):
        self.degree = degree
        self.generators: tuple = tuple(generators)
        self.elements: tuple = tuple(sorted(set(elements)))
        self._members = frozenset(self.elements)
        self.sympy_group = _sympy_group(degree, self.generators)

    @classmethod
    def from_sympy(cls, group: PermutationGroup) -> "FiniteGroup":
        """Enumera um PermutationGroup já construído (centralizadores, subgrupos)."""
        generators = [from_sympy(s) for s in group.generators]
        elements = (tuple(p) for p in group.generate(af=True))
        return cls(group.degree, generators, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return identity(self.degree)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._members

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and self.sympy_group.is_subgroup(other.sympy_group)

    def is_normal_in(self, other: "FiniteGroup") -> bool:
        return self.sympy_group.is_normal(other.sympy_group)

    def __repr__(self) -> str:
        return f"<FiniteGroup(degree={self.degree}, order={self.order}, gens={len(self.generators)})>"


def _sympy_group(degree: int, generators: Sequence[Permutation]) -> PermutationGroup:
    # sem geradores o sympy cairia no grau 1
    return PermutationGroup([to_sympy(s) for s in generators] or [to_sympy(identity(degree))])


def enumerate_elements(
    degree: int,
    generators: Sequence[Permutation],
    order_cap: Optional[int] = None
) -> FiniteGroup:
    """
    Enumera o grupo gerado por ``generators``.

    A ordem é calculada antes (Schreier-Sims), então um grupo acima do limite
    é recusado sem ser percorrido.

    Args:
        degree: Grau das permutações
        generators: Geradores (tuplas de imagens 0-based)
        order_cap: Limite de ordem (padrão: settings.ORDER_CAP)

    Returns:
        FiniteGroup com os elementos em ordem canônica

    Raises:
        GroupSpecError: Gerador com grau diferente
        GroupTooLargeError: Ordem acima do limite
    """
    cap = order_cap or settings.ORDER_CAP
    for s in generators:
        if len(s) != degree:
            raise GroupSpecError(f"Gerador de grau {len(s)} num grupo de grau {degree}")

    group = _sympy_group(degree, generators)
    order = int(group.order())
    if order > cap:
        raise GroupTooLargeError(f"Grupo grande demais: ordem {order} acima do limite {cap}")

    result = FiniteGroup(degree, generators, (tuple(p) for p in group.generate(af=True)))
    app_logger.debug(f"Grupo enumerado: grau {degree}, ordem {result.order}")
    return result


def power_map(G: FiniteGroup, a: int) -> Dict[Permutation, Permutation]:
    """
    Bijeção g ↦ g^a de G.

    Args:
        G: Grupo
        a: Expoente coprimo com |G|

    Returns:
        Dicionário elemento -> elemento

    Raises:
        ValueError: Se mdc(a, |G|) != 1
    """
    if gcd(a, G.order) != 1:
        raise ValueError(f"a={a} não é coprimo com |G|={G.order}")
    return {g: power(g, a) for g in G.elements}
