"""
Estrutura (G, H) com quociente cíclico G/H e rotulação das classes laterais.
"""
from math import gcd
from typing import Dict, FrozenSet, List

from src.groups.errors import NotNormalError, NotSubgroupError, QuotientNotCyclicError
from src.groups.finite_group import FiniteGroup
from src.groups.permutation import Permutation, multiply, power
from src.utils.logger import app_logger
from src.utils.validators import validator


class CosetStructure:
    """
    Par (G, H) com G/H cíclico de ordem n.

    ``coset_of[g]`` é o expoente e tal que g ∈ (Hx)^e para o gerador fixo Hx;
    ``coset_order_of[g]`` é a ordem dessa classe lateral em G/H.
    """

    def __init__(
        self,
        group: FiniteGroup,
        subgroup: FiniteGroup,
        generator: Permutation,
        coset_of: Dict[Permutation, int]
    ):
        self.group = group
        self.subgroup = subgroup
        self.n = group.order // subgroup.order
        self.generator = generator
        self.coset_of = coset_of
        self.coset_order_of = {g: self.n // gcd(self.n, e) for g, e in coset_of.items()}

        cosets: Dict[int, List[Permutation]] = {e: [] for e in range(self.n)}
        for g in group.elements:
            cosets[coset_of[g]].append(g)
        self.cosets: Dict[int, FrozenSet[Permutation]] = {e: frozenset(m) for e, m in cosets.items()}
        self._intermediate: Dict[int, FiniteGroup] = {}

    def coset_labels_of_order(self, d: int) -> List[int]:
        """Expoentes e cuja classe lateral (Hx)^e tem ordem d em G/H."""
        return [e for e in range(self.n) if self.n // gcd(self.n, e) == d]

    def __repr__(self) -> str:
        return f"<CosetStructure(|G|={self.group.order}, |H|={self.subgroup.order}, n={self.n})>"


def _quotient_order(g: Permutation, H: FiniteGroup) -> int:
    k, y = 1, g
    while y not in H:
        y = multiply(y, g)
        k += 1
    return k


def build_coset_structure(G: FiniteGroup, H: FiniteGroup) -> CosetStructure:
    """
    Verifica as hipóteses e rotula as classes laterais de H em G.

    A classe lateral geradora é a do primeiro elemento de G (ordem canônica)
    cuja classe tem ordem n no quociente.

    Args:
        G: Grupo
        H: Subgrupo candidato

    Returns:
        CosetStructure completa

    Raises:
        NotSubgroupError: H não está contido em G
        NotNormalError: H não é normal em G
        QuotientNotCyclicError: G/H não é cíclico
    """
    if not H.is_subgroup_of(G):
        raise NotSubgroupError("H não é subgrupo de G")
    if not H.is_normal_in(G):
        raise NotNormalError("H não é normal em G")

    n = G.order // H.order

    # partição em classes laterais Hg, representadas pelo menor elemento
    rep_of: Dict[Permutation, Permutation] = {}
    for g in G.elements:
        if g in rep_of:
            continue
        for h in H.elements:
            rep_of[multiply(h, g)] = g

    generator = None
    for g in G.elements:
        if _quotient_order(rep_of[g], H) == n:
            generator = g
            break
    if generator is None:
        raise QuotientNotCyclicError(f"G/H (ordem {n}) não é cíclico")

    label_of_rep: Dict[Permutation, int] = {}
    y = G.identity
    for e in range(n):
        label_of_rep[rep_of[y]] = e
        y = multiply(y, generator)
    coset_of = {g: label_of_rep[rep_of[g]] for g in G.elements}

    app_logger.debug(f"Estrutura de classes laterais: n={n}, |H|={H.order}")
    return CosetStructure(G, H, generator, coset_of)


def unique_intermediate_subgroup(cs: CosetStructure, d: int) -> FiniteGroup:
    """
    Subgrupo K_d: o único entre H e G com |K_d : H| = d.

    Raises:
        ValueError: Se d não dividir n
    """
    validator.require_divides(d, cs.n)
    if d not in cs._intermediate:
        step = cs.n // d
        elements = [g for g, e in cs.coset_of.items() if e % step == 0]
        gens = list(cs.subgroup.generators)
        if d > 1:
            gens.append(power(cs.generator, step))
        cs._intermediate[d] = FiniteGroup(cs.group.degree, gens, elements)
    return cs._intermediate[d]


def representative_coset(cs: CosetStructure, d: int) -> FrozenSet[Permutation]:
    """
    Classe lateral representante Γ_d = (Hx)^{n/d}, de ordem d em G/H.

    Raises:
        ValueError: Se d não dividir n
    """
    validator.require_divides(d, cs.n)
    return cs.cosets[(cs.n // d) % cs.n]
