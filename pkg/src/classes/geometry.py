"""
Classes de conjugação, centralizadores e subgrupos centralizantes Δ_g = H·C_G(g).

As órbitas de conjugação são força bruta de propósito: estes valores são o
oráculo contra o qual as fórmulas fechadas são conferidas. Centralizadores
vêm do ``PermutationGroup.centralizer`` do sympy.
"""
import functools
from collections import deque
from math import lcm
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from config.settings import settings
from src.arith.functions import divisors
from src.groups.cosets import CosetStructure, unique_intermediate_subgroup
from src.groups.finite_group import FiniteGroup
from src.groups.permutation import Permutation, from_sympy, to_sympy
from src.models.schemas import ClassTable, ConjugacyClass
from src.utils.logger import app_logger
from src.utils.validators import validator


def _orbits(points: Iterable[Permutation], acting: Sequence[Permutation]) -> List[FrozenSet[Permutation]]:
    """Órbitas de ``points`` sob conjugação pelo grupo gerado por ``acting``."""
    movers = [to_sympy(t) for t in acting]
    assigned = set()
    result = []
    for start in sorted(set(points)):
        if start in assigned:
            continue
        orbit = {start}
        frontier = deque([to_sympy(start)])
        while frontier:
            g = frontier.popleft()
            for t in movers:
                h = g ^ t
                key = from_sympy(h)
                if key not in orbit:
                    orbit.add(key)
                    frontier.append(h)
        assigned |= orbit
        result.append(frozenset(orbit))
    return result


@functools.lru_cache(maxsize=256)
def _classes_of(G: FiniteGroup) -> Tuple[FrozenSet[Permutation], ...]:
    return tuple(_orbits(G.elements, G.generators))


def conjugacy_classes(G: FiniteGroup) -> List[ConjugacyClass]:
    """
    Classes de conjugação de G, ordenadas pelo representante canônico.

    Args:
        G: Grupo completamente enumerado

    Returns:
        Lista de ConjugacyClass sem anotações de (d, c)
    """
    return [
        ConjugacyClass(representative=min(members), members=members)
        for members in _classes_of(G)
    ]


def centralizer(G: FiniteGroup, g: Permutation) -> FiniteGroup:
    """
    Centralizador C_G(g).

    Raises:
        ValueError: Se g não pertence a G
    """
    if g not in G:
        raise ValueError("O elemento não pertence a G")
    return FiniteGroup.from_sympy(G.sympy_group.centralizer(to_sympy(g)))


def centralizing_subgroup_index(cs: CosetStructure, g: Permutation) -> int:
    """
    Índice c tal que Δ_g = H·C_G(g) = K_c.

    Como G/H é cíclico, a imagem de C_G(g) no quociente tem ordem igual ao
    mmc das ordens das classes laterais dos geradores de C_G(g).

    Raises:
        ValueError: Se g não pertence a G
    """
    if g not in cs.group:
        raise ValueError("O elemento não pertence a G")
    C = cs.group.sympy_group.centralizer(to_sympy(g))
    c = 1
    for s in C.generators:
        c = lcm(c, cs.coset_order_of[from_sympy(s)])
    return c


def build_class_table(cs: CosetStructure) -> ClassTable:
    """
    Anota cada classe com (d, c) e agrega N_d^c, T_d, S_d e S*_d.

    N_d^c conta apenas as classes na classe lateral representante Γ_d.

    Raises:
        ValueError: Se o índice centralizante variar dentro de uma classe
    """
    n = cs.n
    full_scan = cs.group.order <= settings.CLASS_SCAN_LIMIT

    classes = []
    for cls in conjugacy_classes(cs.group):
        rep = cls.representative
        labels = {cs.coset_of[g] for g in cls.members}
        if len(labels) != 1:
            raise ValueError(f"Classe de {rep} espalhada por várias classes laterais")
        c = centralizing_subgroup_index(cs, rep)
        if full_scan:
            indices = {centralizing_subgroup_index(cs, g) for g in cls.members}
            if indices != {c}:
                raise ValueError(f"Índice centralizante mal definido na classe de {rep}: {sorted(indices)}")
        classes.append(cls.model_copy(update={
            'coset_order': cs.coset_order_of[rep],
            'centralizing_index': c,
        }))

    def label(cls: ConjugacyClass) -> int:
        return cs.coset_of[cls.representative]

    N: Dict[Tuple[int, int], int] = {}
    T: Dict[int, int] = {}
    S: Dict[int, int] = {}
    S_star: Dict[int, int] = {}
    for d in divisors(n):
        gamma = (n // d) % n
        in_gamma = [cls for cls in classes if label(cls) == gamma]
        T[d] = len(in_gamma)
        S[d] = sum(1 for cls in classes if label(cls) % (n // d) == 0)
        S_star[d] = subgroup_class_count(unique_intermediate_subgroup(cs, d))
        for c in divisors(n):
            if c % d == 0:
                N[(d, c)] = sum(1 for cls in in_gamma if cls.centralizing_index == c)

    app_logger.debug(f"Tabela de classes: {len(classes)} classes, n={n}")
    return ClassTable(cs=cs, classes=classes, N=N, T=T, S=S, S_star=S_star)


def split_count(cs: CosetStructure, cls: ConjugacyClass, j: int) -> int:
    """
    Número de órbitas em que a classe se parte sob conjugação por K_j.

    Raises:
        ValueError: Se j não divide n ou se a classe não está contida em K_j
    """
    validator.require_divides(j, cs.n, "j")
    d = cs.coset_order_of[cls.representative]
    if j % d:
        raise ValueError(f"A classe (ordem de classe lateral {d}) não está contida em K_{j}")
    K = unique_intermediate_subgroup(cs, j)
    return len(_orbits(cls.members, K.generators))


def subgroup_class_count(K: FiniteGroup) -> int:
    """Número de classes de conjugação de K sob sua própria ação."""
    return len(_classes_of(K))


def class_count_in(G: FiniteGroup, region: Iterable[Permutation]) -> int:
    """
    Número de G-classes contidas em ``region``.

    Raises:
        ValueError: Se a região não for união de G-classes
    """
    region = frozenset(region)
    orbits = _orbits(region, G.generators)
    if any(not orbit <= region for orbit in orbits):
        raise ValueError("A região não é união de classes de conjugação")
    return len(orbits)


def integral_class_count(G: FiniteGroup, H: FiniteGroup, region: Iterable[Permutation]) -> int:
    """
    Número de G-classes contidas em ``region`` que não se partem sob H.

    Args:
        G: Grupo
        H: Subgrupo normal de G
        region: União de G-classes

    Raises:
        ValueError: Se a região não for união de classes
    """
    region = frozenset(region)
    count = 0
    for members in _classes_of(G):
        inside = members & region
        if not inside:
            continue
        if inside != members:
            raise ValueError("A região não é união de classes de conjugação")
        if len(_orbits(members, H.generators)) == 1:
            count += 1
    if sum(len(m) for m in _classes_of(G) if m & region) != len(region):
        raise ValueError("A região contém elementos fora de G")
    return count
