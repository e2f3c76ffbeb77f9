"""
Leitura de documentos de especificação de grupo (G, H).

Formato (UTF-8, orientado a linhas, ``#`` inicia comentário)::

    name: S4 / A4          # opcional
    degree: 4
    generators:
    (1 2)
    (1 2 3 4)
    subgroup:
    (1 2 3)
    (1 2)(3 4)
"""
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from src.groups.errors import GroupSpecError, SubgroupNotInGroupError
from src.groups.finite_group import FiniteGroup, enumerate_elements
from src.groups.permutation import parse_cycles, to_sympy
from src.utils.logger import app_logger
from src.utils.validators import validator


class GroupSpecReader:
    """Extrai as seções de um documento de especificação de grupo."""

    # Patterns Regex para extração
    PATTERNS = {
        'header': r'^(degree|name|generators|subgroup)\s*:\s*(.*)$',
        'comment': r'#.*$',
    }

    def read(self, text: str) -> Dict[str, object]:
        """
        Separa o documento em grau, nome e listas de geradores.

        Returns:
            Dicionário com 'degree' (texto), 'name', 'generators' e 'subgroup'

        Raises:
            GroupSpecError: Linha fora de seção ou cabeçalho repetido
        """
        sections: Dict[str, object] = {'degree': None, 'name': None, 'generators': [], 'subgroup': []}
        current: Optional[str] = None
        seen = set()

        for line_num, raw in enumerate(text.splitlines(), start=1):
            line = re.sub(self.PATTERNS['comment'], '', raw).strip()
            if not line:
                continue

            header = re.match(self.PATTERNS['header'], line, re.IGNORECASE)
            if header:
                key, rest = header.group(1).lower(), header.group(2).strip()
                if key in seen:
                    raise GroupSpecError(f"Linha {line_num}: seção '{key}' repetida")
                seen.add(key)
                if key in ('degree', 'name'):
                    sections[key] = rest
                    current = None
                else:
                    current = key
                    if rest:
                        sections[key].append((line_num, rest))
                continue

            if current is None:
                raise GroupSpecError(f"Linha {line_num}: conteúdo fora de seção: {line!r}")
            sections[current].append((line_num, line))

        return sections


def _parse_permutations(entries: List[Tuple[int, str]], degree: int):
    perms = []
    for line_num, text in entries:
        try:
            perms.append(parse_cycles(text, degree))
        except GroupSpecError as e:
            raise GroupSpecError(f"Linha {line_num}: {e}") from e
    return perms


def read_spec_name(text: str) -> Optional[str]:
    """Nome declarado no documento (linha ``name:``), se houver."""
    try:
        name = GroupSpecReader().read(text)['name']
    except GroupSpecError:
        return None
    return name or None


def parse_group_spec(text: str, order_cap: Optional[int] = None) -> Tuple[FiniteGroup, FiniteGroup]:
    """
    Lê o documento e enumera G e H.

    Args:
        text: Documento de especificação
        order_cap: Limite de ordem para a enumeração

    Returns:
        Tupla (G, H), ambos completamente enumerados

    Raises:
        GroupSpecError: Documento malformado
        SubgroupNotInGroupError: Gerador de H fora de G
        GroupTooLargeError: Ordem acima do limite
    """
    sections = GroupSpecReader().read(text)

    try:
        degree = validator.parse_positive(sections['degree'], "degree")
    except ValueError as e:
        raise GroupSpecError(str(e)) from e

    g_gens = _parse_permutations(sections['generators'], degree)
    h_gens = _parse_permutations(sections['subgroup'], degree)

    G = enumerate_elements(degree, g_gens, order_cap)
    for k, h in enumerate(h_gens, start=1):
        if not G.sympy_group.contains(to_sympy(h)):
            raise SubgroupNotInGroupError(f"O gerador {k} de H não pertence a G")
    H = enumerate_elements(degree, h_gens, order_cap)

    app_logger.info(f"Especificação lida: grau {degree}, |G|={G.order}, |H|={H.order}")
    return G, H


def read_spec_file(path: Union[str, Path]) -> str:
    """
    Lê um documento de especificação em UTF-8.

    Raises:
        OSError: Arquivo inexistente ou ilegível
        GroupSpecError: Conteúdo que não é UTF-8 válido
    """
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GroupSpecError(f"{path.name} não está em UTF-8: {e.reason} na posição {e.start}") from e
