"""
Erros do núcleo de grupos.
"""


class GroupError(ValueError):
    """Erro base do núcleo de grupos."""


class GroupSpecError(GroupError):
    """Documento de especificação malformado."""


class SubgroupNotInGroupError(GroupError):
    """Gerador do subgrupo H não pertence a G."""


class GroupTooLargeError(GroupError):
    """A enumeração ultrapassou o limite de ordem configurado."""


class HypothesisError(GroupError):
    """O par (G, H) viola as hipóteses do teorema."""


class NotSubgroupError(HypothesisError):
    """H não está contido em G."""


class NotNormalError(HypothesisError):
    """H não é normal em G."""


class QuotientNotCyclicError(HypothesisError):
    """G/H não é cíclico."""
