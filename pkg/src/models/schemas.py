"""
Schemas Pydantic dos objetos de domínio e dos relatórios de verificação.
"""
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import Rational

from config.settings import settings


Element = Tuple[int, ...]
ExactValue = Union[int, str]


def to_exact(value: Union[int, Fraction, Rational]) -> ExactValue:
    """
    Converte um valor exato para a forma serializável.

    Inteiros (e frações inteiras) viram ``int``; demais racionais viram "p/q".
    Aceita ``Fraction`` e ``Rational`` do sympy.
    """
    if isinstance(value, Rational):
        value = Fraction(int(value.p), int(value.q))
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return int(value)


# ==================== Aritmética ====================

class DivisorSet(BaseModel):
    """Divisores de n em ordem crescente."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    divisors: Tuple[int, ...]

    @model_validator(mode="after")
    def check_divisors(self):
        ds = self.divisors
        if not ds or ds[0] != 1 or ds[-1] != self.n:
            raise ValueError("A lista deve conter 1 e n")
        if any(a >= b for a, b in zip(ds, ds[1:])):
            raise ValueError("A lista de divisores deve ser estritamente crescente")
        if any(self.n % d for d in ds):
            raise ValueError("Todo elemento da lista deve dividir n")
        return self

    def __len__(self) -> int:
        return len(self.divisors)

    def __iter__(self):
        return iter(self.divisors)


class CosetOrderProfile(BaseModel):
    """Censo de ordens de elementos numa classe lateral geradora de C_j/C_i."""

    model_config = ConfigDict(frozen=True)

    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    u: int = Field(..., ge=1)
    v: int = Field(..., ge=1)
    order_counts: Dict[int, int]

    @model_validator(mode="after")
    def check_profile(self):
        if self.j % self.i:
            raise ValueError(f"i={self.i} não divide j={self.j}")
        if self.u * self.v != self.i:
            raise ValueError("u·v deve ser igual a i")
        if sum(self.order_counts.values()) != self.i:
            raise ValueError("As contagens devem somar i")
        base = self.j // self.v
        if any(k % base for k in self.order_counts):
            raise ValueError(f"Toda ordem deve ser múltipla de j/v = {base}")
        return self


# ==================== Classes de conjugação ====================

class ConjugacyClass(BaseModel):
    """Classe de conjugação de G, opcionalmente anotada com (d, c)."""

    model_config = ConfigDict(frozen=True)

    representative: Element
    members: FrozenSet[Element]
    coset_order: Optional[int] = None
    centralizing_index: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.members)


class ClassTable(BaseModel):
    """Tabela de classes anotadas e contagens agregadas N, T, S e S*."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cs: Any
    classes: List[ConjugacyClass]
    N: Dict[Tuple[int, int], int]
    T: Dict[int, int]
    S: Dict[int, int]
    S_star: Dict[int, int]


# ==================== Relatórios ====================

class DetailRow(BaseModel):
    """Uma asserção de um relatório: rótulo, valor esperado e valor obtido."""

    label: str
    expected: ExactValue
    actual: ExactValue

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


class VerificationReport(BaseModel):
    """Registro de aprovação/reprovação de uma verificação."""

    check_name: str
    subject: str
    passed: bool
    details: List[DetailRow] = Field(default_factory=list)
    witnesses: Optional[Dict[str, Union[int, str, List[int]]]] = None

    @model_validator(mode="after")
    def check_consistency(self):
        """passed deve ser verdadeiro exatamente quando todas as linhas conferem."""
        if self.passed != all(row.ok for row in self.details):
            raise ValueError("passed inconsistente com as linhas de detalhe")
        return self

    @classmethod
    def build(
        cls,
        check_name: str,
        subject: str,
        details: List[DetailRow],
        witnesses: Optional[Dict[str, Union[int, str, List[int]]]] = None
    ) -> "VerificationReport":
        """
        Monta o relatório calculando ``passed`` a partir das linhas.

        Testemunhas só são mantidas quando alguma linha falhou.
        """
        passed = all(row.ok for row in details)
        return cls(
            check_name=check_name,
            subject=subject,
            passed=passed,
            details=details,
            witnesses=None if passed else witnesses
        )

    @property
    def failures(self) -> List[DetailRow]:
        return [row for row in self.details if not row.ok]


def detail(label: str, expected: Union[int, Fraction, Rational], actual: Union[int, Fraction, Rational]) -> DetailRow:
    """Atalho para montar uma linha de detalhe com valores exatos."""
    return DetailRow(label=label, expected=to_exact(expected), actual=to_exact(actual))


# ==================== CLI ====================

class CliConfig(BaseModel):
    """Configuração de uma invocação da linha de comando."""

    command: Literal["classes", "verify", "matrix", "corpus"]
    group_file: Optional[Path] = None
    n: Optional[int] = Field(None, ge=1)
    n_max: Optional[int] = Field(None, ge=1)
    corpus_dir: Optional[Path] = None
    output: Literal["text", "json"] = "text"
    order_cap: int = Field(default_factory=lambda: settings.ORDER_CAP, ge=1)

    @model_validator(mode="after")
    def check_required(self):
        if self.command in ("classes", "verify") and self.group_file is None:
            raise ValueError(f"O comando '{self.command}' exige --group")
        if self.command == "matrix" and self.n is None:
            raise ValueError("O comando 'matrix' exige --n")
        if self.command == "corpus" and (self.n_max is None or self.corpus_dir is None):
            raise ValueError("O comando 'corpus' exige --n-max e um diretório de especificações")
        return self
