"""
Execução do corpus: todas as verificações de grupo para cada especificação
e todas as verificações de matriz para n ≤ n_max.
"""
import asyncio
from math import gcd
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Union

from tqdm.asyncio import tqdm_asyncio

from config.settings import settings
from src.arith.functions import is_prime_power
from src.groups.cosets import build_coset_structure
from src.groups.errors import HypothesisError
from src.groups.parser import parse_group_spec, read_spec_file, read_spec_name
from src.matrices.spectral import (
    coprime_splits,
    verify_prime_power_kernel,
    verify_rlinv,
    verify_tensor_factorization,
)
from src.models.schemas import VerificationReport, detail
from src.utils.logger import app_logger
from src.utils.validators import validator
from src.verification.theorems import verify_group


SpecSource = Union[str, Path]


def load_corpus(directory: Union[str, Path]) -> List[Path]:
    """
    Lista os documentos ``*.txt`` de um diretório, em ordem alfabética.

    Raises:
        ValueError: Se o diretório não existir
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise ValueError(f"Diretório de corpus não encontrado: {directory}")
    return sorted(directory.glob("*.txt"))


def power_exponents(order: int) -> List[int]:
    """Expoentes a com 1 < a ≤ |G| coprimos com |G| (apenas 1 para o grupo trivial)."""
    if order == 1:
        return [1]
    return [a for a in range(2, order + 1) if gcd(a, order) == 1]


def matrix_reports(n: int) -> List[VerificationReport]:
    """
    Verificações de matriz de um único n: espectro de RL⁻¹, núcleo quando n é
    potência de primo e fatoração tensorial para cada decomposição coprima.

    Raises:
        ValueError: Se n < 1 ou n acima de MATRIX_N_CAP
    """
    reports = [verify_rlinv(n)]
    prime_power = is_prime_power(n)
    if prime_power:
        reports.append(verify_prime_power_kernel(*prime_power))
    reports.extend(verify_tensor_factorization(m, M) for m, M in coprime_splits(n))
    return reports


def _failure_report(check_name: str, subject: str, label: str, error: Exception) -> VerificationReport:
    return VerificationReport.build(
        check_name,
        subject,
        [detail(label, 1, 0)],
        {"error": str(error)}
    )


class CorpusRunner:
    """Agenda as verificações como tarefas independentes com concorrência limitada."""

    def __init__(self, concurrency: Optional[int] = None, order_cap: Optional[int] = None):
        self.concurrency = concurrency or settings.CONCURRENT_TASKS
        self.order_cap = order_cap
        self._semaphore: Optional[asyncio.Semaphore] = None

    def _subject(self, source: SpecSource, position: int, text: Optional[str]) -> str:
        name = read_spec_name(text) if text is not None else None
        if name:
            return name
        if isinstance(source, Path):
            return source.stem
        return f"spec-{position}"

    def _verify_spec(self, source: SpecSource, position: int) -> List[VerificationReport]:
        text = None
        subject = self._subject(source, position, None)
        try:
            text = read_spec_file(source) if isinstance(source, Path) else source
            subject = self._subject(source, position, text)
            G, H = parse_group_spec(text, self.order_cap)
            cs = build_coset_structure(G, H)
        except HypothesisError as e:
            app_logger.bind(check="hypothesis").error(f"❌ [{subject}] {e}")
            return [_failure_report("hypothesis", subject, "hipóteses (H normal, G/H cíclico)", e)]
        except (ValueError, OSError) as e:
            app_logger.bind(check="parse").error(f"❌ [{subject}] especificação inválida: {e}")
            return [_failure_report("parse", subject, "especificação lida sem erros", e)]

        return verify_group(cs, power_exponents(G.order), subject)

    async def _bounded(self, job: Callable[..., List[VerificationReport]], *args) -> List[VerificationReport]:
        async with self._semaphore:
            return await asyncio.to_thread(job, *args)

    async def run(self, specs: Sequence[SpecSource], n_max: int) -> List[VerificationReport]:
        """
        Executa o corpus completo.

        Args:
            specs: Documentos de especificação (texto ou caminho)
            n_max: Maior parâmetro n das verificações de matriz

        Returns:
            Relatórios ordenados por (check_name, subject)

        Raises:
            ValueError: Se n_max < 1
        """
        validator.require_positive(n_max, "n_max")
        self._semaphore = asyncio.Semaphore(self.concurrency)
        app_logger.info(f"Iniciando corpus: {len(specs)} especificações, n ≤ {n_max}")

        jobs = [self._bounded(self._verify_spec, source, k) for k, source in enumerate(specs, start=1)]
        jobs += [self._bounded(matrix_reports, n) for n in range(1, n_max + 1)]

        batches = await tqdm_asyncio.gather(
            *jobs,
            desc="Verificando",
            disable=not settings.SHOW_PROGRESS
        )
        reports = [report for batch in batches for report in batch]
        reports.sort(key=lambda r: (r.check_name, r.subject))

        passed = sum(1 for r in reports if r.passed)
        app_logger.info(f"Corpus concluído: {passed} aprovados, {len(reports) - passed} reprovados de {len(reports)}")
        return reports


async def run_corpus(
    specs: Sequence[SpecSource],
    n_max: int,
    order_cap: Optional[int] = None
) -> List[VerificationReport]:
    """Atalho para CorpusRunner().run(specs, n_max)."""
    return await CorpusRunner(order_cap=order_cap).run(specs, n_max)
