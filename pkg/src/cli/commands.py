"""
Linha de comando: classes, verify, matrix e corpus.

Códigos de saída:
    0  todas as verificações aprovadas
    1  alguma verificação reprovada
    2  erro de uso ou de leitura da especificação
    3  hipótese violada (H não normal ou G/H não cíclico)
"""
import asyncio
import json
from pathlib import Path
from typing import List, Optional, Tuple

import click

from config.settings import settings
from src.arith.functions import divisors
from src.classes.geometry import build_class_table
from src.groups.cosets import CosetStructure, build_coset_structure
from src.groups.errors import HypothesisError
from src.groups.parser import parse_group_spec, read_spec_file, read_spec_name
from src.groups.permutation import format_cycles
from src.matrices.divisor_matrix import dump_matrices
from src.models.schemas import ClassTable, CliConfig, VerificationReport
from src.utils.logger import app_logger
from src.verification.corpus import load_corpus, matrix_reports, run_corpus
from src.verification.theorems import describe, verify_group


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3


class CommandError(Exception):
    """Erro de comando já associado a um código de saída."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _load(config: CliConfig) -> Tuple[CosetStructure, str]:
    """
    Lê a especificação e monta a estrutura de classes laterais.

    Raises:
        CommandError: Com código 2 (leitura) ou 3 (hipóteses)
    """
    try:
        text = read_spec_file(config.group_file)
    except OSError as e:
        raise CommandError(f"Não foi possível ler {config.group_file}: {e}", EXIT_USAGE) from e
    except ValueError as e:
        raise CommandError(str(e), EXIT_USAGE) from e

    try:
        G, H = parse_group_spec(text, config.order_cap)
        cs = build_coset_structure(G, H)
    except HypothesisError as e:
        raise CommandError(str(e), EXIT_HYPOTHESIS) from e
    except ValueError as e:
        raise CommandError(str(e), EXIT_USAGE) from e

    subject = read_spec_name(text) or Path(config.group_file).stem
    return cs, subject


# ==================== Renderização ====================

def reports_to_json(reports: List[VerificationReport]) -> str:
    return json.dumps([r.model_dump(mode="json") for r in reports], indent=2, ensure_ascii=False)


def render_report(report: VerificationReport, full: bool = True) -> List[str]:
    mark = "✅" if report.passed else "❌"
    ok = sum(1 for row in report.details if row.ok)
    lines = [f"{mark} {report.check_name} [{report.subject}] ({ok}/{len(report.details)})"]
    for row in report.details if full else report.failures:
        status = "ok" if row.ok else "FALHA"
        lines.append(f"    {row.label}: esperado {row.expected}, obtido {row.actual} [{status}]")
    if report.witnesses:
        lines.append("    testemunha: " + ", ".join(f"{k}={v}" for k, v in report.witnesses.items()))
    return lines


def class_table_to_dict(table: ClassTable, subject: str) -> dict:
    cs = table.cs
    return {
        "subject": subject,
        "group_order": cs.group.order,
        "subgroup_order": cs.subgroup.order,
        "n": cs.n,
        "classes": [
            {
                "representative": format_cycles(cls.representative),
                "size": cls.size,
                "coset": cs.coset_of[cls.representative],
                "coset_order": cls.coset_order,
                "centralizing_index": cls.centralizing_index,
            }
            for cls in table.classes
        ],
        "N": [{"d": d, "c": c, "count": count} for (d, c), count in table.N.items()],
        "T": {str(d): v for d, v in table.T.items()},
        "S": {str(d): v for d, v in table.S.items()},
        "S_star": {str(d): v for d, v in table.S_star.items()},
    }


def render_class_table(table: ClassTable, subject: str) -> List[str]:
    cs = table.cs
    lines = [
        f"{subject}: |G|={cs.group.order}, |H|={cs.subgroup.order}, n={cs.n}",
        "",
        f"{'representante':<28} {'tamanho':>7} {'classe lateral':>14} {'ordem':>5} {'c':>5}",
    ]
    for cls in table.classes:
        lines.append(
            f"{format_cycles(cls.representative):<28} {cls.size:>7} "
            f"{cs.coset_of[cls.representative]:>14} {cls.coset_order:>5} {cls.centralizing_index:>5}"
        )
    lines.append("")
    for (d, c), count in table.N.items():
        lines.append(f"N_{d}^{c} = {count}")
    lines.append("")
    for d in divisors(cs.n):
        lines.append(f"d={d}: T_d = {table.T[d]}, S_d = {table.S[d]}, S*_d = {table.S_star[d]}")
    return lines


def _emit(reports: List[VerificationReport], output: str, full: bool = True) -> int:
    reports = sorted(reports, key=lambda r: (r.check_name, r.subject))
    if output == "json":
        click.echo(reports_to_json(reports))
    else:
        for report in reports:
            click.echo("\n".join(render_report(report, full)))
        passed = sum(1 for r in reports if r.passed)
        click.echo(f"\n{passed}/{len(reports)} verificações aprovadas")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


# ==================== Comandos ====================

def cmd_classes(config: CliConfig) -> int:
    """Imprime as classes anotadas e as tabelas N, T, S e S*."""
    cs, subject = _load(config)
    table = build_class_table(cs)
    if config.output == "json":
        click.echo(json.dumps(class_table_to_dict(table, subject), indent=2, ensure_ascii=False))
    else:
        click.echo("\n".join(render_class_table(table, subject)))
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    """Executa MT, PL, Omega, App e TL (menor a > 1 válido) num par (G, H)."""
    cs, subject = _load(config)
    app_logger.info(f"Verificando {subject} ({describe(cs)})")
    return _emit(verify_group(cs, subject=subject), config.output)


def cmd_matrix(config: CliConfig, dump_dir: Optional[Path] = None) -> int:
    """
    Verificações de matriz para um único n.

    Inclui o espectro de RL⁻¹, o núcleo quando n é potência de primo e a
    fatoração tensorial para cada decomposição coprima de n.
    """
    n = config.n
    try:
        reports = matrix_reports(n)
        if dump_dir is not None:
            dump_matrices(n, dump_dir)
    except ValueError as e:
        raise CommandError(str(e), EXIT_USAGE) from e
    return _emit(reports, config.output)


def cmd_corpus(config: CliConfig) -> int:
    """Executa o corpus de especificações e as verificações de matriz até n_max."""
    try:
        specs = load_corpus(config.corpus_dir)
        reports = asyncio.run(run_corpus(specs, config.n_max, config.order_cap))
    except ValueError as e:
        raise CommandError(str(e), EXIT_USAGE) from e
    return _emit(reports, config.output, full=False)


def _run(ctx: click.Context, handler, **options) -> None:
    """Valida a configuração, executa o comando e encerra com o código certo."""
    extra = options.pop("extra", {})
    options = {k: v for k, v in options.items() if v is not None}
    try:
        config = CliConfig(**options)
        code = handler(config, **extra)
    except CommandError as e:
        click.echo(f"Erro: {e}", err=True)
        ctx.exit(e.exit_code)
    except ValueError as e:
        click.echo(f"Erro: {e}", err=True)
        ctx.exit(EXIT_USAGE)
    ctx.exit(code)


output_option = click.option(
    "--output", type=click.Choice(["text", "json"]), default="text", show_default=True,
    help="Formato da saída."
)
order_cap_option = click.option(
    "--order-cap", type=int, default=None,
    help=f"Limite de ordem na enumeração (padrão: {settings.ORDER_CAP})."
)
group_option = click.option(
    "--group", "group_file", type=click.Path(path_type=Path), default=None,
    help="Documento de especificação do par (G, H)."
)


@click.group()
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
def cli() -> None:
    """Verificação das contagens de classes de conjugação com quociente cíclico."""


@cli.command("classes")
@group_option
@output_option
@order_cap_option
@click.pass_context
def classes_command(ctx, group_file, output, order_cap):
    """Classes de conjugação anotadas e tabelas N, T, S, S*."""
    _run(ctx, cmd_classes, command="classes", group_file=group_file, output=output, order_cap=order_cap)


@cli.command("verify")
@group_option
@output_option
@order_cap_option
@click.pass_context
def verify_command(ctx, group_file, output, order_cap):
    """Todas as verificações de grupo num par (G, H)."""
    _run(ctx, cmd_verify, command="verify", group_file=group_file, output=output, order_cap=order_cap)


@cli.command("matrix")
@click.option("--n", "n", type=int, default=None, help="Parâmetro n das matrizes L(n), R(n).")
@click.option("--dump-csv", "dump_csv", type=click.Path(path_type=Path), default=None,
              help="Diretório onde gravar L, R e RL⁻¹ em CSV.")
@output_option
@click.pass_context
def matrix_command(ctx, n, dump_csv, output):
    """Determinante, espectro de RL⁻¹ e fatoração tensorial para um n."""
    _run(ctx, cmd_matrix, command="matrix", n=n, output=output, extra={"dump_dir": dump_csv})


@cli.command("corpus")
@click.option("--n-max", "n_max", type=int, default=None, help="Maior n das verificações de matriz.")
@click.option("--corpus-dir", "corpus_dir", type=click.Path(path_type=Path), default=None,
              help="Diretório com as especificações (padrão: CORPUS_DIR).")
@output_option
@order_cap_option
@click.pass_context
def corpus_command(ctx, n_max, corpus_dir, output, order_cap):
    """Corpus completo: grupos do diretório e matrizes até n_max."""
    _run(
        ctx, cmd_corpus, command="corpus", n_max=n_max,
        corpus_dir=corpus_dir or settings.corpus_path, output=output, order_cap=order_cap
    )
