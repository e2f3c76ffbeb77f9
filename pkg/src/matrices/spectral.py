"""
Verificações espectrais de RL⁻¹, do núcleo no caso p^a e da fatoração tensorial.
"""
import functools
from math import gcd
from typing import Dict, List, Optional

from sympy import Matrix, Rational

from src.arith.functions import divisors, mobius, tau
from src.matrices import linalg
from src.matrices.divisor_matrix import (
    DivisorMatrix,
    build_L,
    build_R,
    det_exact,
    det_L_formula,
    kronecker,
    w_vector,
)
from src.models.schemas import DetailRow, VerificationReport, detail, to_exact
from src.utils.logger import log_report
from src.utils.validators import validator


def eigenspace_dimension(M: DivisorMatrix, lam: linalg.Exact) -> int:
    """
    dim ker(M − λI) sobre os racionais.

    Args:
        M: Matriz quadrada
        lam: Autovalor candidato (exato)

    Returns:
        Dimensão do autoespaço (0 se λ não for autovalor)
    """
    return linalg.eigenspace_dimension(M.matrix, lam)


def nullity(M: DivisorMatrix) -> int:
    return linalg.nullity(M.matrix)


@functools.lru_cache(maxsize=32)
def _rl_inverse(n: int) -> DivisorMatrix:
    return build_R(n) @ build_L(n).inverse()


def rl_inverse(n: int) -> DivisorMatrix:
    """
    Matriz RL⁻¹ de n, calculada exatamente.

    Raises:
        ValueError: Se n < 1 ou n acima de MATRIX_N_CAP
    """
    build_L(n)
    return _rl_inverse(n)


def predicted_spectrum(n: int) -> Dict[Rational, int]:
    """
    Autovalores μ(d)/d com multiplicidade τ(n/d), agrupando valores iguais.

    Todo d com fator quadrado contribui para λ = 0. Ordem: λ decrescente.
    """
    spectrum: Dict[Rational, int] = {}
    for d in divisors(n):
        lam = Rational(mobius(d), d)
        spectrum[lam] = spectrum.get(lam, 0) + tau(n // d)
    return dict(sorted(spectrum.items(), reverse=True))


def measured_spectrum(n: int) -> Dict[Rational, int]:
    """dim ker(RL⁻¹ − λI) medida em cada autovalor previsto de n."""
    M = rl_inverse(n)
    return {lam: eigenspace_dimension(M, lam) for lam in predicted_spectrum(n)}


def _tensor_spectrum(first: Dict[Rational, int], second: Dict[Rational, int]) -> Dict[Rational, int]:
    """Multiplicidades de A⊗B a partir das de A e B (ambas diagonalizáveis)."""
    result: Dict[Rational, int] = {}
    for lam1, dim1 in first.items():
        for lam2, dim2 in second.items():
            result[lam1 * lam2] = result.get(lam1 * lam2, 0) + dim1 * dim2
    return result


def _first_failure(details: List[DetailRow]) -> Optional[DetailRow]:
    return next((row for row in details if not row.ok), None)


def verify_rlinv(n: int) -> VerificationReport:
    """
    Confere o espectro de RL⁻¹ contra Π_{d|n} (x − μ(d)/d)^{τ(n/d)}.

    Linhas do relatório: det L, uma dimensão de autoespaço por autovalor
    agrupado, soma das dimensões (diagonalizabilidade), traço e determinante
    de RL⁻¹, multiplicatividade das dimensões em cada decomposição coprima
    n = m·M e o subespaço de soluções triviais em ker(L − R).

    Raises:
        ValueError: Se n < 1 ou n acima de MATRIX_N_CAP
    """
    validator.require_positive(n)
    L, R = build_L(n), build_R(n)
    M = rl_inverse(n)
    spectrum = predicted_spectrum(n)
    measured = measured_spectrum(n)

    details = [detail("det L = Π φ(i)·n/j", det_L_formula(n), det_exact(L))]

    witnesses = None
    for lam, multiplicity in spectrum.items():
        dim = measured[lam]
        details.append(detail(f"dim ker(RL⁻¹ − ({to_exact(lam)})I)", multiplicity, dim))
        if witnesses is None and dim != multiplicity:
            witnesses = {
                "eigenvalue": to_exact(lam),
                "expected_dimension": multiplicity,
                "actual_dimension": dim,
            }
    details.append(detail("Σ dimensões = lado da matriz", M.side, sum(measured.values())))

    trace = sum((lam * m for lam, m in spectrum.items()), Rational(0))
    det = Rational(1)
    for lam, m in spectrum.items():
        det *= lam ** m
    details.append(detail("traço de RL⁻¹", trace, M.trace()))
    details.append(detail("det R / det L", det, det_exact(R) / det_exact(L)))

    for m, cofactor in coprime_splits(n):
        product = _tensor_spectrum(measured_spectrum(m), measured_spectrum(cofactor))
        diverging = sum(1 for lam in set(product) | set(measured) if product.get(lam, 0) != measured.get(lam, 0))
        details.append(detail(f"dimensões de {n} = produto das de {m} e {cofactor}: autovalores divergentes", 0, diverging))

    # vetores N_d^c = [c = c0]: soluções de todas as equações Ω
    difference = (L - R).matrix
    outside = 0
    for c0 in divisors(n):
        vector = Matrix([int(c == c0) for _, c in L.index])
        outside += sum(1 for x in difference * vector if x != 0)
    details.append(detail("vetores [c = c0] em ker(L − R): entradas não nulas", 0, outside))
    details.append(detail("nulidade de L − R = τ(n)", tau(n), linalg.nullity(difference)))

    if witnesses is None:
        failed = _first_failure(details)
        witnesses = {"check": failed.label} if failed else None

    return log_report(VerificationReport.build("rlinv", f"n={n}", details, witnesses))


def verify_prime_power_kernel(p: int, a: int) -> VerificationReport:
    """
    Estrutura do núcleo para n = p^a.

    Args:
        p: Primo
        a: Expoente >= 1

    Returns:
        Relatório com proporcionalidade de linhas de R, anulação de pR + L
        pelos vetores w^b, a identidade coluna a coluna que a sustenta e as
        dimensões exatas dos autoespaços de RL⁻¹

    Raises:
        ValueError: Se p não for primo ou a < 1
    """
    validator.require_prime(p)
    validator.require_positive(a, "a")
    n = p ** a
    L, R = build_L(n), build_R(n)
    details: List[DetailRow] = []

    for s in range(2, a + 1):
        base = R.row((1, p ** s))
        for r in range(1, s):
            scaled = [p ** r * x for x in base]
            mismatched = sum(1 for x, y in zip(R.row((p ** r, p ** s)), scaled) if x != y)
            details.append(detail(f"R[({p ** r},{p ** s})] = {p ** r}·R[(1,{p ** s})]", 0, mismatched))
    details.append(detail("nulidade de R", a * (a - 1) // 2, nullity(R)))

    combined = (R.scaled(p) + L).matrix
    ws = []
    for b in range(a):
        w = w_vector(p, a, b)
        ws.append(w)
        nonzero = sum(1 for x in Matrix([w]) * combined if x != 0)
        details.append(detail(f"w^{b}·(pR + L) = 0: entradas não nulas", 0, nonzero))

        lo, hi = p ** b, p ** (b + 1)
        columnwise = [
            (p + 1) * l_bb + (p * p - 1) * (p * r_bh + l_bh) - p * (p + 1) * l_hh
            for l_bb, r_bh, l_bh, l_hh in zip(
                L.row((lo, lo)), R.row((lo, hi)), L.row((lo, hi)), L.row((hi, hi))
            )
        ]
        details.append(detail(
            f"identidade coluna a coluna b={b}: colunas não nulas", 0, sum(1 for x in columnwise if x)
        ))
    details.append(detail("posto de {w^b}", a, linalg.rank(Matrix(ws))))

    M = rl_inverse(n)
    details.append(detail("dim ker(RL⁻¹ − I)", a + 1, eigenspace_dimension(M, 1)))
    details.append(detail(f"dim ker(RL⁻¹ + (1/{p})I)", a, eigenspace_dimension(M, Rational(-1, p))))
    details.append(detail("dim ker(RL⁻¹)", a * (a - 1) // 2, eigenspace_dimension(M, 0)))

    failed = _first_failure(details)
    witnesses = {"check": failed.label} if failed else None
    return log_report(VerificationReport.build("prime_power_kernel", f"p={p}, a={a}", details, witnesses))


def verify_tensor_factorization(m: int, M: int) -> VerificationReport:
    """
    Confere L, R e RL⁻¹ de m·M contra os produtos tensoriais dos fatores.

    Raises:
        ValueError: Se m, M não forem positivos e coprimos
    """
    validator.require_positive(m, "m")
    validator.require_positive(M, "M")
    validator.require_coprime(m, M, "m")
    n = m * M

    pairs = {
        "L": (build_L(n), kronecker(build_L(m), build_L(M))),
        "R": (build_R(n), kronecker(build_R(m), build_R(M))),
        "RL⁻¹": (rl_inverse(n), kronecker(rl_inverse(m), rl_inverse(M))),
    }
    details = []
    witnesses = None
    for name, (direct, product) in pairs.items():
        mismatches = direct.mismatches(product)
        details.append(detail(f"{name}({n}) = {name}({m}) ⊗ {name}({M}): entradas divergentes", 0, len(mismatches)))
        if mismatches and witnesses is None:
            row, col = mismatches[0]
            witnesses = {"matrix": name, "row": list(row), "column": list(col)}

    return log_report(VerificationReport.build("tensor", f"m={m}, M={M}", details, witnesses))


def coprime_splits(n: int) -> List[tuple]:
    """Fatorações n = m·M com 1 < m < M e mdc(m, M) = 1."""
    return [
        (m, n // m) for m in divisors(n)
        if 1 < m < n // m and gcd(m, n // m) == 1
    ]
