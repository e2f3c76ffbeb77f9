"""
Verificações dos resultados de contagem de classes sobre um par (G, H) concreto.

Cada função devolve um VerificationReport; falhas matemáticas nunca levantam
exceção, ficam registradas nas linhas de detalhe e nas testemunhas.
"""
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from config.settings import settings
from src.arith.functions import divisors, lcm, mobius, totient
from src.classes.geometry import (
    build_class_table,
    class_count_in,
    conjugacy_classes,
    integral_class_count,
)
from src.groups.cosets import CosetStructure, unique_intermediate_subgroup
from src.groups.finite_group import power_map
from src.groups.permutation import multiply
from src.matrices.divisor_matrix import build_L, build_R
from src.models.schemas import ClassTable, DetailRow, VerificationReport, detail
from src.utils.logger import app_logger, log_report
from src.utils.validators import validator


def describe(cs: CosetStructure) -> str:
    """Descrição padrão do par (G, H) para o campo ``subject``."""
    return f"|G|={cs.group.order}, |H|={cs.subgroup.order}, n={cs.n}"


def _finish(
    check_name: str,
    subject: str,
    details: List[DetailRow],
    witnesses: Optional[Dict] = None
) -> VerificationReport:
    return log_report(VerificationReport.build(check_name, subject, details, witnesses))


def _table(cs: CosetStructure, table: Optional[ClassTable]) -> ClassTable:
    return table if table is not None else build_class_table(cs)


def verify_MT(
    cs: CosetStructure,
    table: Optional[ClassTable] = None,
    subject: Optional[str] = None
) -> VerificationReport:
    """
    Distribuição uniforme das classes de índice c entre as classes laterais.

    Duas famílias de asserções: N_d^c = N_1^c para todo d | c | n, e a forma
    forte, em que cada classe lateral de ordem d (não só Γ_d) contém N_1^c
    classes de índice centralizante c.

    Args:
        cs: Estrutura de classes laterais
        table: Tabela de classes já calculada (opcional)
        subject: Descrição para o relatório

    Returns:
        VerificationReport "MT"; em caso de falha a testemunha traz (d, c)
    """
    table = _table(cs, table)
    n = cs.n
    details = []
    witnesses = None

    for c in divisors(n):
        for d in divisors(c):
            row = detail(f"N_{d}^{c} = N_1^{c}", table.N[(1, c)], table.N[(d, c)])
            details.append(row)
            if not row.ok and witnesses is None:
                witnesses = {"d": d, "c": c}

    per_coset: Dict[Tuple[int, int], int] = {}
    for cls in table.classes:
        key = (cs.coset_of[cls.representative], cls.centralizing_index)
        per_coset[key] = per_coset.get(key, 0) + 1
    for c in divisors(n):
        for d in divisors(c):
            for e in cs.coset_labels_of_order(d):
                row = detail(
                    f"classe lateral (Hx)^{e} (ordem {d}): classes com c={c}",
                    table.N[(1, c)],
                    per_coset.get((e, c), 0)
                )
                details.append(row)
                if not row.ok and witnesses is None:
                    witnesses = {"d": d, "c": c, "coset": e}

    return _finish("MT", subject or describe(cs), details, witnesses)


def intermediate_counts(cs: CosetStructure) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """
    Contagens diretas para cada par i | j | n.

    Returns:
        (i, j) -> (classes inteiras de (K_j, K_i) em K_i,
                   K_j-classes na classe lateral geradora de K_j/K_i)
    """
    n = cs.n
    counts = {}
    for j in divisors(n):
        K_j = unique_intermediate_subgroup(cs, j)
        for i in divisors(j):
            K_i = unique_intermediate_subgroup(cs, i)
            step, offset = n // i, (n // j) % (n // i)
            coset = [g for g in K_j.elements if cs.coset_of[g] % step == offset]
            counts[(i, j)] = (
                integral_class_count(K_j, K_i, K_i.elements),
                class_count_in(K_j, coset),
            )
    return counts


def verify_PL(
    cs: CosetStructure,
    table: Optional[ClassTable] = None,
    subject: Optional[str] = None
) -> VerificationReport:
    """
    Classes numa classe lateral geradora = classes inteiras contidas em H.

    Confere cada classe lateral geradora de G/H e, para todo i | j | n, o
    mesmo enunciado aplicado ao par (K_j, K_i).
    """
    table = _table(cs, table)
    n = cs.n
    G, H = cs.group, cs.subgroup
    integral = integral_class_count(G, H, H.elements)

    per_label: Dict[int, int] = {}
    for cls in table.classes:
        e = cs.coset_of[cls.representative]
        per_label[e] = per_label.get(e, 0) + 1

    details = []
    witnesses = None
    for e in cs.coset_labels_of_order(n):
        row = detail(f"classes em (Hx)^{e} = classes inteiras em H", integral, per_label.get(e, 0))
        details.append(row)
        if not row.ok and witnesses is None:
            witnesses = {"coset": e}

    for (i, j), (left, right) in intermediate_counts(cs).items():
        row = detail(f"(i,j)=({i},{j}): inteiras em K_{i} = classes na classe lateral geradora", left, right)
        details.append(row)
        if not row.ok and witnesses is None:
            witnesses = {"i": i, "j": j}

    return _finish("PL", subject or describe(cs), details, witnesses)


def verify_Omega(
    cs: CosetStructure,
    table: Optional[ClassTable] = None,
    subject: Optional[str] = None
) -> VerificationReport:
    """
    Equações lineares L_i^j = R_i^j avaliadas nos N_d^c medidos.

    Para cada par (i, j) confere a concordância tripla: linha de L aplicada
    a N, linha de R aplicada a N e as contagens diretas no grupo.
    """
    table = _table(cs, table)
    L, R = build_L(cs.n), build_R(cs.n)
    vector = Matrix([table.N[pair] for pair in L.index])
    left_side, right_side = L.matrix * vector, R.matrix * vector
    direct = intermediate_counts(cs)

    details = []
    witnesses = None
    for k, pair in enumerate(L.index):
        i, j = pair
        left, right = left_side[k], right_side[k]
        integral, in_coset = direct[pair]
        rows = [
            detail(f"L_{i}^{j} = R_{i}^{j}", left, right),
            detail(f"L_{i}^{j} = inteiras em K_{i}", integral, left),
            detail(f"R_{i}^{j} = classes na classe lateral geradora", in_coset, right),
        ]
        details.extend(rows)
        if witnesses is None and not all(row.ok for row in rows):
            witnesses = {"i": i, "j": j}

    return _finish("Omega", subject or describe(cs), details, witnesses)


def class_count_formula_T(n: int, d: int, T: Dict[int, int]) -> Fraction:
    """Número de classes de K_d a partir dos valores T_c."""
    total = Fraction(0)
    for c in divisors(n):
        for a in divisors(c):
            mu = mobius(c // a)
            if mu:
                total += mu * Fraction(gcd(a, d), lcm(a, d)) * T[c]
    return n * total


def class_count_formula_S(n: int, d: int, S: Dict[int, int]) -> Fraction:
    """Número de classes de K_d a partir dos valores S_b (dupla soma de Möbius)."""
    total = Fraction(0)
    for c in divisors(n):
        for a in divisors(c):
            mu_a = mobius(c // a)
            if not mu_a:
                continue
            weight = mu_a * Fraction(gcd(a, d), lcm(a, d) * totient(c))
            for b in divisors(c):
                mu_b = mobius(c // b)
                if mu_b:
                    total += weight * mu_b * S[b]
    return n * total


def class_count_from_N(n: int, d: int, N: Dict[Tuple[int, int], int]) -> Fraction:
    """S*_d = Σ_{c|n} n·mdc(c,d)/mmc(c,d)·N_1^c."""
    return sum(
        (n * Fraction(gcd(c, d), lcm(c, d)) * N[(1, c)] for c in divisors(n)),
        Fraction(0)
    )


def verify_App(
    cs: CosetStructure,
    table: Optional[ClassTable] = None,
    subject: Optional[str] = None
) -> VerificationReport:
    """
    Fórmulas fechadas para o número de classes dos subgrupos K_d.

    Valores racionais não inteiros são serializados como "p/q" e por isso
    nunca conferem com a contagem inteira.
    """
    table = _table(cs, table)
    n = cs.n
    T, S, N = table.T, table.S, table.N

    details = []
    witnesses = None
    for d in divisors(n):
        expected = table.S_star[d]
        rows = [
            detail(f"d={d}: fórmula em T", expected, class_count_formula_T(n, d, T)),
            detail(f"d={d}: fórmula em S", expected, class_count_formula_S(n, d, S)),
            detail(f"d={d}: identidade em N_1^c", expected, class_count_from_N(n, d, N)),
            detail(f"S_{d} = Σ φ(b)·T_b", S[d], sum(totient(b) * T[b] for b in divisors(d))),
            detail(
                f"φ({d})·T_{d} = Σ μ({d}/b)·S_b",
                totient(d) * T[d],
                sum(mobius(d // b) * S[b] for b in divisors(d))
            ),
        ]
        details.extend(rows)
        if witnesses is None and not all(row.ok for row in rows):
            witnesses = {"d": d}

    return _finish("App", subject or describe(cs), details, witnesses)


def smallest_power_exponent(order: int) -> int:
    """Menor a > 1 coprimo com a ordem do grupo."""
    a = 2
    while gcd(a, order) != 1:
        a += 1
    return a


def verify_TL(cs: CosetStructure, a: int, subject: Optional[str] = None) -> VerificationReport:
    """
    Propriedades da aplicação σ: g ↦ g^a.

    1. todo subgrupo é σ-invariante (conferido em H, em cada K_d e em cada ⟨g⟩);
    2. σ preserva e reflete a comutação;
    3. σ permuta as classes de conjugação;
    4. (Hx^e)σ = Hx^{a·e}.

    Args:
        cs: Estrutura de classes laterais
        a: Expoente inteiro coprimo com |G| (0 só no grupo trivial; negativos usam a inversa)

    Raises:
        ValueError: Se a não for inteiro ou não for coprimo com |G|
    """
    if isinstance(a, bool) or not isinstance(a, int):
        raise ValueError(f"a={a!r} deve ser inteiro")
    G, n = cs.group, cs.n
    validator.require_coprime(a, G.order, "a")
    sigma = power_map(G, a)
    subject = f"{subject or describe(cs)}, a={a}"

    details = [detail("bijeção g ↦ g^a: imagens distintas", G.order, len(set(sigma.values())))]

    subgroups = [("H", cs.subgroup)] + [
        (f"K_{d}", unique_intermediate_subgroup(cs, d)) for d in divisors(n)
    ]
    for name, K in subgroups:
        members = set(K.elements)
        escaped = sum(1 for g in K.elements if sigma[g] not in members)
        details.append(detail(f"{name} invariante: elementos que escapam", 0, escaped))

    broken_cyclic = 0
    for g in G.elements:
        cyclic = set()
        y = g
        while y not in cyclic:
            cyclic.add(y)
            y = multiply(y, g)
        if any(sigma[x] not in cyclic for x in cyclic):
            broken_cyclic += 1
    details.append(detail("subgrupos cíclicos ⟨g⟩ invariantes: violações", 0, broken_cyclic))

    classes = conjugacy_classes(G)
    if G.order <= settings.CLASS_SCAN_LIMIT:
        firsts = G.elements
    else:
        firsts = sorted(set(G.generators) | {cls.representative for cls in classes})
    commuting_violations = 0
    for g1 in firsts:
        s1 = sigma[g1]
        for g2 in G.elements:
            s2 = sigma[g2]
            before = multiply(g1, g2) == multiply(g2, g1)
            after = multiply(s1, s2) == multiply(s2, s1)
            if before != after:
                commuting_violations += 1
    details.append(detail("comutação preservada e refletida: violações", 0, commuting_violations))

    class_sets = {cls.members for cls in classes}
    not_classes = sum(
        1 for cls in classes
        if frozenset(sigma[g] for g in cls.members) not in class_sets
    )
    details.append(detail("imagens de classes são classes: violações", 0, not_classes))

    wrong_cosets = sum(
        1 for e in range(n)
        if frozenset(sigma[g] for g in cs.cosets[e]) != cs.cosets[(a * e) % n]
    )
    details.append(detail("(Hx^e)σ = Hx^(a·e): classes laterais divergentes", 0, wrong_cosets))

    failed = next((row for row in details if not row.ok), None)
    witnesses = {"a": a, "check": failed.label} if failed else None
    return _finish("TL", subject, details, witnesses)


def verify_group(
    cs: CosetStructure,
    exponents: Optional[Sequence[int]] = None,
    subject: Optional[str] = None
) -> List[VerificationReport]:
    """
    Executa MT, PL, Omega, App e TL sobre um par (G, H).

    Args:
        cs: Estrutura de classes laterais
        exponents: Expoentes para TL (padrão: só o menor a > 1 coprimo com |G|)
        subject: Descrição para os relatórios

    Returns:
        Lista de relatórios: quatro fixos e um TL por expoente
    """
    table = build_class_table(cs)
    if exponents is None:
        exponents = [smallest_power_exponent(cs.group.order)]
    reports = [
        verify_MT(cs, table, subject),
        verify_PL(cs, table, subject),
        verify_Omega(cs, table, subject),
        verify_App(cs, table, subject),
    ]
    reports.extend(verify_TL(cs, a, subject) for a in exponents)
    passed = sum(1 for r in reports if r.passed)
    app_logger.info(f"Verificação de {subject or describe(cs)}: {passed}/{len(reports)} aprovadas")
    return reports