"""
Funções aritméticas multiplicativas e utilitários de divisores.

Fatoração por divisão experimental com tabela de primos memorizada até 10^4;
os parâmetros deste projeto nunca passam da ordem dos grupos ou do tamanho
das matrizes.
"""
import functools
import math
import operator
from typing import Iterable, Optional, Tuple

from src.models.schemas import CosetOrderProfile, DivisorSet
from src.utils.validators import validator


PRIME_TABLE_LIMIT = 10_000


@functools.lru_cache(None)
def _prime_table() -> Tuple[int, ...]:
    sieve = bytearray([1]) * (PRIME_TABLE_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(PRIME_TABLE_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return tuple(p for p, flag in enumerate(sieve) if flag)


@functools.lru_cache(None)
def prime_factors(n: int) -> Tuple[Tuple[int, int], ...]:
    """
    Fatoração de n em pares (p, e), com p crescente.

    Raises:
        ValueError: Se n < 1
    """
    validator.require_positive(n)
    result = []
    value = n
    for p in _prime_table():
        if p * p > value:
            break
        if value % p == 0:
            e = 0
            while value % p == 0:
                value //= p
                e += 1
            result.append((p, e))
    else:
        # além da tabela: continua a divisão experimental pelos ímpares
        p = PRIME_TABLE_LIMIT + 1
        while p * p <= value:
            if value % p == 0:
                e = 0
                while value % p == 0:
                    value //= p
                    e += 1
                result.append((p, e))
            p += 2
    if value > 1:
        result.append((value, 1))
    return tuple(result)


def _product(values: Iterable[int]) -> int:
    return functools.reduce(operator.mul, values, 1)


@functools.lru_cache(None)
def divisors(n: int) -> Tuple[int, ...]:
    """Divisores de n em ordem crescente (tupla memorizada)."""
    result = [1]
    for p, e in prime_factors(n):
        result = [d * p ** k for d in result for k in range(e + 1)]
    return tuple(sorted(result))


def divisor_set(n: int) -> DivisorSet:
    """
    Retorna o conjunto de divisores de n.

    Args:
        n: Inteiro positivo

    Returns:
        DivisorSet com os divisores em ordem crescente

    Raises:
        ValueError: Se n = 0
    """
    return DivisorSet(n=n, divisors=divisors(n))


def totient(n: int) -> int:
    """Função φ de Euler."""
    return _product((p - 1) * p ** (e - 1) for p, e in prime_factors(n))


def mobius(n: int) -> int:
    """Função de Möbius μ(n) ∈ {−1, 0, 1}."""
    factors = prime_factors(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def tau(n: int) -> int:
    """Número de divisores de n."""
    return _product(e + 1 for _, e in prime_factors(n))


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


# notação "hcf" das fórmulas de contagem de classes
hcf = gcd


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def is_prime_power(n: int) -> Optional[Tuple[int, int]]:
    """Retorna (p, a) se n = p^a com a >= 1, senão None."""
    factors = prime_factors(n)
    if len(factors) != 1:
        return None
    return factors[0]


def coprime_part(i: int, m: int) -> int:
    """Maior divisor de i coprimo com m."""
    v = i
    for p, _ in prime_factors(m):
        while v % p == 0:
            v //= p
    return v


def generating_coset_profile(i: int, j: int) -> CosetOrderProfile:
    """
    Censo de ordens numa classe lateral geradora de C_j/C_i.

    Com v o maior divisor de i coprimo com j/i e u = i/v, cada elemento da
    classe lateral tem ordem j·d/v para algum d | v, e há u·φ(d) deles.

    Args:
        i: Ordem do subgrupo cíclico C_i
        j: Ordem do grupo cíclico C_j (múltiplo de i)

    Returns:
        CosetOrderProfile com u, v e o mapa ordem -> quantidade

    Raises:
        ValueError: Se i não dividir j
    """
    validator.require_positive(j, "j")
    validator.require_divides(i, j, "i")
    v = coprime_part(i, j // i)
    u = i // v
    counts = {j * d // v: u * totient(d) for d in divisors(v)}
    return CosetOrderProfile(i=i, j=j, u=u, v=v, order_counts=counts)
