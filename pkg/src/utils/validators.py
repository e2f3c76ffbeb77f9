"""
Validadores de argumentos numéricos usados em todo o pacote.
"""
import math
import re
from typing import Optional


class ArgumentValidator:
    """Classe para validação dos argumentos inteiros das operações."""

    def require_positive(self, value: int, name: str = "n") -> int:
        """
        Garante que o valor é um inteiro positivo.

        Args:
            value: Valor a ser validado
            name: Nome do argumento (para a mensagem de erro)

        Returns:
            O próprio valor

        Raises:
            ValueError: Se o valor não for um inteiro >= 1
        """
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"{name} deve ser inteiro, recebido: {value!r}")
        if value < 1:
            raise ValueError(f"{name} deve ser >= 1, recebido: {value}")
        return value

    def require_divides(self, d: int, n: int, what: str = "d") -> None:
        """
        Garante que d divide n.

        Raises:
            ValueError: Se d não dividir n
        """
        self.require_positive(d, what)
        if n % d != 0:
            raise ValueError(f"{what}={d} não divide {n}")

    def require_coprime(self, a: int, m: int, what: str = "a") -> None:
        """Garante mdc(a, m) = 1."""
        if math.gcd(a, m) != 1:
            raise ValueError(f"{what}={a} não é coprimo com {m}")

    @staticmethod
    def is_prime(p: int) -> bool:
        """Teste de primalidade por divisão (escala de bancada)."""
        if p < 2:
            return False
        k = 2
        while k * k <= p:
            if p % k == 0:
                return False
            k += 1
        return True

    def require_prime(self, p: int) -> int:
        """Garante que p é primo."""
        if not isinstance(p, int) or not self.is_prime(p):
            raise ValueError(f"p={p!r} não é primo")
        return p

    def parse_positive(self, text: Optional[str], name: str) -> int:
        """
        Converte texto em inteiro positivo (usado pela leitura de documentos).

        Returns:
            Inteiro positivo

        Raises:
            ValueError: Se o texto não representar um inteiro >= 1
        """
        if text is None or not re.fullmatch(r'\s*\d+\s*', text):
            raise ValueError(f"{name} inválido: {text!r}")
        return self.require_positive(int(text), name)


# Instância global
validator = ArgumentValidator()
