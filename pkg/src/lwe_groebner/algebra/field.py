"""Prime fields F_q with elements stored as canonical ints in [0, q)."""
from dataclasses import dataclass

from ..errors import InversionOfZero, NotPrime

MAX_MODULUS = 2**31


def is_prime(q: int) -> bool:
    """Deterministic trial division; adequate for q < 2**31."""
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0 or q % 3 == 0:
        return False
    i = 5
    while i * i <= q:
        if q % i == 0 or q % (i + 2) == 0:
            return False
        i += 6
    return True


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not 2 <= self.q < MAX_MODULUS:
            raise NotPrime(f"modulus must be an integer in [2, 2^31), got {self.q!r}")
        if not is_prime(self.q):
            raise NotPrime(f"{self.q} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise InversionOfZero(f"0 has no inverse modulo {self.q}")
        return pow(a, -1, self.q)

    def lift(self, a: int) -> int:
        """Symmetric representative in (-q/2, q/2]."""
        a %= self.q
        return a - self.q if a > self.q // 2 else a

    def elements(self):
        return range(self.q)


def field_inv(a: int, field: PrimeField) -> int:
    return field.inv(a)
