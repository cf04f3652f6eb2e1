"""Quadratic residues modulo an odd prime.

For an odd prime p the nonzero squares QR = {x^2 mod p} and their
complement NQR each contain (p-1)/2 elements.  The behaviour under
negation splits by residue class of p:

    p = 1 mod 4:  r in QR  <=>  p-r in QR   (QR closed under negation)
    p = 3 mod 4:  r in QR  <=>  p-r in NQR

Undirected chord lengths in a circulant graph identify r with p-r, so
the set of length representatives has (p-1)/4 elements when p = 1 mod 4
(one per {r, p-r} pair, the smaller taken) and is all of QR when
p = 3 mod 4 (each pair holds one residue and one non-residue).
"""

from dataclasses import dataclass

from .errors import NotOddPrime


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division; intended for n <= 10^7."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ResidueClassification:
    """QR/NQR split of {1..p-1} plus the chord-length representatives."""

    modulus: int
    qr: tuple
    nqr: tuple
    length_reps: tuple
    residue_class: int  # p mod 4, either 1 or 3

    def is_residue(self, x: int) -> bool:
        return (x % self.modulus) in self._qr_set

    @property
    def _qr_set(self):
        return frozenset(self.qr)


def classify_residues(p: int) -> ResidueClassification:
    """Split {1..p-1} into squares and non-squares for an odd prime p."""
    if p < 3 or not is_prime(p):
        raise NotOddPrime(f"modulus must be an odd prime, got {p}")
    qr = sorted({x * x % p for x in range(1, p)})
    qr_set = set(qr)
    nqr = [x for x in range(1, p) if x not in qr_set]
    if p % 4 == 1:
        reps = [r for r in qr if r <= (p - 1) // 2]
    else:
        reps = list(qr)
    return ResidueClassification(
        modulus=p,
        qr=tuple(qr),
        nqr=tuple(nqr),
        length_reps=tuple(reps),
        residue_class=p % 4,
    )
