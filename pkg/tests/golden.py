"""Hand-transcribed reference collections.

Modules are written by their composition factors from top to socle, so
"412" is the uniserial module with top 4 and length 3, i.e. M(4,3).
"""

from taunak.serial import Indec
from taunak.smc import SemibrickPair


def mod(factors: str) -> Indec:
    return Indec(int(factors[0]), len(factors))


def pair(positive: str, negative: str = "") -> SemibrickPair:
    return SemibrickPair(frozenset(map(mod, positive.split())), frozenset(map(mod, negative.split())))


# (2,[2,1]): S1 ⊔ P2, S1 ⊔ P1[1], P1 ⊔ P2[1], P2 ⊔ S1[1], S1[1] ⊔ P2[1]
A2_SMCS = [
    pair("1 2"),
    pair("1", "12"),
    pair("12", "2"),
    pair("2", "1"),
    pair("", "1 2"),
]

# (3,[3,2,1]), fourteen collections
A3_SMCS = [
    pair("1 2 3"),
    pair("", "1 2 3"),
    pair("1 2", "123"),
    pair("3", "1 2"),
    pair("2 3", "1"),
    pair("123", "2 3"),
    pair("1 3", "12"),
    pair("23", "1 3"),
    pair("1 23", "3"),
    pair("2", "1 23"),
    pair("2 123", "23"),
    pair("12", "2 123"),
    pair("3 12", "2"),
    pair("1", "3 12"),
]

# (4,[3,3,3,3]) up to rotation, with the size of each rotation orbit
D4C_ORBITS = [
    (pair("1 2 3 4"), 1),
    (pair("", "1 2 3 4"), 1),
    (pair("1 2 3", "234"), 4),
    (pair("412", "1 2 3"), 4),
    (pair("1 2 34", "4"), 4),
    (pair("3", "1 2 34"), 4),
    (pair("1 3 234", "34"), 4),
    (pair("23", "1 3 234"), 4),
    (pair("1 234", "3 4"), 4),
    (pair("2 3", "1 234"), 4),
    (pair("1 412", "3 12"), 4),
    (pair("3 41", "1 412"), 4),
    (pair("1 3", "12 34"), 2),
    (pair("23 41", "1 3"), 2),
    (pair("1 34", "4 12"), 4),
]
