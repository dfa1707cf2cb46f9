"""Monoid family descriptors shared by the semigroup, counting and oracle layers."""

from dataclasses import dataclass
from enum import Enum


class Family(Enum):
    PARTITION = "partition"
    BRAUER = "brauer"
    JONES = "jones"
    PLANAR_PARTITION = "planar-partition"
    FULL_TRANSFORMATION = "transformation"
    SINGULAR_TRANSFORMATION = "singular-transformation"

    def __str__(self):
        return self.value


#: Families whose elements are partition diagrams (as opposed to maps).
DIAGRAM_FAMILIES = (
    Family.PARTITION,
    Family.BRAUER,
    Family.JONES,
    Family.PLANAR_PARTITION,
)


@dataclass(frozen=True)
class MonoidFamily:
    """A concrete monoid: a family tag together with a degree n >= 1."""

    tag: Family
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"degree must be >= 1, got {self.n}")

    def __str__(self):
        return f"{self.tag}({self.n})"

    @property
    def is_diagram_family(self) -> bool:
        return self.tag in DIAGRAM_FAMILIES

    @property
    def top_singular_rank(self) -> int:
        """Rank of the largest proper J-class (the top singular class)."""
        if self.tag in (Family.PARTITION, Family.FULL_TRANSFORMATION,
                        Family.SINGULAR_TRANSFORMATION):
            return self.n - 1
        if self.tag in (Family.BRAUER, Family.JONES, Family.PLANAR_PARTITION):
            if self.n < 2:
                raise ValueError(f"{self} has no singular class below the units")
            return self.n - 2
        raise ValueError(f"unknown family {self.tag}")

    def ranks(self):
        """All ranks r carrying a (nonempty) J-class, ascending."""
        if self.tag in (Family.BRAUER, Family.JONES):
            return list(range(self.n % 2, self.n + 1, 2))
        if self.tag == Family.PLANAR_PARTITION:
            return list(range(0, self.n + 1))
        if self.tag == Family.PARTITION:
            return list(range(0, self.n + 1))
        if self.tag == Family.FULL_TRANSFORMATION:
            return list(range(1, self.n + 1))
        if self.tag == Family.SINGULAR_TRANSFORMATION:
            return list(range(1, self.n))
        raise ValueError(f"unknown family {self.tag}")


def partition(n: int) -> MonoidFamily:
    return MonoidFamily(Family.PARTITION, n)


def brauer(n: int) -> MonoidFamily:
    return MonoidFamily(Family.BRAUER, n)


def jones(n: int) -> MonoidFamily:
    return MonoidFamily(Family.JONES, n)


def planar_partition(n: int) -> MonoidFamily:
    return MonoidFamily(Family.PLANAR_PARTITION, n)


def full_transformation(n: int) -> MonoidFamily:
    return MonoidFamily(Family.FULL_TRANSFORMATION, n)


def singular_transformation(n: int) -> MonoidFamily:
    return MonoidFamily(Family.SINGULAR_TRANSFORMATION, n)
