"""Enumeration, Green's structure, ideals and closure for the monoid families.

Elements are PartitionDiagram values for the diagram families and
Transformation values for the map families.  Enumeration avoids filtering
oversized supersets: Brauer diagrams come from perfect matchings, Jones
diagrams from noncrossing matchings of the boundary cycle, and planar
partitions from noncrossing partitions of the boundary cycle.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from . import counting
from .diagram import PartitionDiagram, Transformation, compose
from .families import Family, MonoidFamily

SIZE_GUARD = 10**7


class SizeGuardError(ValueError):
    """Raised when an enumeration would exceed the element-count guard."""


class _Zero:
    """Absorbing zero adjoined to a principal factor."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"


ZERO = _Zero()


# -- raw combinatorial generators ---------------------------------------------

def set_partitions(m):
    """All set partitions of range(m) as restricted-growth class-id tuples."""
    if m == 0:
        yield ()
        return
    cid = [0] * m

    def rec(i, maxc):
        if i == m:
            yield tuple(cid)
            return
        for c in range(maxc + 2):
            cid[i] = c
            yield from rec(i + 1, max(maxc, c))

    yield from rec(1, 0)


def perfect_matchings(points):
    """All perfect matchings of the given point list, as tuples of pairs."""
    points = list(points)
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for sub in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield ((first, other),) + sub


def noncrossing_matchings(points):
    """All noncrossing perfect matchings of a linearly ordered point list."""
    points = list(points)
    if not points:
        yield ()
        return
    first = points[0]
    for i in range(1, len(points), 2):
        inside, outside = points[1:i], points[i + 1:]
        for left in noncrossing_matchings(inside):
            for right in noncrossing_matchings(outside):
                yield ((first, points[i]),) + left + right


def noncrossing_partitions(points):
    """All noncrossing partitions of a linearly ordered point list.

    Processes points left to right keeping a stack of blocks that may still
    grow; joining a block finalizes everything stacked above it.
    """
    points = list(points)
    m = len(points)
    if m == 0:
        yield ()
        return
    stack = []      # each entry: list of points, still open
    closed = []

    def rec(i):
        if i == m:
            yield tuple(tuple(b) for b in closed + stack)
            return
        p = points[i]
        # join the block at depth d from the top, finalizing the d-1 above it
        for d in range(1, len(stack) + 1):
            removed = stack[len(stack) - d + 1:]
            del stack[len(stack) - d + 1:]
            closed.extend(removed)
            stack[-1].append(p)
            yield from rec(i + 1)
            stack[-1].pop()
            del closed[len(closed) - len(removed):]
            stack.extend(removed)
        stack.append([p])
        yield from rec(i + 1)
        stack.pop()

    yield from rec(0)


# -- family enumeration --------------------------------------------------------

def _cycle_point(n, pos):
    """Signed point at a boundary-cycle position (1, ..., n, n', ..., 1')."""
    return pos + 1 if pos < n else -(2 * n - pos)


def _order_point(n, pos):
    """Signed point at a canonical-order position (1..n, 1'..n')."""
    return pos + 1 if pos < n else -(pos - n + 1)


def iter_elements(family: MonoidFamily):
    """Yield every element of the family, in a fixed deterministic order."""
    n = family.n
    tag = family.tag
    if tag == Family.PARTITION:
        for cid in set_partitions(2 * n):
            blocks = {}
            for pos, c in enumerate(cid):
                blocks.setdefault(c, []).append(_order_point(n, pos))
            yield PartitionDiagram(n, blocks.values())
    elif tag == Family.BRAUER:
        pts = [_order_point(n, pos) for pos in range(2 * n)]
        for pairs in perfect_matchings(pts):
            yield PartitionDiagram(n, pairs)
    elif tag == Family.JONES:
        pts = [_cycle_point(n, pos) for pos in range(2 * n)]
        for pairs in noncrossing_matchings(pts):
            yield PartitionDiagram(n, pairs)
    elif tag == Family.PLANAR_PARTITION:
        pts = [_cycle_point(n, pos) for pos in range(2 * n)]
        for blocks in noncrossing_partitions(pts):
            yield PartitionDiagram(n, blocks)
    elif tag == Family.FULL_TRANSFORMATION:
        for img in iproduct(range(1, n + 1), repeat=n):
            yield Transformation(img)
    elif tag == Family.SINGULAR_TRANSFORMATION:
        for img in iproduct(range(1, n + 1), repeat=n):
            if len(set(img)) < n:
                yield Transformation(img)
    else:
        raise ValueError(f"unknown family {tag}")


def enumerate_elements(family: MonoidFamily) -> list:
    """Complete duplicate-free element list; errors if the guard is exceeded."""
    expected = counting.monoid_order(family.tag, family.n)
    if expected > SIZE_GUARD:
        raise SizeGuardError(
            f"{family} has {expected} elements, above the guard {SIZE_GUARD}")
    return list(iter_elements(family))


def element_rank(x) -> int:
    return x.rank


def family_product(family: MonoidFamily):
    """The associative product function for this family's elements."""
    if family.is_diagram_family:
        return lambda a, b: compose(a, b)[0]
    return lambda a, b: a.compose(b)


# -- Green's structure ----------------------------------------------------------

@dataclass(frozen=True)
class JClassDescriptor:
    family: MonoidFamily
    r: int
    r_class_count: int
    l_class_count: int
    is_group: bool
    h_size: int


def r_class_key(family: MonoidFamily, x):
    """Invariant characterizing the R-class of x within its J-class."""
    tag = family.tag
    if tag in (Family.PARTITION, Family.PLANAR_PARTITION):
        sig = x.signature()
        return (tuple(sorted(sig.dom)), sig.ker.class_id)
    if tag in (Family.BRAUER, Family.JONES):
        return x.signature().ker.class_id
    return x.kernel().class_id


def l_class_key(family: MonoidFamily, x):
    tag = family.tag
    if tag in (Family.PARTITION, Family.PLANAR_PARTITION):
        sig = x.signature()
        return (tuple(sorted(sig.codom)), sig.coker.class_id)
    if tag in (Family.BRAUER, Family.JONES):
        return x.signature().coker.class_id
    return tuple(sorted(x.image()))


def h_class_size(family: MonoidFamily, r: int) -> int:
    """Common size of the H-classes in the rank-r J-class."""
    if family.tag in (Family.JONES, Family.PLANAR_PARTITION):
        return 1
    import math
    return math.factorial(r)


def green_classes(family: MonoidFamily) -> list[JClassDescriptor]:
    """J-class descriptors ordered by increasing rank."""
    rkeys, lkeys = {}, {}
    for x in iter_elements_guarded(family):
        r = x.rank
        rkeys.setdefault(r, set()).add(r_class_key(family, x))
        lkeys.setdefault(r, set()).add(l_class_key(family, x))
    out = []
    for r in sorted(rkeys):
        out.append(JClassDescriptor(
            family=family,
            r=r,
            r_class_count=len(rkeys[r]),
            l_class_count=len(lkeys[r]),
            is_group=(r == family.n),
            h_size=h_class_size(family, r),
        ))
    return out


def iter_elements_guarded(family: MonoidFamily):
    expected = counting.monoid_order(family.tag, family.n)
    if expected > SIZE_GUARD:
        raise SizeGuardError(
            f"{family} has {expected} elements, above the guard {SIZE_GUARD}")
    return iter_elements(family)


def ideal_elements(family: MonoidFamily, r: int) -> list:
    """All elements of rank at most r."""
    if not 0 <= r <= family.n:
        raise ValueError(f"need 0 <= r <= n, got r={r}")
    return [x for x in iter_elements_guarded(family) if x.rank <= r]


def j_class_elements(family: MonoidFamily, r: int) -> list:
    return [x for x in iter_elements_guarded(family) if x.rank == r]


# -- closure and generation ------------------------------------------------------

def closure(generators, product) -> list:
    """Subsemigroup generated by the given elements, in discovery order.

    Every element of the closure is a product of generators, so extending
    each discovered element on the right by all generators reaches it.
    """
    gens = []
    seen = set()
    for g in generators:
        if g not in seen:
            seen.add(g)
            gens.append(g)
    out = list(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = product(s, g)
                if t not in seen:
                    seen.add(t)
                    out.append(t)
                    nxt.append(t)
        frontier = nxt
    return out


def principal_factor_product(r: int, a, b):
    """Product in the principal factor of the rank-r J-class: ab when the
    rank is preserved, the absorbing ZERO otherwise."""
    if a is ZERO or b is ZERO:
        return ZERO
    if a.rank != r or b.rank != r:
        raise ValueError(f"operands must have rank {r}")
    ab = compose(a, b)[0] if isinstance(a, PartitionDiagram) else a.compose(b)
    return ab if ab.rank == r else ZERO


def is_generating(generators, target, product) -> bool:
    """Does the set generate exactly `target`?

    When the target is a principal factor (contains ZERO), the adjoined zero
    counts as generated by convention.
    """
    target_set = set(target)
    got = set(closure(generators, product))
    if ZERO in target_set:
        got.add(ZERO)
    return got == target_set


# -- tabulated products for fast exhaustive work ----------------------------------

class MultiplicationTable:
    """Index-based multiplication table over a fixed element list."""

    def __init__(self, elements, product, with_twist=False):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        n = len(self.elements)
        self.table = []
        self.twist = [] if with_twist else None
        for a in self.elements:
            row = [0] * n
            trow = [0] * n if with_twist else None
            for j, b in enumerate(self.elements):
                if with_twist:
                    ab, m = compose(a, b)
                    row[j] = self.index[ab]
                    trow[j] = m
                else:
                    row[j] = self.index[product(a, b)]
            self.table.append(row)
            if with_twist:
                self.twist.append(trow)

    def __len__(self):
        return len(self.elements)

    def columns(self, gen_indices):
        """Right-multiplication maps s -> s*g for each generator index."""
        n = len(self.elements)
        return [bytes(self.table[s][g] for s in range(n)) if n <= 255
                else [self.table[s][g] for s in range(n)]
                for g in gen_indices]

    def closure_size(self, gen_indices) -> int:
        """Size of the subsemigroup generated by the given element indices."""
        cols = self.columns(gen_indices)
        return closure_size_from_columns(cols, gen_indices, len(self.elements))


def closure_size_from_columns(cols, gen_indices, n) -> int:
    seen = bytearray(n)
    stack = []
    count = 0
    for g in gen_indices:
        if not seen[g]:
            seen[g] = 1
            count += 1
            stack.append(g)
    while stack:
        s = stack.pop()
        for col in cols:
            t = col[s]
            if not seen[t]:
                seen[t] = 1
                count += 1
                stack.append(t)
    return count
