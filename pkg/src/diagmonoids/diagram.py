"""Partition diagrams: construction, composition, classification, generators.

A diagram of degree n is a set partition of the 2n points
{1..n} u {1'..n'}.  Points are encoded as signed integers: +k is the
top point k, -k is the bottom point k'.  The canonical point order is
+1 < +2 < ... < +n < -1 < -2 < ... < -n; blocks are stored sorted by
their least point with points sorted inside, so two diagrams are equal
iff their stored forms are identical.
"""

from dataclasses import dataclass
from functools import reduce

Block = tuple[int, ...]
Blocks = tuple[Block, ...]


def point_key(n: int, p: int) -> int:
    """Position of signed point p in the canonical order (0 .. 2n-1)."""
    return p - 1 if p > 0 else n - p - 1


def cycle_position(n: int, p: int) -> int:
    """Position of p on the boundary cycle 1, 2, ..., n, n', ..., 1'."""
    return p - 1 if p > 0 else 2 * n + p


class SetPartition:
    """An equivalence relation on [n], normalized to first-occurrence class ids."""

    __slots__ = ("n", "class_id")

    def __init__(self, n: int, class_id):
        self.n = n
        self.class_id = _normalize(tuple(class_id))

    @classmethod
    def from_blocks(cls, n, blocks):
        cid = [0] * n
        for b, block in enumerate(blocks):
            for x in block:
                cid[x - 1] = b
        return cls(n, cid)

    @classmethod
    def trivial(cls, n):
        return cls(n, range(n))

    def blocks(self) -> Blocks:
        out = {}
        for i, c in enumerate(self.class_id):
            out.setdefault(c, []).append(i + 1)
        return tuple(tuple(out[c]) for c in sorted(out))

    def num_classes(self) -> int:
        return max(self.class_id) + 1 if self.n else 0

    def __eq__(self, other):
        return (isinstance(other, SetPartition)
                and self.n == other.n and self.class_id == other.class_id)

    def __hash__(self):
        return hash((self.n, self.class_id))

    def __repr__(self):
        return f"SetPartition({self.n}, {list(self.class_id)})"


def _normalize(class_id):
    relabel, nxt, out = {}, 0, []
    for c in class_id:
        if c not in relabel:
            relabel[c] = nxt
            nxt += 1
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class DiagramSignature:
    """Green's-relation invariants of a diagram."""

    dom: frozenset
    codom: frozenset
    ker: SetPartition
    coker: SetPartition
    rank: int


@dataclass(frozen=True)
class DiagramClass:
    """Family membership flags and idempotency predicates."""

    brauer: bool
    planar: bool
    jones: bool
    idempotent: bool
    projection: bool


class PartitionDiagram:
    """An immutable partition diagram in canonical form."""

    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n: int, blocks):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", _canonical(n, blocks))
        object.__setattr__(self, "_hash", hash((n, self.blocks)))

    def __setattr__(self, *a):
        raise AttributeError("PartitionDiagram is immutable")

    def __eq__(self, other):
        return (isinstance(other, PartitionDiagram)
                and self.n == other.n and self.blocks == other.blocks)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PartitionDiagram.parse({format_diagram(self)!r}, {self.n})"

    def __str__(self):
        return format_diagram(self)

    @classmethod
    def identity(cls, n):
        return cls(n, [(k, -k) for k in range(1, n + 1)])

    @classmethod
    def parse(cls, text, n):
        return parse_diagram(text, n)

    def compose(self, other):
        """Product with `other` and the count of components deleted from the
        middle row (the twisting exponent)."""
        return compose(self, other)

    def __mul__(self, other):
        return compose(self, other)[0]

    def star(self):
        return star(self)

    def signature(self):
        return signature(self)

    @property
    def rank(self):
        return sum(1 for b in self.blocks if b[0] > 0 and b[-1] < 0)

    def block_of(self) -> tuple[int, ...]:
        """Block index per point in canonical point order (length 2n)."""
        out = [0] * (2 * self.n)
        for b, block in enumerate(self.blocks):
            for p in block:
                out[point_key(self.n, p)] = b
        return tuple(out)


def _canonical(n, blocks) -> Blocks:
    seen = set()
    canon = []
    for block in blocks:
        b = tuple(sorted(block, key=lambda p: point_key(n, p)))
        if not b:
            raise ValueError("empty block")
        for p in b:
            if p == 0 or abs(p) > n:
                raise ValueError(f"point {p} out of range for degree {n}")
            if p in seen:
                raise ValueError(f"point {p} appears in more than one block")
            seen.add(p)
        canon.append(b)
    if len(seen) != 2 * n:
        missing = [p for p in list(range(1, n + 1)) + [-k for k in range(1, n + 1)]
                   if p not in seen]
        raise ValueError(f"missing points: {missing}")
    canon.sort(key=lambda b: point_key(n, b[0]))
    return tuple(canon)


def parse_diagram(text: str, n: int) -> PartitionDiagram:
    """Parse bracketed block notation, e.g. "[{1,-1},{2,-2}]" for degree 2."""
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected [...] around block list: {text!r}")
    body = s[1:-1]
    if not body:
        return PartitionDiagram(n, []) if n == 0 else _missing_all(n)
    blocks, i = [], 0
    while i < len(body):
        if body[i] != "{":
            raise ValueError(f"expected '{{' at position {i} of {body!r}")
        j = body.index("}", i)
        items = body[i + 1:j]
        if not items:
            raise ValueError("empty block")
        try:
            blocks.append(tuple(int(t) for t in items.split(",")))
        except ValueError:
            raise ValueError(f"malformed block {{{items}}}") from None
        i = j + 1
        if i < len(body):
            if body[i] != ",":
                raise ValueError(f"expected ',' between blocks at position {i}")
            i += 1
    return PartitionDiagram(n, blocks)


def _missing_all(n):
    raise ValueError(f"missing points: diagram of degree {n} cannot be empty")


def format_diagram(d: PartitionDiagram) -> str:
    """Canonical textual form; inverse of parse_diagram."""
    return "[" + ",".join("{" + ",".join(map(str, b)) + "}" for b in d.blocks) + "]"


def compose(a: PartitionDiagram, b: PartitionDiagram):
    """Stack a over b, take connected components, delete the middle row.

    Returns (product, m) where m is the number of deleted components lying
    entirely inside the middle row.
    """
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    n = a.n
    # union-find over 3n nodes: top of a (0..n-1), middle (n..2n-1),
    # bottom of b (2n..3n-1)
    parent = list(range(3 * n))

    def find(x):
        r = x
        while parent[r] != r:
            r = parent[r]
        while parent[x] != r:
            parent[x], x = r, parent[x]
        return r

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for block in a.blocks:
        first = block[0]
        f = first - 1 if first > 0 else n - first - 1
        for p in block[1:]:
            union(f, p - 1 if p > 0 else n - p - 1)
    for block in b.blocks:
        first = block[0]
        f = n + first - 1 if first > 0 else 2 * n - first - 1
        for p in block[1:]:
            union(f, n + p - 1 if p > 0 else 2 * n - p - 1)

    groups = {}
    for k in range(n):
        groups.setdefault(find(k), []).append(k + 1)
    for k in range(2 * n, 3 * n):
        groups.setdefault(find(k), []).append(-(k - 2 * n + 1))
    m = 0
    for k in range(n, 2 * n):
        r = find(k)
        if r not in groups:
            groups[r] = None  # middle-only component, counted once
            m += 1
    blocks = [tuple(g) for g in groups.values() if g is not None]
    return PartitionDiagram(n, blocks), m


def star(d: PartitionDiagram) -> PartitionDiagram:
    """Reflect the diagram: every point's sign is flipped."""
    return PartitionDiagram(d.n, [tuple(-p for p in b) for b in d.blocks])


def signature(d: PartitionDiagram) -> DiagramSignature:
    n = d.n
    dom, codom = [], []
    top_cls = [0] * n
    bot_cls = [0] * n
    rank = 0
    for i, block in enumerate(d.blocks):
        tops = [p for p in block if p > 0]
        bots = [p for p in block if p < 0]
        if tops and bots:
            rank += 1
            dom.extend(tops)
            codom.extend(-p for p in bots)
        for p in tops:
            top_cls[p - 1] = i
        for p in bots:
            bot_cls[-p - 1] = i
    return DiagramSignature(
        dom=frozenset(dom),
        codom=frozenset(codom),
        ker=SetPartition(n, top_cls),
        coker=SetPartition(n, bot_cls),
        rank=rank,
    )


def is_planar(d: PartitionDiagram) -> bool:
    """Noncrossing test on the boundary cycle 1, ..., n, n', ..., 1'."""
    n = d.n
    if n <= 1:
        return True
    block_at = [None] * (2 * n)
    remaining = []
    for i, block in enumerate(d.blocks):
        remaining.append(len(block))
        for p in block:
            block_at[cycle_position(n, p)] = i
    stack = []
    opened = [False] * len(d.blocks)
    for pos in range(2 * n):
        b = block_at[pos]
        if not opened[b]:
            opened[b] = True
            stack.append(b)
        if stack[-1] != b:
            return False
        remaining[b] -= 1
        if remaining[b] == 0:
            stack.pop()
    return True


def is_brauer(d: PartitionDiagram) -> bool:
    return all(len(b) == 2 for b in d.blocks)


def is_idempotent(d: PartitionDiagram) -> bool:
    return compose(d, d)[0] == d


def is_projection(d: PartitionDiagram) -> bool:
    return star(d) == d and is_idempotent(d)


def classify(d: PartitionDiagram) -> DiagramClass:
    b = is_brauer(d)
    p = is_planar(d)
    return DiagramClass(
        brauer=b,
        planar=p,
        jones=b and p,
        idempotent=is_idempotent(d),
        projection=is_projection(d),
    )


# -- named generator families -------------------------------------------------

def _check_indices(name, idx, n, count):
    if len(idx) != count:
        raise ValueError(f"{name} takes {count} indices, got {len(idx)}")
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range for degree {n}")
    if len(set(idx)) != len(idx):
        raise ValueError(f"{name} needs distinct indices, got {idx}")


def generator(name: str, indices, n: int) -> PartitionDiagram:
    """Build one of the named diagrams used as generators and idempotents.

    pi_i, pi_ij, lambda_ij, rho_ij live in the partition monoid;
    tau_ij, sigma_ijk in the Brauer monoid; tau_i, lambda_i, rho_i in the
    Jones monoid; identity everywhere.
    """
    idx = tuple(indices)
    rest = lambda *used: [(k, -k) for k in range(1, n + 1) if k not in used]
    if name == "identity":
        return PartitionDiagram.identity(n)
    if name == "pi_i":
        _check_indices(name, idx, n, 1)
        (i,) = idx
        return PartitionDiagram(n, rest(i) + [(i,), (-i,)])
    if name == "pi_ij":
        _check_indices(name, idx, n, 2)
        i, j = idx
        return PartitionDiagram(n, rest(i, j) + [(i, j, -i, -j)])
    if name == "lambda_ij":
        _check_indices(name, idx, n, 2)
        i, j = idx
        return PartitionDiagram(n, rest(i, j) + [(i, j, -i), (-j,)])
    if name == "rho_ij":
        _check_indices(name, idx, n, 2)
        i, j = idx
        return PartitionDiagram(n, rest(i, j) + [(j, -i, -j), (i,)])
    if name == "tau_ij":
        _check_indices(name, idx, n, 2)
        i, j = idx
        return PartitionDiagram(n, rest(i, j) + [(i, j), (-i, -j)])
    if name == "tau_i":
        _check_indices(name, idx, n, 1)
        (i,) = idx
        if i >= n:
            raise ValueError(f"tau_i needs i <= n-1, got i={i}, n={n}")
        return generator("tau_ij", (i, i + 1), n)
    if name == "sigma_ijk":
        _check_indices(name, idx, n, 3)
        i, j, k = idx
        return PartitionDiagram(n, rest(i, j, k) + [(k, -i), (i, j), (-j, -k)])
    if name == "lambda_i":
        _check_indices(name, idx, n, 1)
        (i,) = idx
        if i > n - 2:
            raise ValueError(f"lambda_i needs i <= n-2, got i={i}, n={n}")
        return generator("sigma_ijk", (i, i + 1, i + 2), n)
    if name == "rho_i":
        _check_indices(name, idx, n, 1)
        (i,) = idx
        if i > n - 2:
            raise ValueError(f"rho_i needs i <= n-2, got i={i}, n={n}")
        return generator("sigma_ijk", (i + 2, i + 1, i), n)
    raise ValueError(f"unknown generator name {name!r}")


# -- total maps on [n] ---------------------------------------------------------

class Transformation:
    """A total map [n] -> [n]; image_of[i-1] is the image of i.

    Composition acts on the right: x (f g) = (x f) g.
    """

    __slots__ = ("n", "image_of")

    def __init__(self, image_of):
        img = tuple(image_of)
        n = len(img)
        if any(not 1 <= v <= n for v in img):
            raise ValueError(f"values must lie in [1, {n}]: {img}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "image_of", img)

    def __setattr__(self, *a):
        raise AttributeError("Transformation is immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def point_idempotent(cls, i, j, n):
        """The idempotent sending i to j and fixing everything else."""
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"need distinct i, j in [1, {n}]")
        img = list(range(1, n + 1))
        img[i - 1] = j
        return cls(img)

    def __call__(self, x):
        return self.image_of[x - 1]

    def compose(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        return Transformation(other.image_of[v - 1] for v in self.image_of)

    __mul__ = compose

    @property
    def rank(self):
        return len(set(self.image_of))

    def image(self):
        return frozenset(self.image_of)

    def kernel(self) -> SetPartition:
        first = {}
        cls_id = []
        for v in self.image_of:
            cls_id.append(first.setdefault(v, len(first)))
        return SetPartition(self.n, cls_id)

    def is_idempotent(self):
        return self.compose(self) == self

    def __eq__(self, other):
        return (isinstance(other, Transformation)
                and self.image_of == other.image_of)

    def __hash__(self):
        return hash(("transformation", self.image_of))

    def __repr__(self):
        return f"Transformation({list(self.image_of)})"


# -- planar partitions vs. doubled-degree Jones diagrams ----------------------

def planar_to_jones(d: PartitionDiagram) -> PartitionDiagram:
    """Image of a planar partition under the doubling isomorphism onto the
    Jones monoid of degree 2n.

    Each top point k splits into top points 2k-1, 2k; each bottom point k'
    into bottom points (2k-1)', (2k)'.  Walking every block in boundary-cycle
    order and joining the exit slot of each point to the entry slot of the
    next produces the image matching.  The map is a monoid isomorphism.
    """
    if not is_planar(d):
        raise ValueError("diagram is not planar")
    n = d.n
    out_blocks = []
    for block in d.blocks:
        pts = sorted(block, key=lambda p: cycle_position(n, p))
        k = len(pts)
        for t in range(k):
            p, q = pts[t], pts[(t + 1) % k]
            exit_slot = 2 * p if p > 0 else 2 * p + 1       # -k -> -(2k-1)
            entry_slot = 2 * q - 1 if q > 0 else 2 * q      # -k -> -(2k)
            out_blocks.append((exit_slot, entry_slot))
    return PartitionDiagram(2 * n, out_blocks)
