"""Finitely presented modules over Z or Z/n and their submodule lattices.

A module is a quotient Z^g / L where L is the column span of a relation
matrix (plus n*Z^g in the modular case).  Submodules are stored by generator
matrices, never by element sets; element enumeration exists for finite
modules so that test oracles can cross-check the lattice arithmetic.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .lattices import Lattice
from .matrices import IntMatrix
from .rings import Ring


def _columns_arg(
    value, rows: int, ring: Ring, what: str
) -> IntMatrix:
    """Normalize a relations/generators argument to an IntMatrix over ring."""
    if value is None:
        return IntMatrix.from_columns([], rows, ring)
    if isinstance(value, IntMatrix):
        mat = value if value.ring == ring else value.with_ring(ring)
    else:
        mat = IntMatrix.from_columns(list(value), rows, ring)
    if mat.rows != rows:
        raise ValueError(
            f"{what} has {mat.rows} rows but the module has {rows} generators"
        )
    return mat


class FPModule:
    """A finitely presented module: generator count plus relation matrix.

    ``invariant_factors`` is the canonical decomposition: nonunit factors in
    divisibility order, 0 denoting a free summand over Z.  Two values are
    equal iff they present the same quotient on the same generators.
    """

    __slots__ = ("ring", "n_gens", "relations", "lattice", "invariant_factors", "_hash")

    def __init__(self, ring: Ring, n_gens: int, relations=None):
        if n_gens < 0:
            raise ValueError("generator count must be nonnegative")
        self.ring = ring
        self.n_gens = n_gens
        self.relations = _columns_arg(relations, n_gens, ring, "relation matrix")
        cols = [tuple(int(x) for x in c) for c in self.relations.columns()]
        if ring.is_modular:
            n = ring.modulus
            cols += [
                tuple(n if i == j else 0 for i in range(n_gens))
                for j in range(n_gens)
            ]
        self.lattice = Lattice.from_columns(n_gens, cols)
        self.invariant_factors = self.lattice.quotient_invariants()
        self._hash = None

    # -- structure ----------------------------------------------------------

    def order(self) -> int | None:
        """Number of elements, or ``None`` for an infinite module."""
        return self.lattice.covolume()

    @property
    def is_finite(self) -> bool:
        return self.order() is not None

    @property
    def is_zero(self) -> bool:
        return self.order() == 1

    def free_rank(self) -> int:
        return sum(1 for f in self.invariant_factors if f == 0)

    # -- elements -------------------------------------------------------------

    def element(self, coords: Sequence[int]) -> "ModuleElement":
        return ModuleElement(self, coords)

    def zero_element(self) -> "ModuleElement":
        return ModuleElement(self, (0,) * self.n_gens)

    def generator(self, i: int) -> "ModuleElement":
        return ModuleElement(
            self, tuple(1 if j == i else 0 for j in range(self.n_gens))
        )

    def elements(self) -> Iterator["ModuleElement"]:
        """All elements, in lexicographic order of canonical coordinates.

        Only finite modules can be enumerated.
        """
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite module")
        boxes = [range(p) for _, p in self.lattice.pivots]

        def rec(prefix, remaining):
            if not remaining:
                yield ModuleElement(self, prefix)
                return
            for x in remaining[0]:
                yield from rec(prefix + (x,), remaining[1:])

        yield from rec((), boxes)

    # -- submodules -------------------------------------------------------------

    def submodule(self, gens) -> "Submodule":
        return Submodule(self, gens)

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, None)

    def whole_submodule(self) -> "Submodule":
        return Submodule(self, IntMatrix.identity(self.n_gens, self.ring))

    # -- value semantics ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FPModule)
            and self.ring == other.ring
            and self.n_gens == other.n_gens
            and self.lattice == other.lattice
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.n_gens, self.lattice))
        return self._hash

    def __repr__(self) -> str:
        return (
            f"FPModule({self.ring}, gens={self.n_gens}, "
            f"invariants={list(self.invariant_factors)})"
        )


def present_module(ring: Ring, n_gens: int, relations=None) -> FPModule:
    """Build a finitely presented module from a relation matrix.

    ``relations`` may be an :class:`IntMatrix` with ``n_gens`` rows or an
    iterable of relation columns; ``None`` means no relations.
    """
    return FPModule(ring, n_gens, relations)


class ModuleElement:
    """An element of an :class:`FPModule`, stored in canonical coordinates."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: FPModule, coords: Sequence[int]):
        c = tuple(int(x) for x in coords)
        if len(c) != parent.n_gens:
            raise ValueError(
                f"coordinate length {len(c)} does not match {parent.n_gens} generators"
            )
        self.parent = parent
        self.coords = parent.lattice.reduce(c)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check_parent(other)
        return ModuleElement(
            self.parent, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        self._check_parent(other)
        return ModuleElement(
            self.parent, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.parent, tuple(-a for a in self.coords))

    def __rmul__(self, scalar: int) -> "ModuleElement":
        return ModuleElement(self.parent, tuple(scalar * a for a in self.coords))

    def _check_parent(self, other: "ModuleElement") -> None:
        if self.parent != other.parent:
            raise ValueError("elements of different modules cannot be combined")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModuleElement)
            and self.parent == other.parent
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.coords))

    def __repr__(self) -> str:
        return f"ModuleElement{self.coords!r}"


class Submodule:
    """A submodule of a fixed parent, canonicalized by its preimage lattice.

    ``canonical_gens`` is a deterministic generating matrix: the echelon basis
    of the preimage lattice with columns lying in the relation lattice removed
    (those map to zero) and the survivors reduced to canonical coordinates.
    Submodules of the same parent with equal spans compare equal and share
    identical ``canonical_gens``.
    """

    __slots__ = ("parent", "gens", "lattice", "canonical_gens", "_hash")

    def __init__(self, parent: FPModule, gens=None):
        self.parent = parent
        self.gens = _columns_arg(gens, parent.n_gens, parent.ring, "generator matrix")
        lifted = [tuple(int(x) for x in c) for c in self.gens.columns()]
        self.lattice = Lattice.from_columns(
            parent.n_gens, list(parent.lattice.basis) + lifted
        )
        seen = set()
        cols = []
        for c in self.lattice.basis:
            if parent.lattice.contains(c):
                continue
            reduced = parent.lattice.reduce(c)
            if reduced not in seen:
                seen.add(reduced)
                cols.append(reduced)
        self.canonical_gens = IntMatrix.from_columns(cols, parent.n_gens, parent.ring)
        self._hash = None

    # -- predicates ---------------------------------------------------------

    def contains(self, x) -> bool:
        coords = x.coords if isinstance(x, ModuleElement) else tuple(int(v) for v in x)
        if len(coords) != self.parent.n_gens:
            raise ValueError("coordinate length does not match the parent module")
        return self.lattice.contains(coords)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def is_subset_of(self, other: "Submodule") -> bool:
        _check_same_parent(self, other)
        return other.lattice.contains_lattice(self.lattice)

    @property
    def is_zero(self) -> bool:
        return self.canonical_gens.cols == 0

    @property
    def is_whole(self) -> bool:
        return self.lattice.covolume() == 1

    def size(self) -> int | None:
        """Number of elements of the submodule, or ``None`` when infinite."""
        sub_covol = self.lattice.covolume()
        amb_covol = self.parent.lattice.covolume()
        if sub_covol is None or amb_covol is None:
            return None
        return amb_covol // sub_covol

    def elements(self) -> Iterator[ModuleElement]:
        for x in self.parent.elements():
            if self.contains(x):
                yield x

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Submodule)
            and self.parent == other.parent
            and self.lattice == other.lattice
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.parent, self.lattice))
        return self._hash

    def __repr__(self) -> str:
        return f"Submodule(gens={[list(c) for c in self.canonical_gens.columns()]!r})"


def _check_same_parent(u: Submodule, v: Submodule) -> None:
    if u.parent != v.parent:
        raise ValueError("submodules have different parent modules")


def sub_meet(u: Submodule, v: Submodule) -> Submodule:
    """Intersection of two submodules of the same parent."""
    _check_same_parent(u, v)
    return Submodule(u.parent, u.lattice.intersect(v.lattice).basis_matrix())


def sub_join(u: Submodule, v: Submodule) -> Submodule:
    """Sum of two submodules of the same parent."""
    _check_same_parent(u, v)
    return Submodule(u.parent, u.lattice.sum(v.lattice).basis_matrix())


def sub_contains(u: Submodule, x: ModuleElement) -> bool:
    """Membership of an element in a submodule."""
    if x.parent != u.parent:
        raise ValueError("element does not belong to the submodule's parent")
    return u.contains(x)


def sub_equal(u: Submodule, v: Submodule) -> bool:
    """Equality of spans; mutual containment made syntactic by canonical form."""
    _check_same_parent(u, v)
    return u.lattice == v.lattice


def quotient(m: FPModule, n: Submodule):
    """The quotient of ``m`` by a submodule, presented on the same generators.

    Returns ``(q, projection)`` where the projection's matrix is the identity
    on generator coordinates, so lifting maps along it is trivial.
    """
    if n.parent != m:
        raise ValueError("submodule does not live in the module being quotiented")
    q = FPModule(m.ring, m.n_gens, m.relations.hstack(n.canonical_gens))
    from .homs import Homomorphism

    return q, Homomorphism(m, q, IntMatrix.identity(m.n_gens, m.ring))


def quotient_module(m: FPModule, n: Submodule) -> FPModule:
    """Just the quotient module, without the projection map."""
    if n.parent != m:
        raise ValueError("submodule does not live in the module being quotiented")
    return FPModule(m.ring, m.n_gens, m.relations.hstack(n.canonical_gens))


def sub_image(f, u: Submodule) -> Submodule:
    """Image of a submodule of the domain under a homomorphism."""
    if u.parent != f.dom:
        raise ValueError("submodule does not live in the homomorphism's domain")
    cols = [f.matrix.apply(c) for c in u.canonical_gens.columns()]
    return Submodule(f.cod, IntMatrix.from_columns(cols, f.cod.n_gens, f.cod.ring))


def sub_preimage(f, w: Submodule) -> Submodule:
    """Preimage ``{x : f(x) in w}`` of a submodule of the codomain."""
    if w.parent != f.cod:
        raise ValueError("submodule does not live in the homomorphism's codomain")
    pre = w.lattice.preimage(f.matrix.lift())
    return Submodule(f.dom, pre.basis_matrix())


_SUB_AS_MODULE_CACHE: dict = {}


def sub_as_module(u: Submodule):
    """Present a submodule as a module in its own right.

    Returns ``(module, inclusion)`` where the module is generated by the
    columns of ``canonical_gens`` and the inclusion maps those generators back
    into the parent.
    """
    cached = _SUB_AS_MODULE_CACHE.get(u)
    if cached is not None:
        return cached
    parent = u.parent
    b = u.canonical_gens
    rel = parent.lattice.preimage(b.lift())
    smod = FPModule(parent.ring, b.cols, rel.basis_matrix(parent.ring))
    from .homs import Homomorphism

    result = (smod, Homomorphism(smod, parent, b))
    _SUB_AS_MODULE_CACHE[u] = result
    return result


def direct_sum(m1: FPModule, m2: FPModule) -> FPModule:
    """External direct sum, presented on the concatenated generators."""
    if m1.ring != m2.ring:
        raise ValueError("direct sum needs a common ring")
    g1, g2 = m1.n_gens, m2.n_gens
    cols = [
        tuple(c) + (0,) * g2 for c in m1.relations.columns()
    ] + [
        (0,) * g1 + tuple(c) for c in m2.relations.columns()
    ]
    return FPModule(m1.ring, g1 + g2, cols)


_SUBMODULES_CACHE: dict = {}


def all_submodules(m: FPModule) -> list[Submodule]:
    """Every submodule of a finite module.

    Computed as the join-closure of the cyclic submodules; returned in a
    deterministic order.  Results are memoized (everything is immutable).
    """
    cached = _SUBMODULES_CACHE.get(m)
    if cached is not None:
        return list(cached)
    if not m.is_finite:
        raise ValueError("submodule enumeration requires a finite module")
    cyclics = []
    seen_cyc = set()
    for x in m.elements():
        c = Submodule(m, IntMatrix.from_columns([x.coords], m.n_gens, m.ring))
        if c not in seen_cyc:
            seen_cyc.add(c)
            cyclics.append(c)
    zero = m.zero_submodule()
    found = {zero}
    frontier = [zero]
    while frontier:
        s = frontier.pop()
        for c in cyclics:
            j = sub_join(s, c)
            if j not in found:
                found.add(j)
                frontier.append(j)
    result = sorted(found, key=lambda s: (len(s.lattice.basis), s.lattice.basis))
    _SUBMODULES_CACHE[m] = tuple(result)
    return result


def submodules_between(m: FPModule, n: Submodule) -> list[Submodule]:
    """All submodules of ``m`` containing ``n`` (the quotient must be finite)."""
    q = quotient_module(m, n)
    if not q.is_finite:
        raise ValueError("enumeration requires a finite quotient")
    out = []
    for s in all_submodules(q):
        out.append(Submodule(m, s.lattice.basis_matrix(m.ring)))
    return out
