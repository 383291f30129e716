"""Non-trivial upper sets in H, their finite rims, enumeration and mutation.

A non-trivial upper set ``I`` in H is encoded by its *rim*: the elements of
``I`` that leave ``I`` when ``p`` is subtracted.  A finite set ``J`` is a
valid rim fragment iff no element dominates another shifted by ``p``
(``x >= y + p`` never holds for ``x, y`` in ``J``); it is *complete* iff it
moreover meets every orbit of the ``+p`` action, which pins down ``I`` as the
set of elements above some rim member.  Mutation removes a minimal element
``m`` of ``I``, which on rims swaps ``m`` for ``m + p``.

Translation classes quotient by translating rims by arbitrary elements of H;
the canonical representative anchors the minimum free part into
``[0, free(p))`` and takes the lexicographically smallest serialized form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .errors import DisconnectedGraph, InternalInconsistency, NotMinimal
from .groups import GroupElement
from .poset import GradedContext


class RimStatus(enum.Enum):
    INVALID = "invalid"
    PARTIAL = "partial"
    COMPLETE = "complete"


@dataclass(frozen=True)
class RimCheck:
    status: RimStatus
    witness: tuple[GroupElement, GroupElement] | None = None


@dataclass(frozen=True)
class Rim:
    """A finite rim; ``complete`` means one element per p-orbit."""

    elements: tuple[GroupElement, ...]
    complete: bool

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def serialized(self) -> tuple[tuple, ...]:
        return tuple(e.key() for e in self.elements)

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"

    def translate(self, t: GroupElement) -> "Rim":
        return Rim(
            tuple(sorted((e + t for e in self.elements), key=GroupElement.key)),
            self.complete,
        )


def _sorted_unique(elements):
    return tuple(sorted(set(elements), key=GroupElement.key))


def rim_status(ctx: GradedContext, elements) -> RimCheck:
    """Classify a finite set as invalid / valid-but-partial / complete rim."""
    elems = _sorted_unique(elements)
    for x in elems:
        for y in elems:
            if ctx.leq(y + ctx.p, x):
                return RimCheck(RimStatus.INVALID, (x, y))
    if len(elems) == ctx.orbit_count:
        return RimCheck(RimStatus.COMPLETE)
    return RimCheck(RimStatus.PARTIAL)


def make_rim(ctx: GradedContext, elements) -> Rim:
    check = rim_status(ctx, elements)
    if check.status is RimStatus.INVALID:
        x, y = check.witness
        raise ValueError(f"{x} >= {y} + p: not a rim")
    return Rim(_sorted_unique(elements), check.status is RimStatus.COMPLETE)


def in_upper_set(ctx: GradedContext, rim: Rim, h: GroupElement) -> bool:
    """Does ``h`` belong to the upper set with the given rim?"""
    return any(ctx.leq(y, h) for y in rim)


def entry_index(ctx: GradedContext, rim: Rim, x: GroupElement) -> int:
    """The unique ``n0`` such that ``x + n*p`` is in the upper set iff ``n >= n0``."""
    best = None
    for y in rim:
        delta = x - y
        # membership of delta + n*p is monotone in n; scan the finite window
        n = -(delta.free // ctx.p.free)  # first n with free part >= 0
        while delta.free + n * ctx.p.free < ctx.max_conductor:
            if ctx.member(delta + n * ctx.p):
                break
            n += 1
        if best is None or n < best:
            best = n
    return best


def rim_of_upper_closure(ctx: GradedContext, generators) -> Rim:
    """The complete rim of the upper set generated by the given elements."""
    gens = _sorted_unique(generators)
    if not gens:
        raise ValueError("need at least one generator")
    seed = Rim(gens, complete=False)
    out = []
    for rep in ctx.orbit_reps():
        n0 = entry_index(ctx, seed, rep)
        out.append(rep + n0 * ctx.p)
    return Rim(_sorted_unique(out), complete=True)


def minimal_elements(ctx: GradedContext, rim: Rim) -> tuple[GroupElement, ...]:
    """Minimal elements of the upper set; they all lie on the rim."""
    out = []
    for m in rim:
        if not any(j != m and ctx.leq(j, m) for j in rim):
            out.append(m)
    return tuple(out)


def mutate(ctx: GradedContext, rim: Rim, m: GroupElement) -> Rim:
    """Remove the minimal element ``m`` from the upper set: swap m for m + p."""
    if not rim.complete:
        raise NotMinimal("mutation needs a complete rim")
    if m not in rim.elements or m not in minimal_elements(ctx, rim):
        raise NotMinimal(f"{m} is not a minimal element")
    swapped = [e for e in rim if e != m] + [m + ctx.p]
    return Rim(_sorted_unique(swapped), complete=True)


def is_mutation_step(ctx: GradedContext, rim_a: Rim, rim_b: Rim) -> bool:
    """Is ``rim_b`` literally a mutation of ``rim_a`` (no translation allowed)?"""
    return any(
        mutate(ctx, rim_a, m).elements == rim_b.elements
        for m in minimal_elements(ctx, rim_a)
    )


# ---------------------------------------------------------------------------
# Translation classes


@dataclass(frozen=True)
class TranslationClass:
    """A translation class of complete rims, held by its canonical member."""

    rim: Rim
    stabilizer_order: int = 1

    def __str__(self):
        return str(self.rim)


def normalize(ctx: GradedContext, rim: Rim) -> Rim:
    """Canonical translate: minimum free part in [0, free(p)), smallest serialization."""
    best = None
    min_free = min(e.free for e in rim)
    for t_tors in ctx.group.torsion_residues():
        for anchor in range(ctx.p.free):
            t = ctx.element(anchor - min_free, t_tors)
            cand = rim.translate(t)
            key = cand.serialized()
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1]


def _stabilizer_order(rim: Rim) -> int:
    elems = set(rim.elements)
    count = 0
    base = rim.elements[0]
    for e in rim.elements:
        t = e - base
        if {x + t for x in rim.elements} == elems:
            count += 1
    return count


def translation_classes(ctx: GradedContext) -> tuple[TranslationClass, ...]:
    """All translation classes of complete rims, canonically ordered.

    Enumeration pins the orbit of zero at the zero element, confines every
    other orbit's shift to the window where neither domination constraint
    against the anchor is automatic (outside it, the difference's free part
    clears the conductor), filters the product by the full pairwise
    condition, then normalizes and deduplicates.
    """
    p = ctx.p
    pf = p.free
    cmax = ctx.max_conductor
    anchor = ctx.group.zero()
    others = [r for r in ctx.orbit_reps() if not r.is_zero()]

    windows = []
    for rep in others:
        # outside [lo, hi] one of the two differences against the anchor has
        # free part >= the conductor, so a domination is automatic; one unit
        # of slack on each side costs nothing
        lo = (-rep.free - cmax) // pf - 1
        hi = -((rep.free - cmax) // pf) + 1
        windows.append([rep + n * p for n in range(lo, hi + 1)])

    found = {}
    for combo in product(*windows):
        elems = (anchor,) + combo
        ok = True
        for x in elems:
            for y in elems:
                if ctx.member(x - y - p):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        canon = normalize(ctx, Rim(_sorted_unique(elems), complete=True))
        found.setdefault(canon.serialized(), canon)

    classes = [
        TranslationClass(rim, _stabilizer_order(rim))
        for _, rim in sorted(found.items())
    ]
    return tuple(classes)


# ---------------------------------------------------------------------------
# Exchange graph


@dataclass(frozen=True)
class ExchangeGraph:
    """Mutation moves between translation classes; connected by theorem."""

    nodes: tuple[TranslationClass, ...]
    edges: tuple[tuple[int, int, GroupElement], ...]  # (from, to, minimal element)

    @property
    def connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {0}
        frontier = [0]
        adj = {i: set() for i in range(len(self.nodes))}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        while frontier:
            cur = frontier.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == len(self.nodes)


def exchange_graph(ctx: GradedContext) -> ExchangeGraph:
    """Classes with one edge per (class, minimal element); self-loops kept."""
    nodes = translation_classes(ctx)
    index = {node.rim.serialized(): i for i, node in enumerate(nodes)}
    edges = []
    for i, node in enumerate(nodes):
        for m in minimal_elements(ctx, node.rim):
            target = normalize(ctx, mutate(ctx, node.rim, m))
            j = index.get(target.serialized())
            if j is None:
                raise InternalInconsistency(f"mutation left the class list: {target}")
            edges.append((i, j, m))
    graph = ExchangeGraph(nodes, tuple(edges))
    if not graph.connected:
        raise DisconnectedGraph(f"{len(nodes)} classes fell apart: {graph.edges}")
    return graph
