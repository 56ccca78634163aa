"""Monomorphic parts, the coarsest decomposition, and leading monomials.

A subset B is a monomorphic part when restriction types depend only on how
many elements are taken inside B.  Any two admissible subsets are connected
by single-element swaps inside B, and isomorphism is transitive, so the
swap test is equivalent to the full pairwise definition (the full oracle is
kept for tests).  Unions of largest parts give the coarsest decomposition;
every block-wise monomorphic partition refines it.

For presented structures, blocks come from the presentation slots.  The
grouping is recovered from the coarsest decomposition of a window
truncation, which also merges finite slots that fuse in the presented
structure (e.g. two singletons completing each other across a cycle); the
infinite slots are exactly the blocks the index structure promises when it
has no 2-element autonomous subset.

Each exponent vector (elements taken per block) is a monomial; the leading
monomial of a type is the largest vector realizing it under shape-first
degree-reverse-lexicographic order with lexicographic tie break.  Leading
monomials must be closed under multiplying by a chain-support layer unless
the layer saturates a finite block; ``verify_addlayer`` checks that closure
on a window and reports counterexamples instead of asserting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .presentations import (
    LexSumPresentation,
    OMEGA,
    enumerate_age,
    realize_composition,
)
from .structures import RelStruct, canonical_code, is_autonomous, restrict


@dataclass(frozen=True)
class Decomposition:
    """Blocks of a monomorphic decomposition with declared sizes.

    ``members`` are vertex ids for finite structures and presentation slot
    ids for presented ones; ``size`` is an integer or OMEGA.
    """

    blocks: tuple  # tuple[(members: tuple, size: int | OMEGA), ...]

    def __post_init__(self):
        seen = set()
        for members, _ in self.blocks:
            for x in members:
                if x in seen:
                    raise ValueError(f"blocks overlap at {x!r}")
                seen.add(x)

    @property
    def infinite_count(self) -> int:
        return sum(1 for _, size in self.blocks if size is OMEGA)

    @property
    def finite_total(self) -> int:
        return sum(size for _, size in self.blocks if size is not OMEGA)


class _SubsetCodes:
    """Per-structure cache of restriction codes, keyed by frozen subsets."""

    def __init__(self, struct: RelStruct):
        self.struct = struct
        self.codes = {}

    def code(self, subset: frozenset) -> bytes:
        got = self.codes.get(subset)
        if got is None:
            got = canonical_code(restrict(self.struct, subset))
            self.codes[subset] = got
        return got


def is_monomorphic_part(struct: RelStruct, block, _cache: _SubsetCodes | None = None) -> bool:
    """Swap test: replacing one chosen block element by an unchosen one must
    preserve the restriction type, for every subset of the domain."""
    block = frozenset(block)
    if len(block) <= 1:
        return True
    cache = _cache or _SubsetCodes(struct)
    universe = range(struct.domain_size)
    for subset in _subsets_meeting(universe, block):
        inside = subset & block
        outside_block = block - subset
        if not inside or not outside_block:
            continue
        base = cache.code(subset)
        for b in inside:
            for bp in outside_block:
                if cache.code(subset - {b} | {bp}) != base:
                    return False
    return True


def _subsets_meeting(universe, block):
    elems = list(universe)
    for r in range(1, len(elems) + 1):
        for combo in itertools.combinations(elems, r):
            s = frozenset(combo)
            if s & block:
                yield s


def is_monomorphic_part_oracle(struct: RelStruct, block) -> bool:
    """Full definition, no swap shortcut: all pairs A, A' with A-B = A'-B."""
    block = frozenset(block)
    m = struct.domain_size
    outside = [v for v in range(m) if v not in block]
    inside = sorted(block)
    for out_r in range(len(outside) + 1):
        for out_choice in itertools.combinations(outside, out_r):
            for in_r in range(1, len(inside) + 1):
                codes = {
                    canonical_code(restrict(struct, set(out_choice) | set(in_choice)))
                    for in_choice in itertools.combinations(inside, in_r)
                }
                if len(codes) > 1:
                    return False
    return True


def largest_monomorphic_part(struct: RelStruct, x: int, _cache=None) -> frozenset:
    """{x} plus every y such that {x, y} is a monomorphic part.

    Subsets of monomorphic parts are parts, so y lies in some part
    containing x exactly when the pair {x, y} is one; the union of all parts
    through x is therefore recovered from pair tests alone.
    """
    if not 0 <= x < struct.domain_size:
        raise IndexError(f"vertex {x} out of range")
    cache = _cache or _SubsetCodes(struct)
    members = {x}
    for y in struct.domain:
        if y != x and is_monomorphic_part(struct, {x, y}, cache):
            members.add(y)
    return frozenset(members)


def canonical_decomposition(struct: RelStruct) -> Decomposition:
    """The coarsest monomorphic decomposition of a finite structure."""
    cache = _SubsetCodes(struct)
    parts = []
    seen = set()
    for x in struct.domain:
        if x in seen:
            continue
        part = largest_monomorphic_part(struct, x, cache)
        parts.append(part)
        seen |= part
    cover = set().union(*parts) if parts else set()
    if cover != set(struct.domain) or sum(len(p) for p in parts) != struct.domain_size:
        raise AssertionError(
            "largest monomorphic parts failed to partition the domain; "
            "this contradicts their defining property and indicates a bug"
        )
    for part in parts:
        if not is_monomorphic_part(struct, part, cache):
            raise AssertionError(f"computed part {sorted(part)} fails the swap test")
    blocks = tuple(
        (tuple(sorted(p)), len(p)) for p in sorted(parts, key=min)
    )
    return Decomposition(blocks)


# ---------------------------------------------------------------------------
# Presented structures
# ---------------------------------------------------------------------------


def _truncation(pres: LexSumPresentation, window: int):
    counts = tuple(
        window if size is OMEGA else size for (_, size) in pres.blocks
    )
    struct = realize_composition(pres, counts)
    slot_of = []
    for slot, c in enumerate(counts):
        slot_of.extend([slot] * c)
    return struct, counts, slot_of


def presentation_decomposition(pres: LexSumPresentation, window: int = 4) -> Decomposition:
    """Blocks of the presented structure, one per index vertex after merging.

    Mergers are decided on a window truncation via the coarsest finite
    decomposition: index vertices whose truncated copies land in one
    coarsest part fuse into one block (this covers both the 2-element
    autonomous index subsets the structure theorem warns about and finite
    slots fusing with each other).  A coarsest part must never split a
    slot's copies; that would contradict slot monomorphy.
    """
    index_has_pair = any(
        is_autonomous(pres.index, {i, j})
        for i, j in itertools.combinations(range(pres.index.domain_size), 2)
    )
    struct, counts, slot_of = _truncation(pres, window)
    fine = canonical_decomposition(struct)
    slot_groups = []
    for members, _ in fine.blocks:
        slots = {slot_of[v] for v in members}
        for slot in slots:
            copies = [v for v, s in enumerate(slot_of) if s == slot]
            if not set(copies) <= set(members):
                raise AssertionError(
                    f"coarsest part splits slot {slot}; truncation window {window} "
                    "is inconsistent with slot monomorphy"
                )
        slot_groups.append(tuple(sorted(slots)))
    if not index_has_pair:
        for group in slot_groups:
            infinite = [s for s in group if pres.blocks[s][1] is OMEGA]
            if len(infinite) > 1:
                raise AssertionError(
                    "two infinite slots merged although the index has no "
                    "2-element autonomous subset; contradicts the lex-sum "
                    "structure theorem"
                )
    blocks = []
    for group in sorted(slot_groups, key=min):
        if any(pres.blocks[s][1] is OMEGA for s in group):
            size = OMEGA
        else:
            size = sum(pres.blocks[s][1] for s in group)
        blocks.append((group, size))
    return Decomposition(tuple(blocks))


def predict_growth_degree(decomp: Decomposition) -> int:
    """k-1 for k infinite blocks of a coarsest decomposition."""
    k = decomp.infinite_count
    if k == 0:
        raise ValueError("finite structure: no growth degree")
    return k - 1


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """An exponent vector over the blocks of a decomposition."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def shape(self) -> tuple[int, ...]:
        return tuple(sorted(self.exponents, reverse=True))

    def chain_support(self):
        """The unique factorization into nested support sets.

        Returns pairs (support, multiplicity) with strictly increasing
        supports; multiplying x_support back multiplicity times
        reconstructs the exponents.
        """
        levels = sorted({e for e in self.exponents if e}, reverse=True)
        out = []
        for i, level in enumerate(levels):
            support = tuple(j for j, e in enumerate(self.exponents) if e >= level)
            mult = level - (levels[i + 1] if i + 1 < len(levels) else 0)
            out.append((support, mult))
        return out

    def times_support(self, support) -> "Monomial":
        exps = list(self.exponents)
        for i in support:
            exps[i] += 1
        return Monomial(tuple(exps))


def _degrevlex_shape_greater(a: Monomial, b: Monomial) -> bool:
    sa, sb = a.shape(), b.shape()
    if sa == sb:
        return False
    diff = [x - y for x, y in zip(sa, sb)]
    last = max(i for i, d in enumerate(diff) if d)
    return diff[last] < 0


def monomial_greater(a: Monomial, b: Monomial) -> bool:
    """Shape-first degree-reverse-lexicographic order, exponent lex tie break."""
    if a.degree != b.degree:
        raise ValueError("monomial order compares equal degrees only")
    if a.shape() != b.shape():
        return _degrevlex_shape_greater(a, b)
    return a.exponents > b.exponents


def _vectors(pres: LexSumPresentation, decomp: Decomposition, degree: int):
    caps = [
        degree if size is OMEGA else size for (_, size) in decomp.blocks
    ]

    def rec(i, remaining):
        if i == len(caps):
            if remaining == 0:
                yield ()
            return
        tail = sum(caps[i + 1:])
        for c in range(max(0, remaining - tail), min(caps[i], remaining) + 1):
            for rest in rec(i + 1, remaining - c):
                yield (c,) + rest

    yield from rec(0, degree)


def _realize_vector(pres: LexSumPresentation, decomp: Decomposition, exponents):
    counts = [0] * len(pres.blocks)
    for (slots, _), e in zip(decomp.blocks, exponents):
        remaining = e
        for s in slots:
            cap = pres.blocks[s][1]
            take = remaining if cap is OMEGA else min(cap, remaining)
            counts[s] = take
            remaining -= take
        if remaining:
            raise ValueError(f"exponent {e} exceeds block capacity {slots}")
    return realize_composition(pres, counts)


def leading_monomials(pres: LexSumPresentation, decomp: Decomposition, degree: int) -> dict:
    """Map type code -> its leading monomial at the given degree."""
    best = {}
    for vec in _vectors(pres, decomp, degree):
        mono = Monomial(vec)
        code = canonical_code(_realize_vector(pres, decomp, vec))
        cur = best.get(code)
        if cur is None or monomial_greater(mono, cur):
            best[code] = mono
    return best


def leading_monomial(pres: LexSumPresentation, decomp: Decomposition, type_code: bytes,
                     degree: int) -> Monomial:
    if degree == 0:
        (code,) = enumerate_age(pres, 0)
        if type_code != code:
            raise KeyError("type not in the age at degree 0")
        return Monomial(tuple(0 for _ in decomp.blocks))
    table = leading_monomials(pres, decomp, degree)
    if type_code not in table:
        raise KeyError(f"type not realized at degree {degree}")
    return table[type_code]


@dataclass(frozen=True)
class AddLayerReport:
    checked: int
    counterexamples: tuple

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_addlayer(pres: LexSumPresentation, decomp: Decomposition, max_degree: int) -> AddLayerReport:
    """For every leading monomial of degree < max_degree and every chain
    support layer: a finite block in the layer is saturated, or multiplying
    by the layer gives a leading monomial again."""
    sizes = [size for (_, size) in decomp.blocks]
    lm_by_degree = {
        d: set(leading_monomials(pres, decomp, d).values())
        for d in range(max_degree + len(decomp.blocks) + 1)
    }
    checked = 0
    bad = []
    for d in range(max_degree):
        for mono in lm_by_degree[d]:
            for support, _ in mono.chain_support():
                checked += 1
                saturated = any(
                    sizes[i] is not OMEGA and mono.exponents[i] == sizes[i]
                    for i in support
                )
                if saturated:
                    continue
                lifted = mono.times_support(support)
                if lifted not in lm_by_degree[lifted.degree]:
                    bad.append((mono, support))
    return AddLayerReport(checked, tuple(bad))
