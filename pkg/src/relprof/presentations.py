"""Finite presentations of infinite relational structures and their ages.

Two presentation forms are supported, both restricted to unary/binary
signatures:

* multichain: the domain is F + V x omega for a finite part F and a finite
  slice set V.  Relations between slice elements depend only on the V
  coordinates and on how the positions compare (<, =, >); relations touching
  F depend only on the F element and the V coordinate.  Finite restrictions
  are encoded by words: an F subset plus a sequence of non-empty subsets of
  V, one per occupied position.

* lexicographic sum: a finite index digraph with one block per vertex, each
  block one of the six monomorphic directed-graph kinds (acyclic tournament,
  clique, independent set, chain, reflexive clique, antichain) of finite or
  infinite size.  Finite restrictions are encoded by size compositions.

Ages are enumerated exactly: realize every word (or composition) of total
size n, deduplicate by canonical code.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .structures import (
    RelStruct,
    Signature,
    canonical_code,
    digraph,
    make_struct,
)

COMPARATORS = ("<", "=", ">")

# Block kinds for lexicographic sums
ACYCLIC = "acyclic"
CLIQUE = "clique"
INDEPENDENT = "independent"
CHAIN = "chain"
REFLEXIVE_CLIQUE = "reflexive-clique"
ANTICHAIN = "antichain"
BLOCK_KINDS = (ACYCLIC, CLIQUE, INDEPENDENT, CHAIN, REFLEXIVE_CLIQUE, ANTICHAIN)

#: Block-size marker for an infinite block.
OMEGA = None


@dataclass(frozen=True)
class Word:
    """A finite restriction pattern: an F subset plus non-empty V letters."""

    f_subset: tuple[int, ...]
    letters: tuple[frozenset[int], ...]

    def __post_init__(self):
        if any(not letter for letter in self.letters):
            raise ValueError("letters must be non-empty")

    @property
    def total_size(self) -> int:
        return len(self.f_subset) + sum(len(s) for s in self.letters)


@dataclass(frozen=True)
class MultichainPresentation:
    """Rule tables presenting a structure on F + V x omega.

    ``vv_true[s]`` holds triples (x, y, cmp) for which the ordered pair from
    slice x at position i to slice y at position j is in relation s whenever
    cmp(i, j); the diagonal (x, x, '=') governs loops.  ``fv_true[s]`` /
    ``vf_true[s]`` hold the position-independent pairs between F elements and
    slices.  Relations inside F live in ``finite_part``.
    """

    signature: Signature
    finite_part: RelStruct
    v_size: int
    unary_slices: tuple
    vv_true: tuple
    fv_true: tuple
    vf_true: tuple
    name: str = ""

    def __post_init__(self):
        if self.v_size < 1:
            raise ValueError("at least one slice required")
        if self.finite_part.signature != self.signature:
            raise ValueError("finite part must share the signature")
        if any(a not in (1, 2) for a in self.signature.arities):
            raise ValueError("presentations support arities 1 and 2 only")
        for sym, arity in enumerate(self.signature.arities):
            if arity == 1:
                if self.unary_slices[sym] is None:
                    raise ValueError(f"unary symbol {sym} needs a slice rule")
            else:
                if self.vv_true[sym] is None:
                    raise ValueError(f"binary symbol {sym} needs comparator rules")
                for x, y, cmp in self.vv_true[sym]:
                    if cmp not in COMPARATORS or not (0 <= x < self.v_size and 0 <= y < self.v_size):
                        raise ValueError(f"bad rule ({x},{y},{cmp}) for symbol {sym}")

    @property
    def f_size(self) -> int:
        return self.finite_part.domain_size


def multichain(arities, f_struct, v_size, unary_slices=None, vv=None, fv=None, vf=None, name=""):
    """Convenience constructor with per-symbol dicts of truthy rules."""
    arities = tuple(arities)
    n = len(arities)
    unary_slices = dict(unary_slices or {})
    vv = dict(vv or {})
    fv = dict(fv or {})
    vf = dict(vf or {})
    return MultichainPresentation(
        Signature(arities),
        f_struct,
        v_size,
        tuple(frozenset(unary_slices.get(s, ())) if arities[s] == 1 else None for s in range(n)),
        tuple(frozenset(map(tuple, vv.get(s, ()))) if arities[s] == 2 else None for s in range(n)),
        tuple(frozenset(map(tuple, fv.get(s, ()))) if arities[s] == 2 else None for s in range(n)),
        tuple(frozenset(map(tuple, vf.get(s, ()))) if arities[s] == 2 else None for s in range(n)),
        name,
    )


def empty_finite_part(arities) -> RelStruct:
    return make_struct(arities, 0, [set() for _ in arities])


@dataclass(frozen=True)
class LexSumPresentation:
    """A finite index digraph with one block (kind, size) per index vertex."""

    index: RelStruct
    blocks: tuple  # tuple[(kind, size | OMEGA), ...]
    name: str = ""

    def __post_init__(self):
        if self.index.signature.arities != (2,):
            raise ValueError("index must carry a single binary relation")
        if self.index.domain_size != len(self.blocks):
            raise ValueError("one block per index vertex")
        if not self.blocks:
            raise ValueError("at least one block")
        for kind, size in self.blocks:
            if kind not in BLOCK_KINDS:
                raise ValueError(f"unknown block kind {kind!r}")
            if size is not OMEGA and (not isinstance(size, int) or size < 1):
                raise ValueError(f"block size must be omega or a positive integer, got {size!r}")


def block_relation(kind: str, n: int) -> set:
    arcs = set()
    if kind == ACYCLIC:
        arcs = {(i, j) for i in range(n) for j in range(i + 1, n)}
    elif kind == CLIQUE:
        arcs = {(i, j) for i in range(n) for j in range(n) if i != j}
    elif kind == INDEPENDENT:
        arcs = set()
    elif kind == CHAIN:
        arcs = {(i, j) for i in range(n) for j in range(i, n)}
    elif kind == REFLEXIVE_CLIQUE:
        arcs = {(i, j) for i in range(n) for j in range(n)}
    elif kind == ANTICHAIN:
        arcs = {(i, i) for i in range(n)}
    return arcs


# ---------------------------------------------------------------------------
# Realization
# ---------------------------------------------------------------------------


def _realized_relations(pres: MultichainPresentation, word: Word):
    f_elems = sorted(word.f_subset)
    f_pos = {a: i for i, a in enumerate(f_elems)}
    slice_elems = []  # (slice x, position i)
    for i, letter in enumerate(word.letters):
        for x in sorted(letter):
            slice_elems.append((x, i))
    offset = len(f_elems)
    n = offset + len(slice_elems)

    relations = []
    for sym, arity in enumerate(pres.signature.arities):
        if arity == 1:
            rel = {(f_pos[a],) for (a,) in pres.finite_part.relations[sym] if a in f_pos}
            slice_rule = pres.unary_slices[sym]
            rel |= {
                (offset + k,) for k, (x, _) in enumerate(slice_elems) if x in slice_rule
            }
        else:
            fp_rel = pres.finite_part.relations[sym]
            vv, fv, vf = pres.vv_true[sym], pres.fv_true[sym], pres.vf_true[sym]
            rel = {
                (f_pos[a], f_pos[b]) for (a, b) in fp_rel if a in f_pos and b in f_pos
            }
            for fi, a in enumerate(f_elems):
                for k, (x, _) in enumerate(slice_elems):
                    if (a, x) in fv:
                        rel.add((fi, offset + k))
                    if (x, a) in vf:
                        rel.add((offset + k, fi))
            for k, (x, i) in enumerate(slice_elems):
                for l, (y, j) in enumerate(slice_elems):
                    cmp = "=" if i == j else ("<" if i < j else ">")
                    if (x, y, cmp) in vv:
                        rel.add((offset + k, offset + l))
        relations.append(frozenset(rel))
    return n, tuple(relations)


def realize(pres: MultichainPresentation, word: Word) -> RelStruct:
    """The finite restriction named by a word.

    Elements are the chosen F part followed by the letters in position
    order, each letter listed in slice order.  Ordered pairs across
    positions i < j use the '<' rules, pairs inside one position the '='
    rules (the diagonal giving loops), and pairs with i > j the '>' rules.
    """
    if any(not (0 <= a < pres.f_size) for a in word.f_subset):
        raise ValueError(f"F subset {word.f_subset} out of range")
    if len(set(word.f_subset)) != len(word.f_subset):
        raise ValueError("repeated F elements")
    for letter in word.letters:
        if any(not (0 <= x < pres.v_size) for x in letter):
            raise ValueError(f"letter {set(letter)} out of range")
    n, relations = _realized_relations(pres, word)
    return RelStruct(pres.signature, n, relations)


def realize_composition(pres: LexSumPresentation, counts) -> RelStruct:
    """The restriction taking counts[i] elements inside block i."""
    counts = tuple(counts)
    if len(counts) != len(pres.blocks):
        raise ValueError("one count per block")
    offsets = []
    total = 0
    for c, (kind, size) in zip(counts, pres.blocks):
        if c < 0 or (size is not OMEGA and c > size):
            raise ValueError(f"count {c} exceeds block size {size}")
        offsets.append(total)
        total += c
    arcs = set()
    index_arcs = pres.index.relations[0]
    for bi, (kind, _) in enumerate(pres.blocks):
        base = offsets[bi]
        arcs |= {(base + u, base + v) for (u, v) in block_relation(kind, counts[bi])}
    for bi in range(len(counts)):
        for bj in range(len(counts)):
            if bi != bj and (bi, bj) in index_arcs:
                arcs |= {
                    (offsets[bi] + u, offsets[bj] + v)
                    for u in range(counts[bi])
                    for v in range(counts[bj])
                }
    return digraph(total, arcs)


# ---------------------------------------------------------------------------
# Word and composition enumeration
# ---------------------------------------------------------------------------


def _letters(v_size):
    # non-empty subsets of V as frozensets, ordered by bitmask
    out = []
    for mask in range(1, 1 << v_size):
        out.append(frozenset(x for x in range(v_size) if mask >> x & 1))
    return out


def _letter_sequences(v_size, total):
    """All letter sequences of the given total size, ordered by (length, bitmasks)."""
    letters = _letters(v_size)
    if total == 0:
        yield ()
        return
    max_len = total
    for length in range(1, max_len + 1):
        def rec(remaining, slots):
            if slots == 0:
                if remaining == 0:
                    yield ()
                return
            for letter in letters:
                size = len(letter)
                if size <= remaining - (slots - 1):
                    for rest in rec(remaining - size, slots - 1):
                        yield (letter,) + rest
        yield from rec(total, length)


def words_of_size(pres: MultichainPresentation, n: int):
    """All words of total size n: F subsets in bitmask-rank order, then letters."""
    f = pres.f_size
    for mask in range(1 << f):
        subset = tuple(a for a in range(f) if mask >> a & 1)
        if len(subset) > n:
            continue
        for letters in _letter_sequences(pres.v_size, n - len(subset)):
            yield Word(subset, letters)


def compositions_of_size(pres: LexSumPresentation, n: int):
    caps = [n if size is OMEGA else min(size, n) for (_, size) in pres.blocks]

    def rec(i, remaining):
        if i == len(caps):
            if remaining == 0:
                yield ()
            return
        tail_cap = sum(caps[i + 1:])
        for c in range(max(0, remaining - tail_cap), min(caps[i], remaining) + 1):
            for rest in rec(i + 1, remaining - c):
                yield (c,) + rest

    yield from rec(0, n)


@functools.lru_cache(maxsize=4096)
def enumerate_age(pres, n: int):
    """Isomorphism types of the n-element restrictions, as (code -> representative).

    Returned mapping is ordered by canonical code; representatives are the
    first realization found in enumeration order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if isinstance(pres, MultichainPresentation):
        raws = (_realized_relations(pres, w) for w in words_of_size(pres, n))
        signature = pres.signature
    elif isinstance(pres, LexSumPresentation):
        raws = (
            ((s := realize_composition(pres, c)).domain_size, s.relations)
            for c in compositions_of_size(pres, n)
        )
        signature = Signature((2,))
    else:
        raise TypeError(f"not a presentation: {pres!r}")
    seen_raw = set()
    by_code = {}
    for raw in raws:
        if raw in seen_raw:
            continue
        seen_raw.add(raw)
        struct = RelStruct(signature, raw[0], raw[1])
        code = canonical_code(struct)
        if code not in by_code:
            by_code[code] = struct
    return dict(sorted(by_code.items()))


# ---------------------------------------------------------------------------
# Named constructions
# ---------------------------------------------------------------------------


def colored_dense_chain(k: int) -> MultichainPresentation:
    """A dense linear order split into k colors, every color between any two points.

    Signature: one strict order plus k unary colors.  Slice x carries color
    x; position order is primary, the fixed slice order breaks ties inside a
    position.  The profile is exactly k^n.
    """
    if k < 1:
        raise ValueError("k must be positive")
    arities = (2,) + (1,) * k
    vv = {0: set()}
    for x in range(k):
        for y in range(k):
            vv[0].add((x, y, "<"))
            if x < y:
                vv[0].add((x, y, "="))
    unary = {1 + c: {c} for c in range(k)}
    return multichain(arities, empty_finite_part(arities), k, unary, vv, name=f"colored-chain:{k}")


def interval_division_chain(k: int) -> MultichainPresentation:
    """A dense linear order cut into k+1 consecutive intervals by k marks.

    Slices are the intervals: cross-slice pairs are ordered by slice, so a
    restriction's type is just the count of points per interval, giving the
    binomial profile C(n+k, k) exactly.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    arities = (2,) + (1,) * k
    vv = {0: {(x, x, "<") for x in range(k + 1)}}
    for x in range(k + 1):
        for y in range(x + 1, k + 1):
            vv[0] |= {(x, y, cmp) for cmp in COMPARATORS}
    unary = {1 + i: {1 + i} for i in range(k)}
    return multichain(
        arities, empty_finite_part(arities), k + 1, unary, vv,
        name=f"interval-chain:{k}",
    )


def product_of(struct: RelStruct) -> MultichainPresentation:
    """The product of a finite structure with an infinite chain.

    Every slice carries a copy of the structure and relations between
    distinct positions replicate it as well, so order-preserving maps of the
    chain act as local isomorphisms.
    """
    if any(a not in (1, 2) for a in struct.signature.arities):
        raise ValueError("products support arities 1 and 2 only")
    arities = struct.signature.arities
    vv = {}
    unary = {}
    for sym, arity in enumerate(arities):
        if arity == 1:
            unary[sym] = {x for (x,) in struct.relations[sym]}
        else:
            vv[sym] = {
                (x, y, cmp) for (x, y) in struct.relations[sym] for cmp in COMPARATORS
            }
    return multichain(
        arities, empty_finite_part(arities), struct.domain_size, unary, vv,
        name=f"chain-product:{struct.domain_size}",
    )


def reflexive_chain(n: int) -> RelStruct:
    return make_struct((2,), n, [{(i, j) for i in range(n) for j in range(i, n)}])


_C3_ARCS = ((0, 1), (1, 2), (2, 0))


def tournament_fixtures(name: str) -> MultichainPresentation:
    """Named infinite tournaments over a 3-cycle pattern.

    ``omega`` is the increasing enumeration of the naturals; ``T1``/``T2``/
    ``T3`` replace 1/2/3 vertices of the 3-cycle by omega; ``C3omega`` stacks
    infinitely many 3-cycles along a chain, all arcs running forward.
    """
    arities = (2,)
    if name == "omega":
        return multichain(arities, empty_finite_part(arities), 1,
                          vv={0: {(0, 0, "<")}}, name="omega")
    if name in ("T1", "T2", "T3"):
        blown = int(name[1])  # vertices of the 3-cycle replaced by omega
        omega_vertices = list(range(blown))
        finite_vertices = list(range(blown, 3))
        f_index = {v: i for i, v in enumerate(finite_vertices)}
        f_arcs = {
            (f_index[a], f_index[b])
            for (a, b) in _C3_ARCS
            if a in f_index and b in f_index
        }
        f_struct = make_struct(arities, len(finite_vertices), [f_arcs])
        vv = {0: set()}
        fv = {0: set()}
        vf = {0: set()}
        for x in omega_vertices:
            vv[0].add((x, x, "<"))
        for (a, b) in _C3_ARCS:
            if a in f_index and b not in f_index:
                fv[0].add((f_index[a], b))
            elif a not in f_index and b in f_index:
                vf[0].add((a, f_index[b]))
            elif a not in f_index and b not in f_index:
                vv[0] |= {(a, b, cmp) for cmp in COMPARATORS}
        return multichain(arities, f_struct, max(blown, 1), vv=vv, fv=fv, vf=vf, name=name)
    if name == "C3omega":
        vv = {0: set(_C3_ARCS_AT("=")) | {(x, y, "<") for x in range(3) for y in range(3)}}
        return multichain(arities, empty_finite_part(arities), 3, vv=vv, name="C3omega")
    raise ValueError(f"unknown tournament fixture {name!r}")


def _C3_ARCS_AT(cmp):
    return {(a, b, cmp) for (a, b) in _C3_ARCS}


def half_complete_bipartite(tilde: bool = False) -> MultichainPresentation:
    """The graph on two chains with an edge from (0, i) to (1, j) iff i < j.

    With ``tilde`` all pairs inside the second chain are also edges.
    """
    vv = {0: {(0, 1, "<"), (1, 0, ">")}}
    if tilde:
        vv[0] |= {(1, 1, "<"), (1, 1, ">")}
    name = "half-bipartite-tilde" if tilde else "half-bipartite"
    return multichain((2,), empty_finite_part((2,)), 2, vv=vv, name=name)


def sum_of_cliques(k: int) -> LexSumPresentation:
    """Disjoint union of k infinite cliques (edgeless index)."""
    return LexSumPresentation(
        digraph(k, []), tuple((CLIQUE, OMEGA) for _ in range(k)), name=f"cliques:{k}"
    )


def lexsum_tournament_fixture(name: str) -> LexSumPresentation:
    """Lexicographic-sum forms of omega/T1/T2/T3 for wide enumeration windows."""
    if name == "omega":
        return LexSumPresentation(digraph(1, []), ((ACYCLIC, OMEGA),), name="omega")
    if name in ("T1", "T2", "T3"):
        blown = int(name[1])
        blocks = tuple(
            (ACYCLIC, OMEGA if v < blown else 1) for v in range(3)
        )
        return LexSumPresentation(digraph(3, _C3_ARCS), blocks, name=name)
    raise ValueError(f"unknown tournament fixture {name!r}")


def slow_profile_structure(values, domain_size: int) -> RelStruct:
    """A finite structure whose profile follows a prescribed slow function.

    ``values`` gives f(0..N) with N = domain_size; f must be non-decreasing
    with 1 <= f(n) <= n+1.  For each n with f(n+1) > f(n) the structure gets
    an (n+1)-ary symbol holding exactly on tuples enumerating {0..n}; the
    resulting profile equals f wherever the window is wide enough.
    """
    values = list(values)
    if len(values) != domain_size + 1:
        raise ValueError("need f(0..N) for domain size N")
    for n, v in enumerate(values):
        if not 1 <= v <= n + 1:
            raise ValueError(f"f({n})={v} outside [1, {n + 1}]")
        if n and v < values[n - 1]:
            raise ValueError("f must be non-decreasing")
    levels = [n for n in range(domain_size) if values[n + 1] > values[n]]
    arities = tuple(n + 1 for n in levels)
    relations = [set(itertools.permutations(range(n + 1))) for n in levels]
    return make_struct(arities, domain_size, relations)
