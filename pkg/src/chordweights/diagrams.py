"""Chord diagrams on an oriented circle, their symmetries and surgeries.

A diagram of order n has 2n points labelled 0..2n-1 counterclockwise
(1-based in all user-facing text) and a fixed-point-free involution pairing
them into chords.  Chords are indexed 0..n-1 in tuple order: sorted by first
(smaller) endpoint.  Two chords cross iff exactly one endpoint of one lies
strictly inside the counterclockwise arc spanned by the other.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence


class MalformedPairing(ValueError):
    """The input pairs do not partition the point set."""


class BadIndex(ValueError):
    """Chord or family index outside its admissible range."""


class BoundExceeded(ValueError):
    """Requested enumeration is larger than the configured bound."""


class NotCrossing(ValueError):
    """A surgery was requested on a chord that does not cross the anchor."""


#: Enumeration sizes above this need an explicit bound from the caller.
DEFAULT_ENUM_BOUND = 6

CanonicalKey = bytes

_MODES = ("dihedral", "rotation", "exact")


class ChordDiagram:
    """Immutable chord diagram; ``mate[p]`` is the partner point of p."""

    __slots__ = ("mate",)

    def __init__(self, mate: Sequence[int]):
        mate = tuple(mate)
        m = len(mate)
        if m % 2 != 0:
            raise MalformedPairing("odd number of points")
        for p, q in enumerate(mate):
            if not 0 <= q < m or q == p or mate[q] != p:
                raise MalformedPairing("mate sequence is not a fixed-point-free involution")
        object.__setattr__(self, "mate", mate)

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    @property
    def n(self) -> int:
        return len(self.mate) // 2

    @property
    def chords(self) -> tuple[tuple[int, int], ...]:
        """0-based (p, p*) pairs with p < p*, sorted by p (the tuple form)."""
        return tuple((p, q) for p, q in enumerate(self.mate) if p < q)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChordDiagram) and self.mate == other.mate

    def __hash__(self) -> int:
        return hash(self.mate)

    def __repr__(self) -> str:
        return f"ChordDiagram({self.to_text()!r})"

    # -- user-facing constructors and renderings (1-based labels) ------------

    @staticmethod
    def from_pairs(pairs: Sequence[Sequence[int]]) -> "ChordDiagram":
        """Build from 1-based point pairs partitioning [1, 2n]."""
        pts = [p for pair in pairs for p in pair]
        m = len(pts)
        if sorted(pts) != list(range(1, m + 1)):
            raise MalformedPairing(
                f"pairs must cover 1..{m} exactly once, got {sorted(pts)}"
            )
        mate = [0] * m
        for pair in pairs:
            a, b = pair
            mate[a - 1] = b - 1
            mate[b - 1] = a - 1
        return ChordDiagram(mate)

    def to_pairs(self) -> tuple[tuple[int, int], ...]:
        """1-based tuple form ((p_1, p_1*), ...) with p_1 < p_2 < ... and p_i < p_i*."""
        return tuple((p + 1, q + 1) for p, q in self.chords)

    @staticmethod
    def parse_text(text: str) -> "ChordDiagram":
        """Parse the comma-separated pair format, e.g. "1-3,2-5,4-6"."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            left, sep, right = chunk.partition("-")
            if not sep:
                raise MalformedPairing(f"expected 'a-b' pairs, got {chunk!r}")
            try:
                pairs.append((int(left), int(right)))
            except ValueError as exc:
                raise MalformedPairing(f"non-integer point in {chunk!r}") from exc
        if not pairs:
            raise MalformedPairing("empty diagram text")
        return ChordDiagram.from_pairs(pairs)

    def to_text(self) -> str:
        return ",".join(f"{p}-{q}" for p, q in self.to_pairs())

    @staticmethod
    def from_json(text: str) -> "ChordDiagram":
        data = json.loads(text)
        if not isinstance(data, list):
            raise MalformedPairing("JSON diagram must be an array of pairs")
        return ChordDiagram.from_pairs(data)

    def to_json(self) -> str:
        return json.dumps([list(pair) for pair in self.to_pairs()])


@dataclass(frozen=True)
class CrossingData:
    """Crossing structure of one chord: who crosses it, and from which side.

    ``inside_endpoint[j]`` is the endpoint of chord j lying strictly inside the
    counterclockwise open arc from the anchor chord's first endpoint to its
    second; exactly one endpoint is inside iff the chords cross.
    """

    chord: int
    crossing: tuple[int, ...]
    inside_endpoint: dict[int, int]

    @property
    def count(self) -> int:
        return len(self.crossing)


def crossing_data(d: ChordDiagram, a: int) -> CrossingData:
    chords = d.chords
    if not 0 <= a < len(chords):
        raise BadIndex(f"chord index {a} out of range for order {d.n}")
    s, t = chords[a]
    crossing = []
    inside = {}
    for j, (u, v) in enumerate(chords):
        if j == a:
            continue
        u_in = s < u < t
        v_in = s < v < t
        if u_in != v_in:
            crossing.append(j)
            inside[j] = u if u_in else v
    return CrossingData(a, tuple(crossing), inside)


def rotate(d: ChordDiagram, r: int) -> ChordDiagram:
    """Relabel points by p -> p - r (mod 2n), i.e. rotate the circle."""
    m = len(d.mate)
    if m == 0:
        return d
    r %= m
    return ChordDiagram(tuple((d.mate[(q + r) % m] - r) % m for q in range(m)))


def reflect(d: ChordDiagram) -> ChordDiagram:
    """Point-reversal reflection p -> 2n-1-p (any other axis is this plus a rotation)."""
    m = len(d.mate)
    return ChordDiagram(tuple(m - 1 - d.mate[m - 1 - q] for q in range(m)))


def canonical_key(d: ChordDiagram, mode: str = "dihedral") -> CanonicalKey:
    """Minimal mate-sequence encoding over the chosen symmetry group's orbit.

    Modes: "rotation" (orientation-preserving relabelings), "dihedral"
    (rotations and reflections), "exact" (no symmetry, the raw encoding).
    Keys are equal iff the diagrams are related by the chosen group.
    """
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}")
    m = len(d.mate)
    if m == 0:
        return b""
    if m > 255:
        raise BoundExceeded("canonical keys support at most 127 chords")
    if mode == "exact":
        return bytes(d.mate)
    candidates = [bytes(rotate(d, r).mate) for r in range(m)]
    if mode == "dihedral":
        rd = reflect(d)
        candidates.extend(bytes(rotate(rd, r).mate) for r in range(m))
    return min(candidates)


def delete_chord(d: ChordDiagram, a: int) -> ChordDiagram:
    """Remove chord a; remaining points are compacted preserving circular order."""
    chords = d.chords
    if not 0 <= a < len(chords):
        raise BadIndex(f"chord index {a} out of range for order {d.n}")
    s, t = chords[a]
    return _drop_points(d.mate, (s, t))


def _drop_points(mate: Sequence[int], removed: Sequence[int]) -> ChordDiagram:
    removed_sorted = sorted(removed)

    def relabel(p: int) -> int:
        shift = sum(1 for r in removed_sorted if r < p)
        return p - shift

    keep = [p for p in range(len(mate)) if p not in removed_sorted]
    new_mate = [0] * len(keep)
    for p in keep:
        new_mate[relabel(p)] = relabel(mate[p])
    return ChordDiagram(new_mate)


def _replace_two_chords(
    mate: Sequence[int],
    old: Sequence[tuple[int, int]],
    new: Sequence[tuple[int, int]],
) -> list[int]:
    out = list(mate)
    for u, v in new:
        out[u] = v
        out[v] = u
    # old pairs are fully overwritten by construction; nothing to clear
    assert {p for pair in old for p in pair} == {p for pair in new for p in pair}
    return out


def surgery_split(d: ChordDiagram, a: int, i: int, j: int) -> tuple[ChordDiagram, ChordDiagram]:
    """The two resolderings of chords i and j across the deleted chord a.

    Chord a is removed; chords i and j (both crossing a) are replaced by
    joining inside-to-inside / outside-to-outside in the first output and
    inside-to-outside in the second, where "inside" means the endpoint in the
    counterclockwise open arc spanned by a.  Both outputs have order n-1.
    """
    if i == j:
        raise NotCrossing("surgery needs two distinct chords")
    data = crossing_data(d, a)
    for c in (i, j):
        if c not in data.inside_endpoint:
            raise NotCrossing(f"chord {c} does not cross chord {a}")
    chords = d.chords
    in_i = data.inside_endpoint[i]
    in_j = data.inside_endpoint[j]
    out_i = d.mate[in_i]
    out_j = d.mate[in_j]
    removed = chords[a]
    first = _replace_two_chords(d.mate, (chords[i], chords[j]), ((in_i, in_j), (out_i, out_j)))
    second = _replace_two_chords(d.mate, (chords[i], chords[j]), ((in_i, out_j), (in_j, out_i)))
    return _drop_points(first, removed), _drop_points(second, removed)


def resolder(d: ChordDiagram, i: int, j: int) -> tuple[ChordDiagram, ChordDiagram]:
    """The two resolderings of chords i and j of d itself (no deletion).

    Endpoints are designated by the tuple form: with chords (p_i, p_i*) and
    (p_j, p_j*), the first output joins (p_i, p_j), (p_i*, p_j*) and the second
    (p_i, p_j*), (p_j, p_i*).  Both outputs have order n.
    """
    chords = d.chords
    if i == j or not (0 <= i < len(chords) and 0 <= j < len(chords)):
        raise BadIndex(f"need two distinct chord indices in range, got {i}, {j}")
    pi, qi = chords[i]
    pj, qj = chords[j]
    first = _replace_two_chords(d.mate, (chords[i], chords[j]), ((pi, pj), (qi, qj)))
    second = _replace_two_chords(d.mate, (chords[i], chords[j]), ((pi, qj), (pj, qi)))
    return ChordDiagram(first), ChordDiagram(second)


# -- named families ----------------------------------------------------------


def make_Dn(n: int) -> ChordDiagram:
    """The order-n diagram in which every chord crosses all the others."""
    if n < 1:
        raise BadIndex("make_Dn needs n >= 1")
    mate = [0] * (2 * n)
    for i in range(n):
        mate[i] = n + i
        mate[n + i] = i
    return ChordDiagram(mate)


def _from_tokens(tokens: Sequence[tuple[int, int]]) -> ChordDiagram:
    """Build a diagram from a circular sequence of (chord id, endpoint) tokens."""
    pos: dict[tuple[int, int], int] = {}
    for idx, tok in enumerate(tokens):
        if tok in pos:
            raise MalformedPairing(f"token {tok} repeated")
        pos[tok] = idx
    mate = [0] * len(tokens)
    ids = {c for c, _ in pos}
    for c in ids:
        u, v = pos[(c, 0)], pos[(c, 1)]
        mate[u] = v
        mate[v] = u
    return ChordDiagram(mate)


def make_A(n: int, k: int) -> ChordDiagram:
    """Interpolating family: chord 1 crosses exactly k chords, the rest all cross.

    Counterclockwise: p_1..p_{k+1}, p_1*, p_{k+2}..p_n, p_2*..p_n*.
    k = n-1 gives make_Dn(n); k = 0 detaches chord 1 completely.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise BadIndex(f"make_A needs n >= 1 and 0 <= k <= n-1, got ({n}, {k})")
    tokens = [(c, 0) for c in range(1, k + 2)]
    tokens.append((1, 1))
    tokens.extend((c, 0) for c in range(k + 2, n + 1))
    tokens.extend((c, 1) for c in range(2, n + 1))
    return _from_tokens(tokens)


def make_B(n: int, k: int) -> ChordDiagram:
    """Companion family with both chord 1 and chord n crossing exactly k chords.

    Counterclockwise: p_1..p_{k+1}, p_1*, p_{k+2}..p_n, p_2*..p_{k+1}*, p_n*,
    p_{k+2}*..p_{n-1}* (the lone p_n* collapses into the run when k = n-1).
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise BadIndex(f"make_B needs n >= 1 and 0 <= k <= n-1, got ({n}, {k})")
    tokens = [(c, 0) for c in range(1, k + 2)]
    tokens.append((1, 1))
    tokens.extend((c, 0) for c in range(k + 2, n + 1))
    tokens.extend((c, 1) for c in range(2, k + 2))
    if k + 1 < n:
        tokens.append((n, 1))
    tokens.extend((c, 1) for c in range(k + 2, n))
    return _from_tokens(tokens)


# -- enumeration --------------------------------------------------------------


def enumerate_diagrams(n: int, max_n: int = DEFAULT_ENUM_BOUND) -> Iterator[ChordDiagram]:
    """All perfect matchings of 2n points: (2n-1)!! diagrams."""
    if n > max_n:
        raise BoundExceeded(f"enumeration of order {n} exceeds the bound {max_n}")
    if n < 0:
        raise BadIndex("order must be nonnegative")

    def fill(mate: list[int], free: list[int]) -> Iterator[ChordDiagram]:
        if not free:
            yield ChordDiagram(tuple(mate))
            return
        p = free[0]
        for idx in range(1, len(free)):
            q = free[idx]
            mate[p], mate[q] = q, p
            yield from fill(mate, [x for x in free[1:] if x != q])
        mate[p] = -1

    yield from fill([-1] * (2 * n), list(range(2 * n)))


def four_term_quadruples(
    n: int, max_n: int = DEFAULT_ENUM_BOUND
) -> Iterator[tuple[ChordDiagram, ChordDiagram, ChordDiagram, ChordDiagram]]:
    """Quadruples (A, B, C, D) on which any weight system f has f(A)-f(B)=f(C)-f(D).

    Around a fixed rest-of-diagram, three gaps in counterclockwise order
    receive the four endpoints of two special chords: two singles and an
    adjacent pair.  A/B place the pair in the last gap with its two possible
    pairings (interleaved / nested); C/D place it in the first gap likewise.
    """
    if n > max_n:
        raise BoundExceeded(f"4-term stream of order {n} exceeds the bound {max_n}")
    if n < 2:
        raise BadIndex("4-term relations need n >= 2")
    m = n - 2
    slot_count = max(2 * m, 1)

    def assemble(base: ChordDiagram, slots: tuple[int, int, int], pair_gap: int):
        # Gap contents, counterclockwise.  The pair (c1, c2) occupies gap 0 or
        # gap 2; s_prev is the single in the gap cyclically before the pair.
        if pair_gap == 0:
            contents = (["c1", "c2"], ["s1"], ["s2"])
            s_prev, s_other = "s2", "s1"
        else:
            contents = (["s1"], ["s2"], ["c1", "c2"])
            s_prev, s_other = "s2", "s1"
        tokens: list = []
        if m == 0:
            for items in contents:
                tokens.extend(items)
        else:
            for p in range(2 * m):
                for slot, items in zip(slots, contents):
                    if slot == p:
                        tokens.extend(items)
                tokens.append(p)
        posn = {tok: idx for idx, tok in enumerate(tokens)}

        def wire(pairing) -> ChordDiagram:
            mate = [0] * (2 * n)
            for u, v in base.chords:
                pu, pv = posn[u], posn[v]
                mate[pu], mate[pv] = pv, pu
            for a_tok, b_tok in pairing:
                pa, pb = posn[a_tok], posn[b_tok]
                mate[pa], mate[pb] = pb, pa
            return ChordDiagram(mate)

        interleaved = wire((("c2", s_prev), ("c1", s_other)))
        nested = wire((("c1", s_prev), ("c2", s_other)))
        return interleaved, nested

    for base in enumerate_diagrams(m, max_n=max_n):
        for a in range(slot_count):
            for b in range(a, slot_count):
                for c in range(b, slot_count):
                    first = assemble(base, (a, b, c), pair_gap=2)
                    second = assemble(base, (a, b, c), pair_gap=0)
                    yield first[0], first[1], second[0], second[1]
