"""
A generic finite-poset engine used as an independent brute-force verifier.

A FinitePoset stores an indexed list of opaque labels, the cover
relation (as the transitive reduction of the order), and the full
reachability relation as per-element bitmasks.  Everything here is
computed from first principles -- recursion for the Moebius function,
pairwise bound checks for the lattice property, exhaustive or
witness-driven searches for distributivity -- so that the closed-form
results elsewhere in the package can be checked against it.
"""
from __future__ import annotations

import itertools
import re
from typing import Callable, Hashable, Iterable, Optional, Sequence

ISO_SIZE_LIMIT = 64


class PosetError(ValueError):
    pass


class FinitePoset:
    def __init__(self, labels: Sequence[Hashable], above: list[int]):
        # above[i] is a bitmask of the j with i <= j (including i itself).
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self._above = above
        self._below = [0] * self.n
        for i in range(self.n):
            mask = above[i]
            while mask:
                j = (mask & -mask).bit_length() - 1
                self._below[j] |= 1 << i
                mask &= mask - 1
        self._covers = self._transitive_reduction()
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != self.n:
            raise PosetError("duplicate labels")
        self._mobius_memo: dict[tuple[int, int], int] = {}
        self._lub: Optional[list[list[int]]] = None
        self._glb: Optional[list[list[int]]] = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_covers(
        cls, labels: Sequence[Hashable], cover_pairs: Iterable[tuple[int, int]]
    ) -> "FinitePoset":
        """Build from cover index pairs (lower, upper); rejects cycles."""
        labels = tuple(labels)
        n = len(labels)
        succ: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in cover_pairs:
            if not (0 <= lo < n and 0 <= hi < n):
                raise PosetError(f"dangling index in cover ({lo}, {hi})")
            if lo == hi:
                raise PosetError("self-loop in cover relation")
            succ[lo].append(hi)
        order = _topological_order(n, succ)  # raises on cycles
        above = [0] * n
        for i in reversed(order):
            mask = 1 << i
            for j in succ[i]:
                mask |= above[j]
            above[i] = mask
        return cls(labels, above)

    @classmethod
    def from_leq(
        cls,
        labels: Sequence[Hashable],
        leq: Callable[[Hashable, Hashable], bool],
    ) -> "FinitePoset":
        """Build from a comparison callable; verifies it is a partial order."""
        labels = tuple(labels)
        n = len(labels)
        above = [0] * n
        for i in range(n):
            mask = 0
            for j in range(n):
                if leq(labels[i], labels[j]):
                    mask |= 1 << j
            if not mask >> i & 1:
                raise PosetError(f"relation not reflexive at {labels[i]!r}")
            above[i] = mask
        for i in range(n):
            mi = above[i]
            mask = mi & ~(1 << i)
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if above[j] >> i & 1:
                    raise PosetError("relation not antisymmetric")
                if above[j] & ~mi:
                    raise PosetError("relation not transitive")
        return cls(labels, above)

    def _transitive_reduction(self) -> frozenset[tuple[int, int]]:
        covers = set()
        for i in range(self.n):
            strict = self._above[i] & ~(1 << i)
            mask = strict
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                between = strict & (self._below[j] & ~(1 << j))
                if between == 0:
                    covers.add((i, j))
        return frozenset(covers)

    # -- basic queries -------------------------------------------------------

    @property
    def covers(self) -> frozenset[tuple[int, int]]:
        return self._covers

    def cover_labels(self) -> set[tuple[Hashable, Hashable]]:
        return {(self.labels[i], self.labels[j]) for i, j in self._covers}

    def index_of(self, label: Hashable) -> int:
        return self._index[label]

    def leq(self, i: int, j: int) -> bool:
        return bool(self._above[i] >> j & 1)

    def leq_labels(self, a: Hashable, b: Hashable) -> bool:
        return self.leq(self._index[a], self._index[b])

    def minimal_elements(self) -> list[int]:
        return [i for i in range(self.n) if self._below[i] == 1 << i]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.n) if self._above[i] == 1 << i]

    def _topo(self) -> list[int]:
        succ = [[] for _ in range(self.n)]
        for lo, hi in self._covers:
            succ[lo].append(hi)
        return _topological_order(self.n, succ)

    # -- Moebius -------------------------------------------------------------

    def mobius(self, s: int, u: int) -> int:
        """Recursive Moebius function, memoized per (s, u) pair."""
        if s == u:
            return 1
        if not self.leq(s, u):
            return 0
        key = (s, u)
        if key in self._mobius_memo:
            return self._mobius_memo[key]
        total = 0
        interval = self._above[s] & self._below[u] & ~(1 << u)
        mask = interval
        while mask:
            t = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            total += self.mobius(s, t)
        self._mobius_memo[key] = -total
        return -total

    def mobius_labels(self, a: Hashable, b: Hashable) -> int:
        return self.mobius(self._index[a], self._index[b])

    # -- intervals -----------------------------------------------------------

    def enumerate_intervals(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            mask = self._above[i]
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                out.append((i, j))
        return out

    def interval_elements(self, i: int, j: int) -> list[int]:
        mask = self._above[i] & self._below[j]
        return _bits(mask)

    # -- gradedness ----------------------------------------------------------

    def is_graded(self):
        """Check that all maximal chains between any fixed pair have equal length.

        Returns (True, ranks) with ranks computed as longest-path distance
        from the minimal elements, or (False, (chain_a, chain_b)) with two
        saturated chains of different lengths between the same endpoints.
        """
        topo = self._topo()
        pred: list[list[int]] = [[] for _ in range(self.n)]
        for lo, hi in self._covers:
            pred[hi].append(lo)
        for x in range(self.n):
            shortest = {x: 0}
            longest = {x: 0}
            short_par: dict[int, Optional[int]] = {x: None}
            long_par: dict[int, Optional[int]] = {x: None}
            for y in topo:
                if y == x or not self.leq(x, y):
                    continue
                for p in pred[y]:
                    if p not in longest:
                        continue
                    if y not in shortest or shortest[p] + 1 < shortest[y]:
                        shortest[y] = shortest[p] + 1
                        short_par[y] = p
                    if y not in longest or longest[p] + 1 > longest[y]:
                        longest[y] = longest[p] + 1
                        long_par[y] = p
                if y in longest and shortest[y] != longest[y]:
                    return False, (
                        _walk_back(y, short_par),
                        _walk_back(y, long_par),
                    )
        ranks = [0] * self.n
        for y in topo:
            for p in pred[y]:
                ranks[y] = max(ranks[y], ranks[p] + 1)
        return True, ranks

    # -- lattice structure -----------------------------------------------------

    def _bound_tables(self) -> tuple[list[list[int]], list[list[int]]]:
        if self._lub is not None and self._glb is not None:
            return self._lub, self._glb
        lub = [[-1] * self.n for _ in range(self.n)]
        glb = [[-1] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(i, self.n):
                ub = self._above[i] & self._above[j]
                lub[i][j] = lub[j][i] = self._least(ub)
                lb = self._below[i] & self._below[j]
                glb[i][j] = glb[j][i] = self._greatest(lb)
        self._lub, self._glb = lub, glb
        return lub, glb

    def _least(self, mask: int) -> int:
        m = mask
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if self._above[u] & mask == mask:
                return u
        return -1

    def _greatest(self, mask: int) -> int:
        m = mask
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if self._below[u] & mask == mask:
                return u
        return -1

    def is_lattice(self) -> bool:
        lub, glb = self._bound_tables()
        return all(
            lub[i][j] >= 0 and glb[i][j] >= 0
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def is_distributive(self) -> bool:
        """Exhaustive triple check of both distributive laws."""
        if not self.is_lattice():
            return False
        lub, glb = self._bound_tables()
        rng = range(self.n)
        for s in rng:
            ls, gs = lub[s], glb[s]
            for t in rng:
                lst, gst = ls[t], gs[t]
                glb_t = glb[t]
                lub_t = lub[t]
                for u in rng:
                    if ls[glb_t[u]] != glb[lst][ls[u]]:
                        return False
                    if gs[lub_t[u]] != lub[gst][gs[u]]:
                        return False
        return True

    def find_pentagon(self) -> Optional[tuple[int, int, int, int, int]]:
        """An N5 sublattice (bottom, short, low, high, top), via a modularity
        violation x <= z with x v (y ^ z) < (x v y) ^ z."""
        if not self.is_lattice():
            raise PosetError("pentagon search requires a lattice")
        lub, glb = self._bound_tables()
        for x in range(self.n):
            for z in _bits(self._above[x] & ~(1 << x)):
                for y in range(self.n):
                    a = lub[x][glb[y][z]]
                    b = glb[lub[x][y]][z]
                    if a == b:
                        continue
                    bot = glb[y][a]
                    top = lub[y][b]
                    quint = (bot, y, a, b, top)
                    if self._is_n5(quint):
                        return quint
        return None

    def find_diamond(self) -> Optional[tuple[int, int, int, int, int]]:
        """An M3 sublattice (bottom, a, b, c, top) in a modular lattice."""
        if not self.is_lattice():
            raise PosetError("diamond search requires a lattice")
        lub, glb = self._bound_tables()
        for x, y, z in itertools.combinations(range(self.n), 3):
            d = lub[lub[glb[x][y]][glb[y][z]]][glb[z][x]]
            e = glb[glb[lub[x][y]][lub[y][z]]][lub[z][x]]
            if d == e:
                continue
            xx = lub[glb[x][e]][d]
            yy = lub[glb[y][e]][d]
            zz = lub[glb[z][e]][d]
            quint = (d, xx, yy, zz, e)
            if self._is_m3(quint):
                return quint
        return None

    def _is_n5(self, quint: tuple[int, int, int, int, int]) -> bool:
        bot, y, a, b, top = quint
        if len(set(quint)) != 5:
            return False
        lub, glb = self._bound_tables()
        return (
            self.leq(bot, y)
            and self.leq(y, top)
            and self.leq(a, b)
            and glb[y][a] == bot
            and glb[y][b] == bot
            and lub[y][a] == top
            and lub[y][b] == top
            and lub[a][b] == b
            and glb[a][b] == a
            and not self.leq(y, a)
            and not self.leq(a, y)
        )

    def _is_m3(self, quint: tuple[int, int, int, int, int]) -> bool:
        bot, a, b, c, top = quint
        if len(set(quint)) != 5:
            return False
        lub, glb = self._bound_tables()
        for s, t in itertools.combinations((a, b, c), 2):
            if glb[s][t] != bot or lub[s][t] != top:
                return False
        return True

    def is_distributive_by_sublattices(self) -> bool:
        """Distributive iff no N5 and no M3 sublattice exists."""
        return self.find_pentagon() is None and self.find_diamond() is None

    def find_n5_or_m3_subset(self) -> Optional[tuple[int, ...]]:
        """Brute-force search over 5-element subsets (small posets only)."""
        if self.n > 30:
            raise PosetError("brute-force sublattice search capped at 30 elements")
        if not self.is_lattice():
            raise PosetError("sublattice search requires a lattice")
        lub, glb = self._bound_tables()
        for subset in itertools.combinations(range(self.n), 5):
            members = set(subset)
            if any(
                lub[s][t] not in members or glb[s][t] not in members
                for s, t in itertools.combinations(subset, 2)
            ):
                continue
            for perm in itertools.permutations(subset):
                if self._is_n5(perm) or self._is_m3(perm):
                    return subset
        return None

    # -- subposets, isomorphism ------------------------------------------------

    def induced_subposet(self, labels: Iterable[Hashable]) -> "FinitePoset":
        idx = [self._index[lab] for lab in labels]
        remap = {old: new for new, old in enumerate(idx)}
        above = []
        for old in idx:
            mask = 0
            for other in idx:
                if self.leq(old, other):
                    mask |= 1 << remap[other]
            above.append(mask)
        return FinitePoset([self.labels[i] for i in idx], above)

    def are_isomorphic(self, other: "FinitePoset", size_limit: int = ISO_SIZE_LIMIT) -> bool:
        if self.n != other.n:
            return False
        if max(self.n, other.n) > size_limit:
            raise PosetError(f"isomorphism search capped at {size_limit} elements")
        mine = self._refined_colors()
        theirs = other._refined_colors()
        if sorted(mine) != sorted(theirs):
            return False
        groups: dict[int, list[int]] = {}
        for j in range(other.n):
            groups.setdefault(theirs[j], []).append(j)
        order = sorted(range(self.n), key=lambda i: (mine[i], i))
        mapping: dict[int, int] = {}
        used = [False] * other.n

        def backtrack(k: int) -> bool:
            if k == self.n:
                return True
            i = order[k]
            for j in groups.get(mine[i], ()):
                if used[j]:
                    continue
                ok = True
                for i2, j2 in mapping.items():
                    if self.leq(i, i2) != other.leq(j, j2) or self.leq(i2, i) != other.leq(j2, j):
                        ok = False
                        break
                if not ok:
                    continue
                mapping[i] = j
                used[j] = True
                if backtrack(k + 1):
                    return True
                del mapping[i]
                used[j] = False
            return False

        return backtrack(0)

    def _refined_colors(self) -> list[int]:
        up = [[] for _ in range(self.n)]
        down = [[] for _ in range(self.n)]
        for lo, hi in self._covers:
            up[lo].append(hi)
            down[hi].append(lo)
        colors = [
            hash((bin(self._above[i]).count("1"), bin(self._below[i]).count("1"),
                  len(up[i]), len(down[i])))
            for i in range(self.n)
        ]
        for _ in range(self.n):
            new = [
                hash((colors[i],
                      tuple(sorted(colors[j] for j in up[i])),
                      tuple(sorted(colors[j] for j in down[i]))))
                for i in range(self.n)
            ]
            if len(set(new)) == len(set(colors)):
                colors = new
                break
            colors = new
        return colors

    # -- import / export --------------------------------------------------------

    def to_edge_list(self) -> str:
        lines = sorted(f"{self.labels[i]} < {self.labels[j]}" for i, j in self._covers)
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_edge_list(cls, text: str) -> "FinitePoset":
        pairs = []
        labels: list[str] = []
        seen: dict[str, int] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line:
                continue
            if " < " not in line:
                raise PosetError(f"line {lineno}: expected 'a < b'")
            a, b = (part.strip() for part in line.split(" < ", 1))
            for lab in (a, b):
                if lab not in seen:
                    seen[lab] = len(labels)
                    labels.append(lab)
            pairs.append((seen[a], seen[b]))
        return cls.from_covers(labels, pairs)

    def to_dot(self, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", '  rankdir="BT";']
        for lab in self.labels:
            lines.append(f'  "{lab}";')
        for i, j in sorted(self._covers):
            lines.append(f'  "{self.labels[i]}" -> "{self.labels[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dot(cls, text: str) -> "FinitePoset":
        node_re = re.compile(r'^\s*"([^"]+)"\s*;\s*$')
        edge_re = re.compile(r'"([^"]+)"\s*->\s*"([^"]+)"')
        labels: list[str] = []
        seen: dict[str, int] = {}

        def intern(lab: str) -> int:
            if lab not in seen:
                seen[lab] = len(labels)
                labels.append(lab)
            return seen[lab]

        pairs = []
        for line in text.splitlines():
            m = node_re.match(line)
            if m:
                intern(m.group(1))
                continue
            for a, b in edge_re.findall(line):
                pairs.append((intern(a), intern(b)))
        return cls.from_covers(labels, pairs)


# ---------------------------------------------------------------------------
# Stock posets


def chain(k: int) -> FinitePoset:
    """The chain 0 < 1 < ... < k-1."""
    return FinitePoset.from_covers(list(range(k)), [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> FinitePoset:
    return FinitePoset.from_covers(list(range(k)), [])


def boolean_lattice(k: int) -> FinitePoset:
    subsets = [frozenset(s) for r in range(k + 1)
               for s in itertools.combinations(range(k), r)]
    idx = {s: i for i, s in enumerate(subsets)}
    pairs = []
    for s in subsets:
        for extra in range(k):
            if extra not in s:
                pairs.append((idx[s], idx[s | {extra}]))
    return FinitePoset.from_covers([tuple(sorted(s)) for s in subsets], pairs)


def pentagon() -> FinitePoset:
    """N5: 0 < a < b < 1 on one side, 0 < c < 1 on the other."""
    return FinitePoset.from_covers(
        ["0", "a", "b", "c", "1"],
        [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
    )


def diamond() -> FinitePoset:
    """M3: three incomparable atoms between bottom and top."""
    return FinitePoset.from_covers(
        ["0", "a", "b", "c", "1"],
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )


def product(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    labels = [(a, b) for a in p.labels for b in q.labels]
    above = []
    for a in p.labels:
        ia = p.index_of(a)
        for b in q.labels:
            ib = q.index_of(b)
            mask = 0
            for k, (c, d) in enumerate(labels):
                if p.leq(ia, p.index_of(c)) and q.leq(ib, q.index_of(d)):
                    mask |= 1 << k
            above.append(mask)
    return FinitePoset(labels, above)


def chain_product(sizes: Sequence[int]) -> FinitePoset:
    """The product of chains [0, s_1 - 1] x ... x [0, s_k - 1]."""
    labels = list(itertools.product(*(range(s) for s in sizes)))
    above = []
    for lab in labels:
        mask = 0
        for k, other in enumerate(labels):
            if all(x <= y for x, y in zip(lab, other)):
                mask |= 1 << k
        above.append(mask)
    return FinitePoset(labels, above)


# ---------------------------------------------------------------------------


def _topological_order(n: int, succ: list[list[int]]) -> list[int]:
    indeg = [0] * n
    for i in range(n):
        for j in succ[i]:
            indeg[j] += 1
    stack = [i for i in range(n) if indeg[i] == 0]
    order = []
    while stack:
        i = stack.pop()
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    if len(order) != n:
        raise PosetError("cover relation contains a cycle")
    return order


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def _walk_back(y: int, parents: dict[int, Optional[int]]) -> list[int]:
    chain_back = [y]
    while parents[chain_back[-1]] is not None:
        chain_back.append(parents[chain_back[-1]])
    return list(reversed(chain_back))
