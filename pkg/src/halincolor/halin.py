"""Plane trees, oriented Halin graphs and fans.

A Halin graph is stored as a plane tree (the planar embedding is the child
order) plus one orientation per tree edge and per exterior-cycle edge. The
exterior cycle always runs through the tree's leaves in depth-first order,
so it is never stored separately from the tree.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .graph import Arc, Coloring, OrientedGraph

__all__ = [
    "BranchProfile",
    "Fan",
    "FanError",
    "FanSplit",
    "HalinError",
    "OrientedHalin",
    "PlaneTree",
    "compose_fan_structure",
    "enumerate_halin",
    "enumerate_plane_trees",
    "fan_from_cycle_arc_removal",
    "fan_from_cycle_vertex_removal",
    "fan_split",
    "from_dict",
    "from_json",
    "generate_random_halin",
    "to_dict",
    "to_dot",
    "to_json",
    "validate_halin",
]


class HalinError(ValueError):
    """Invalid oriented Halin instance or malformed instance document."""


class FanError(ValueError):
    """A vertex set, root and leaf path that do not form a fan."""


# --------------------------------------------------------------------------
# plane trees


@dataclass(frozen=True)
class PlaneTree:
    """Rooted tree on ``0..n-1`` with an ordered child list per node."""

    children: tuple[tuple[int, ...], ...]
    root: int = 0

    def __post_init__(self):
        children = tuple(tuple(int(c) for c in kids) for kids in self.children)
        object.__setattr__(self, "children", children)
        n = len(children)
        if not 0 <= self.root < n:
            raise HalinError(f"root {self.root} is not a node of a tree with {n} nodes")
        seen_as_child = [False] * n
        for v, kids in enumerate(children):
            for c in kids:
                if not 0 <= c < n:
                    raise HalinError(f"node {v} has child {c} outside 0..{n - 1}")
                if c == self.root:
                    raise HalinError(f"root {c} appears as a child of {v}")
                if seen_as_child[c]:
                    raise HalinError(f"node {c} has more than one parent")
                seen_as_child[c] = True
        if len(self.preorder) != n:
            raise HalinError("tree is not connected")

    @property
    def n(self) -> int:
        return len(self.children)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        out = []
        stack = [self.root]
        seen = set()
        while stack:
            v = stack.pop()
            if v in seen:
                break
            seen.add(v)
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return tuple(out)

    @cached_property
    def parent(self) -> tuple[int, ...]:
        par = [-1] * self.n
        for v, kids in enumerate(self.children):
            for c in kids:
                par[c] = v
        return tuple(par)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * self.n
        for v in self.preorder:
            for c in self.children[v]:
                d[c] = d[v] + 1
        return tuple(d)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        """Childless non-root nodes in depth-first (planar) order."""
        return tuple(v for v in self.preorder if not self.children[v] and v != self.root)

    @cached_property
    def leaf_index(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.leaves)}

    @cached_property
    def interior(self) -> tuple[int, ...]:
        """Non-leaf nodes in preorder."""
        leafset = set(self.leaves)
        return tuple(v for v in self.preorder if v not in leafset)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v, kids in enumerate(self.children):
            for c in kids:
                adj[v].append(c)
                adj[c].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edges(self) -> tuple[Arc, ...]:
        """Tree edges as ``(parent, child)``, ordered by child id."""
        par = self.parent
        return tuple((par[v], v) for v in range(self.n) if v != self.root)

    def parens(self) -> str:
        """Balanced-parenthesis code: one ``(...)`` per child, in order."""
        out = []

        def walk(v):
            for c in self.children[v]:
                out.append("(")
                walk(c)
                out.append(")")

        walk(self.root)
        return "".join(out)

    @classmethod
    def from_parens(cls, code: str) -> "PlaneTree":
        children: list[list[int]] = [[]]
        stack = [0]
        for ch in code:
            if ch == "(":
                children.append([])
                new = len(children) - 1
                children[stack[-1]].append(new)
                stack.append(new)
            elif ch == ")":
                if len(stack) == 1:
                    raise HalinError(f"unbalanced parenthesis code {code!r}")
                stack.pop()
            else:
                raise HalinError(f"unexpected character {ch!r} in parenthesis code")
        if len(stack) != 1:
            raise HalinError(f"unbalanced parenthesis code {code!r}")
        return cls(tuple(tuple(k) for k in children), 0)

    @classmethod
    def from_nested(cls, shape) -> "PlaneTree":
        """Build from nested tuples (a node is the tuple of its children), preorder ids."""
        children: list[list[int]] = []

        def walk(node) -> int:
            me = len(children)
            children.append([])
            for sub in node:
                children[me].append(walk(sub))
            return me

        walk(shape)
        return cls(tuple(tuple(k) for k in children), 0)


# --------------------------------------------------------------------------
# oriented Halin graphs


@dataclass(frozen=True)
class OrientedHalin:
    """Plane tree with oriented tree edges plus the oriented exterior cycle.

    ``tree_arcs`` lists each tree edge once, in its arc direction.
    ``cycle_arcs[i]`` is the arc between ``leaves[i]`` and ``leaves[i+1]``
    (indices mod the number of leaves), in its arc direction.
    """

    tree: PlaneTree
    tree_arcs: tuple[Arc, ...]
    cycle_arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "tree_arcs", tuple(tuple(map(int, a)) for a in self.tree_arcs))
        object.__setattr__(self, "cycle_arcs", tuple(tuple(map(int, a)) for a in self.cycle_arcs))
        validate_halin(self)
        par = self.tree.parent
        # canonical order: by the child endpoint
        ordered = sorted(self.tree_arcs, key=lambda a: a[1] if par[a[1]] == a[0] else a[0])
        object.__setattr__(self, "tree_arcs", tuple(ordered))

    @classmethod
    def from_bits(cls, tree: PlaneTree, bits: int) -> "OrientedHalin":
        """Orientation from an integer: bit ``i`` flips tree edge ``i`` (child-id
        order) to point at the parent; the following bits flip cycle arcs to run
        against the leaf order."""
        tarcs = []
        for i, (p, c) in enumerate(tree.edges):
            tarcs.append((c, p) if bits >> i & 1 else (p, c))
        base = len(tree.edges)
        leaves = tree.leaves
        nl = len(leaves)
        carcs = []
        for i in range(nl):
            u, v = leaves[i], leaves[(i + 1) % nl]
            carcs.append((v, u) if bits >> (base + i) & 1 else (u, v))
        # already canonical: skip the normalisation in __post_init__, keep validation
        h = object.__new__(cls)
        object.__setattr__(h, "tree", tree)
        object.__setattr__(h, "tree_arcs", tuple(tarcs))
        object.__setattr__(h, "cycle_arcs", tuple(carcs))
        validate_halin(h)
        return h

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def leaves(self) -> tuple[int, ...]:
        return self.tree.leaves

    @cached_property
    def arcs(self) -> frozenset[Arc]:
        return frozenset(self.tree_arcs) | frozenset(self.cycle_arcs)

    @cached_property
    def graph(self) -> OrientedGraph:
        return OrientedGraph(self.n, self.arcs)

    @cached_property
    def cycle_forward(self) -> tuple[bool, ...]:
        """Per cycle position, whether the arc follows the leaf order."""
        leaves = self.leaves
        return tuple(a[0] == leaves[i] for i, a in enumerate(self.cycle_arcs))

    def arc_between(self, u: int, v: int) -> Arc:
        if (u, v) in self.arcs:
            return (u, v)
        if (v, u) in self.arcs:
            return (v, u)
        raise HalinError(f"vertices {u} and {v} are not adjacent")


def validate_halin(h: OrientedHalin) -> None:
    """Raise HalinError describing the first broken Halin invariant."""
    tree = h.tree
    if len(tree.children[tree.root]) < 2:
        raise HalinError("the root must be interior (at least two children)")
    leaves = tree.leaves
    nl = len(leaves)
    if nl < 3:
        raise HalinError(f"too few leaves: {nl} < 3")
    par = tree.parent
    n = tree.n
    seen: set[Arc] = set()
    for a in h.tree_arcs:
        if len(a) != 2:
            raise HalinError(f"malformed arc {a}")
        u, v = a
        if a in seen:
            raise HalinError(f"duplicate arc {a}")
        if (v, u) in seen:
            raise HalinError(f"opposite arcs {(v, u)} and {a}")
        if not ((0 <= v < n and par[v] == u) or (0 <= u < n and par[u] == v)):
            raise HalinError(f"arc {a} is not a tree edge")
        seen.add(a)
    if len(seen) != n - 1:
        raise HalinError(f"{len(seen)} tree arcs for {n - 1} tree edges")
    if len(h.cycle_arcs) != nl:
        raise HalinError(f"{len(h.cycle_arcs)} cycle arcs for {nl} exterior vertices")
    for i, a in enumerate(h.cycle_arcs):
        if len(a) != 2:
            raise HalinError(f"malformed arc {a}")
        u, v = leaves[i], leaves[(i + 1) % nl]
        if a != (u, v) and a != (v, u):
            raise HalinError(f"cycle arc {i} is {a}, expected an arc between {u} and {v}")
        if a in seen:
            raise HalinError(f"duplicate arc {a}")
        if (a[1], a[0]) in seen:
            raise HalinError(f"opposite arcs {(a[1], a[0])} and {a}")
        seen.add(a)


# --------------------------------------------------------------------------
# enumeration and random generation


def _hanging(leaves: int, d2: int) -> Iterator[tuple]:
    # subtree below an edge; yields (shape, degree-two nodes used)
    if leaves == 1:
        yield (), 0
    yield from _forest(leaves, 2, d2)
    if d2 > 0:
        for shape, used in _hanging(leaves, d2 - 1):
            yield (shape,), used + 1


def _forest(leaves: int, minlen: int, d2: int) -> Iterator[tuple]:
    if leaves == 0:
        if minlen <= 0:
            yield (), 0
        return
    for first in range(1, leaves - max(minlen - 1, 0) + 1):
        for shape, used in _hanging(first, d2):
            for rest, used2 in _forest(leaves - first, minlen - 1, d2 - used):
                yield (shape,) + rest, used + used2


def enumerate_plane_trees(max_leaves: int, min_leaves: int = 3,
                          max_degree_two: int = 0) -> Iterator[PlaneTree]:
    """All plane trees usable as Halin interiors, by increasing leaf count.

    Internal nodes have at least two children and the root at least three,
    except that up to ``max_degree_two`` nodes of degree two (a one-child
    internal node, or a two-child root) are allowed. Trees that differ only by
    rotating the root's children are all emitted.
    """
    for nl in range(max(min_leaves, 3), max_leaves + 1):
        for shape, _ in _forest(nl, 3, max_degree_two):
            yield PlaneTree.from_nested(shape)
        if max_degree_two > 0:
            for shape, used in _forest(nl, 2, max_degree_two - 1):
                if len(shape) == 2:
                    yield PlaneTree.from_nested(shape)


def enumerate_halin(max_leaves: int, min_leaves: int = 3,
                    max_degree_two: int = 0) -> Iterator[OrientedHalin]:
    """Every orientation of every tree from :func:`enumerate_plane_trees`."""
    for tree in enumerate_plane_trees(max_leaves, min_leaves, max_degree_two):
        total = len(tree.edges) + len(tree.leaves)
        for bits in range(1 << total):
            yield OrientedHalin.from_bits(tree, bits)


def count_halin(max_leaves: int, min_leaves: int = 3, max_degree_two: int = 0) -> int:
    return sum(1 << (len(t.edges) + len(t.leaves))
               for t in enumerate_plane_trees(max_leaves, min_leaves, max_degree_two))


@dataclass(frozen=True)
class BranchProfile:
    """Shape knobs for :func:`generate_random_halin`.

    Each growth step adds one leaf: with probability ``split`` a random leaf
    becomes a cherry, otherwise a leaf is attached to a random interior node
    at a random position. Afterwards every edge is subdivided with probability
    ``subdivide`` (creating degree-two interior nodes). ``uniform_cycle``
    orients the whole exterior cycle along the leaf order.
    """

    split: float = 0.5
    subdivide: float = 0.0
    uniform_cycle: bool = False


def generate_random_halin(leaf_count: int, profile: BranchProfile | None = None,
                          seed: int = 0) -> OrientedHalin:
    if leaf_count < 3:
        raise HalinError(f"a Halin graph needs at least 3 leaves, got {leaf_count}")
    profile = profile or BranchProfile()
    rng = random.Random(seed)
    kids: list[list[int]] = [[1, 2, 3], [], [], []]
    leaves = [1, 2, 3]
    while len(leaves) < leaf_count:
        if rng.random() < profile.split:
            i = rng.randrange(len(leaves))
            x = leaves[i]
            a, b = len(kids), len(kids) + 1
            kids.extend([[], []])
            kids[x] = [a, b]
            leaves[i:i + 1] = [a, b]
        else:
            inner = [v for v in range(len(kids)) if kids[v]]
            v = inner[rng.randrange(len(inner))]
            new = len(kids)
            kids.append([])
            kids[v].insert(rng.randrange(len(kids[v]) + 1), new)
            leaves.append(new)
    if profile.subdivide > 0:
        for v in range(len(kids)):
            for j, c in enumerate(kids[v]):
                if rng.random() < profile.subdivide:
                    mid = len(kids)
                    kids.append([c])
                    kids[v][j] = mid

    def nest(v):
        return tuple(nest(c) for c in kids[v])

    tree = PlaneTree.from_nested(nest(0))
    total = len(tree.edges) + len(tree.leaves)
    bits = rng.getrandbits(total)
    if profile.uniform_cycle:
        bits &= (1 << len(tree.edges)) - 1
    return OrientedHalin.from_bits(tree, bits)


# --------------------------------------------------------------------------
# fans


@dataclass(frozen=True, eq=False)
class Fan:
    """Rooted oriented tree whose leaves, in order, form an oriented path.

    ``leaves`` is the path ``x_1..x_m``; ``fl`` and ``ll`` are its ends. The
    leaves must be exactly the childless non-root vertices in depth-first
    order of ``children``.
    """

    root: int
    children: Mapping[int, tuple[int, ...]]
    leaves: tuple[int, ...]
    arcs: frozenset[Arc]

    @property
    def fl(self) -> int:
        return self.leaves[0]

    @property
    def ll(self) -> int:
        return self.leaves[-1]

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children.get(v, ())))
        return tuple(out)

    @cached_property
    def tree_edges(self) -> tuple[Arc, ...]:
        return tuple((v, c) for v in self.vertices for c in self.children.get(v, ()))

    def check(self) -> None:
        """Raise FanError unless all fan invariants hold."""
        if not self.leaves:
            raise FanError("a fan needs at least one leaf")
        verts = self.vertices
        if len(set(verts)) != len(verts):
            raise FanError("children do not form a tree")
        if not self.children.get(self.root):
            raise FanError("the root has no sons")
        dfs_leaves = tuple(v for v in verts if v != self.root and not self.children.get(v))
        if dfs_leaves != self.leaves:
            raise FanError(f"leaf path {self.leaves} is not the planar leaf order {dfs_leaves}")
        expected = set()
        for u, v in self.tree_edges:
            expected.add(frozenset((u, v)))
        for u, v in zip(self.leaves, self.leaves[1:]):
            expected.add(frozenset((u, v)))
        got = set()
        for u, v in self.arcs:
            if (v, u) in self.arcs:
                raise FanError(f"opposite arcs at {u}, {v}")
            got.add(frozenset((u, v)))
        if got != expected or len(self.arcs) != len(expected):
            raise FanError("arc set does not match tree edges plus the leaf path")


class FanSplit(NamedTuple):
    f1: Fan
    f2: Fan
    s1: Arc
    s2: Arc


def _build_fan(h: OrientedHalin, root: int, path: Sequence[int], cut: Iterable[int] = ()) -> Fan:
    """Fan of ``h`` rooted at ``root`` over the tree component avoiding ``cut``.

    Children are ordered so the planar leaf order equals ``path``.
    """
    cut = set(cut)
    adj = h.tree.adjacency
    pos = {x: i for i, x in enumerate(path)}
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent and w not in cut:
                parent[w] = v
                order.append(w)
    kids: dict[int, list[int]] = {v: [] for v in order}
    for v in order[1:]:
        kids[parent[v]].append(v)
    key: dict[int, int] = {}
    for v in reversed(order):
        if kids[v]:
            key[v] = min(key[c] for c in kids[v])
        elif v in pos:
            key[v] = pos[v]
        else:
            raise FanError(f"vertex {v} would be a leaf outside the leaf path")
    arcs = h.arcs
    fan_arcs = set()
    children = {}
    for v in order:
        kv = sorted(kids[v], key=key.__getitem__)
        children[v] = tuple(kv)
        for c in kv:
            fan_arcs.add((v, c) if (v, c) in arcs else (c, v))
    preorder = []
    stack = [root]
    while stack:
        v = stack.pop()
        preorder.append(v)
        stack.extend(reversed(children[v]))
    dfs_leaves = tuple(v for v in preorder if not children[v] and v != root)
    path = tuple(path)
    if dfs_leaves != path:
        raise FanError(f"leaf path {path} is not the planar leaf order {dfs_leaves}")
    for u, v in zip(path, path[1:]):
        if (u, v) in arcs:
            fan_arcs.add((u, v))
        elif (v, u) in arcs:
            fan_arcs.add((v, u))
        else:
            raise FanError(f"path vertices {u} and {v} are not joined by a cycle arc")
    fan = Fan(root, children, path, frozenset(fan_arcs))
    # arcs match tree edges plus the path by construction; only the planar
    # leaf order (checked above) can fail
    fan.__dict__["vertices"] = tuple(preorder)
    return fan


def _require_interior(h: OrientedHalin, v: int) -> None:
    if not 0 <= v < h.n or v in h.tree.leaf_index:
        raise HalinError(f"vertex {v} is not an interior vertex")


def fan_from_cycle_arc_removal(h: OrientedHalin, new_root: int, removed: Arc) -> Fan:
    """Delete one exterior arc and re-root the tree at ``new_root``.

    The leaf path starts at the head of ``removed`` and walks around the cycle
    to its tail. ``new_root`` must lie on the face that contained the arc.
    """
    _require_interior(h, new_root)
    removed = tuple(removed)
    if removed not in set(h.cycle_arcs):
        raise HalinError(f"{removed} is not an exterior cycle arc")
    leaves = h.leaves
    idx = h.tree.leaf_index
    nl = len(leaves)
    tail, head = removed
    step = 1 if leaves[(idx[tail] + 1) % nl] == head else -1
    start = idx[head]
    path = [leaves[(start + step * t) % nl] for t in range(nl)]
    try:
        return _build_fan(h, new_root, path)
    except FanError as e:
        raise HalinError(f"cannot root the fan at {new_root}: {e}") from None


def fan_from_cycle_vertex_removal(h: OrientedHalin, new_root: int, removed: int) -> Fan:
    """Delete one exterior vertex; the leaf path runs from its successor to its
    predecessor in leaf order."""
    _require_interior(h, new_root)
    idx = h.tree.leaf_index
    if removed not in idx:
        raise HalinError(f"{removed} is not an exterior vertex")
    leaves = h.leaves
    nl = len(leaves)
    start = idx[removed]
    path = [leaves[(start + t) % nl] for t in range(1, nl)]
    try:
        return _build_fan(h, new_root, path, cut=(removed,))
    except FanError as e:
        raise HalinError(f"cannot root the fan at {new_root}: {e}") from None


def fan_split(h: OrientedHalin, r: int, removed: Arc) -> FanSplit:
    """Split ``h`` into the fan of ``r`` with its exterior sons and the rest.

    ``r`` must be an interior non-root vertex whose sons are all exterior, and
    ``removed`` one of the two cycle arcs leaving the interval of its sons.
    ``f1`` is rooted at ``r``, ``f2`` at its father; its leaf path starts next
    to the arc ``s2`` that joins ``ll(f1)`` to ``fl(f2)``, so that
    ``f1 + f2`` (with ``s1`` the father arc) is ``h`` minus ``removed``.
    """
    _require_interior(h, r)
    tree = h.tree
    p = tree.parent[r]
    if p < 0:
        raise HalinError(f"vertex {r} is the tree root and has no father")
    sons = tree.children[r]
    idx = tree.leaf_index
    if any(s not in idx for s in sons):
        raise HalinError(f"vertex {r} has interior sons, so it is not on the lowest level")
    leaves = tree.leaves
    nl = len(leaves)
    removed = tuple(removed)
    if removed not in h.arcs:
        raise HalinError(f"{removed} is not an arc")
    before = leaves[(idx[sons[0]] - 1) % nl]
    after = leaves[(idx[sons[-1]] + 1) % nl]
    pair = set(removed)
    lo, hi = idx[sons[0]], idx[sons[-1]]
    if pair == {before, sons[0]}:
        path1 = list(sons)
        path2 = [leaves[(hi + t) % nl] for t in range(1, nl - len(sons) + 1)]
    elif pair == {sons[-1], after}:
        path1 = list(reversed(sons))
        path2 = [leaves[(lo - t) % nl] for t in range(1, nl - len(sons) + 1)]
    else:
        raise HalinError(f"{removed} does not separate the sons of {r} from the other leaves")
    try:
        f1 = _build_fan(h, r, path1, cut=(p,))
        f2 = _build_fan(h, p, path2, cut=(r,))
    except FanError as e:
        raise HalinError(str(e)) from None
    return FanSplit(f1, f2, h.arc_between(p, r), h.arc_between(f1.ll, f2.fl))


def compose_fan_structure(f1: Fan, f2: Fan, s1_forward: bool, s2_forward: bool) -> Fan:
    """The fan ``f1 + f2``: ``r(f2)`` becomes the last son of ``r(f1)``."""
    if set(f1.vertices) & set(f2.vertices):
        raise FanError("fans to compose share vertices")
    children = dict(f1.children)
    children.update(f2.children)
    children[f1.root] = tuple(f1.children[f1.root]) + (f2.root,)
    s1 = (f1.root, f2.root) if s1_forward else (f2.root, f1.root)
    s2 = (f1.ll, f2.fl) if s2_forward else (f2.fl, f1.ll)
    return Fan(f1.root, children, f1.leaves + f2.leaves, f1.arcs | f2.arcs | {s1, s2})


# --------------------------------------------------------------------------
# serialization

_DOC_KEYS = {"tree", "root", "tree_arcs", "cycle_arcs"}
_NODE_KEYS = {"id", "children"}


def to_dict(h: OrientedHalin) -> dict:
    tree = h.tree

    def node(v):
        return {"id": v, "children": [node(c) for c in tree.children[v]]}

    return {
        "tree": node(tree.root),
        "root": tree.root,
        "tree_arcs": [list(a) for a in h.tree_arcs],
        "cycle_arcs": [list(a) for a in h.cycle_arcs],
    }


def to_json(h: OrientedHalin) -> str:
    return json.dumps(to_dict(h), separators=(",", ":"))


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise HalinError(f"{what} must be an integer, got {x!r}")
    return x


def _arc_list(doc, key: str) -> tuple[Arc, ...]:
    raw = doc[key]
    if not isinstance(raw, list):
        raise HalinError(f"{key!r} must be a list")
    out = []
    for a in raw:
        if not isinstance(a, list) or len(a) != 2:
            raise HalinError(f"{key!r} entries must be [u, v] pairs, got {a!r}")
        out.append((_int(a[0], "arc endpoint"), _int(a[1], "arc endpoint")))
    return tuple(out)


def from_dict(doc) -> OrientedHalin:
    if not isinstance(doc, dict):
        raise HalinError("instance document must be a JSON object")
    keys = set(doc)
    if keys != _DOC_KEYS:
        extra, missing = sorted(keys - _DOC_KEYS), sorted(_DOC_KEYS - keys)
        raise HalinError(f"bad instance fields (unknown {extra}, missing {missing})")
    links: dict[int, list[int]] = {}

    def walk(node):
        if not isinstance(node, dict) or set(node) != _NODE_KEYS:
            raise HalinError(f"tree nodes must be objects with fields 'id' and 'children', got {node!r}")
        v = _int(node["id"], "node id")
        if v in links:
            raise HalinError(f"node id {v} appears twice")
        if not isinstance(node["children"], list):
            raise HalinError(f"children of node {v} must be a list")
        links[v] = []
        for sub in node["children"]:
            links[v].append(walk(sub))
        return v

    top = walk(doc["tree"])
    root = _int(doc["root"], "root")
    if root != top:
        raise HalinError(f"root {root} is not the top node {top} of the tree")
    n = len(links)
    if set(links) != set(range(n)):
        raise HalinError(f"node ids must be exactly 0..{n - 1}")
    tree = PlaneTree(tuple(tuple(links[v]) for v in range(n)), root)
    return OrientedHalin(tree, _arc_list(doc, "tree_arcs"), _arc_list(doc, "cycle_arcs"))


def from_json(text: str) -> OrientedHalin:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise HalinError(f"malformed JSON: {e}") from None
    return from_dict(doc)


def to_dot(h: OrientedHalin, coloring: Coloring | None = None) -> str:
    lines = ["digraph halin {", "  node [shape=circle];"]
    leafset = h.tree.leaf_index
    for v in range(h.n):
        label = str(v) if coloring is None else f"{v}\\nc={coloring[v]}"
        shape = "doublecircle" if v not in leafset else "circle"
        lines.append(f'  {v} [label="{label}", shape={shape}];')
    for u, v in sorted(h.tree_arcs):
        lines.append(f"  {u} -> {v};")
    for u, v in sorted(h.cycle_arcs):
        lines.append(f'  {u} -> {v} [style=bold, color="blue"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
