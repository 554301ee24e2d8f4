"""Invertible maps between tree families and decorated lattice paths.

Three correspondences, each with an explicit inverse so round trips can be
tested mechanically:

* multiedge trees of weight N <-> 3-colored Motzkin paths of length N - 1,
* marked ordered trees on n nodes <-> skew paths of length 2n - 2 ending
  at level 0,
* multiedge trees of weight w <-> unary-binary trees (one flat color) on
  w nodes, by rotation.

Tree encodings follow the generator modules: a multiedge tree is a tuple of
``(multiplicity, child)`` pairs, a marked tree a tuple of ``(mark, child)``
pairs, and a unary-binary tree is ``None`` or ``('2', left, right)`` or
``('u', color, child)``.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

MultiedgeTree = Tuple  # nested tuples of (multiplicity, child)
MarkedTree = Tuple  # nested tuples of (mark, child)

_PAIR_CODE = {("U", "U"): "U", ("d", "d"): "d", ("U", "d"): "H0", ("d", "U"): "H1"}
_CODE_PAIR = {v: k for k, v in _PAIR_CODE.items()}


def _multiedge_walk(tree: MultiedgeTree, word: List[str], mults: List[int]) -> None:
    # Pre-order: each edge contributes a descent now and an ascent after its
    # subtree; multiplicities are recorded in the same pre-order.
    for mult, child in tree:
        mults.append(mult)
        word.append("U")
        _multiedge_walk(child, word, mults)
        word.append("d")


def multiedge_to_3motzkin(tree: MultiedgeTree) -> Tuple[str, ...]:
    """Map a multiedge tree of weight N >= 1 to a 3-colored Motzkin path.

    The edge skeleton gives a Dyck word (one U/d pair per edge, pre-order).
    Dropping the forced first and last steps and reading the remaining word
    two letters at a time gives a 2-colored Motzkin path: UU -> rise,
    dd -> fall, Ud -> H0, dU -> H1.  Each edge then deposits its excess
    multiplicity as H2 steps: edge i (pre-order) contributes mult - 1 copies
    of H2 in gap i, where gap i sits before symbol i and the last gap is at
    the end of the path.  The result has length N - 1.
    """
    word: List[str] = []
    mults: List[int] = []
    _multiedge_walk(tree, word, mults)
    if not mults:
        raise ValueError("the weight-0 tree has no path image")
    inner = word[1:-1]
    symbols = [_PAIR_CODE[(inner[2 * i], inner[2 * i + 1])]
               for i in range(len(inner) // 2)]
    out: List[str] = []
    for i, mult in enumerate(mults):
        out.extend(["H2"] * (mult - 1))
        if i < len(symbols):
            out.append(symbols[i])
    return tuple(out)


def motzkin3_to_multiedge(path: Sequence[str]) -> MultiedgeTree:
    """Inverse of :func:`multiedge_to_3motzkin`.

    Raises ValueError if the input is not a legal 3-colored Motzkin path
    (unknown token, level dipping below 0, or nonzero final level).
    """
    blues: List[int] = [0]
    symbols: List[str] = []
    for tok in path:
        if tok == "H2":
            blues[-1] += 1
        elif tok in _CODE_PAIR:
            symbols.append(tok)
            blues.append(0)
        else:
            raise ValueError(f"unknown token {tok!r}")
    level = 0
    for tok in symbols:
        level += {"U": 1, "d": -1}.get(tok, 0)
        if level < 0:
            raise ValueError("path dips below level 0")
    if level != 0:
        raise ValueError("path does not end at level 0")
    word = ["U"]
    for tok in symbols:
        word.extend(_CODE_PAIR[tok])
    word.append("d")
    mults = [b + 1 for b in blues]
    # Parse the Dyck word back into an edge skeleton, attaching pre-order
    # multiplicities as we open each edge.
    pos = 0
    edge = 0

    def parse_forest() -> MultiedgeTree:
        nonlocal pos, edge
        children = []
        while pos < len(word) and word[pos] == "U":
            mult = mults[edge]
            edge += 1
            pos += 1
            sub = parse_forest()
            if pos >= len(word) or word[pos] != "d":
                raise ValueError("unbalanced skeleton")
            pos += 1
            children.append((mult, sub))
        return tuple(children)

    tree = parse_forest()
    if pos != len(word):
        raise ValueError("unbalanced skeleton")
    return tree


def _marked_walk(tree: MarkedTree, out: List[str]) -> None:
    for mark, child in tree:
        out.append("U")
        _marked_walk(child, out)
        out.append("r" if mark else "d")


def marked_to_skew(tree: MarkedTree) -> Tuple[str, ...]:
    """Map a marked ordered tree on n nodes to a skew path of length 2n - 2.

    Walk around the tree: descending an edge is a rise, ascending it is a
    fall, red if the edge is marked.  A mark sits only on a last edge whose
    child is internal, so the red fall is never adjacent to a rise and the
    image is a legal skew path ending at level 0.
    """
    out: List[str] = []
    _marked_walk(tree, out)
    return tuple(out)


def skew_to_marked(path: Sequence[str]) -> MarkedTree:
    """Inverse of :func:`marked_to_skew`; rejects ill-formed inputs."""
    pos = 0

    def parse_forest() -> MarkedTree:
        nonlocal pos
        children = []
        while pos < len(path) and path[pos] == "U":
            pos += 1
            sub = parse_forest()
            if pos >= len(path) or path[pos] not in ("d", "r"):
                raise ValueError("unbalanced path")
            mark = 1 if path[pos] == "r" else 0
            pos += 1
            children.append((mark, sub))
        return tuple(children)

    tree = parse_forest()
    if pos != len(path):
        raise ValueError("unbalanced path")

    def check(t: MarkedTree) -> None:
        for i, (mark, child) in enumerate(t):
            if mark and (i != len(t) - 1 or child == ()):
                raise ValueError("mark not on a last edge with internal child")
            check(child)

    check(tree)
    return tree


def rotation_multiedge_to_unarybinary(tree: MultiedgeTree):
    """Rotate a multiedge tree of weight w into a unary-binary tree on w nodes.

    First child becomes the left branch, next sibling the right branch; an
    edge of multiplicity m hangs m - 1 unary nodes above the node it leads
    to.  The single color 0 is used for every unary node.
    """
    if not tree:
        raise ValueError("the weight-0 tree has no rotation image")
    return _rotate(tree)


def _rotate(pairs: MultiedgeTree):
    if not pairs:
        return None
    mult, child = pairs[0]
    node = ("2", _rotate(child), _rotate(pairs[1:]))
    for _ in range(mult - 1):
        node = ("u", 0, node)
    return node


def rotation_unarybinary_to_multiedge(tree) -> MultiedgeTree:
    """Inverse rotation; accepts any unary-binary tree with color-0 flats."""
    if tree is None:
        raise ValueError("the empty tree has no rotation preimage")
    return _unrotate(tree)


def _unrotate(node) -> MultiedgeTree:
    if node is None:
        return ()
    mult = 1
    while node[0] == "u":
        if node[1] != 0:
            raise ValueError("rotation images use flat color 0 only")
        mult += 1
        node = node[2]
    _, left, right = node
    return ((mult, _unrotate(left)),) + _unrotate(right)


def tree_to_str(tree, family: str) -> str:
    """Compact one-line rendering used by the pairing tables."""
    if family == "multiedge":
        if not tree:
            return "()"
        return "".join(f"({m}:{tree_to_str(c, family)})" if c else f"({m})"
                       for m, c in tree)
    if family == "marked":
        if not tree:
            return "()"
        return "".join(
            ("*" if mark else "") + (f"({tree_to_str(c, family)})" if c else "()")
            for mark, c in tree)
    if family == "unary_binary":
        if tree is None:
            return "."
        if tree[0] == "u":
            return f"u{tree[1]}[{tree_to_str(tree[2], family)}]"
        return f"({tree_to_str(tree[1], family)},{tree_to_str(tree[2], family)})"
    raise ValueError(f"unknown family {family!r}")


def path_to_str(path: Iterable[str]) -> str:
    toks = list(path)
    return " ".join(toks) if toks else "(empty)"
