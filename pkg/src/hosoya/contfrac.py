"""Finite continued fractions: generalized, negative, branched and radial.

All evaluation is exact and unreduced.  The forward recurrences

    p_k = a_k p_{k-1} + b_k p_{k-2},    q_k = a_k q_{k-1} + b_k q_{k-2}

and the bottom-up fold with :mod:`hosoya.bigrat` produce the very same
``(p, q)`` pair, which is what lets a numerator be read as a matching count.

Branched and multidimensional fractions share one recursive type,
:class:`TreeCFSpec`: a node's value is ``pendants + 1`` plus
``b / value(child)`` for each child.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, Union

from .bigrat import FormalFraction, ff_add, ff_div_int, ff_from_int, ff_sub

__all__ = [
    "CFSpecError",
    "GeneralCF",
    "Convergent",
    "NegativeCF",
    "TreeCFSpec",
    "convergents",
    "eval_bottom_up",
    "eval_negative_ring_cf",
    "negative_to_positive",
    "eval_tree_cf",
    "chain_spec",
    "part_spec",
    "radial_spec",
    "radial_cf",
    "cf_from_json",
    "cf_to_json",
]


class CFSpecError(ValueError):
    """Malformed continued-fraction specification."""


def _check_positive(name: str, value: Any) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise CFSpecError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class GeneralCF:
    """``a0 + b1/(a1 + b2/(a2 + ... + bn/an))`` with ``terms = ((b1, a1), ...)``."""

    a0: int
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(tuple(t) for t in self.terms))
        _check_positive("a0", self.a0)
        for i, (b, a) in enumerate(self.terms, start=1):
            _check_positive(f"b{i}", b)
            _check_positive(f"a{i}", a)

    @property
    def depth(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class NegativeCF:
    """``M - rs/(M - rs/(... - rs/(M - M/2)))`` with ``n`` copies of ``M``.

    The trailing ``M/2`` is kept structural rather than as a rational entry.
    """

    M: int
    rs: int
    n: int

    def __post_init__(self):
        _check_positive("M", self.M)
        _check_positive("rs", self.rs)
        _check_positive("n", self.n)

    def evaluate(self) -> Convergent:
        return eval_negative_ring_cf(self.M, self.rs, self.n)


@dataclass(frozen=True)
class TreeCFSpec:
    """A branched continued fraction that is also a rooted multigraph blueprint.

    ``value = (pendants + 1) + sum(b / value(child) for b, child in children)``.
    """

    pendants: int = 0
    children: tuple[tuple[int, TreeCFSpec], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(tuple(c) for c in self.children))
        if not isinstance(self.pendants, int) or self.pendants < 0:
            raise CFSpecError(f"pendants must be a nonnegative integer, got {self.pendants!r}")
        for b, child in self.children:
            _check_positive("b", b)
            if not isinstance(child, TreeCFSpec):
                raise CFSpecError(f"child must be a TreeCFSpec, got {type(child).__name__}")

    def size(self) -> int:
        """Vertex count of the corresponding multigraph."""
        return 1 + self.pendants + sum(c.size() for _, c in self.children)

    def depth(self) -> int:
        return 1 + max((c.depth() for _, c in self.children), default=0)


def convergents(cf: GeneralCF) -> list[Convergent]:
    """``(p_0, q_0) .. (p_n, q_n)`` from the forward recurrences, unreduced."""
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    out = [Convergent(p, q)]
    for b, a in cf.terms:
        p, p_prev = a * p + b * p_prev, p
        q, q_prev = a * q + b * q_prev, q
        out.append(Convergent(p, q))
    return out


def eval_bottom_up(cf: GeneralCF) -> FormalFraction:
    """Fold from the innermost entry outwards with formal arithmetic."""
    entries = [cf.a0] + [a for _, a in cf.terms]
    x = ff_from_int(entries[-1])
    for i in range(len(cf.terms), 0, -1):
        b = cf.terms[i - 1][0]
        x = ff_add(ff_from_int(entries[i - 1]), ff_div_int(b, x))
    return x


def eval_negative_ring_cf(M: int, rs: int, n: int) -> Convergent:
    """Evaluate ``M - rs/M - ... - rs/M - M/2`` (``n`` copies of ``M``) bottom up.

    The result is the pair ``(u_n, u_{n-1})`` of the ring sequence
    ``u_k = M u_{k-1} - rs u_{k-2}``, ``u_0 = 2``, ``u_1 = M``.
    """
    _check_positive("M", M)
    _check_positive("rs", rs)
    _check_positive("n", n)
    big_m = ff_from_int(M)
    x = ff_sub(big_m, FormalFraction(M, 2))
    for _ in range(n - 1):
        x = ff_sub(big_m, ff_div_int(rs, x))
    return Convergent(x.num, x.den)


def negative_to_positive(M: int, rs: int, n: int) -> GeneralCF:
    """Rewrite the negative ring fraction as a positive one when ``M > 2 rs``.

    Shape: ``M-1 + 1/1 + rs/(M-rs-1) + 1/1 + ... + 1/1 + 2rs/(M-2rs)`` with
    ``2n - 3`` terms between the head and the final ``2rs/(M-2rs)``.
    """
    if n < 2:
        raise ValueError(f"conversion needs n >= 2, got {n}")
    if M <= 2 * rs:
        raise ValueError(f"conversion needs M > 2*rs, got M={M}, rs={rs}")
    middle = [(1, 1) if i % 2 == 0 else (rs, M - rs - 1) for i in range(2 * n - 3)]
    return GeneralCF(M - 1, tuple(middle) + ((2 * rs, M - 2 * rs),))


def eval_tree_cf(spec: TreeCFSpec) -> FormalFraction:
    value = ff_from_int(spec.pendants + 1)
    for b, child in spec.children:
        value = ff_add(value, ff_div_int(b, eval_tree_cf(child)))
    return value


def chain_spec(cf: GeneralCF) -> TreeCFSpec:
    """The caterpillar-shaped spec of a plain generalized fraction."""
    entries = [cf.a0] + [a for _, a in cf.terms]
    node = TreeCFSpec(entries[-1] - 1)
    for i in range(len(cf.terms), 0, -1):
        node = TreeCFSpec(entries[i - 1] - 1, ((cf.terms[i - 1][0], node),))
    return node


Entry = Union[int, TreeCFSpec]


def part_spec(a0: int, tail: Sequence[tuple[int, Entry]]) -> TreeCFSpec:
    """Spec for ``a0 + b1/(A1 + b2/(A2 + ...))`` where each ``A_i`` is an int or a spec.

    A spec entry ``A_i`` is the subgraph hung on spine vertex ``i``; the bond to
    the next spine vertex becomes one more child of that node.
    """
    _check_positive("a0", a0)
    # built from the far end inwards; `link` is the bond from the current node to `node`
    node: TreeCFSpec | None = None
    link = 0
    for b, entry in reversed(tail):
        _check_positive("b", b)
        if isinstance(entry, int):
            _check_positive("A", entry)
            entry = TreeCFSpec(entry - 1)
        if node is not None:
            entry = TreeCFSpec(entry.pendants, entry.children + ((link, node),))
        node, link = entry, b
    if node is None:
        return TreeCFSpec(a0 - 1)
    return TreeCFSpec(a0 - 1, ((link, node),))


def radial_spec(m: int, part: TreeCFSpec) -> TreeCFSpec:
    """Glue ``m`` copies of ``part`` at its root; root pendants add up."""
    _check_positive("m", m)
    return TreeCFSpec(m * part.pendants, part.children * m)


def radial_cf(m: int, a0: int, tail: Sequence[tuple[int, Entry]]) -> FormalFraction:
    """``m(a0 - 1) + 1`` plus ``m`` copies of the tail ``b1/(A1 + b2/(A2 + ...))``."""
    return eval_tree_cf(radial_spec(m, part_spec(a0, tail)))


# -- JSON ----------------------------------------------------------------------


def _tree_from_json(obj: Any, path: str) -> TreeCFSpec:
    if not isinstance(obj, dict) or "pendants" not in obj:
        raise CFSpecError(f"{path}: expected an object with 'pendants'")
    extra = set(obj) - {"pendants", "children"}
    if extra:
        raise CFSpecError(f"{path}: unknown keys {sorted(extra)}")
    kids = obj.get("children", [])
    if not isinstance(kids, list):
        raise CFSpecError(f"{path}.children: expected a list")
    children = []
    for i, item in enumerate(kids):
        if not isinstance(item, list) or len(item) != 2:
            raise CFSpecError(f"{path}.children[{i}]: expected [b, spec]")
        children.append((item[0], _tree_from_json(item[1], f"{path}.children[{i}][1]")))
    try:
        return TreeCFSpec(obj["pendants"], tuple(children))
    except CFSpecError as exc:
        raise CFSpecError(f"{path}: {exc}") from None


def cf_from_json(obj: Any) -> GeneralCF | TreeCFSpec | NegativeCF:
    """Decode one of the three JSON shapes, chosen by its keys."""
    if not isinstance(obj, dict):
        raise CFSpecError("continued fraction spec must be a JSON object")
    keys = set(obj)
    if "a0" in keys:
        if keys - {"a0", "terms"}:
            raise CFSpecError(f"unknown keys {sorted(keys - {'a0', 'terms'})}")
        terms = obj.get("terms", [])
        if not isinstance(terms, list) or any(
            not isinstance(t, list) or len(t) != 2 for t in terms
        ):
            raise CFSpecError("terms must be a list of [b, a] pairs")
        return GeneralCF(obj["a0"], tuple(tuple(t) for t in terms))
    if "M" in keys:
        if keys != {"M", "rs", "n"}:
            raise CFSpecError("negative spec needs exactly the keys M, rs, n")
        return NegativeCF(obj["M"], obj["rs"], obj["n"])
    if "pendants" in keys:
        return _tree_from_json(obj, "$")
    raise CFSpecError("cannot tell spec kind: expected 'a0', 'M' or 'pendants'")


def cf_to_json(spec: GeneralCF | TreeCFSpec | NegativeCF) -> dict[str, Any]:
    if isinstance(spec, GeneralCF):
        return {"a0": spec.a0, "terms": [[b, a] for b, a in spec.terms]}
    if isinstance(spec, NegativeCF):
        return {"M": spec.M, "rs": spec.rs, "n": spec.n}
    return {
        "pendants": spec.pendants,
        "children": [[b, cf_to_json(c)] for b, c in spec.children],
    }
