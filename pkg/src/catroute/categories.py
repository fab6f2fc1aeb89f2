"""Category systems: finite families of distinct vertex subsets.

Each category is stored as a bitmask over the vertex universe, and each vertex
carries a bitmask over category indices, so the routing distance (a set
difference size) is a single popcount either way.

Interchange format, shared by the CLI subcommands:

    {"n": <universe size>, "categories": [[members ascending], ...]}

with the outer list in canonical order (lexicographic by member list).
"""

from __future__ import annotations

import json

from .errors import ParseError, ValidationError


def iter_bits(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class CategorySystem:
    """An immutable set of distinct non-empty vertex subsets over 0..n-1.

    Duplicate input sets collapse silently (the family is a set of sets);
    empty sets are invalid. Categories are kept in canonical order so indices,
    witnesses and serializations are stable.
    """

    __slots__ = ("n", "categories", "category_masks", "vertex_masks", "_memdim")

    def __init__(self, n, sets=()):
        masks = []
        for members in sets:
            mask = 0
            for v in members:
                if not (0 <= v < n):
                    raise ValidationError(f"category member {v} out of range for n={n}")
                mask |= 1 << v
            masks.append(mask)
        self._setup(n, masks)

    @classmethod
    def from_masks(cls, n, masks):
        """Build from vertex bitmasks directly (must fit in n bits, none zero)."""
        self = cls.__new__(cls)
        limit = 1 << n
        for mask in masks:
            if mask >= limit or mask < 0:
                raise ValidationError(f"category mask out of range for n={n}")
        self._setup(n, list(masks))
        return self

    def _setup(self, n, masks):
        if n < 0:
            raise ValidationError("universe size must be non-negative")
        if any(mask == 0 for mask in masks):
            raise ValidationError("empty categories are not allowed")
        unique = sorted({(tuple(iter_bits(m)), m) for m in masks})
        self.n = n
        self.categories = tuple(members for members, _ in unique)
        self.category_masks = tuple(mask for _, mask in unique)
        vertex_masks = [0] * n
        for i, mask in enumerate(self.category_masks):
            bit = 1 << i
            for v in iter_bits(mask):
                vertex_masks[v] |= bit
        self.vertex_masks = tuple(vertex_masks)
        self._memdim = max((vm.bit_count() for vm in vertex_masks), default=0)

    @property
    def num_categories(self):
        return len(self.categories)

    def members(self, i):
        """Ascending member tuple of category ``i``."""
        return self.categories[i]

    def __eq__(self, other):
        if not isinstance(other, CategorySystem):
            return NotImplemented
        return self.n == other.n and self.categories == other.categories

    def __repr__(self):
        return f"CategorySystem(n={self.n}, categories={self.num_categories})"


def cat(system, u):
    """Indices of the categories containing vertex ``u``, ascending."""
    if not (0 <= u < system.n):
        raise ValidationError(f"vertex {u} out of range for n={system.n}")
    return tuple(iter_bits(system.vertex_masks[u]))


def membership_dimension(system):
    """Maximum number of categories any one vertex belongs to (0 if none)."""
    return system._memdim


def category_distance(system, a, b):
    """Number of categories containing ``b`` but not ``a``.

    Not necessarily symmetric; this is the quantity greedy forwarding
    decreases.
    """
    vm = system.vertex_masks
    if not (0 <= a < system.n and 0 <= b < system.n):
        raise ValidationError(f"vertex out of range for n={system.n}")
    return (vm[b] & ~vm[a]).bit_count()


def parse_categories(text, n):
    """Parse the JSON category format for a universe of size ``n``.

    The file's own "n" must match; members must be in range; duplicate sets
    collapse and empty sets are rejected.
    """
    if hasattr(text, "read"):
        text = text.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict) or set(payload) != {"n", "categories"}:
        raise ParseError('expected an object with exactly "n" and "categories"')
    if not isinstance(payload["n"], int) or isinstance(payload["n"], bool):
        raise ParseError('"n" must be an integer')
    if payload["n"] != n:
        raise ValidationError(f'category file declares n={payload["n"]}, expected n={n}')
    sets = payload["categories"]
    if not isinstance(sets, list):
        raise ParseError('"categories" must be a list of member lists')
    for members in sets:
        if not isinstance(members, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in members
        ):
            raise ParseError("each category must be a list of integer vertex ids")
    return CategorySystem(n, sets)


def serialize_categories(system):
    """Canonical JSON form; parse -> serialize -> parse is the identity."""
    payload = {"n": system.n, "categories": [list(c) for c in system.categories]}
    return json.dumps(payload, separators=(",", ":")) + "\n"
