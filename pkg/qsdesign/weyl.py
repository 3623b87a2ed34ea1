"""
Weyl group data of the untwisted exceptional families.

A maximal parabolic subgroup corresponds to one node of the Dynkin diagram;
deleting that node leaves the diagram of its Levi factor. The index of the
parabolic is

    prod_d (q^d - 1) / ((q - 1) * prod_e (q^e - 1))

with ``d`` running over the degrees of the group and ``e`` over the degrees
of the Levi components. Nodes follow Bourbaki's numbering.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .errors import CatalogError, DomainError
from .exactmath import IntPoly, binomial, poly_product

__all__ = ('WeylData', 'WEYL', 'levi_components', 'levi_degrees',
           'component_degrees', 'untwisted_parabolic_index')


@dataclass(frozen=True)
class WeylData:
    """
    :param tag: Family tag
    :param degrees: Fundamental degrees of the Weyl group
    :param edges: Dynkin diagram edges ``(a, b, bond multiplicity)``
    """
    tag: str
    degrees: Tuple[int, ...]
    edges: Tuple[Tuple[int, int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def nodes(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def weyl_order(self) -> int:
        order = 1
        for d in self.degrees:
            order *= d
        return order

    def neighbours(self, node: int) -> List[int]:
        out = []
        for a, b, _ in self.edges:
            if a == node:
                out.append(b)
            elif b == node:
                out.append(a)
        return out


def _chain(*nodes: int) -> List[Tuple[int, int, int]]:
    return [(a, b, 1) for a, b in zip(nodes, nodes[1:])]


WEYL: Dict[str, WeylData] = {
    'G2': WeylData('G2', (2, 6), ((1, 2, 3),)),
    'F4': WeylData('F4', (2, 6, 8, 12), ((1, 2, 1), (2, 3, 2), (3, 4, 1))),
    'E6': WeylData('E6', (2, 5, 6, 8, 9, 12),
                   tuple(_chain(1, 3, 4, 5, 6) + [(2, 4, 1)])),
    'E7': WeylData('E7', (2, 6, 8, 10, 12, 14, 18),
                   tuple(_chain(1, 3, 4, 5, 6, 7) + [(2, 4, 1)])),
    'E8': WeylData('E8', (2, 8, 12, 14, 18, 20, 24, 30),
                   tuple(_chain(1, 3, 4, 5, 6, 7, 8) + [(2, 4, 1)])),
}


def weyl_data(tag: str) -> WeylData:
    try:
        return WEYL[tag]
    except KeyError:
        raise DomainError('no Weyl data for {!r}'.format(tag))


def _components(data: WeylData, removed: int) -> List[FrozenSet[int]]:
    left = set(data.nodes) - {removed}
    found = []
    while left:
        start = min(left)
        seen = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            for other in data.neighbours(node):
                if other in left and other not in seen:
                    seen.add(other)
                    stack.append(other)
        left -= seen
        found.append(frozenset(seen))
    return found


def _classify(data: WeylData, component: FrozenSet[int]) -> Tuple[str, int]:
    size = len(component)
    inner = [(a, b, m) for a, b, m in data.edges
             if a in component and b in component]
    bonds = {m for _, _, m in inner}

    if 3 in bonds:
        return 'G', 2
    if 2 in bonds:
        # B_n and C_n share their degrees
        return 'B', size

    valency = {n: 0 for n in component}
    for a, b, _ in inner:
        valency[a] += 1
        valency[b] += 1
    branch = [n for n, deg in valency.items() if deg == 3]
    if not branch:
        return 'A', size

    centre = branch[0]
    arms = []
    for start in (n for n in data.neighbours(centre) if n in component):
        length, prev, node = 1, centre, start
        while True:
            nxt = [n for n in data.neighbours(node)
                   if n in component and n != prev]
            if not nxt:
                break
            prev, node = node, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()

    if arms[:2] == [1, 1]:
        return 'D', size
    if arms == [1, 2, 2]:
        return 'E', 6
    if arms == [1, 2, 3]:
        return 'E', 7
    if arms == [1, 2, 4]:
        return 'E', 8
    raise CatalogError('unrecognised Dynkin component with arms {}'
                       .format(arms))


def component_degrees(kind: str, rank: int) -> Tuple[int, ...]:
    """
    Fundamental degrees of an irreducible Weyl group.
    """
    if kind == 'A':
        return tuple(range(2, rank + 2))
    if kind in 'BC':
        return tuple(2 * i for i in range(1, rank + 1))
    if kind == 'D':
        return tuple(2 * i for i in range(1, rank)) + (rank,)
    if kind == 'G':
        return (2, 6)
    if kind == 'E':
        return WEYL['E{}'.format(rank)].degrees
    raise DomainError('unknown component type {}{}'.format(kind, rank))


def levi_components(tag: str, node: int) -> List[Tuple[str, int]]:
    """
    Types of the Levi components left after deleting ``node``, e.g.
    ``[('A', 1), ('A', 4)]`` for node 3 of E6.

    :raises DomainError: for an unknown node
    """
    data = weyl_data(tag)
    if node not in data.nodes:
        raise DomainError('{} has no node {}'.format(tag, node))
    return sorted(_classify(data, comp)
                  for comp in _components(data, node))


def levi_degrees(tag: str, node: int) -> List[int]:
    degrees: List[int] = []
    for kind, rank in levi_components(tag, node):
        degrees.extend(component_degrees(kind, rank))
    return sorted(degrees)


def levi_label(tag: str, node: int) -> str:
    parts = ['{}{}'.format(kind, rank)
             for kind, rank in levi_components(tag, node)]
    return ''.join(parts) or 'T'


def untwisted_parabolic_index(tag: str, node: int) -> IntPoly:
    """
    Index of the maximal parabolic attached to ``node``.

    :raises DomainError: for an unknown family or node
    :raises CatalogError: if the Levi quotient is not exact
    """
    data = weyl_data(tag)
    numerator = poly_product(binomial(d) for d in data.degrees)
    denominator = poly_product(
        [binomial(1)] + [binomial(e) for e in levi_degrees(tag, node)])
    quotient, rem = numerator.divrem(denominator)
    if not rem.is_zero():
        raise CatalogError('inexact Levi quotient for {} node {}'
                           .format(tag, node))
    return quotient.to_int()
