"""The conjectured triangle minimiser H*(n, e) and its parameters.

For ``k = k(n, e)`` the last part size ``a*_k`` is the least ``a >= 1`` for which a
part of size ``a`` joined to a Turán graph on the remaining vertices reaches
``e`` edges.  The other ``k - 1`` parts split ``n - a*_k`` evenly, and ``m*``
surplus edges are removed as a star between the last two parts.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import comb

from .errors import TriminError
from .graph import Graph, complete_multipartite
from .turan import k_index, multipartite_edges, multipartite_triangles, turan_number, turan_sizes

# Which way a* changes when one edge is added (see h_star_delta).
SAME_VECTOR = "same_vector"
GROW_LAST = "grow_last"
NEW_PART = "new_part"


@dataclass(frozen=True)
class ExtremalProfile:
    n: int
    e: int
    k: int
    a_star: tuple[int, ...]
    m_star: int
    h_star: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["a_star"] = list(self.a_star)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_pair(n: int, e: int) -> None:
    if n < 1:
        raise TriminError(f"order must be positive, got {n}")
    if not 0 <= e <= comb(n, 2):
        raise TriminError(f"edge count {e} outside [0, C({n},2) = {comb(n, 2)}]")


def last_part_size(n: int, e: int, k: int) -> int:
    """Least a >= 1 with a(n-a) + t_{k-1}(n-a) >= e, found by scanning upward from 1."""
    for a in range(1, n + 1):
        rest = n - a
        if a * rest + (turan_number(rest, k - 1) if rest else 0) >= e:
            return a
    raise TriminError(f"no admissible last part for (n={n}, e={e}, k={k})")


def extremal_profile(n: int, e: int) -> ExtremalProfile:
    _check_pair(n, e)
    if e == 0:
        return ExtremalProfile(n, 0, 1, (n,), 0, 0)
    k = k_index(n, e)
    ak = last_part_size(n, e, k)
    sizes = turan_sizes(n - ak, k - 1) + (ak,)
    m = multipartite_edges(sizes) - e
    h = multipartite_triangles(sizes) - m * sum(sizes[:k - 2])
    return ExtremalProfile(n, e, k, sizes, m, h)


def h_star(n: int, e: int) -> int:
    return extremal_profile(n, e).h_star


def build_h_star(n: int, e: int) -> Graph:
    """H*(n, e) on consecutive vertex blocks; the removed star is centred at the first vertex of
    the last part and its leaves are the first m* vertices of the second-to-last part."""
    p = extremal_profile(n, e)
    g, parts = complete_multipartite(p.a_star)
    if p.m_star:
        centre = parts[-1][0]
        for leaf in parts[-2][:p.m_star]:
            g = g.remove_edge(centre, leaf)
    return g


@dataclass(frozen=True)
class HStarStep:
    delta: int
    case: str


def h_star_delta(n: int, e: int) -> HStarStep:
    """h*(n, e+1) - h*(n, e) together with how a* changes across the step."""
    _check_pair(n, e)
    if e >= comb(n, 2):
        raise TriminError(f"no successor of e = {e} for n = {n}")
    p = extremal_profile(n, e)
    q = extremal_profile(n, e + 1)
    a = p.a_star
    if p.m_star > 0:
        case = SAME_VECTOR
    elif p.k >= 2 and a[0] >= a[-1] + 2:
        case = GROW_LAST
    else:
        case = NEW_PART
    return HStarStep(q.h_star - p.h_star, case)


def h_of(n: int, e: int, audit: bool = False) -> int:
    """Minimum triangle count over the structured families; equals h*(n, e).

    With ``audit`` (n <= 7) the minimum is recomputed by enumerating both families
    and compared against h*; a disagreement raises.
    """
    value = h_star(n, e)
    if audit:
        from .families import audit_minimum

        found = audit_minimum(n, e)
        if found != value:
            raise TriminError(f"family minimum {found} differs from h* = {value} at (n={n}, e={e})")
    return value


def blow_up_triangles(k: int, a: int, b: int) -> int:
    """Triangle count of K_{a,...,a,b} with k-1 parts of size a."""
    return comb(k - 1, 3) * a ** 3 + comb(k - 1, 2) * a * a * b
