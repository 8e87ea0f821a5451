"""Role assignments ``x1, x2, y1, y2`` (and optional ``z0, z1``) for the main hypothesis."""

from dataclasses import dataclass
from itertools import combinations

from ..graph import iter_bits


@dataclass(frozen=True)
class RoleAssignment:
    x1: int
    x2: int
    y1: int
    y2: int
    z0: int = None
    z1: int = None

    @property
    def quad(self):
        return (self.x1, self.x2, self.y1, self.y2)

    def violations(self, g):
        quad = self.quad
        if len(set(quad)) != 4 or any(v not in g for v in quad):
            return ["x1, x2, y1, y2 must be four distinct vertices"]
        out = []
        for a, b in combinations(quad, 2):
            missing = {a, b} == {self.y1, self.y2}
            if g.has_edge(a, b) == missing:
                out.append(f"pair {a}-{b} should be {'non' if missing else ''}adjacent")
        zs = (self.z0, self.z1)
        if (self.z0 is None) != (self.z1 is None):
            out.append("z0 and z1 must be given together")
        elif self.z0 is not None:
            if self.z0 == self.z1:
                out.append("z0 and z1 must be distinct")
            for z in zs:
                if z not in g or not g.has_edge(self.x1, z) or z in quad:
                    out.append(f"z = {z} is not a neighbour of x1 outside x2, y1, y2")
        return out

    def to_json(self):
        out = {"x1": self.x1, "x2": self.x2, "y1": self.y1, "y2": self.y2}
        if self.z0 is not None:
            out.update(z0=self.z0, z1=self.z1)
        return out

    @classmethod
    def from_json(cls, data):
        return cls(data["x1"], data["x2"], data["y1"], data["y2"], data.get("z0"), data.get("z1"))


def iter_roles(g):
    """All role assignments in ascending ``(x1, x2, y1, y2)`` order, ``y1 < y2``."""
    for x1 in g.vertices:
        for x2 in iter_bits(g.nbrs(x1)):
            common = g.nbrs(x1) & g.nbrs(x2)
            for y1, y2 in combinations(iter_bits(common), 2):
                if not g.has_edge(y1, y2):
                    yield RoleAssignment(x1, x2, y1, y2)


def find_roles(g, limit=64):
    """The first ``limit`` role assignments (all of them when ``limit`` is None)."""
    out = []
    for r in iter_roles(g):
        if limit is not None and len(out) >= limit:
            break
        out.append(r)
    return out
