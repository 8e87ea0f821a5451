"""Cycles through three prescribed vertices, or one of the three 2-cut obstructions.

The search builds the cycle as three segments ``y1 -> y2 -> y3 -> y1``. The
first two are enumerated as induced paths (a chord inside one segment can be
short-cut without losing a prescribed vertex) and the closing segment is a
shortest path through the remaining vertices. When the search fails every
2-cut is examined and the obstruction of the lowest applicable kind is
assembled.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import InternalConsistencyError, InvalidArgument
from .graph import induced_paths, is_cycle, iter_bits, mask_of

SHARED = "shared-cut"
STAR = "star-cuts"
PRISM = "prism-cuts"


@dataclass(frozen=True)
class WatkinsObstruction:
    """A certificate that no cycle passes through three given vertices.

    ``cuts`` holds one 2-cut for ``shared-cut`` and three (one per
    prescribed vertex) otherwise. ``components[i]`` is the union of
    components assigned to the i-th prescribed vertex. ``center`` is the
    vertex common to the three cuts of ``star-cuts``; ``extras`` holds the
    two leftover components of ``prism-cuts``.
    """

    kind: str
    cuts: tuple
    components: tuple
    center: int = None
    extras: tuple = ()

    def to_json(self):
        out = {
            "kind": self.kind,
            "cuts": [sorted(s) for s in self.cuts],
            "components": [sorted(d) for d in self.components],
        }
        if self.center is not None:
            out["center"] = self.center
        if self.extras:
            out["extras"] = [sorted(x) for x in self.extras]
        return out

    @classmethod
    def from_json(cls, data):
        return cls(data["kind"], tuple(frozenset(s) for s in data["cuts"]),
                   tuple(frozenset(d) for d in data["components"]), data.get("center"),
                   tuple(frozenset(x) for x in data.get("extras", ())))


def is_two_connected(g):
    if g.n < 3 or not g.is_connected():
        return False
    full = g.vertex_mask
    return all(g.is_connected(full & ~(1 << v)) for v in g.vertices)


def two_cuts(g):
    """All 2-cuts ``(a, b)``, ``a < b``, with the components they leave (bitsets)."""
    full = g.vertex_mask
    out = []
    for a, b in combinations(g.vertices, 2):
        comps = g.components(full & ~((1 << a) | (1 << b)))
        if len(comps) >= 2:
            out.append(((a, b), comps))
    return out


def _find_cycle(g, ys, budget):
    y1, y2, y3 = ys
    full = g.vertex_mask
    b1, b2, b3 = 1 << y1, 1 << y2, 1 << y3
    for a in induced_paths(g, y1, y2, full & ~b3, budget):
        am = mask_of(a)
        within_b = (full & ~am) | b2

        def guard(pm, am=am):
            return g.reach(y3, (full & ~(am | pm)) | b1 | b3) >> y1 & 1

        for b in induced_paths(g, y2, y3, within_b, budget, guard):
            rest = (full & ~(am | mask_of(b))) | b1 | b3
            c = g.shortest_path(y3, y1, rest)
            if c is not None:
                return a + b[1:] + c[1:-1]
    return None


def _is_union_of_components(g, d, s):
    return d and not d & s and g.neighborhood(d) & ~s == 0


def obstruction_violations(g, ys, o):
    out = []
    ys = tuple(ys)
    full = g.vertex_mask
    ds = [mask_of(d) for d in o.components]
    cuts = [mask_of(s) for s in o.cuts]
    if len(ds) != 3:
        return ["three component bundles are required"]
    for i, (y, d) in enumerate(zip(ys, ds)):
        if not (d >> y) & 1:
            out.append(f"bundle {i} misses its vertex")
        if d & ~full:
            out.append(f"bundle {i} contains non-vertices")
    for i, j in combinations(range(3), 2):
        if ds[i] & ds[j]:
            out.append(f"bundles {i} and {j} intersect")
    for i, s in enumerate(cuts):
        if s.bit_count() != 2 or s & ~full or g.is_connected(full & ~s):
            out.append(f"cut {i} is not a 2-cut")
    if out:
        return out
    if o.kind == SHARED:
        if len(cuts) != 1:
            return ["shared-cut needs exactly one cut"]
        for i, d in enumerate(ds):
            if not _is_union_of_components(g, d, cuts[0]):
                out.append(f"bundle {i} is not a union of components of G - S")
        return out
    if len(cuts) != 3:
        return [f"{o.kind} needs three cuts"]
    for i, (d, s) in enumerate(zip(ds, cuts)):
        if not _is_union_of_components(g, d, s):
            out.append(f"bundle {i} is not a union of components of G - S_{i}")
    if o.kind == STAR:
        z = o.center
        if z is None or not all((s >> z) & 1 for s in cuts):
            out.append("center is not common to the three cuts")
        else:
            rest = [s & ~(1 << z) for s in cuts]
            if any(rest[i] & rest[j] for i, j in combinations(range(3), 2)):
                out.append("cuts minus the center are not pairwise disjoint")
    elif o.kind == PRISM:
        if any(cuts[i] & cuts[j] for i, j in combinations(range(3), 2)):
            out.append("cuts are not pairwise disjoint")
        left = full & ~(ds[0] | ds[1] | ds[2])
        comps = g.components(left)
        if len(comps) != 2:
            out.append(f"remainder has {len(comps)} components, not 2")
        elif any((c & s).bit_count() != 1 for c in comps for s in cuts):
            out.append("a remainder component does not hold exactly one vertex of each cut")
        elif o.extras and {mask_of(x) for x in o.extras} != set(comps):
            out.append("extras are not the remainder components")
    else:
        out.append(f"unknown obstruction kind {o.kind!r}")
    return out


def validate_obstruction(g, y1, y2, y3, o):
    return not obstruction_violations(g, (y1, y2, y3), o)


def _fs(mask):
    return frozenset(iter_bits(mask))


def _comp_of(comps, v):
    return next((c for c in comps if (c >> v) & 1), 0)


def find_obstruction(g, y1, y2, y3):
    """The lowest-kind obstruction for ``(y1, y2, y3)``, or None if none exists."""
    ys = (y1, y2, y3)
    ym = mask_of(ys)
    cuts = two_cuts(g)
    # kind (i)
    for (a, b), comps in cuts:
        if ym & ((1 << a) | (1 << b)):
            continue
        ds = [_comp_of(comps, y) for y in ys]
        if len(set(ds)) == 3:
            return WatkinsObstruction(SHARED, (frozenset((a, b)),), tuple(_fs(d) for d in ds))
    # kind (ii): per-vertex candidates with the minimal bundle
    for z in g.vertices:
        cands = []
        for y in ys:
            cands.append([(s, _comp_of(comps, y)) for s, comps in cuts
                          if z in s and y not in s])
        for c1, c2, c3 in product(*cands):
            others = [next(v for v in s if v != z) for s, _ in (c1, c2, c3)]
            if len(set(others)) != 3:
                continue
            d = [c1[1], c2[1], c3[1]]
            if d[0] & d[1] or d[0] & d[2] or d[1] & d[2]:
                continue
            return WatkinsObstruction(STAR, tuple(frozenset(s) for s, _ in (c1, c2, c3)),
                                      tuple(_fs(x) for x in d), center=z)
    # kind (iii): bundles may absorb further components free of the other vertices
    full = g.vertex_mask
    cands = []
    for i, y in enumerate(ys):
        other = ym & ~(1 << y)
        lst = []
        for s, comps in cuts:
            if y in s:
                continue
            base = _comp_of(comps, y)
            if base & other:
                continue
            spare = [c for c in comps if c != base and not c & other]
            for r in range(len(spare) + 1):
                for extra in combinations(spare, r):
                    d = base
                    for c in extra:
                        d |= c
                    lst.append((mask_of(s), d, s))
        cands.append(lst)
    for s1, d1, t1 in cands[0]:
        for s2, d2, t2 in cands[1]:
            if s1 & s2 or d1 & d2:
                continue
            for s3, d3, t3 in cands[2]:
                if s3 & (s1 | s2) or d3 & (d1 | d2):
                    continue
                comps = g.components(full & ~(d1 | d2 | d3))
                if len(comps) != 2:
                    continue
                if all((c & s).bit_count() == 1 for c in comps for s in (s1, s2, s3)):
                    return WatkinsObstruction(
                        PRISM, tuple(frozenset(t) for t in (t1, t2, t3)),
                        tuple(_fs(d) for d in (d1, d2, d3)), extras=tuple(_fs(c) for c in comps))
    return None


def cycle_through_three(g, y1, y2, y3, budget=None):
    """A cycle (vertex tuple) through ``y1, y2, y3`` or a :class:`WatkinsObstruction`."""
    ys = (y1, y2, y3)
    if len(set(ys)) != 3 or any(y not in g for y in ys):
        raise InvalidArgument("the prescribed vertices must be three distinct vertices")
    if not is_two_connected(g):
        raise InvalidArgument("the graph must be 2-connected")
    cyc = _find_cycle(g, ys, budget)
    if cyc is not None:
        if not is_cycle(g, cyc) or not set(ys) <= set(cyc):
            raise InternalConsistencyError(f"search returned an invalid cycle {cyc}")
        return cyc
    o = find_obstruction(g, y1, y2, y3)
    if o is None:
        raise InternalConsistencyError(f"no cycle through {ys} and no obstruction either")
    bad = obstruction_violations(g, ys, o)
    if bad:
        raise InternalConsistencyError("constructed obstruction is invalid: " + "; ".join(bad))
    return o
