"""graph6 and sparse6 text encodings.

Both formats pack bits six at a time, most significant bit first, and add 63
to each 6-bit group to land in printable ASCII. Vertices are numbered
``0..n-1``; graphs with other ids are compacted (order-preserving) on output.
"""

from .errors import InvalidArgument
from .graph import Graph

HEADER_G6 = ">>graph6<<"
HEADER_S6 = ">>sparse6<<"


def _encode_n(n):
    if n < 0:
        raise InvalidArgument("negative order")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise InvalidArgument("graph too large for graph6")


def _decode_n(data):
    """Return ``(n, rest)`` from a list of 6-bit values."""
    if not data:
        raise InvalidArgument("missing order")
    if data[0] != 63:
        return data[0], data[1:]
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise InvalidArgument("truncated order")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, data[8:]
    if len(data) < 4:
        raise InvalidArgument("truncated order")
    n = 0
    for x in data[1:4]:
        n = (n << 6) | x
    return n, data[4:]


def _pack(bits):
    bits = list(bits)
    bits.extend([0] * (-len(bits) % 6))
    out = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(x)
    return out


def _chars(values):
    return "".join(chr(v + 63) for v in values)


def _values(text):
    out = []
    for ch in text:
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise InvalidArgument(f"illegal character {ch!r}")
        out.append(x)
    return out


def encode_graph6(g):
    g = g.compact()
    n = g.n
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    return _chars(_encode_n(n) + _pack(bits))


def decode_graph6(text):
    text = text.strip()
    if text.startswith(HEADER_G6):
        text = text[len(HEADER_G6):]
    n, data = _decode_n(_values(text))
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise InvalidArgument(f"graph6 body has {len(data)} groups, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero
    for r in range(k, len(data) * 6):
        if (data[r // 6] >> (5 - r % 6)) & 1:
            raise InvalidArgument("non-zero graph6 padding")
    return Graph(range(n), edges)


def _width(n):
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def encode_sparse6(g):
    g = g.compact()
    n = g.n
    k = _width(n)

    def enc(x):
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    bits = []
    cur = 0
    for v, u in sorted((b, a) for a, b in g.edges()):
        if v == cur:
            bits.append(0)
            bits += enc(u)
        elif v == cur + 1:
            cur = v
            bits.append(1)
            bits += enc(u)
        else:
            cur = v
            bits.append(1)
            bits += enc(v)
            bits.append(0)
            bits += enc(u)
    pad = -len(bits) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        # a run of 1s would otherwise decode as an extra edge at vertex n-1
        bits.append(0)
        pad = -len(bits) % 6
    bits += [1] * pad
    return ":" + _chars(_encode_n(n) + _pack(bits))


def decode_sparse6(text):
    text = text.strip()
    if text.startswith(HEADER_S6):
        text = text[len(HEADER_S6):]
    if not text.startswith(":"):
        raise InvalidArgument("sparse6 string must start with ':'")
    n, data = _decode_n(_values(text[1:]))
    k = _width(n)
    bits = [(x >> (5 - i)) & 1 for x in data for i in range(6)]
    edges = set()
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        x = 0
        for i in range(k):
            x = (x << 1) | bits[pos + 1 + i]
        pos += 1 + k
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        elif x < n:
            if x == v:
                raise InvalidArgument("sparse6 encodes a loop; multigraphs are not supported")
            edges.add((x, v))
    return Graph(range(n), sorted(edges))


def decode(text):
    """Decode a graph6 or sparse6 line (format detected from the prefix)."""
    text = text.strip()
    if text.startswith(HEADER_S6) or text.startswith(":"):
        return decode_sparse6(text)
    return decode_graph6(text)
