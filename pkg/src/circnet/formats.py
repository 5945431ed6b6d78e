"""Line-based text formats for networks and matrices.

Network file::

    n 3
    v 1 boundary
    v 4 inner
    e 1 1 4 1/2
    rot 4 1 2 3

Matrix file: a header ``n`` (or ``rows cols``) followed by the rows.  Entries
are integers, ``p/q`` or decimals (converted exactly from their digits).
Blank lines and ``#`` comments are ignored by both parsers; serialisation is
canonical so that ``serialize(parse(text)) == text`` for canonical input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotSymmetric, ParseError, ValidationError
from .network import CircularNetwork, Edge


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(tok: str, line: int | None = None, column: int | None = None) -> Fraction:
    if "e" in tok.lower() or tok.lower() in {"nan", "inf", "-inf", "+inf", "infinity"}:
        raise ParseError(f"not an exact rational: {tok!r}", line, column)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {tok!r}", line, column) from None


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield no, raw, body


def _tokens(raw: str, body: str):
    """Split ``body`` into (token, 1-based column) pairs."""
    out, k = [], 0
    for tok in body.split():
        k = raw.index(tok, k)
        out.append((tok, k + 1))
        k += len(tok)
    return out


def _int(tok, no, col) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no, col) from None


# -- networks -----------------------------------------------------------------


def parse_network(text: str) -> CircularNetwork:
    n = None
    n_line = None
    roles: dict[int, str] = {}
    edges: list[Edge] = []
    edge_line: dict[int, int] = {}
    rotation: dict[int, tuple[int, ...]] = {}
    rot_line: dict[int, int] = {}
    for no, raw, body in _lines(text):
        toks = _tokens(raw, body)
        kind, kcol = toks[0]
        args = toks[1:]
        if kind == "n":
            if n is not None:
                raise ParseError("duplicate header", no, kcol)
            if len(args) != 1:
                raise ParseError("header must be 'n <boundary-count>'", no, kcol)
            n, n_line = _int(args[0][0], no, args[0][1]), no
            if n < 2:
                raise ValidationError(f"need at least 2 boundary vertices, got {n}", no, args[0][1])
        elif n is None:
            raise ParseError("expected header 'n <boundary-count>' first", no, kcol)
        elif kind == "v":
            if len(args) != 2:
                raise ParseError("vertex line must be 'v <id> boundary|inner'", no, kcol)
            vid = _int(args[0][0], no, args[0][1])
            role = args[1][0]
            if role not in ("boundary", "inner"):
                raise ParseError(f"unknown vertex role {role!r}", no, args[1][1])
            if vid in roles:
                raise ValidationError(f"duplicate vertex id {vid}", no, args[0][1])
            if (role == "boundary") != (1 <= vid <= n):
                raise ValidationError(f"vertex {vid}: boundary ids must be exactly 1..{n}", no, args[0][1])
            roles[vid] = role
        elif kind == "e":
            if len(args) != 4:
                raise ParseError("edge line must be 'e <id> <u> <v> <conductance>'", no, kcol)
            eid, u, v = (_int(t, no, c) for t, c in args[:3])
            w = parse_rational(args[3][0], no, args[3][1])
            if eid in edge_line:
                raise ValidationError(f"duplicate edge id {eid}", no, args[0][1])
            if w < 0:
                raise ValidationError(f"edge {eid} has negative conductance", no, args[3][1])
            edges.append(Edge(eid, u, v, w))
            edge_line[eid] = no
        elif kind == "rot":
            if not args:
                raise ParseError("rotation line must be 'rot <v> <edge-id>...'", no, kcol)
            vid = _int(args[0][0], no, args[0][1])
            if vid in rotation:
                raise ValidationError(f"duplicate rotation for vertex {vid}", no, args[0][1])
            rotation[vid] = tuple(_int(t, no, c) for t, c in args[1:])
            rot_line[vid] = no
        else:
            raise ParseError(f"unknown line type {kind!r}", no, kcol)
    if n is None:
        raise ParseError("missing header 'n <boundary-count>'")
    for b in range(1, n + 1):
        if b not in roles:
            raise ValidationError(f"boundary vertex {b} is not declared", n_line)
    for e in edges:
        for x in (e.u, e.v):
            if x not in roles:
                raise ValidationError(f"edge {e.id} references unknown vertex {x}", edge_line[e.id])
    for vid, no in rot_line.items():
        if vid not in roles:
            raise ValidationError(f"rotation for unknown vertex {vid}", no)
    inner = tuple(v for v, r in roles.items() if r == "inner")
    if rotation:
        # unlisted vertices get their order only when it is forced
        for v in roles:
            if v not in rotation:
                ends = [e.id for e in edges for x in (e.u, e.v) if x == v]
                forced = len(ends) <= 1 or (roles[v] == "inner" and len(ends) == 2)
                rotation[v] = tuple(ends) if forced else ()
    try:
        return CircularNetwork(n, inner, tuple(edges), rotation or None)
    except ValidationError as exc:
        bad = next((rot_line[v] for v in rot_line if f"vertex {v} " in str(exc)), None)
        raise ValidationError(str(exc), bad) from None


def serialize_network(net: CircularNetwork) -> str:
    out = [f"n {net.n}"]
    for v in net.vertices:
        out.append(f"v {v} {'boundary' if net.is_boundary(v) else 'inner'}")
    for e in net.edges:
        out.append(f"e {e.id} {e.u} {e.v} {format_rational(e.conductance)}")
    if net.rotation is not None:
        for v in net.vertices:
            out.append(" ".join(["rot", str(v)] + [str(x) for x in net.rotation.get(v, ())]))
    return "\n".join(out) + "\n"


# -- matrices -------------------------------------------------------------------


def parse_matrix(text: str, kind: str | None = None) -> list[list[Fraction]]:
    """Parse a matrix file.  ``kind`` in {"metric", "response"} enforces exact symmetry."""
    rows_n = cols_n = None
    rows: list[list[Fraction]] = []
    for no, raw, body in _lines(text):
        toks = _tokens(raw, body)
        if rows_n is None:
            if len(toks) not in (1, 2):
                raise ParseError("header must be 'n' or 'rows cols'", no, toks[0][1])
            rows_n = _int(toks[0][0], no, toks[0][1])
            cols_n = _int(toks[1][0], no, toks[1][1]) if len(toks) == 2 else rows_n
            if rows_n < 1 or cols_n < 1:
                raise ParseError("matrix dimensions must be positive", no, toks[0][1])
            continue
        if len(rows) == rows_n:
            raise ParseError(f"more than {rows_n} rows", no, toks[0][1])
        if len(toks) != cols_n:
            raise ParseError(f"expected {cols_n} entries, got {len(toks)}", no, toks[0][1])
        rows.append([parse_rational(t, no, c) for t, c in toks])
    if rows_n is None:
        raise ParseError("empty matrix file")
    if len(rows) != rows_n:
        raise ParseError(f"expected {rows_n} rows, got {len(rows)}")
    if kind in ("metric", "response"):
        if rows_n != cols_n:
            raise NotSymmetric("matrix must be square")
        for i in range(rows_n):
            for j in range(i + 1, rows_n):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetric(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
    return rows


def serialize_matrix(M: Sequence[Sequence[Fraction]]) -> str:
    r = len(M)
    c = len(M[0]) if r else 0
    out = [str(r) if r == c else f"{r} {c}"]
    for row in M:
        out.append(" ".join(format_rational(x) for x in row))
    return "\n".join(out) + "\n"
