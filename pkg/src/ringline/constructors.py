"""Named ring constructions and the ring-spec mini-language.

Grammar::

    expr := term ('*' term)*
    term := 'Z(' int ')' | 'GF(' int ')' | 'T(' int ')' | 'D(' int ')'
          | 'file:' path

``Z(n)`` are the integers mod n, ``GF(q)`` the fields of order
q in {2, 3, 4, 5, 7}, ``T(q)`` the upper-triangular 2x2 matrices over
GF(q), ``D(q)`` the dual numbers GF(q)[x]/(x^2), and products combine
Cayley tables componentwise.  Raw encodings rarely place the
multiplicative identity at index 1, so every constructor finishes with
the single label transposition that moves it there; element 0 stays the
additive identity throughout.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .errors import FileError, ParseError, UnsupportedField
from .rings import FiniteRing, Table, validate_tables

SUPPORTED_FIELD_ORDERS = (2, 3, 4, 5, 7)

# GF(4) as polynomials over GF(2) modulo x^2 + x + 1, elements encoded as
# bit masks 0, 1, x, x+1.
_GF4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def _field_tables(q: int) -> tuple[Table, Table]:
    if q not in SUPPORTED_FIELD_ORDERS:
        raise UnsupportedField(f"GF({q}) is not supported; q must be one of {SUPPORTED_FIELD_ORDERS}")
    if q == 4:
        add = tuple(tuple(i ^ j for j in range(4)) for i in range(4))
        return add, _GF4_MUL
    add = tuple(tuple((i + j) % q for j in range(q)) for i in range(q))
    mul = tuple(tuple((i * j) % q for j in range(q)) for i in range(q))
    return add, mul


def _field_enumeration(q: int, mul: Table) -> list[int]:
    """Field elements as 0, 1, then powers of the least primitive element."""
    if q == 2:
        return [0, 1]
    generator = None
    for g in range(2, q):
        power, order = g, 1
        while power != 1:
            power = mul[power][g]
            order += 1
        if order == q - 1:
            generator = g
            break
    assert generator is not None, f"GF({q}) has a primitive element"
    seq = [0, 1]
    power = generator
    while power != 1:
        seq.append(power)
        power = mul[power][generator]
    return seq


def _relabel_identity_to_one(add: Table, mul: Table) -> tuple[Table, Table]:
    """Swap labels so the two-sided multiplicative identity sits at index 1."""
    n = len(mul)
    identity = next(
        e for e in range(n) if all(mul[e][j] == j and mul[j][e] == j for j in range(n))
    )
    if identity == 1:
        return add, mul

    def swap(x: int) -> int:
        if x == 1:
            return identity
        if x == identity:
            return 1
        return x

    new_add = tuple(tuple(swap(add[swap(i)][swap(j)]) for j in range(n)) for i in range(n))
    new_mul = tuple(tuple(swap(mul[swap(i)][swap(j)]) for j in range(n)) for i in range(n))
    return new_add, new_mul


def integers_mod(n: int) -> FiniteRing:
    if n < 2:
        raise ParseError(f"Z({n}) is not a ring with 1 != 0; n must be at least 2")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return validate_tables(add, mul, label=f"Z({n})")


def galois_field(q: int) -> FiniteRing:
    add, mul = _field_tables(q)
    return validate_tables(add, mul, label=f"GF({q})")


def dual_numbers(q: int) -> FiniteRing:
    """GF(q)[x]/(x^2): pairs a + b*x with (a,b)(c,d) = (ac, ad + bc)."""
    fadd, fmul = _field_tables(q)
    n = q * q

    def decode(i: int) -> tuple[int, int]:
        return divmod(i, q)

    def encode(a: int, b: int) -> int:
        return a * q + b

    add_rows = []
    mul_rows = []
    for i in range(n):
        a, b = decode(i)
        add_rows.append(
            tuple(encode(fadd[a][c], fadd[b][d]) for c, d in map(decode, range(n)))
        )
        mul_rows.append(
            tuple(
                encode(fmul[a][c], fadd[fmul[a][d]][fmul[b][c]])
                for c, d in map(decode, range(n))
            )
        )
    add, mul = _relabel_identity_to_one(tuple(add_rows), tuple(mul_rows))
    return validate_tables(add, mul, label=f"D({q})")


def ternions(q: int) -> FiniteRing:
    """Upper-triangular 2x2 matrices (a b; 0 c) over GF(q).

    The matrix with digits (a, b, c) gets the row-major index
    pos(a)*q^2 + pos(b)*q + pos(c), where pos enumerates the field as
    0, 1, then generator powers; the identity is then relabeled to 1.
    """
    fadd, fmul = _field_tables(q)
    enum = _field_enumeration(q, fmul)
    pos = {element: k for k, element in enumerate(enum)}
    n = q * q * q

    def decode(i: int) -> tuple[int, int, int]:
        d2, rest = divmod(i, q * q)
        d1, d0 = divmod(rest, q)
        return enum[d2], enum[d1], enum[d0]

    def encode(a: int, b: int, c: int) -> int:
        return pos[a] * q * q + pos[b] * q + pos[c]

    triples = [decode(i) for i in range(n)]
    add_rows = []
    mul_rows = []
    for a, b, c in triples:
        add_rows.append(
            tuple(encode(fadd[a][x], fadd[b][y], fadd[c][z]) for x, y, z in triples)
        )
        mul_rows.append(
            tuple(
                encode(fmul[a][x], fadd[fmul[a][y]][fmul[b][z]], fmul[c][z])
                for x, y, z in triples
            )
        )
    add, mul = _relabel_identity_to_one(tuple(add_rows), tuple(mul_rows))
    return validate_tables(add, mul, label=f"T({q})")


def product(left: FiniteRing, right: FiniteRing) -> FiniteRing:
    """Componentwise direct product, element (i, j) -> i*|right| + j."""
    msize = right.order
    n = left.order * msize

    def combine(table_l, table_r):
        rows = []
        for i in range(n):
            a, b = divmod(i, msize)
            rows.append(
                tuple(
                    table_l[a][c] * msize + table_r[b][d]
                    for c, d in (divmod(j, msize) for j in range(n))
                )
            )
        return tuple(rows)

    add, mul = _relabel_identity_to_one(
        combine(left.add_table, right.add_table),
        combine(left.mul_table, right.mul_table),
    )
    return validate_tables(add, mul, label=f"{left.label}*{right.label}")


_TERM_RE = re.compile(r"(Z|GF|T|D)\((\d+)\)\Z")


def _term(text: str) -> FiniteRing:
    if text.startswith("file:"):
        path = text[len("file:"):].strip()
        if not path:
            raise ParseError("file: spec needs a path")
        return load_ring_file(path)
    match = _TERM_RE.fullmatch(text)
    if match is None:
        raise ParseError(f"bad ring spec term {text!r}")
    family, number = match.group(1), int(match.group(2))
    if family == "Z":
        return integers_mod(number)
    if family == "GF":
        return galois_field(number)
    if family == "T":
        return ternions(number)
    return dual_numbers(number)


def construct(spec: str) -> FiniteRing:
    """Build the ring described by a spec string like "GF(2)*T(2)"."""
    terms = [t.strip() for t in spec.split("*")]
    if not terms or any(not t for t in terms):
        raise ParseError(f"bad ring spec {spec!r}")
    ring = _term(terms[0])
    for term in terms[1:]:
        ring = product(ring, _term(term))
    return ring


def load_ring_file(path: str | Path) -> FiniteRing:
    """Parse and validate the text Cayley-table format.

    Layout: a ``ring <n>`` header, an ``add`` line followed by n rows of n
    integers, then ``mul`` and n more rows.  Lines starting with ``#`` are
    comments; blank lines are ignored.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise FileError(f"cannot read ring file {path}: {exc}") from exc
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("ring "):
        raise FileError(f"{path}: expected a 'ring <n>' header line")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise FileError(f"{path}: malformed header {lines[0]!r}") from None
    if len(lines) != 2 * n + 3:
        raise FileError(f"{path}: expected {2 * n + 3} content lines, found {len(lines)}")
    if lines[1] != "add" or lines[n + 2] != "mul":
        raise FileError(f"{path}: expected 'add' and 'mul' section markers")

    def rows(start: int) -> list[list[int]]:
        out = []
        for offset, line in enumerate(lines[start:start + n]):
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError:
                raise FileError(f"{path}: non-integer entry in row {offset}: {line!r}") from None
            if len(row) != n:
                raise FileError(f"{path}: row {offset} has {len(row)} entries, expected {n}")
            out.append(row)
        return out

    return validate_tables(rows(2), rows(n + 3), label=f"file:{path}")


def write_ring_file(path: str | Path, ring: FiniteRing) -> None:
    """Write a ring in the canonical text Cayley-table format."""
    lines = [f"ring {ring.order}", "add"]
    lines += [" ".join(str(x) for x in row) for row in ring.add_table]
    lines.append("mul")
    lines += [" ".join(str(x) for x in row) for row in ring.mul_table]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def bundled_ring_path(name: str = "ternions8") -> Path:
    """Filesystem path of a ring file shipped with the package."""
    resource = resources.files("ringline").joinpath("rings", f"{name}.ring")
    with resources.as_file(resource) as concrete:
        return Path(concrete)
