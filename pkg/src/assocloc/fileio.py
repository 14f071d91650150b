"""
Plain-text algebra and module files.

Algebra file::

    algebra <name> p=<prime> dim=<n>
    basis <label> ... <label>          (optional)
    unit <n coords>
    mul i j : <n coords>               (n^2 lines, 0-based indices)

Module file::

    module <name> over <algebra-name> dim=<m>
    act i                              (one block per algebra basis element)
    <m rows of m coords>

Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .algebra import AlgebraPresentation, validate_algebra
from .errors import InvalidAlgebra, InvalidModule, ParseError
from .linalg import PrimeField
from .modules import ModuleRep, validate_module

_ALG_HEADER = re.compile(r"^algebra\s+(\S+)\s+p=(\d+)\s+dim=(\d+)$")
_MOD_HEADER = re.compile(r"^module\s+(\S+)\s+over\s+(\S+)\s+dim=(\d+)$")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _coords(tokens, n: int, p: int, no: int) -> list[int]:
    if len(tokens) != n:
        raise ParseError(f"expected {n} coordinates, got {len(tokens)}", no)
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer coordinate in {tokens}", no) from None
    if any(not 0 <= v < p for v in vals):
        raise ParseError(f"coordinates must be reduced mod {p}", no)
    return vals


def parse_algebra(text: str) -> AlgebraPresentation:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty algebra file", 1)
    no, head = lines[0]
    m = _ALG_HEADER.match(head)
    if not m:
        raise ParseError("header must read 'algebra <name> p=<prime> dim=<n>'", no)
    name, p, n = m.group(1), int(m.group(2)), int(m.group(3))
    try:
        field = PrimeField(p)
    except ValueError as e:
        raise ParseError(str(e), no) from None
    names: tuple = ()
    unit = None
    consts = np.zeros((n, n, n), dtype=np.int64)
    seen: dict[tuple[int, int], int] = {}
    for no, line in lines[1:]:
        tok = line.split()
        if tok[0] == "basis":
            if len(tok) - 1 != n:
                raise ParseError(f"expected {n} basis labels", no)
            names = tuple(tok[1:])
        elif tok[0] == "unit":
            if unit is not None:
                raise ParseError("duplicate unit line", no)
            unit = _coords(tok[1:], n, p, no)
        elif tok[0] == "mul":
            if len(tok) < 4 or tok[3] != ":":
                raise ParseError("expected 'mul i j : <coords>'", no)
            try:
                i, j = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError("bad product indices", no) from None
            if not (0 <= i < n and 0 <= j < n):
                raise ParseError(f"index out of range 0..{n - 1}", no)
            if (i, j) in seen:
                raise ParseError(f"duplicate product {i} {j} (first at line {seen[(i, j)]})", no)
            seen[(i, j)] = no
            consts[i, j] = _coords(tok[4:], n, p, no)
        else:
            raise ParseError(f"unknown directive {tok[0]!r}", no)
    if unit is None:
        raise ParseError("missing unit line", lines[-1][0])
    missing = [(i, j) for i in range(n) for j in range(n) if (i, j) not in seen]
    if missing:
        raise ParseError(f"missing products {missing[:4]}", lines[-1][0])
    try:
        return validate_algebra(field, consts, unit, names, name)
    except InvalidAlgebra as e:
        first = e.violations[0]
        e.line = seen.get((first[0], first[1])) if len(first) >= 2 else seen.get((first[0], first[0]))
        raise


def serialize_algebra(A: AlgebraPresentation) -> str:
    out = [f"algebra {A.name} p={A.p} dim={A.dim}",
           "basis " + " ".join(A.basis_names),
           "unit " + " ".join(map(str, A.unit))]
    for i in range(A.dim):
        for j in range(A.dim):
            out.append(f"mul {i} {j} : " + " ".join(map(str, A.constants[i, j])))
    return "\n".join(out) + "\n"


def parse_module(text: str, A: AlgebraPresentation) -> ModuleRep:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty module file", 1)
    no, head = lines[0]
    m = _MOD_HEADER.match(head)
    if not m:
        raise ParseError("header must read 'module <name> over <algebra> dim=<m>'", no)
    name, over, dim = m.group(1), m.group(2), int(m.group(3))
    if over != A.name:
        raise ParseError(f"module is over {over!r}, not {A.name!r}", no)
    blocks: dict[int, list[list[int]]] = {}
    starts: dict[int, int] = {}
    current = None
    for no, line in lines[1:]:
        tok = line.split()
        if tok[0] == "act":
            try:
                current = int(tok[1])
            except (IndexError, ValueError):
                raise ParseError("expected 'act <index>'", no) from None
            if not 0 <= current < A.dim or current in blocks:
                raise ParseError(f"bad or duplicate act index {current}", no)
            blocks[current] = []
            starts[current] = no
        else:
            if current is None:
                raise ParseError("matrix row before any 'act' line", no)
            if len(blocks[current]) == dim:
                raise ParseError(f"too many rows for act {current}", no)
            blocks[current].append(_coords(tok, dim, A.p, no))
    if sorted(blocks) != list(range(A.dim)):
        raise ParseError(f"need act blocks 0..{A.dim - 1}", lines[-1][0])
    for i, rows in blocks.items():
        if len(rows) != dim:
            raise ParseError(f"act {i} has {len(rows)} rows, expected {dim}", starts[i])
    mats = np.array([blocks[i] for i in range(A.dim)], dtype=np.int64).reshape(A.dim, dim, dim)
    try:
        return validate_module(A, mats, name)
    except InvalidModule as e:
        first = e.violations[0]
        e.line = starts.get(first[0]) if first else None
        raise


def serialize_module(M: ModuleRep) -> str:
    out = [f"module {M.name} over {M.algebra.name} dim={M.dim}"]
    for i, mat in enumerate(M.action):
        out.append(f"act {i}")
        out.extend(" ".join(map(str, row)) for row in mat)
    return "\n".join(out) + "\n"


def load_algebra(path) -> AlgebraPresentation:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def load_module(path, A: AlgebraPresentation) -> ModuleRep:
    return parse_module(Path(path).read_text(encoding="utf-8"), A)


def parse_expectations(text: str) -> dict[str, str]:
    """Lines ``<check-name>: expected-fail``."""
    out = {}
    for no, line in _lines(text):
        key, sep, val = line.rpartition(":")
        if not sep or val.strip() != "expected-fail":
            raise ParseError("expected '<check>: expected-fail'", no)
        out[key.strip()] = val.strip()
    return out


def load_expectations(path) -> dict[str, str]:
    return parse_expectations(Path(path).read_text(encoding="utf-8"))
