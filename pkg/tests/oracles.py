"""Enumeration oracles that avoid the linear algebra under test."""

import numpy as np

from assocloc.modules import ModuleRep


def set_closure(M: ModuleRep, v) -> set:
    """Submodule generated by v, grown as an explicit set of vectors."""
    p = M.field.p
    elems = {tuple([0] * M.dim)}
    pending = [np.asarray(v) % p]
    while pending:
        w = pending.pop()
        if tuple(w) in elems:
            continue
        elems |= {tuple((np.array(s) + c * w) % p) for s in elems for c in range(p)}
        pending.extend(w @ g % p for g in M.action)
    return elems


def simple_by_enumeration(M: ModuleRep) -> bool:
    size = M.field.p ** M.dim
    return all(len(set_closure(M, v)) == size for v in M.field.vectors(M.dim) if v.any())
