"""The JSON input-file format shared by the CLI and the catalog.

One format for everything: an `algebra` block plus optional `cr`, `metric`,
`poisson`, `ideal` and `extension` blocks, each enabling the corresponding
checks.  Indices are 1-based; rationals are strings "p/q" (or "p"); unlisted
brackets are zero and brackets are listed with x < y.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .crkahler import CRData, KahlerCRData
from .lie import LieAlgebra, StructureError
from .linalg import Matrix, Subspace, format_rat, is_zero, rat, vector, zero_vector
from .multivector import Bivector
from .poisson import PseudoPoissonData


class InputError(Exception):
    """Malformed or invalid input; `diagnostics` lists every problem found."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


@dataclass
class Payloads:
    document: dict
    algebra: LieAlgebra
    cr: Optional[CRData] = None
    kahler: Optional[KahlerCRData] = None
    poisson: Optional[PseudoPoissonData] = None
    poisson_r: Optional[Bivector] = None
    ideal: Optional[Subspace] = None
    extension: Optional[dict] = None  # {"v_dim": int, "alpha": {(a, b): Vector}}


def _matrix(rows, n_cols, where, diags) -> Optional[Matrix]:
    try:
        m = Matrix([[rat(e) for e in row] for row in rows])
    except (ValueError, TypeError) as e:
        diags.append(f"{where}: {e}")
        return None
    if m.cols != n_cols:
        diags.append(f"{where}: expected {n_cols} columns, got {m.cols}")
        return None
    return m


def _subspace(rows, dim, where, diags) -> Optional[Subspace]:
    try:
        vs = [vector(row) for row in rows]
    except (ValueError, TypeError) as e:
        diags.append(f"{where}: {e}")
        return None
    if any(len(v) != dim for v in vs):
        diags.append(f"{where}: row of wrong dimension (ambient is {dim})")
        return None
    return Subspace.span(vs, dim)


def _bivector(entries, dim, where, diags) -> Optional[Bivector]:
    coeffs = {}
    for e in entries:
        try:
            i, j = int(e["i"]), int(e["j"])
            c = rat(e["coeff"])
        except (KeyError, ValueError, TypeError) as err:
            diags.append(f"{where}: bad entry {e!r}: {err}")
            return None
        if not (1 <= i < j <= dim):
            diags.append(f"{where}: indices ({i},{j}) must satisfy 1 <= i < j <= {dim}")
            return None
        coeffs[(i - 1, j - 1)] = coeffs.get((i - 1, j - 1), 0) + c
    return Bivector(dim, coeffs)


def parse_document(doc: dict) -> Payloads:
    """Validate a document into domain payloads, or raise InputError with a
    list of precise diagnostics."""
    diags: list[str] = []
    if not isinstance(doc, dict) or "algebra" not in doc:
        raise InputError(["document must be an object with an 'algebra' block"])

    ablock = doc["algebra"]
    try:
        dim = int(ablock["dim"])
    except (KeyError, ValueError, TypeError):
        raise InputError(["algebra.dim: missing or not an integer"])
    if dim < 1:
        raise InputError(["algebra.dim: must be >= 1"])
    names = ablock.get("names") or [f"e{i + 1}" for i in range(dim)]
    if len(names) != dim:
        diags.append(f"algebra.names: expected {dim} names, got {len(names)}")
        names = [f"e{i + 1}" for i in range(dim)]

    c = [[None] * dim for _ in range(dim)]
    for k, entry in enumerate(ablock.get("brackets", [])):
        where = f"algebra.brackets[{k}]"
        try:
            x, y = int(entry["x"]), int(entry["y"])
            result = vector(entry["result"])
        except (KeyError, ValueError, TypeError) as e:
            diags.append(f"{where}: {e}")
            continue
        if not (1 <= x <= dim and 1 <= y <= dim) or x == y:
            diags.append(f"{where}: indices ({x},{y}) out of range or equal")
            continue
        if len(result) != dim:
            diags.append(f"{where}: result has {len(result)} entries, expected {dim}")
            continue
        if c[x - 1][y - 1] is not None:
            diags.append(f"{where}: duplicate bracket for ({x},{y})")
            continue
        c[x - 1][y - 1] = result

    # mirror unlisted sides; detect explicit antisymmetry conflicts
    for i in range(dim):
        for j in range(i + 1, dim):
            a, b = c[i][j], c[j][i]
            if a is not None and b is not None:
                for k in range(dim):
                    if a[k] != -b[k]:
                        diags.append(
                            f"algebra.brackets: antisymmetry violated at "
                            f"({i + 1},{j + 1},{k + 1}): c={format_rat(a[k])} "
                            f"vs c={format_rat(b[k])}")
                        break
            elif a is not None:
                c[j][i] = tuple(-e for e in a)
            elif b is not None:
                c[i][j] = tuple(-e for e in b)
            else:
                c[i][j] = zero_vector(dim)
                c[j][i] = zero_vector(dim)
        c[i][i] = zero_vector(dim)
    if diags:
        raise InputError(diags)

    try:
        algebra = LieAlgebra(c, names=names)
    except StructureError as e:
        raise InputError([f"algebra.brackets: {e}"])

    payloads = Payloads(document=doc, algebra=algebra)

    if "cr" in doc:
        block = doc["cr"]
        H = _subspace(block.get("H", []), dim, "cr.H", diags)
        j = _matrix(block.get("j", []), dim, "cr.j", diags)
        if H is not None and j is not None and j.rows == dim:
            try:
                payloads.cr = CRData(algebra, H, j)
            except ValueError as e:
                diags.append(f"cr: {e}")
        elif j is not None and j.rows != dim:
            diags.append(f"cr.j: expected {dim} rows, got {j.rows}")

    if "metric" in doc:
        if payloads.cr is None:
            diags.append("metric: requires a valid cr block")
        else:
            m = _matrix(doc["metric"], dim, "metric", diags)
            if m is not None:
                if m.rows != dim:
                    diags.append(f"metric: expected {dim} rows, got {m.rows}")
                else:
                    try:
                        payloads.kahler = KahlerCRData(payloads.cr, m)
                    except ValueError as e:
                        diags.append(f"metric: {e}")

    if "poisson" in doc:
        block = doc["poisson"]
        if payloads.cr is None:
            diags.append("poisson: requires a valid cr block (for H and j)")
        else:
            U = _subspace(block.get("U", []), dim, "poisson.U", diags)
            lam = _bivector(block.get("lambda", []), dim, "poisson.lambda", diags)
            if U is not None and lam is not None:
                try:
                    payloads.poisson = PseudoPoissonData(
                        algebra, payloads.cr.H, U, payloads.cr.j, lam)
                except ValueError as e:
                    diags.append(f"poisson: {e}")
            if "r" in block:
                payloads.poisson_r = _bivector(block["r"], dim, "poisson.r", diags)

    if "ideal" in doc:
        if payloads.cr is None:
            diags.append("ideal: requires a valid cr block")
        else:
            payloads.ideal = _subspace(doc["ideal"], dim, "ideal", diags)

    if "extension" in doc:
        block = doc["extension"]
        if payloads.kahler is None:
            diags.append("extension: requires valid cr and metric blocks")
        else:
            try:
                v_dim = int(block["V_dim"])
            except (KeyError, ValueError, TypeError):
                diags.append("extension.V_dim: missing or not an integer")
                v_dim = 0
            alpha = {}
            for k, entry in enumerate(block.get("alpha", [])):
                where = f"extension.alpha[{k}]"
                try:
                    x, y = int(entry["x"]), int(entry["y"])
                    result = vector(entry["result"])
                except (KeyError, ValueError, TypeError) as e:
                    diags.append(f"{where}: {e}")
                    continue
                if not (1 <= x <= dim and 1 <= y <= dim) or x == y:
                    diags.append(f"{where}: indices ({x},{y}) out of range or equal")
                    continue
                if len(result) != v_dim:
                    diags.append(f"{where}: result has {len(result)} entries, "
                                 f"expected {v_dim}")
                    continue
                alpha[(x - 1, y - 1)] = result
            if v_dim >= 1:
                payloads.extension = {"v_dim": v_dim, "alpha": alpha}

    if diags:
        raise InputError(diags)
    return payloads


def parse_text(text: str) -> Payloads:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError([f"not valid JSON: {e}"])
    return parse_document(doc)


def dump_document(doc: dict) -> str:
    """Deterministic serialization; documents built with stable key order
    round-trip byte-identically."""
    return json.dumps(doc, indent=2) + "\n"


# -- document builders (used by the catalog and by tests) --------------------

def algebra_document(algebra: LieAlgebra) -> dict:
    brackets = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            v = algebra.c[i][j]
            if not is_zero(v):
                brackets.append({"x": i + 1, "y": j + 1,
                                 "result": [format_rat(e) for e in v]})
    return {"dim": algebra.dim, "names": list(algebra.names), "brackets": brackets}


def matrix_document(m: Matrix) -> list:
    return [[format_rat(e) for e in row] for row in m.data]


def subspace_document(s: Subspace) -> list:
    return [[format_rat(e) for e in row] for row in s.basis]


def bivector_document(b: Bivector) -> list:
    return [{"i": i + 1, "j": j + 1, "coeff": format_rat(v)}
            for (i, j), v in b.coeffs.items()]
