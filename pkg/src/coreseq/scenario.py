"""Scenario files: tensor systems and prefix datasets in text form.

The format is line oriented and bit exact.  ``#`` starts a comment, blank
lines separate nothing, and a ``[section]`` header may carry its first
entry on the same line:

    [system] name=<id> size=<s>
    [orbit <id>] name=<text>
    channel <name> forward prefix=[v0,v1,...] tail=quasipoly T=<int> start=<int> polys=[<p>;<p>]
    channel <name> backward prefix=[v1,v2,...] ...
    [matrix]
    T[<i>][<j>] = "<laurent literal>"     # 1-based, missing entries are 0
    [initial]
    v[<j>] = "<laurent literal>"
    [expect]
    <kind> terms = v1,v2,...
    <kind> rec = c1,c2,...

    [prefix] name=<id> kind=<invariant>   # published-terms-only datasets
    terms = v1,v2,...
    rec = c1,c2,...

Positivity of the matrix and initial entries (coefficients in N[w^+-1]) is
enforced when the TensorSystem is built, and violations name the entry.

The built-in scenarios bundle the worked datasets: the order-7 cyclic
two-dimensional module (c7), the 3x3 elementary-abelian system (z3z3,
channel values computed by the dense oracle), and two published prefix
datasets (s10-prefix, s9-prefix) that carry terms and a recurrence but no
tensor system.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .lmatrix import LMatrix
from .omega import DimensionChannel, OrbitRep, TensorSystem
from .quasipoly import QuasiPoly
from .ring import LaurentPoly, laurent_parse, unipoly_parse

Q = Fraction


@dataclass(frozen=True)
class PrefixDataset:
    """Published terms (and optionally a published recurrence), no system."""

    name: str
    kind: str
    terms: tuple
    rec: tuple = ()


@dataclass(frozen=True)
class Scenario:
    """A parsed tensor system or prefix dataset plus declared expectations."""

    name: str
    system: TensorSystem | None = None
    prefix: PrefixDataset | None = None
    expect_terms: dict = field(default_factory=dict)
    expect_rec: dict = field(default_factory=dict)


def _split_csv(body, conv, what, lineno):
    body = body.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return []
    try:
        return [conv(tok.strip()) for tok in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad {what}: {exc}", line=lineno)


_CHANNEL_RE = re.compile(
    r"channel\s+(?P<name>\w+)\s+(?P<dir>forward|backward)\s+prefix=(?P<prefix>\[[^\]]*\])"
    r"(?:\s+tail=quasipoly\s+T=(?P<T>\d+)\s+start=(?P<start>\d+)\s+"
    r"polys=\[(?P<polys>[^\]]*)\])?\s*$")
_MATRIX_RE = re.compile(r"T\[(\d+)\]\[(\d+)\]\s*=\s*\"([^\"]*)\"\s*$")
_INITIAL_RE = re.compile(r"v\[(\d+)\]\s*=\s*\"([^\"]*)\"\s*$")


def parse_scenario(text: str, name: str = "scenario") -> Scenario:
    section = None
    sys_name = name
    size = None
    orbits = []        # list of dicts: ident, name, channels {name: {dir: (...)}}
    matrix_entries = {}
    initial_entries = {}
    expect_terms = {}
    expect_rec = {}
    prefix_meta = {}

    def current_orbit(lineno):
        if not orbits:
            raise ParseError("channel line outside an [orbit] section", line=lineno)
        return orbits[-1]

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            close = line.find("]")
            if close < 0:
                raise ParseError("unterminated section header", line=lineno)
            header = line[1:close].strip()
            rest = line[close + 1:].strip()
            parts = header.split()
            section = parts[0]
            if section == "system":
                for kv in rest.split():
                    k, _, v = kv.partition("=")
                    if k == "name":
                        sys_name = v
                    elif k == "size":
                        size = int(v)
                rest = ""
            elif section == "orbit":
                ident = parts[1] if len(parts) > 1 else str(len(orbits) + 1)
                orb = {"ident": ident, "name": ident, "channels": {}}
                for kv in rest.split():
                    k, _, v = kv.partition("=")
                    if k == "name":
                        orb["name"] = v
                orbits.append(orb)
                rest = ""
            elif section == "prefix":
                for kv in rest.split():
                    k, _, v = kv.partition("=")
                    prefix_meta[k] = v
                rest = ""
            elif section not in ("matrix", "initial", "expect"):
                raise ParseError(f"unknown section {section!r}", line=lineno)
            if not rest:
                continue
            line = rest  # header carried its first entry inline
        if section == "orbit" and line.startswith("channel"):
            m = _CHANNEL_RE.match(line)
            if not m:
                raise ParseError(f"bad channel line {line!r}", line=lineno)
            orb = current_orbit(lineno)
            vals = _split_csv(m.group("prefix"), int, "channel prefix", lineno)
            tail = None
            if m.group("T"):
                polys = tuple(
                    unipoly_parse(p.strip(), symbol="n")
                    for p in m.group("polys").split(";") if p.strip())
                tail = QuasiPoly(int(m.group("T")), polys, int(m.group("start")))
            slot = orb["channels"].setdefault(m.group("name"),
                                              {"forward": None, "backward": None})
            slot[m.group("dir")] = (tuple(vals), tail)
        elif section == "matrix":
            m = _MATRIX_RE.match(line)
            if not m:
                raise ParseError(f"bad matrix line {line!r}", line=lineno)
            i, j = int(m.group(1)), int(m.group(2))
            try:
                matrix_entries[(i, j)] = laurent_parse(m.group(3))
            except ParseError as exc:
                raise ParseError(f"entry T[{i}][{j}]: {exc}", line=lineno)
        elif section == "initial":
            m = _INITIAL_RE.match(line)
            if not m:
                raise ParseError(f"bad initial line {line!r}", line=lineno)
            j = int(m.group(1))
            try:
                initial_entries[j] = laurent_parse(m.group(2))
            except ParseError as exc:
                raise ParseError(f"entry v[{j}]: {exc}", line=lineno)
        elif section == "expect":
            m = re.match(r"(\w+)\s+(terms|rec)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"bad expect line {line!r}", line=lineno)
            vals = _split_csv(m.group(3), Fraction, "expect values", lineno)
            if m.group(2) == "terms":
                expect_terms[m.group(1)] = tuple(vals)
            else:
                expect_rec[m.group(1)] = tuple(vals)
        elif section == "prefix":
            m = re.match(r"(terms|rec)\s*=\s*(.+)$", line)
            if not m:
                raise ParseError(f"bad prefix line {line!r}", line=lineno)
            prefix_meta[m.group(1)] = m.group(2)
        else:
            raise ParseError(f"unexpected line {line!r}", line=lineno)

    if prefix_meta:
        terms = _split_csv(prefix_meta.get("terms", ""), Fraction, "terms", 0)
        rec = _split_csv(prefix_meta.get("rec", ""), Fraction, "rec", 0)
        ds = PrefixDataset(prefix_meta.get("name", sys_name),
                           prefix_meta.get("kind", "s"),
                           tuple(terms), tuple(rec))
        return Scenario(name=ds.name, prefix=ds,
                        expect_terms=expect_terms, expect_rec=expect_rec)

    if size is None:
        size = len(orbits)
    if size != len(orbits):
        raise ParseError(f"declared size {size} but {len(orbits)} orbits")
    orbit_reps = []
    for orb in orbits:
        channels = {}
        for cname, dirs in orb["channels"].items():
            fwd = dirs.get("forward") or ((), None)
            bwd = dirs.get("backward") or ((), None)
            channels[cname] = DimensionChannel(
                forward_prefix=fwd[0], backward_prefix=bwd[0],
                forward_tail=fwd[1], backward_tail=bwd[1])
        orbit_reps.append(OrbitRep(ident=orb["ident"], name=orb["name"],
                                   channels=channels))
    zero = LaurentPoly.zero()
    rows = [[matrix_entries.get((i + 1, j + 1), zero) for j in range(size)]
            for i in range(size)]
    initial = [initial_entries.get(j + 1, zero) for j in range(size)]
    system = TensorSystem(tuple(orbit_reps), LMatrix(rows), tuple(initial))
    return Scenario(name=sys_name, system=system,
                    expect_terms=expect_terms, expect_rec=expect_rec)


# ---------------------------------------------------------------------------
# built-in scenarios
# ---------------------------------------------------------------------------

# Cyclic group of order 7 in characteristic 7, module = the 2-dimensional
# Jordan block.  Orbits of the syzygy operator on nonprojective Jordan
# blocks: {J1, J6}, {J2, J5}, {J3, J4}; the matrix rows follow the tensor
# rules J2 (x) J1 = J2, J2 (x) J2 = J1 + J3, J2 (x) J3 = J2 + J4.
C7_SCENARIO = """
[system] name=c7 size=3
[orbit J1] name=trivial
channel dim forward prefix=[1,6] tail=quasipoly T=2 start=0 polys=[1; 6]
channel dim backward prefix=[6,1] tail=quasipoly T=2 start=1 polys=[1; 6]
channel soc forward prefix=[1] tail=quasipoly T=1 start=0 polys=[1]
channel soc backward prefix=[1] tail=quasipoly T=1 start=1 polys=[1]
channel len forward prefix=[1,6] tail=quasipoly T=2 start=0 polys=[1; 6]
channel len backward prefix=[6,1] tail=quasipoly T=2 start=1 polys=[1; 6]
[orbit J2] name=two-dim
channel dim forward prefix=[2,5] tail=quasipoly T=2 start=0 polys=[2; 5]
channel dim backward prefix=[5,2] tail=quasipoly T=2 start=1 polys=[2; 5]
channel soc forward prefix=[1] tail=quasipoly T=1 start=0 polys=[1]
channel soc backward prefix=[1] tail=quasipoly T=1 start=1 polys=[1]
channel len forward prefix=[2,5] tail=quasipoly T=2 start=0 polys=[2; 5]
channel len backward prefix=[5,2] tail=quasipoly T=2 start=1 polys=[2; 5]
[orbit J3] name=three-dim
channel dim forward prefix=[3,4] tail=quasipoly T=2 start=0 polys=[3; 4]
channel dim backward prefix=[4,3] tail=quasipoly T=2 start=1 polys=[3; 4]
channel soc forward prefix=[1] tail=quasipoly T=1 start=0 polys=[1]
channel soc backward prefix=[1] tail=quasipoly T=1 start=1 polys=[1]
channel len forward prefix=[3,4] tail=quasipoly T=2 start=0 polys=[3; 4]
channel len backward prefix=[4,3] tail=quasipoly T=2 start=1 polys=[3; 4]
[matrix]
T[1][2] = "1"
T[2][1] = "1"
T[2][3] = "1"
T[3][2] = "1"
T[3][3] = "w"
[initial]
v[2] = "1"
[expect]
c terms = 2,4,8,16,32,57,114,193,386,639,1278,2094,4188,6829
s terms = 1,2,3,6,10,19,33,61,108,197,352,638,1145,2069
c rec = 0,5,0,-6,0,1
s rec = 0,5,0,-6,0,1
"""

# Elementary abelian (3,3) in characteristic 3: the six-dimensional module M,
# its dual, and the induced three-dimensional module N.  Channel values were
# computed by the dense oracle (syzygy/cosyzygy towers with free stripping)
# and the tails are the exact quasipolynomial fits of those towers.
Z3Z3_SCENARIO = """
[system] name=z3z3 size=3
[orbit M] name=six-dim
channel dim forward prefix=[6,12,24,30,42,48,60,66] tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel dim backward prefix=[12,24,30,42,48,60,66,78] tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
channel soc forward prefix=[2,2,4,6,8,10,12,14] tail=quasipoly T=1 start=1 polys=[2*n]
channel soc backward prefix=[4,6,8,10,12,14,16,18] tail=quasipoly T=1 start=1 polys=[2 + 2*n]
channel len forward prefix=[6,12,24,30,42,48,60,66] tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel len backward prefix=[12,24,30,42,48,60,66,78] tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
[orbit Mdual] name=six-dim-dual
channel dim forward prefix=[6,12,24,30,42,48,60,66] tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel dim backward prefix=[12,24,30,42,48,60,66,78] tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
channel soc forward prefix=[2,2,4,6,8,10,12,14] tail=quasipoly T=1 start=1 polys=[2*n]
channel soc backward prefix=[4,6,8,10,12,14,16,18] tail=quasipoly T=1 start=1 polys=[2 + 2*n]
channel len forward prefix=[6,12,24,30,42,48,60,66] tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel len backward prefix=[12,24,30,42,48,60,66,78] tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
[orbit N] name=induced-three-dim
channel dim forward prefix=[3,6] tail=quasipoly T=2 start=0 polys=[3; 6]
channel dim backward prefix=[6,3] tail=quasipoly T=2 start=1 polys=[3; 6]
channel soc forward prefix=[1] tail=quasipoly T=1 start=0 polys=[1]
channel soc backward prefix=[1] tail=quasipoly T=1 start=1 polys=[1]
channel len forward prefix=[3,6] tail=quasipoly T=2 start=0 polys=[3; 6]
channel len backward prefix=[6,3] tail=quasipoly T=2 start=1 polys=[3; 6]
[matrix]
T[1][1] = "w"
T[1][2] = "w^-1"
T[1][3] = "1"
T[2][1] = "w^-1"
T[2][2] = "w"
T[2][3] = "1"
T[3][3] = "3*w"
[initial]
v[1] = "1"
[expect]
s terms = 1,3,9,27,81,243,729,2187
s rec = 5,-6,0
c terms = 6,27,90,189,702
"""

S10_SCENARIO = """
[prefix] name=s10 kind=s
terms = 1,4,19,94,469,2344
rec = 1,25,-25
"""

S9_SCENARIO = """
[prefix] name=s9 kind=s
terms = 1,4,35,310,2789,25096
rec = 9,1,-9
"""

BUILTINS = {
    "c7": C7_SCENARIO,
    "z3z3": Z3Z3_SCENARIO,
    "s10-prefix": S10_SCENARIO,
    "s9-prefix": S9_SCENARIO,
}


def z3z3_module():
    """The six-dimensional module behind the z3z3 scenario, as matrices."""
    import numpy as np
    from .modrep import FpModule
    g = np.array([
        [1, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1]])
    h = np.array([
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1]])
    return FpModule(3, [g, h], ("elab", 3, 2))


def z3z3_induced_module():
    """The three-dimensional induced module (first generator acts
    trivially, the second permutes a basis cyclically)."""
    import numpy as np
    from .modrep import FpModule
    g = np.eye(3, dtype=np.int64)
    h = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return FpModule(3, [g, h], ("elab", 3, 2))


def load_scenario(spec: str) -> Scenario:
    """Load from a path or a ``builtin:<id>`` reference (bare ids work when
    no file of that name exists)."""
    if spec.startswith("builtin:"):
        key = spec.split(":", 1)[1]
        if key not in BUILTINS:
            raise ParseError(f"unknown builtin scenario {key!r}; have "
                             f"{sorted(BUILTINS)}")
        return parse_scenario(BUILTINS[key], name=key)
    if spec in BUILTINS and not os.path.exists(spec):
        return parse_scenario(BUILTINS[spec], name=spec)
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_scenario(fh.read(), name=os.path.basename(spec))
