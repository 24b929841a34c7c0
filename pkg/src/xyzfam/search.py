"""Brute-force search for small positive rational solutions of xyz(x+y+z) = a.

For fixed x >= y the equation is the quadratic x*y*z^2 + x*y*(x+y)*z - a = 0
in z, so only pairs (x, y) are enumerated.  Writing x = p/q, y = r/u the
discriminant is a rational square exactly when the integer

    N = p*r * (p*r*(p*u + r*q)^2 + 4*a*(q*u)^3)

is a perfect square; that test is vectorized with numpy and every hit is
re-checked with exact rationals.
"""

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import isqrt

import numpy as np

from .errors import MalformedRow, NotASquare, ParseError
from .exact import as_rational, format_rational, height, parse_rational, rat_sqrt

# N <= 4 H^8 (1 + a) must stay below this for the int64 fast path
_INT64_SAFE = 2**62


@dataclass(frozen=True, order=True)
class TableRow:
    a: int
    x: Fraction
    y: Fraction
    z: Fraction

    @property
    def value(self) -> Fraction:
        return self.x * self.y * self.z * (self.x + self.y + self.z)

    @property
    def height(self) -> int:
        return max(height(self.x), height(self.y), height(self.z))

    def is_solution(self) -> bool:
        return self.x > 0 and self.y > 0 and self.z > 0 and self.value == self.a

    def canonical(self) -> "TableRow":
        x, y, z = sorted((self.x, self.y, self.z), reverse=True)
        return TableRow(self.a, x, y, z)

    def as_csv_fields(self):
        return [str(self.a), format_rational(self.x), format_rational(self.y), format_rational(self.z)]

    def to_dict(self):
        return dict(zip(("a", "x", "y", "z"), self.as_csv_fields()))


@dataclass(frozen=True)
class SearchConfig:
    a: int
    height_bound: int

    def __post_init__(self):
        if self.height_bound < 1:
            raise ValueError("height bound must be at least 1")


def solve_z(a, x, y) -> Fraction | None:
    """Positive root z of x*y*z^2 + x*y*(x+y)*z - a = 0, if rational."""
    a, x, y = as_rational(a), as_rational(x), as_rational(y)
    xy = x * y
    b = xy * (x + y)
    disc = b * b + 4 * xy * a
    if disc < 0:
        return None
    try:
        root = rat_sqrt(disc)
    except NotASquare:
        return None
    z = (root - b) / (2 * xy)
    return z if z > 0 else None


def farey(n: int):
    """Reduced fractions p/q with 0 < p <= q <= n in increasing order."""
    a, b, c, d = 0, 1, 1, n
    while c <= n:
        yield c, d
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b


def positive_fractions(h: int):
    """All reduced positive p/q with max(p, q) <= h, ascending, as (p, q) pairs."""
    small = list(farey(h))
    large = [(q, p) for p, q in reversed(small) if p != q]
    return small + large


def _height_grid(h: int):
    fr = positive_fractions(h)
    p = np.array([f[0] for f in fr], dtype=np.int64)
    q = np.array([f[1] for f in fr], dtype=np.int64)
    return fr, p, q


def _candidate_pairs_int64(a, fr, p, q):
    # x = fr[i], y = fr[j], j <= i  (fractions are sorted ascending)
    out = []
    for i in range(len(fr)):
        pi, qi = p[i], q[i]
        r, u = p[: i + 1], q[: i + 1]
        P = pi * r
        Q = qi * u
        S = pi * u + r * qi
        N = P * (P * S * S + 4 * a * Q * Q * Q)
        root = np.floor(np.sqrt(N.astype(np.float64))).astype(np.int64)
        hit = np.zeros(len(N), dtype=bool)
        for off in (-1, 0, 1):
            rr = root + off
            hit |= (rr >= 0) & (rr * rr == N)
        for j in np.nonzero(hit)[0]:
            out.append((i, int(j)))
    return out


def _candidate_pairs_exact(a, fr):
    out = []
    for i, (p, q) in enumerate(fr):
        for j in range(i + 1):
            r, u = fr[j]
            P, Q, S = p * r, q * u, p * u + r * q
            N = P * (P * S * S + 4 * a * Q**3)
            if isqrt(N) ** 2 == N:
                out.append((i, j))
    return out


def search_solutions(cfg: SearchConfig) -> list:
    """Canonical rows x >= y >= z > 0 with height(x), height(y) <= H.

    Sorted by the largest component height, then by (x, y, z).
    """
    a, h = cfg.a, cfg.height_bound
    if a <= 0:
        return []
    fr, p, q = _height_grid(h)
    if 4 * h**8 * (1 + a) < _INT64_SAFE:
        pairs = _candidate_pairs_int64(a, fr, p, q)
    else:
        pairs = _candidate_pairs_exact(a, fr)
    rows = set()
    for i, j in pairs:
        x = Fraction(*fr[i])
        y = Fraction(*fr[j])
        z = solve_z(a, x, y)
        if z is None or z > y:
            continue
        row = TableRow(a, x, y, z)
        if not row.is_solution():  # pragma: no cover - guarded by construction
            raise ArithmeticError(f"search produced a non-solution {row}")
        rows.add(row)
    return sorted(rows, key=_rank)


def _rank(row: TableRow):
    return (row.height, row.x, row.y, row.z)


def _search_one(args):
    a, h = args
    return search_solutions(SearchConfig(a, h))


def search_many(a_values, height_bound: int, jobs: int = 1):
    """Yield ``(a, rows)`` in the order of ``a_values``; parallel over a when jobs > 1."""
    tasks = [(a, height_bound) for a in a_values]
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield task[0], _search_one(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for (a, _), rows in zip(tasks, pool.map(_search_one, tasks)):
            yield a, rows


# -- Table 1 ------------------------------------------------------------------


def parse_row(fields, line_no=None) -> TableRow:
    where = f"line {line_no}: " if line_no is not None else ""
    if len(fields) != 4:
        raise MalformedRow(f"{where}expected 4 fields a,x,y,z, got {len(fields)}")
    try:
        a = parse_rational(fields[0])
        x, y, z = (parse_rational(f) for f in fields[1:])
    except ParseError as exc:
        raise MalformedRow(f"{where}{exc}") from None
    if a.denominator != 1:
        raise MalformedRow(f"{where}a must be an integer")
    return TableRow(int(a), x, y, z)


def read_table(source) -> list:
    """``(line_no, TableRow)`` pairs from CSV text, a path-like or a file object.

    A leading ``a,x,y,z`` header is skipped; blank lines are ignored.
    """
    if isinstance(source, os.PathLike):
        with open(source, newline="") as fh:
            return read_table(fh)
    text = source if isinstance(source, str) else source.read()
    rows = []
    for line_no, fields in enumerate(csv.reader(io.StringIO(text)), start=1):
        fields = [f.strip() for f in fields]
        if not fields or fields == [""]:
            continue
        if line_no == 1 and fields == ["a", "x", "y", "z"]:
            continue
        rows.append((line_no, parse_row(fields, line_no)))
    return rows


def shipped_table() -> list:
    text = resources.files("xyzfam").joinpath("data/table1.csv").read_text()
    return [row for _, row in read_table(text)]


def write_rows(rows, fh, header: bool = False):
    w = csv.writer(fh, lineterminator="\n")
    if header:
        w.writerow(["a", "x", "y", "z"])
    for row in rows:
        w.writerow(row.as_csv_fields())


@dataclass
class TableReport:
    n_rows: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self):
        yield f"{self.n_rows} rows, {len(self.failures)} failures"
        for line_no, row, reason in self.failures:
            yield f"row {line_no}: {','.join(row.as_csv_fields())}: {reason}"


def verify_table(rows) -> TableReport:
    """Check each row exactly; ``rows`` holds TableRows or (line_no, TableRow) pairs."""
    report = TableReport()
    for k, item in enumerate(rows, start=1):
        line_no, row = item if isinstance(item, tuple) else (k, item)
        report.n_rows += 1
        if not (row.x > 0 and row.y > 0 and row.z > 0):
            report.failures.append((line_no, row, "non-positive component"))
        elif row.value != row.a:
            report.failures.append((line_no, row, f"xyz(x+y+z) = {format_rational(row.value)} != {row.a}"))
    return report
