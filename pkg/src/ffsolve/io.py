"""Problem-file reading and writing.

Format::

    domain: int
    4 5
    3 1 1 -1 4
    1 2 0 1 4
    ...

Line 1 names the domain (``int`` or ``poly``), line 2 gives ``n m``, then
``n`` lines of ``m`` whitespace-separated entries.  Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .matrix import Mat
from .ring import Domain, domain_for


@dataclass(frozen=True)
class ProblemFile:
    domain: Domain
    n: int
    m: int
    matrix: Mat


def parse_problem(text: str) -> ProblemFile:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise ParseError("problem file needs a domain line and a size line")
    lineno, head = lines[0]
    key, sep, kind = head.partition(":")
    if not sep or key.strip() != "domain":
        raise ParseError(f"expected 'domain: int|poly', got {head!r}", line=lineno)
    try:
        domain = domain_for(kind.strip())
    except ParseError as exc:
        raise ParseError(str(exc), line=lineno) from None
    lineno, size = lines[1]
    parts = size.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected 'n m', got {size!r}", line=lineno)
    n, m = int(parts[0]), int(parts[1])
    body = lines[2:]
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body)}", line=body[-1][0] if body else lineno)
    rows = []
    for lineno, ln in body:
        toks = ln.split()
        if len(toks) != m:
            raise ParseError(f"expected {m} entries, found {len(toks)}", line=lineno)
        row = []
        col = 0
        for t in toks:
            col = ln.index(t, col)
            try:
                row.append(domain.parse(t))
            except ParseError as exc:
                raise ParseError(str(exc).split(" (")[0], position=col + 1 + (exc.position or 0), line=lineno) from None
            col += len(t)
        rows.append(row)
    return ProblemFile(domain, n, m, Mat(rows, domain, cols=m))


def read_problem(path: str) -> ProblemFile:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text)


def format_problem(a: Mat) -> str:
    out = [f"domain: {a.domain.kind}", f"{a.rows} {a.cols}"]
    out += [" ".join(a.domain.format(x) for x in r) for r in a]
    return "\n".join(out) + "\n"
