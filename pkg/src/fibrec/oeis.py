"""Match sequence prefixes against OEIS: bundled b-files first, HTTP opt-in.

Local search runs against the fixtures shipped with the package: standard
b-files ("n a(n)" per line, '#' comment lines allowed) plus an index file
mapping A-number to offset.  Remote search queries the public OEIS JSON
endpoint; it is strictly opt-in at the CLI and never used by the tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping, Sequence

import requests

MIN_PREFIX = 4
OEIS_SEARCH_URL = "https://oeis.org/search"

_A_NUMBER = re.compile(r"\AA\d{6}\Z")


class OeisLookupError(Exception):
    """Base class for remote lookup failures."""


class OeisTimeoutError(OeisLookupError):
    """The OEIS query did not answer within the timeout."""


class OeisTransportError(OeisLookupError):
    """The OEIS query failed at the network or HTTP level."""


class OeisFormatError(OeisLookupError):
    """The OEIS response could not be understood."""


@dataclass(frozen=True)
class OeisEntry:
    a_number: str
    offset: int
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not _A_NUMBER.match(self.a_number):
            raise ValueError(f"bad A-number {self.a_number!r}")
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))
        if not self.terms:
            raise ValueError(f"{self.a_number}: entry has no terms")


@dataclass(frozen=True)
class OeisHit:
    """entry.terms[match_start:] starts with the queried prefix."""

    entry: OeisEntry
    match_start: int


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file text into (n, a(n)) pairs; '#' starts a comment line."""
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'n a(n)', got {raw!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
    return pairs


def entry_from_bfile(a_number: str, text: str) -> OeisEntry:
    """Build an entry from b-file text; indices must be contiguous."""
    pairs = parse_bfile(text)
    if not pairs:
        raise ValueError(f"{a_number}: empty b-file")
    ns = [n for n, _ in pairs]
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError(f"{a_number}: b-file indices are not contiguous")
    return OeisEntry(a_number, ns[0], tuple(v for _, v in pairs))


def render_bfile(entry: OeisEntry, comments: Sequence[str] = ()) -> str:
    """Serialize an entry back to b-file text (optional leading comments)."""
    lines = [f"# {c}" for c in comments]
    lines += [f"{entry.offset + i} {t}" for i, t in enumerate(entry.terms)]
    return "\n".join(lines) + "\n"


def _fixture_text(name: str) -> str:
    return (resources.files(__package__) / "fixtures" / name).read_text()


def load_fixtures() -> dict[str, OeisEntry]:
    """Bundled entries keyed by A-number, as listed in fixtures/index.txt."""
    out: dict[str, OeisEntry] = {}
    for line in _fixture_text("index.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        a_number, offset = line.split()
        entry = entry_from_bfile(a_number, _fixture_text(f"b{a_number[1:]}.txt"))
        if entry.offset != int(offset):
            raise ValueError(
                f"{a_number}: index offset {offset} != b-file start {entry.offset}"
            )
        out[a_number] = entry
    return out


def _find_run(haystack: tuple[int, ...], needle: tuple[int, ...]) -> int | None:
    for start in range(len(haystack) - len(needle) + 1):
        if haystack[start : start + len(needle)] == needle:
            return start
    return None


def _checked_prefix(prefix: Sequence[int]) -> tuple[int, ...]:
    needle = tuple(int(x) for x in prefix)
    if len(needle) < MIN_PREFIX:
        raise ValueError(f"prefix must have at least {MIN_PREFIX} terms")
    return needle


def search_local(
    prefix: Sequence[int],
    entries: Iterable[OeisEntry] | Mapping[str, OeisEntry] | None = None,
) -> list[OeisHit]:
    """All fixture entries containing the prefix as a contiguous run.

    Results are ordered by A-number; an empty list means no match.
    """
    needle = _checked_prefix(prefix)
    if entries is None:
        pool: Iterable[OeisEntry] = load_fixtures().values()
    elif isinstance(entries, Mapping):
        pool = entries.values()
    else:
        pool = entries
    hits = []
    for entry in sorted(pool, key=lambda e: e.a_number):
        start = _find_run(entry.terms, needle)
        if start is not None:
            hits.append(OeisHit(entry, start))
    return hits


def search_remote(prefix: Sequence[int], timeout: float = 10.0, session=None) -> list[OeisHit]:
    """Query the public OEIS JSON search endpoint with the prefix.

    Only the "number" and "data" fields of each result are consumed, so
    remote entries carry offset 0; results whose data does not actually
    contain the prefix contiguously are dropped.  Failures are never
    silent: timeout, transport and malformed-response errors are distinct.
    """
    needle = _checked_prefix(prefix)
    http = session if session is not None else requests
    try:
        resp = http.get(
            OEIS_SEARCH_URL,
            params={"q": ",".join(str(t) for t in needle), "fmt": "json"},
            timeout=timeout,
        )
    except requests.exceptions.Timeout as exc:
        raise OeisTimeoutError(f"OEIS query timed out after {timeout}s") from exc
    except requests.exceptions.RequestException as exc:
        raise OeisTransportError(f"OEIS query failed: {exc}") from exc
    if resp.status_code != 200:
        raise OeisTransportError(f"OEIS returned HTTP status {resp.status_code}")
    try:
        payload = resp.json()
    except ValueError as exc:
        raise OeisFormatError("OEIS response is not valid JSON") from exc
    if isinstance(payload, list):
        results = payload
    elif isinstance(payload, dict) and ("results" in payload or "count" in payload):
        results = payload.get("results") or []
    else:
        raise OeisFormatError("unrecognized OEIS response shape")
    hits = []
    for item in results:
        try:
            number = int(item["number"])
            terms = tuple(int(t) for t in str(item["data"]).split(","))
        except (KeyError, TypeError, ValueError) as exc:
            raise OeisFormatError(f"malformed OEIS result entry: {exc}") from exc
        start = _find_run(terms, needle)
        if start is None:
            continue
        hits.append(OeisHit(OeisEntry(f"A{number:06d}", 0, terms), start))
    return hits
