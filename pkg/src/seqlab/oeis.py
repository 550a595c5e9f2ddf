"""OEIS lookups: search a local 'stripped'-format dump or the remote API.

Remote requests carry a descriptive agent string and are spaced at least two
seconds apart. The endpoint can be overridden with the SEQLAB_OEIS_URL
environment variable (used by the tests to hit a local fixture server).
"""

from __future__ import annotations

import os
import re
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import requests

ENV_OEIS_URL = "SEQLAB_OEIS_URL"
DEFAULT_OEIS_URL = "https://oeis.org/search"
USER_AGENT = "seqlab/0.1 (exact integer-sequence workbench)"
MIN_REQUEST_INTERVAL = 2.0

_ID_RE = re.compile(r"^A\d{6}$")
_last_request = 0.0


class OeisError(Exception):
    """Base class for lookup failures."""


class NetworkUnavailableError(OeisError):
    """The remote endpoint could not be reached."""


class MalformedResponseError(OeisError):
    """The endpoint answered with something unparseable; the raw payload is
    preserved on the ``payload`` attribute."""

    def __init__(self, message: str, payload: str = ""):
        super().__init__(message)
        self.payload = payload


@dataclass(frozen=True)
class OeisMatch:
    """One matching sequence. ``offset`` is where the query starts as a
    contiguous run of the listed terms, or -1 when the match came from
    elsewhere (e.g. a remote name match)."""

    identifier: str
    name: str
    offset: int

    def __post_init__(self) -> None:
        if not _ID_RE.match(self.identifier):
            raise ValueError(f"bad OEIS identifier {self.identifier!r}")


def _find_run(haystack: Sequence[int], needle: Sequence[int]) -> int:
    k = len(needle)
    needle = list(needle)
    for start in range(len(haystack) - k + 1):
        if list(haystack[start : start + k]) == needle:
            return start
    return -1


def lookup_local(terms: Sequence[int], dump_path: str | os.PathLike) -> list[OeisMatch]:
    """Search a 'stripped'-format dump (lines like ``A000108 ,1,1,2,5,...,``)
    for the query as a contiguous run of terms.

    The stripped format carries no names, so matches have empty names.
    Raises FileNotFoundError when the dump is absent.
    """
    query = [int(t) for t in terms]
    if not query:
        raise ValueError("empty query")
    matches: list[OeisMatch] = []
    with Path(dump_path).open() as handle:
        for line in handle:
            if not line.startswith("A"):
                continue
            ident, _, data = line.partition(" ")
            values = [int(tok) for tok in data.strip().split(",") if tok]
            run = _find_run(values, query)
            if run >= 0:
                matches.append(OeisMatch(identifier=ident, name="", offset=run))
    return matches


def _respect_rate_limit() -> None:
    global _last_request
    wait = MIN_REQUEST_INTERVAL - (time.monotonic() - _last_request)
    if wait > 0:
        time.sleep(wait)
    _last_request = time.monotonic()


def lookup_remote(
    terms: Sequence[int],
    base_url: str | None = None,
    timeout: float = 15.0,
) -> list[OeisMatch]:
    """Query the search API and parse its JSON results."""
    query = [int(t) for t in terms]
    if not query:
        raise ValueError("empty query")
    url = base_url or os.environ.get(ENV_OEIS_URL) or DEFAULT_OEIS_URL
    _respect_rate_limit()
    try:
        response = requests.get(
            url,
            params={"q": ",".join(str(t) for t in query), "fmt": "json"},
            headers={"User-Agent": USER_AGENT},
            timeout=timeout,
        )
    except requests.RequestException as exc:
        raise NetworkUnavailableError(f"cannot reach {url}: {exc}") from exc
    if response.status_code != 200:
        raise MalformedResponseError(
            f"endpoint returned HTTP {response.status_code}", payload=response.text
        )
    try:
        body = response.json()
    except ValueError as exc:
        raise MalformedResponseError(
            "response is not JSON", payload=response.text
        ) from exc
    return _parse_search_results(body, query, raw=response.text)


def _parse_search_results(body, query: list[int], raw: str = "") -> list[OeisMatch]:
    if isinstance(body, dict):
        results = body.get("results") or []
    elif isinstance(body, list):
        results = body
    else:
        raise MalformedResponseError("unexpected response shape", payload=raw)
    matches: list[OeisMatch] = []
    for entry in results:
        try:
            number = int(entry["number"])
            name = str(entry.get("name", ""))
            data = [int(tok) for tok in str(entry.get("data", "")).split(",") if tok]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedResponseError(
                f"unexpected result entry: {exc}", payload=raw
            ) from exc
        matches.append(
            OeisMatch(
                identifier=f"A{number:06d}",
                name=name,
                offset=_find_run(data, query),
            )
        )
    return matches


def oeis_lookup(
    terms: Sequence[int],
    mode: str = "remote",
    dump_path: str | os.PathLike | None = None,
    base_url: str | None = None,
) -> list[OeisMatch]:
    """Dispatch to the local dump search or the remote API."""
    terms = [int(t) for t in terms]
    if not terms:
        raise ValueError("empty query")
    if mode == "local":
        if dump_path is None:
            raise ValueError("local mode needs a dump path")
        return lookup_local(terms, dump_path)
    if mode == "remote":
        return lookup_remote(terms, base_url=base_url)
    raise ValueError(f"unknown mode {mode!r} (use 'local' or 'remote')")
