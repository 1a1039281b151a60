"""OEIS b-file parsing, rendering, bundled fixtures, and a caching fetch client.

A b-file is plain text, one ``<index> <value>`` pair per line, ``#`` comment
lines and blank lines permitted.  Indices must be strictly increasing and
contiguous: a gap would silently shift every later residual window, so it is
a parse error, not a sparse table.  Rendered files use a single space
separator and ``\\n`` line endings with no trailing blank line.

Fetching is opt-in (the CLI gates it behind ``--fetch``).  Raw response
bytes are cached per sequence id under a directory taken from the
``OEIS_CACHE_DIR`` environment variable (default: the per-user cache dir);
a cache hit never touches the network.  Cache writes go through an atomic
rename so a crashed fetch leaves no partial file.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .sequences import Provenance, SequenceTable

__all__ = [
    "BFile",
    "BFileParseError",
    "FetchError",
    "NetworkError",
    "HTTPStatusError",
    "SEQUENCE_ID_PATTERN",
    "parse_bfile",
    "render_bfile",
    "bundled_bfile",
    "bundled_sequence_ids",
    "fetch_bfile",
    "default_cache_dir",
]

SEQUENCE_ID_PATTERN = re.compile(r"A\d{6}\Z")

DEFAULT_BASE_URL = "https://oeis.org"
USER_AGENT = "seqverify/0.1.0 (exact integer-sequence verification toolkit)"


class BFileParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FetchError(Exception):
    """Base for b-file retrieval failures."""


class NetworkError(FetchError):
    """The HTTP request could not be completed at all."""


class HTTPStatusError(FetchError):
    """The server answered with a non-success status."""

    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _check_sequence_id(sequence_id: str) -> str:
    if not SEQUENCE_ID_PATTERN.match(sequence_id):
        raise ValueError(
            f"sequence id {sequence_id!r} does not match the pattern 'A' + 6 digits"
        )
    return sequence_id


@dataclass(frozen=True)
class BFile:
    sequence_id: str | None
    entries: tuple[tuple[int, int], ...]

    @property
    def start(self) -> int:
        return self.entries[0][0]

    @property
    def end(self) -> int:
        return self.entries[-1][0]

    def to_table(self) -> SequenceTable:
        return SequenceTable(
            offset=self.start,
            values=tuple(value for _, value in self.entries),
            provenance=Provenance.BFILE,
        )


def parse_bfile(text: str | bytes, sequence_id: str | None = None) -> BFile:
    """Parse b-file text; every malformation is reported with its line number."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if sequence_id is not None:
        _check_sequence_id(sequence_id)
    entries: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(
                f"expected '<index> <value>', got {raw!r}", line_no
            )
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(
                f"non-integer field in {raw!r}", line_no
            ) from None
        if entries:
            previous = entries[-1][0]
            if index == previous:
                raise BFileParseError(f"duplicate index {index}", line_no)
            if index != previous + 1:
                raise BFileParseError(
                    f"non-contiguous index {index} after {previous}", line_no
                )
        entries.append((index, value))
    if not entries:
        raise BFileParseError("no entries found", 1)
    return BFile(sequence_id=sequence_id, entries=tuple(entries))


def render_bfile(bfile: BFile) -> str:
    return "".join(f"{index} {value}\n" for index, value in bfile.entries)


def bundled_sequence_ids() -> tuple[str, ...]:
    files = resources.files("seqverify.data")
    ids = []
    for entry in files.iterdir():
        match = re.fullmatch(r"b(\d{6})\.txt", entry.name)
        if match:
            ids.append(f"A{match.group(1)}")
    return tuple(sorted(ids))


def bundled_bfile(sequence_id: str) -> BFile:
    """The fixture b-file shipped with the package for a built-in sequence."""
    _check_sequence_id(sequence_id)
    name = f"b{sequence_id[1:]}.txt"
    resource = resources.files("seqverify.data").joinpath(name)
    try:
        text = resource.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(f"no bundled b-file for {sequence_id}") from None
    return parse_bfile(text, sequence_id=sequence_id)


def default_cache_dir() -> Path:
    env = os.environ.get("OEIS_CACHE_DIR")
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "seqverify"


def fetch_bfile(
    sequence_id: str,
    *,
    base_url: str | None = None,
    cache_dir: Path | str | None = None,
    timeout: float = 30.0,
) -> BFile:
    """Retrieve ``<base-url>/<id>/b<digits>.txt``, caching the raw bytes.

    The base URL comes from the argument, then the ``OEIS_BASE_URL``
    environment variable, then the public OEIS host.  Network, HTTP-status,
    and parse failures raise distinct exceptions; there is no silent
    fallback to bundled fixtures.
    """
    _check_sequence_id(sequence_id)
    if base_url is None:
        base_url = os.environ.get("OEIS_BASE_URL", DEFAULT_BASE_URL)
    directory = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cached = directory / f"b{sequence_id[1:]}.txt"
    if cached.exists():
        return parse_bfile(cached.read_bytes(), sequence_id=sequence_id)

    url = f"{base_url.rstrip('/')}/{sequence_id}/b{sequence_id[1:]}.txt"
    request = urllib.request.Request(url, headers={"User-Agent": USER_AGENT})
    try:
        with urllib.request.urlopen(request, timeout=timeout) as response:
            payload = response.read()
    except urllib.error.HTTPError as exc:
        raise HTTPStatusError(f"GET {url} returned {exc.code}", status=exc.code) from exc
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkError(f"GET {url} failed: {exc}") from exc

    parsed = parse_bfile(payload, sequence_id=sequence_id)
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=directory, prefix=cached.name, suffix=".part")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(payload)
        os.replace(tmp_name, cached)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return parsed
