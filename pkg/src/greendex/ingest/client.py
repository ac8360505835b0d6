"""Statistics-API client: JSON-stat 2.0 decoding and a verbatim cache.

One HTTP GET per dataset code, asking for a single year and an explicit
geo list. Successful response bodies are cached verbatim (plus a small
metadata sidecar) keyed by (code, year, sorted geos); identical future
requests are served from the cache with zero network traffic, which also
makes decode bugs re-testable offline.

Cache writes are atomic (write to a temp file, then rename), so a
concurrent double-fetch can interleave freely without producing a
partial file.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from pathlib import Path
from typing import Protocol
from urllib.parse import urlencode

from ..errors import DecodeError, NetworkError, UpstreamError
from .sources import EurostatApi, RawObservation


class Transport(Protocol):
    """Minimal HTTP GET: url in, (status, body bytes) out."""

    def get(self, url: str) -> tuple[int, bytes]: ...


class RequestsTransport:
    """Default transport backed by the requests library."""

    def __init__(self, timeout: float = 30.0):
        self.timeout = timeout

    def get(self, url: str) -> tuple[int, bytes]:
        import requests

        response = requests.get(url, timeout=self.timeout)
        return response.status_code, response.content


class RecordingTransport:
    """Test transport: serves canned responses and logs every request."""

    def __init__(self, responses: dict[str, tuple[int, bytes]] | None = None,
                 default: tuple[int, bytes] | None = None):
        self.responses = dict(responses or {})
        self.default = default
        self.requests: list[str] = []

    def get(self, url: str) -> tuple[int, bytes]:
        self.requests.append(url)
        for fragment, response in self.responses.items():
            if fragment in url:
                return response
        if self.default is None:
            raise ConnectionError(f"no canned response for {url}")
        return self.default


class FailingTransport:
    """Test transport that refuses every call (offline simulation)."""

    def __init__(self):
        self.requests: list[str] = []

    def get(self, url: str) -> tuple[int, bytes]:
        self.requests.append(url)
        raise ConnectionError("network disabled")


def request_url(source: EurostatApi, dataset_code: str, year: int,
                geos: tuple[str, ...]) -> str:
    params = [("format", "JSON"), ("lang", "EN"), ("time", str(year))]
    params += [("geo", g) for g in geos]
    return f"{source.base_url}/{dataset_code}?{urlencode(params)}"


def cache_key(dataset_code: str, year: int, geos: tuple[str, ...]) -> str:
    digest = hashlib.sha256(",".join(geos).encode("utf-8")).hexdigest()[:12]
    return f"{dataset_code}_{year}_{digest}"


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _category_index(category: dict, code: str) -> dict[str, int]:
    index = category.get("index")
    if index is None:
        label = category.get("label")
        if isinstance(label, dict) and len(label) == 1:
            return {next(iter(label)): 0}  # singleton dimension may omit index
        raise DecodeError("dimension category without index", code=code)
    if isinstance(index, list):
        return {key: pos for pos, key in enumerate(index)}
    if isinstance(index, dict):
        return {key: int(pos) for key, pos in index.items()}
    raise DecodeError(f"unexpected category index type {type(index).__name__}",
                      code=code)


def decode_json_stat(body: bytes, dataset_code: str, year: int,
                     geos: tuple[str, ...]) -> list[RawObservation]:
    """Decode a JSON-stat 2.0 dataset body into raw observations.

    Handles both the dense list form of ``value`` and the sparse
    linear-index-keyed object form. Any dimension other than geo/time must
    be a singleton (the request pins them); anything else is ambiguous and
    rejected loudly.
    """
    try:
        doc = json.loads(body.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        raise DecodeError(f"response is not JSON: {err}", code=dataset_code) from None

    try:
        ids = list(doc["id"])
        sizes = [int(s) for s in doc["size"]]
        dimensions = doc["dimension"]
        value = doc.get("value", {})
    except (KeyError, TypeError) as err:
        raise DecodeError(f"missing JSON-stat field: {err}", code=dataset_code) from None
    if len(ids) != len(sizes):
        raise DecodeError("id/size length mismatch", code=dataset_code)
    if "geo" not in ids or "time" not in ids:
        raise DecodeError("response lacks geo or time dimension", code=dataset_code)

    indexes = {}
    for dim in ids:
        try:
            indexes[dim] = _category_index(dimensions[dim]["category"], dataset_code)
        except (KeyError, TypeError):
            raise DecodeError(f"malformed dimension {dim!r}", code=dataset_code) from None

    time_index = indexes["time"]
    if str(year) not in time_index:
        return []  # requested year absent upstream
    fixed: dict[str, int] = {"time": time_index[str(year)]}
    for dim, size in zip(ids, sizes):
        if dim in ("geo", "time"):
            continue
        if size != 1:
            raise DecodeError(
                f"dimension {dim!r} has {size} categories; expected a pinned "
                "singleton", code=dataset_code)
        fixed[dim] = 0

    status = doc.get("status") or {}

    def value_at(linear: int):
        if isinstance(value, list):
            return value[linear] if linear < len(value) else None
        return value.get(str(linear))

    def flags_at(linear: int) -> frozenset[str]:
        if isinstance(status, list):
            raw = status[linear] if linear < len(status) else None
        else:
            raw = status.get(str(linear))
        if not raw:
            return frozenset()
        return frozenset(ch for ch in str(raw) if ch.isalpha() and ch.islower())

    observations: list[RawObservation] = []
    geo_index = indexes["geo"]
    for geo in geos:
        if geo not in geo_index:
            continue  # absent upstream: becomes a missing cell at assembly
        linear = 0
        for dim, size in zip(ids, sizes):
            pos = geo_index[geo] if dim == "geo" else fixed[dim]
            linear = linear * size + pos
        raw = value_at(linear)
        obs_value = float(raw) if raw is not None else None
        observations.append(RawObservation(
            dataset_code=dataset_code, geo=geo, year=year,
            value=obs_value, flags=flags_at(linear)))
    return observations


def fetch_dataset(source: EurostatApi, dataset_code: str, year: int,
                  geos: set[str], transport: Transport | None = None) -> list[RawObservation]:
    """Fetch one dataset for one year and a geo set, cache-first.

    With a warm cache this is a pure function of (code, year, geos) and
    performs zero network requests. On a cold cache the raw 2xx body is
    stored verbatim before decoding.
    """
    ordered = tuple(sorted(geos))
    key = cache_key(dataset_code, year, ordered)
    body_path = source.cache_dir / f"{key}.json"

    if body_path.exists():
        body = body_path.read_bytes()
        return decode_json_stat(body, dataset_code, year, ordered)

    url = request_url(source, dataset_code, year, ordered)
    transport = transport or RequestsTransport()
    try:
        status_code, body = transport.get(url)
    except Exception as err:
        raise NetworkError(f"request for {dataset_code!r} failed: {err}",
                           code=dataset_code) from err
    if not 200 <= status_code < 300:
        raise UpstreamError(f"dataset {dataset_code!r}: upstream status {status_code}",
                            code=dataset_code, status=status_code)

    observations = decode_json_stat(body, dataset_code, year, ordered)

    meta = {
        "key": key,
        "dataset_code": dataset_code,
        "year": year,
        "geos": list(ordered),
        "fetched_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "url": url,
    }
    _atomic_write(body_path, body)
    _atomic_write(source.cache_dir / f"{key}.meta.json",
                  json.dumps(meta, indent=2).encode("utf-8") + b"\n")
    return observations
