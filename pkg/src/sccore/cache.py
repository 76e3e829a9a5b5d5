"""On-disk coefficient cache: versioned binary files with a trailing checksum.

Layout: MAGIC, then a JSON header line {version, family, t, n, width}, then
the payload, then sha256(header + payload).  width > 0 stores fixed-width
little-endian unsigned integers; width = 0 stores length-prefixed big-integer
records (4-byte LE length + magnitude bytes).  Version or parameter mismatch
and checksum failure both surface as CacheCorrupt; callers recompute.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
from pathlib import Path

from .errors import CacheCorrupt
from .series import (
    TruncatedSeries,
    c_t_coeffs,
    nsc_t_coeffs,
    p_coeffs,
    phat_coeffs,
    sc_coeffs,
    sc_t_coeffs,
)

MAGIC = b"SCCOREC1"
VERSION = 1

FAMILIES_WITH_T = ("sc_t", "c_t", "phat", "nsc_t")
FAMILIES_NO_T = ("sc", "p")


def compute_family(family: str, t: int | None, n: int) -> TruncatedSeries:
    """Dispatch to the series builders; the single source of coefficient truth."""
    if family == "sc":
        return sc_coeffs(n)
    if family == "p":
        return p_coeffs(n)
    if t is None:
        raise ValueError(f"family {family!r} needs t")
    if family == "sc_t":
        return sc_t_coeffs(t, n)
    if family == "c_t":
        return c_t_coeffs(t, n)
    if family == "phat":
        return phat_coeffs(t, n)
    if family == "nsc_t":
        return nsc_t_coeffs(t, n)
    raise ValueError(f"unknown family {family!r}")


def default_cache_dir() -> Path:
    env = os.environ.get("SCCORE_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "sccore"


def cache_path(cache_dir: Path, family: str, t: int | None, n: int) -> Path:
    name = f"{family}_t{t}_n{n}.bin" if t is not None else f"{family}_n{n}.bin"
    return Path(cache_dir) / name


def _encode(family: str, t: int | None, n: int, coeffs: tuple[int, ...]) -> bytes:
    if any(c < 0 for c in coeffs):
        raise ValueError("cache stores non-negative coefficient families only")
    width = 8 if max(coeffs, default=0) < (1 << 64) else 0
    header = json.dumps(
        {"version": VERSION, "family": family, "t": t, "n": n, "width": width},
        sort_keys=True,
    ).encode() + b"\n"
    if width:
        payload = b"".join(c.to_bytes(width, "little") for c in coeffs)
    else:
        chunks = []
        for c in coeffs:
            raw = c.to_bytes((c.bit_length() + 7) // 8 or 1, "little")
            chunks.append(len(raw).to_bytes(4, "little") + raw)
        payload = b"".join(chunks)
    body = header + payload
    return MAGIC + body + hashlib.sha256(body).digest()


def _decode(blob: bytes, family: str, t: int | None, n: int) -> tuple[int, ...]:
    if not blob.startswith(MAGIC):
        raise CacheCorrupt("bad magic")
    body, digest = blob[len(MAGIC):-32], blob[-32:]
    if hashlib.sha256(body).digest() != digest:
        raise CacheCorrupt("checksum mismatch")
    nl = body.index(b"\n")
    header = json.loads(body[:nl])
    if header.get("version") != VERSION:
        raise CacheCorrupt(f"version {header.get('version')} != {VERSION}")
    if (header.get("family"), header.get("t"), header.get("n")) != (family, t, n):
        raise CacheCorrupt("header does not match requested series")
    payload = body[nl + 1:]
    width = header["width"]
    coeffs = []
    if width:
        if len(payload) != (n + 1) * width:
            raise CacheCorrupt("payload length mismatch")
        for k in range(n + 1):
            coeffs.append(int.from_bytes(payload[k * width:(k + 1) * width], "little"))
    else:
        pos = 0
        for _ in range(n + 1):
            ln = int.from_bytes(payload[pos:pos + 4], "little")
            pos += 4
            coeffs.append(int.from_bytes(payload[pos:pos + ln], "little"))
            pos += ln
        if pos != len(payload):
            raise CacheCorrupt("payload length mismatch")
    return tuple(coeffs)


def write_cache(cache_dir: Path, family: str, t: int | None, n: int, coeffs: tuple[int, ...]) -> Path:
    """Atomic write (temp file + rename)."""
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_path(cache_dir, family, t, n)
    blob = _encode(family, t, n, coeffs)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def load_or_compute(cache_dir: Path | None, family: str, t: int | None, n: int) -> tuple[tuple[int, ...], str]:
    """Returns (coeffs, source) with source in {"cache", "computed", "recomputed"}.

    A corrupt cache file is replaced by a fresh computation with a warning
    source tag, never an error.
    """
    if cache_dir is None:
        return compute_family(family, t, n).coeffs, "computed"
    path = cache_path(Path(cache_dir), family, t, n)
    if path.exists():
        try:
            return _decode(path.read_bytes(), family, t, n), "cache"
        except CacheCorrupt:
            coeffs = compute_family(family, t, n).coeffs
            write_cache(cache_dir, family, t, n, coeffs)
            return coeffs, "recomputed"
    coeffs = compute_family(family, t, n).coeffs
    write_cache(cache_dir, family, t, n, coeffs)
    return coeffs, "computed"


def verify_file(path: Path, sample_fraction: float = 0.01, seed: int = 0) -> dict:
    """Checksum plus a deterministic random-sample recomputation."""
    blob = Path(path).read_bytes()
    if not blob.startswith(MAGIC):
        raise CacheCorrupt("bad magic")
    body = blob[len(MAGIC):-32]
    nl = body.index(b"\n")
    header = json.loads(body[:nl])
    family, t, n = header["family"], header["t"], header["n"]
    coeffs = _decode(blob, family, t, n)
    fresh = compute_family(family, t, n).coeffs
    rng = random.Random(seed)
    k = max(1, int((n + 1) * sample_fraction))
    sample = rng.sample(range(n + 1), min(k, n + 1))
    bad = [i for i in sample if coeffs[i] != fresh[i]]
    return {
        "path": str(path),
        "family": family,
        "t": t,
        "n": n,
        "sampled": len(sample),
        "mismatches": bad,
        "ok": not bad,
    }


def purge(cache_dir: Path) -> int:
    """Remove every cache file; returns the number deleted."""
    cache_dir = Path(cache_dir)
    removed = 0
    if cache_dir.is_dir():
        for p in cache_dir.glob("*.bin"):
            p.unlink()
            removed += 1
    return removed
