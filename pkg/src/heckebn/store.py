"""Content-addressed cache for computed polynomials and certificates.

Layout under the root directory:

  index.json        logical key -> content hash
  <sha256>.json     one record per file, canonical JSON

Records are immutable: the file name is the hash of its bytes, so a key
update never rewrites an existing blob.  Writes go through a temp file and
os.replace, which keeps a reader from ever seeing a partial file.  Records
stamped by a different tool version are ignored on read and recomputed.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from . import tool_stamp
from .certificates import Certificate, canonical_json_bytes, content_hash
from .giambelli import PkRecord

__all__ = ["Store", "default_cache_dir"]


def default_cache_dir() -> Path:
    env = os.environ.get("HECKE_CACHE_DIR")
    return Path(env) if env else Path.cwd() / ".hecke-cache"


class Store:
    """Disk cache keyed by record identity, addressed by content hash."""

    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.root.mkdir(parents=True, exist_ok=True)
        self._index_path = self.root / "index.json"

    def _load_index(self) -> dict[str, str]:
        try:
            with open(self._index_path, encoding="utf-8") as fh:
                obj = json.load(fh)
        except (FileNotFoundError, json.JSONDecodeError):
            return {}
        return obj if isinstance(obj, dict) else {}

    def _write_atomic(self, path: Path, data: bytes) -> None:
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise

    def _put_obj(self, key: str, obj: dict) -> str:
        data = canonical_json_bytes(obj)
        digest = content_hash(obj)
        blob = self.root / f"{digest}.json"
        if not blob.exists():
            self._write_atomic(blob, data)
        index = self._load_index()
        if index.get(key) != digest:
            index[key] = digest
            self._write_atomic(self._index_path, canonical_json_bytes(index))
        return digest

    def _get_obj(self, key: str) -> dict | None:
        digest = self._load_index().get(key)
        if digest is None:
            return None
        try:
            with open(self.root / f"{digest}.json", "rb") as fh:
                data = fh.read()
        except FileNotFoundError:
            return None
        try:
            obj = json.loads(data)
        except json.JSONDecodeError:
            return None
        if not isinstance(obj, dict) or content_hash(obj) != digest:
            return None
        return obj

    @staticmethod
    def _pk_key(k: int, variant: str) -> str:
        return f"pk:{variant}:{k}"

    @staticmethod
    def _cert_key(kind: str, k: int, g0: int) -> str:
        return f"cert:{kind}:{k}:{g0}"

    def put_pk_record(self, rec: PkRecord) -> str:
        return self._put_obj(self._pk_key(rec.k, rec.variant), rec.to_json_obj())

    def get_pk_record(self, k: int, variant: str) -> PkRecord | None:
        obj = self._get_obj(self._pk_key(k, variant))
        if obj is None:
            return None
        try:
            rec = PkRecord.from_json_obj(obj)
        except (KeyError, ValueError, TypeError):
            return None
        if rec.version != tool_stamp():
            return None
        return rec

    def put_certificate(self, cert: Certificate) -> str:
        return self._put_obj(
            self._cert_key(cert.kind, cert.k, cert.g0), cert.to_json_obj()
        )

    def get_certificate(self, kind: str, k: int, g0: int) -> Certificate | None:
        obj = self._get_obj(self._cert_key(kind, k, g0))
        if obj is None:
            return None
        try:
            cert = Certificate.from_json_obj(obj)
        except (KeyError, ValueError, TypeError):
            return None
        if cert.generated_by != tool_stamp():
            return None
        return cert

    def certificates_for(self, kind: str, k: int) -> list[Certificate]:
        """All stored certificates of one kind for one k, ordered by prime."""
        prefix = f"cert:{kind}:{k}:"
        out = []
        for key in self._load_index():
            if key.startswith(prefix):
                cert = self.get_certificate(kind, k, int(key.rsplit(":", 1)[1]))
                if cert is not None:
                    out.append(cert)
        return sorted(out, key=lambda c: c.g0)

    def path_for(self, digest: str) -> Path:
        return self.root / f"{digest}.json"
