"""
File-based JSON cache for enumerated poset corpora.
Regenerating n=7 takes a while; loading it back is instant.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Optional

logger = logging.getLogger(__name__)

CACHE_VERSION = "v1"


class CorpusCache:
    """Stores JSON documents under md5-hashed names"""

    def __init__(self, cache_dir: Path):
        self.cache_dir = Path(cache_dir)

    def _path(self, key: str) -> Path:
        digest = hashlib.md5(f"{CACHE_VERSION}:{key}".encode()).hexdigest()
        return self.cache_dir / f"{digest}.json"

    def get(self, key: str) -> Optional[Any]:
        cache_file = self._path(key)

        if cache_file.exists():
            try:
                with open(cache_file, "r", encoding="utf-8") as f:
                    return json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning(f"Ignoring unreadable cache entry {cache_file.name}: {e}")
                return None

        return None

    def set(self, key: str, value: Any):
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            with open(self._path(key), "w", encoding="utf-8") as f:
                json.dump(value, f)
        except OSError as e:
            logger.warning(f"Could not cache {key}: {e}")

    def clear(self):
        if not self.cache_dir.exists():
            return
        for cache_file in self.cache_dir.glob("*.json"):
            cache_file.unlink()
        logger.info("Corpus cache cleared")
