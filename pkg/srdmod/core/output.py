# srdmod/core/output.py
import json
from typing import Any, Dict

from pydantic import BaseModel

from srdmod.core.config import settings


def to_payload(result: Any) -> Dict[str, Any]:
    """JSON-ready dict tagged with the output schema version"""
    if isinstance(result, BaseModel):
        body = result.model_dump(mode="json")
    else:
        body = dict(result)
    body["schema"] = settings.SCHEMA_VERSION
    return body


def render(result: Any, compact: bool = False) -> str:
    return json.dumps(to_payload(result), sort_keys=True, indent=None if compact else 2)
