"""
Output envelope
Every command prints one envelope: schema version, command, echoed inputs,
result payload and named checks. Rationals appear as {"num", "den"} digit
strings; keys are sorted so output is byte-stable.
"""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from quatclass.errors import QuatClassError

SCHEMA_VERSION = "1"

class OutputEnvelope(BaseModel):
    """Versioned JSON document written by every command"""

    schema_version: str = SCHEMA_VERSION
    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    checks: List[Dict[str, str]] = Field(default_factory=list)
    error: Optional[Dict[str, Any]] = None

    def to_json(self) -> str:
        """Deterministic serialization: sorted keys, two-space indent"""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False)

def check_entries(results) -> List[Dict[str, str]]:
    """{name, status, detail} entries from IdentityResult objects"""
    return [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]

def error_envelope(command: str, inputs: Dict[str, Any], error: QuatClassError) -> OutputEnvelope:
    return OutputEnvelope(command=command, inputs=inputs, error=error.to_dict())
