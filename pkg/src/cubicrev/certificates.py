"""Pass/fail records with witnesses, rendered as JSON."""

from __future__ import annotations

from dataclasses import dataclass, field


def _jsonable(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "witness": _jsonable(self.witness),
        }


@dataclass
class Certificate:
    subject: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness=None) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"subject": self.subject, "checks": [c.to_json() for c in self.checks]}


class CertificateError(AssertionError):
    """A certificate that must hold by construction failed."""

    def __init__(self, cert: Certificate):
        names = ", ".join(c.name for c in cert.failures())
        super().__init__(f"{cert.subject}: failed checks {names}")
        self.certificate = cert
