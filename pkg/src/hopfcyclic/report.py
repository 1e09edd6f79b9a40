"""Check reports shared by every verifier."""

from dataclasses import dataclass, field

SCHEMA_VERSION = "1.0"

MAX_WITNESSES = 20


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    checked: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, **witness):
        self.passed = False
        self.failed += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(witness)

    def merge(self, other):
        self.checked += other.checked
        self.failed += other.failed
        if not other.passed:
            self.passed = False
            for w in other.failures:
                if len(self.failures) < MAX_WITNESSES:
                    self.failures.append(dict(w, check=other.name))
        return self

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failed": self.failed,
            "failures": [jsonable(w) for w in self.failures],
            "details": jsonable(self.details),
        }

    def __bool__(self):
        return self.passed


def jsonable(x):
    """Convert scalars, words and elements into JSON-safe values."""
    if isinstance(x, dict):
        if all(isinstance(k, str) for k in x):
            return {k: jsonable(v) for k, v in x.items()}
        return [[jsonable(k), jsonable(v)] for k, v in x.items()]
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)
