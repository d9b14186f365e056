"""Typed errors shared across the package.

Every error carries a machine-readable ``code`` (used by the CLI) and keeps
its witness data as attributes, so callers can inspect the offending
instance instead of parsing messages.
"""

from __future__ import annotations

from typing import Any


class MonoidGeomError(Exception):
    code = "error"

    def payload(self) -> dict[str, Any]:
        return {"code": self.code, "message": str(self)}


class UnknownLabel(MonoidGeomError):
    code = "unknown-label"

    def __init__(self, label: str, context: str = ""):
        self.label = label
        super().__init__(f"unknown label {label!r}" + (f" in {context}" if context else ""))


class BadIdentity(MonoidGeomError):
    code = "bad-identity"

    def __init__(self, identity: str, witness: str, product: str):
        self.identity, self.witness, self.product = identity, witness, product
        super().__init__(
            f"{identity!r} is not a two-sided identity: product with {witness!r} is {product!r}"
        )


class NonAssociative(MonoidGeomError):
    code = "non-associative"

    def __init__(self, triple: tuple[str, str, str]):
        self.triple = triple
        a, b, c = triple
        super().__init__(f"associativity fails on ({a!r}, {b!r}, {c!r})")


class NotAHomomorphism(MonoidGeomError):
    code = "not-a-homomorphism"

    def __init__(self, x: str, y: str):
        self.pair = (x, y)
        super().__init__(f"map does not preserve the product of ({x!r}, {y!r})")


class NotIdempotent(MonoidGeomError):
    code = "not-idempotent"

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"{label!r} is not idempotent")


class WrongSidedness(MonoidGeomError):
    code = "wrong-sidedness"

    def __init__(self, expected: str, got: str, witness: Any = None):
        self.expected, self.got, self.witness = expected, got, witness
        msg = f"expected a {expected} congruence, got {got}"
        if witness is not None:
            msg += f" (witness {witness})"
        super().__init__(msg)


class BadAction(MonoidGeomError):
    code = "bad-action"

    def __init__(self, axiom: str, witness: Any):
        self.axiom, self.witness = axiom, witness
        super().__init__(f"action axiom {axiom} fails at {witness}")


class MonoidMismatch(MonoidGeomError):
    code = "monoid-mismatch"

    def __init__(self, expected: str, got: str):
        self.expected, self.got = expected, got
        super().__init__(f"monoid mismatch: expected {expected}, got {got}")


class NotFlat(MonoidGeomError):
    code = "not-flat"

    def __init__(self, condition: int, witness: Any):
        self.condition, self.witness = condition, witness
        super().__init__(f"left action is not flat: condition ({condition}) fails at {witness}")


class NotAGroup(MonoidGeomError):
    code = "not-a-group"

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"{label!r} has no inverse")


class SizeCap(MonoidGeomError):
    code = "size-cap"

    def __init__(self, what: str, cap: int):
        self.what, self.cap = what, cap
        super().__init__(f"{what} exceeds the configured cap {cap}")


class CapExceeded(MonoidGeomError):
    code = "cap-exceeded"

    def __init__(self, max_elements: int):
        self.max_elements = max_elements
        super().__init__(f"enumeration exceeded max_elements = {max_elements}")


class DeadlineExceeded(MonoidGeomError):
    code = "deadline-exceeded"

    def __init__(self, what: str):
        self.what = what
        super().__init__(f"{what} cancelled by the caller-supplied deadline")


class ParseError(MonoidGeomError):
    code = "parse-error"

    def __init__(self, position: int, expected: str):
        self.position, self.expected = position, expected
        super().__init__(f"parse error at token {position}: expected {expected}")


class SchemaError(MonoidGeomError):
    code = "schema-error"

    def __init__(self, message: str):
        super().__init__(message)
