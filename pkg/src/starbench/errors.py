"""Exception hierarchy for the workbench.

Every error carries enough structure to be rendered both as text and as a
JSON object by the CLI. The CLI maps classes to exit codes:

* parse and input errors -> 2
* unmet hypotheses, caps, action-axiom failures -> 4
* verification failures (a checked claim came out false) -> 5
"""

from __future__ import annotations

from typing import Any, Optional, Sequence


class StarbenchError(Exception):
    """Base class; subclasses fill ``payload()`` for structured rendering."""

    def payload(self) -> dict:
        return {"type": type(self).__name__, "message": str(self)}


class DescriptorError(StarbenchError):
    """A ring descriptor violates a constructor invariant (bad modulus, ...)."""


class LiteralError(StarbenchError):
    """An element literal does not denote an element of the ring."""


class ParseError(StarbenchError):
    """Syntax error in the ring-expression DSL.

    ``offset`` is the byte offset of the offending token in the input and
    ``expected`` lists the token descriptions that would have been accepted.
    """

    def __init__(self, offset: int, expected: Sequence[str], found: str):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        want = " or ".join(self.expected) if self.expected else "nothing"
        super().__init__(
            "parse error at offset %d: expected %s, found %s"
            % (offset, want, found)
        )

    def payload(self) -> dict:
        return {
            "type": "ParseError",
            "message": str(self),
            "offset": self.offset,
            "expected": list(self.expected),
            "found": self.found,
        }


class OrderCapExceeded(StarbenchError):
    def __init__(self, order: int, cap: int, what: str = "ring"):
        self.order = order
        self.cap = cap
        super().__init__(
            "%s order %d exceeds the configured cap %d" % (what, order, cap)
        )

    def payload(self) -> dict:
        return {
            "type": "OrderCapExceeded",
            "message": str(self),
            "order": self.order,
            "cap": self.cap,
        }


class AxiomViolation(StarbenchError):
    """A structural *-ring axiom failed; ``witness`` are element literals."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__("axiom %r fails at witness %r" % (axiom, witness))

    def payload(self) -> dict:
        return {
            "type": type(self).__name__,
            "message": str(self),
            "axiom": self.axiom,
            "witness": list(self.witness),
        }


class ActionAxiomViolation(AxiomViolation):
    """A scalar-action axiom failed during exhaustive validation."""


class CharacteristicMismatch(StarbenchError):
    def __init__(self, characteristic: int, modulus: int):
        self.characteristic = characteristic
        self.modulus = modulus
        super().__init__(
            "natural action needs char(R) | m; got characteristic %d, modulus %d"
            % (characteristic, modulus)
        )


class NoRightProjection(StarbenchError):
    def __init__(self, element: Any):
        self.element = element
        super().__init__("no right projection exists for %r" % (element,))


class AmbiguousRightProjection(StarbenchError):
    def __init__(self, element: Any, candidates: Sequence[Any]):
        self.element = element
        self.candidates = tuple(candidates)
        super().__init__(
            "right projection of %r is not unique; candidates %r"
            % (element, list(candidates))
        )


class NoLeftProjection(StarbenchError):
    def __init__(self, element: Any):
        self.element = element
        super().__init__("no left projection exists for %r" % (element,))


class AmbiguousLeftProjection(StarbenchError):
    def __init__(self, element: Any, candidates: Sequence[Any]):
        self.element = element
        self.candidates = tuple(candidates)
        super().__init__(
            "left projection of %r is not unique; candidates %r"
            % (element, list(candidates))
        )


class NoCentralCover(StarbenchError):
    def __init__(self, element: Any):
        self.element = element
        super().__init__("no central cover exists for %r" % (element,))


class NoGreatestElement(StarbenchError):
    def __init__(self, candidates: Sequence[Any]):
        self.candidates = tuple(candidates)
        super().__init__(
            "candidate projection set has no greatest element: %r"
            % (list(candidates),)
        )


class FamilyCapExceeded(StarbenchError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__("annihilator family exceeds the cap of %d sets" % cap)


class HypothesisNotMet(StarbenchError):
    """A precondition of a verification routine does not hold for the input."""

    def __init__(self, hypothesis: str, witness: Any = None):
        self.hypothesis = hypothesis
        self.witness = witness
        msg = "hypothesis not met: %s" % hypothesis
        if witness is not None:
            msg += " (witness %r)" % (witness,)
        super().__init__(msg)

    def payload(self) -> dict:
        out = {
            "type": "HypothesisNotMet",
            "message": str(self),
            "hypothesis": self.hypothesis,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class InvolutionNotWellDefined(StarbenchError):
    """The kernel ideal is not star-closed, so the quotient has no involution."""

    def __init__(self, witness: Any):
        self.witness = witness
        super().__init__(
            "kernel is not closed under the involution; witness %r" % (witness,)
        )


class FormulaMismatch(StarbenchError):
    """The closed-form projection formula disagreed with the brute-force scan."""

    def __init__(self, element: Any, formula_result: Any, brute_result: Any):
        self.element = element
        self.formula_result = formula_result
        self.brute_result = brute_result
        super().__init__(
            "formula gives %r but exhaustive search gives %r at %r"
            % (formula_result, brute_result, element)
        )


class VerificationFailed(StarbenchError):
    """A theorem-level claim checked exhaustively came out false."""

    def __init__(self, claim: str, witness: Any = None):
        self.claim = claim
        self.witness = witness
        msg = "verification failed: %s" % claim
        if witness is not None:
            msg += " (witness %r)" % (witness,)
        super().__init__(msg)

    def payload(self) -> dict:
        out = {
            "type": "VerificationFailed",
            "message": str(self),
            "claim": self.claim,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out
