"""Structured result of checking one identity on one input."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of a verified identity, plus the context that produced them.

    holds is True iff lhs == rhs; context carries whatever intermediate
    values (floor sums, counts, offsets) make the report auditable.
    """

    name: str
    lhs: int
    rhs: int
    holds: bool
    context: dict = field(default_factory=dict)


def make_report(name, lhs, rhs, **context):
    return IdentityReport(name=name, lhs=lhs, rhs=rhs, holds=(lhs == rhs),
                          context=context)
