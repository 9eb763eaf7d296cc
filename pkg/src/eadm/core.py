"""Outcomes, options, mass functions and assessments.

All arithmetic is exact: option values and probabilities are
:class:`fractions.Fraction` instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class DimensionError(ValueError):
    """Raised when two objects live on outcome spaces of different size."""


def to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError(f"not a number: {value!r}")
    if isinstance(value, float):
        # floats are accepted only when they are exact binary fractions
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class OutcomeSpace:
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if not self.labels:
            raise ValueError("outcome space needs at least one outcome")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"outcome labels must be distinct: {self.labels}")

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def of_size(cls, n: int) -> "OutcomeSpace":
        return cls(tuple(str(k + 1) for k in range(n)))


@dataclass(frozen=True)
class Option:
    """A utility vector over the outcomes.

    >>> Option((1, -3, 1)) - Option((1, 1, -2))
    Option(0, -4, 3)
    """

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(to_fraction(v) for v in self.values)
        if not vals:
            raise ValueError("an option needs at least one outcome")
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, c, n: int) -> "Option":
        return cls((c,) * n)

    @classmethod
    def zero(cls, n: int) -> "Option":
        return cls.constant(0, n)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def _check(self, other: "Option") -> None:
        if len(other.values) != len(self.values):
            raise DimensionError(
                f"options of length {len(self.values)} and {len(other.values)}")

    def __add__(self, other: "Option") -> "Option":
        self._check(other)
        return Option(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Option") -> "Option":
        self._check(other)
        return Option(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Option":
        return Option(tuple(-a for a in self.values))

    def scale(self, factor) -> "Option":
        f = to_fraction(factor)
        return Option(tuple(f * a for a in self.values))

    def __repr__(self) -> str:
        return "Option(" + ", ".join(str(v) for v in self.values) + ")"


class OptionSet:
    """A finite non-empty set of options.

    Members keep their first insertion order, which makes every
    enumeration over the set deterministic. Equality is set equality.
    """

    __slots__ = ("_members", "_lookup")

    def __init__(self, members: Iterable):
        seen: dict[Option, None] = {}
        for m in members:
            opt = m if isinstance(m, Option) else Option(tuple(m))
            seen.setdefault(opt, None)
        if not seen:
            raise ValueError("an option set must be non-empty")
        ns = {len(o) for o in seen}
        if len(ns) != 1:
            raise DimensionError(f"option set mixes lengths {sorted(ns)}")
        self._members = tuple(seen)
        self._lookup = frozenset(self._members)

    @property
    def n(self) -> int:
        return len(self._members[0])

    def __iter__(self) -> Iterator[Option]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, item) -> bool:
        return item in self._lookup

    def __eq__(self, other) -> bool:
        if isinstance(other, OptionSet):
            return self._lookup == other._lookup
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._lookup)

    def __le__(self, other: "OptionSet") -> bool:
        return self._lookup <= other._lookup

    def isdisjoint(self, other: "OptionSet") -> bool:
        return self._lookup.isdisjoint(other._lookup)

    def union(self, other: "OptionSet") -> "OptionSet":
        return OptionSet(self._members + other._members)

    def as_frozenset(self) -> frozenset:
        return self._lookup

    def __repr__(self) -> str:
        return "OptionSet([" + ", ".join(map(repr, self._members)) + "])"


@dataclass(frozen=True)
class MassFunction:
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        ps = tuple(to_fraction(p) for p in self.probs)
        if not ps:
            raise ValueError("empty mass function")
        if any(p < 0 for p in ps):
            raise ValueError(f"negative probability in {ps}")
        if sum(ps) != 1:
            raise ValueError(f"probabilities sum to {sum(ps)}, not 1")
        object.__setattr__(self, "probs", ps)

    @classmethod
    def uniform(cls, n: int) -> "MassFunction":
        return cls((Fraction(1, n),) * n)

    @classmethod
    def normalise(cls, weights: Sequence) -> "MassFunction":
        """Scale non-negative weights with a positive sum to a mass function."""
        ws = [to_fraction(w) for w in weights]
        total = sum(ws)
        if total <= 0:
            raise ValueError("weights must have a positive sum")
        return cls(tuple(w / total for w in ws))

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probs)

    def __repr__(self) -> str:
        return "MassFunction(" + ", ".join(str(p) for p in self.probs) + ")"


@dataclass(frozen=True)
class Assessment:
    """Pairs ``(V, W)`` stating that every option of ``W`` is rejected from
    ``V | W``.

    ``n`` is inferred from the pairs; it must be given for an empty
    assessment when the outcome count matters (consistency, witnesses).
    """

    pairs: tuple[tuple[OptionSet, OptionSet], ...] = ()
    n: int | None = field(default=None, compare=False)

    def __post_init__(self):
        pairs = []
        for pair in self.pairs:
            keep, reject = pair
            keep = keep if isinstance(keep, OptionSet) else OptionSet(keep)
            reject = reject if isinstance(reject, OptionSet) else OptionSet(reject)
            if not keep.isdisjoint(reject):
                raise ValueError(f"kept and rejected options overlap in {pair!r}")
            pairs.append((keep, reject))
        ns = {s.n for pair in pairs for s in pair}
        if self.n is not None:
            ns.add(self.n)
        if len(ns) > 1:
            raise DimensionError(f"assessment mixes outcome counts {sorted(ns)}")
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "n", ns.pop() if ns else None)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def add(self, keep, reject) -> "Assessment":
        return Assessment(self.pairs + ((keep, reject),), n=self.n)


def expectation(p: MassFunction, u: Option) -> Fraction:
    if len(p) != len(u):
        raise DimensionError(
            f"mass function over {len(p)} outcomes, option over {len(u)}")
    return sum((pk * uk for pk, uk in zip(p.probs, u.values)), Fraction(0))


def choice_by_mass(p: MassFunction, options: OptionSet) -> OptionSet:
    """Options in ``options`` with maximal expected utility under ``p``."""
    values = {u: expectation(p, u) for u in options}
    best = max(values.values())
    return OptionSet(u for u, e in values.items() if e == best)


def credal_member(p: MassFunction, assessment: Assessment) -> bool:
    """Whether ``p`` is compatible with every rejection in ``assessment``.

    For each pair and each rejected ``w`` some kept ``v`` must have a
    strictly larger expectation.
    """
    for keep, reject in assessment:
        best_kept = max(expectation(p, v) for v in keep)
        if any(expectation(p, w) >= best_kept for w in reject):
            return False
    return True
