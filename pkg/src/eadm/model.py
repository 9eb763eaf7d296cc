"""Model documents: JSON text <-> outcomes, named options and an assessment.

A model document looks like::

    {
      "schema": "eadm-model/1",
      "outcomes": ["1", "2", "3"],
      "options": {"w1": [1, -3, 1], "v1": ["-1", "2", "-2"], "p": ["3/20", "0.5", 1]},
      "assessment": [{"keep": ["v1"], "reject": ["v2", "v3"]}]
    }

Numbers may be JSON integers, JSON decimals, decimal strings or
``"a/b"`` strings. Everything is converted to exact fractions.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .core import Assessment, Option, OptionSet, OutcomeSpace

SCHEMA = "eadm-model/1"

_NUMBER = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$")
_RATIO = re.compile(r"^\s*[+-]?\d+\s*/\s*\d+\s*$")


class ModelError(ValueError):
    """A model document is malformed.

    ``code`` is a stable machine-readable tag and ``location`` a
    JSON-pointer-like path to the offending element.
    """

    def __init__(self, code: str, location: str, message: str):
        super().__init__(f"{location}: {message} [{code}]")
        self.code = code
        self.location = location
        self.message = message


@dataclass(frozen=True)
class Model:
    outcomes: OutcomeSpace
    options: dict[str, Option]
    entries: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]

    @property
    def assessment(self) -> Assessment:
        return Assessment(
            tuple((OptionSet(self.options[k] for k in keep),
                   OptionSet(self.options[r] for r in reject))
                  for keep, reject in self.entries),
            n=self.outcomes.n)

    def option_set(self, names) -> OptionSet:
        return OptionSet(self.options[name] for name in names)

    def name_of(self, option: Option) -> str:
        for name, o in self.options.items():
            if o == option:
                return name
        raise KeyError(option)


def parse_number(value, location: str = "") -> Fraction:
    if isinstance(value, bool):
        raise ModelError("bad-number", location, f"not a number: {value!r}")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        if _RATIO.match(value):
            num, den = value.split("/")
            if int(den) == 0:
                raise ModelError("bad-number", location, f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        if _NUMBER.match(value):
            return Fraction(Decimal(value.strip()))
    raise ModelError("bad-number", location, f"not a number: {value!r}")


def format_number(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _names(raw, location: str, defined) -> tuple[str, ...]:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise ModelError("bad-schema", location, "expected a list of option names")
    if not raw:
        raise ModelError("empty-set", location, "option list must be non-empty")
    for i, name in enumerate(raw):
        if name not in defined:
            raise ModelError("unknown-option", f"{location}/{i}", f"undefined option {name!r}")
    return tuple(raw)


def model_from_dict(doc) -> Model:
    if not isinstance(doc, dict):
        raise ModelError("bad-schema", "", "top level must be an object")
    if doc.get("schema") != SCHEMA:
        raise ModelError("bad-schema", "/schema",
                         f"expected schema {SCHEMA!r}, got {doc.get('schema')!r}")
    for key in ("outcomes", "options"):
        if key not in doc:
            raise ModelError("bad-schema", f"/{key}", "missing field")

    raw_outcomes = doc["outcomes"]
    if not isinstance(raw_outcomes, list) or not raw_outcomes:
        raise ModelError("bad-schema", "/outcomes", "expected a non-empty list")
    try:
        outcomes = OutcomeSpace(tuple(raw_outcomes))
    except ValueError as exc:
        raise ModelError("bad-schema", "/outcomes", str(exc)) from None

    raw_options = doc["options"]
    if not isinstance(raw_options, dict):
        raise ModelError("bad-schema", "/options", "expected an object")
    options = {}
    for name, vec in raw_options.items():
        loc = f"/options/{name}"
        if not isinstance(vec, list):
            raise ModelError("bad-schema", loc, "expected a list of numbers")
        if len(vec) != outcomes.n:
            raise ModelError("length-mismatch", loc,
                             f"{len(vec)} values for {outcomes.n} outcomes")
        options[name] = Option(tuple(parse_number(v, f"{loc}/{k}")
                                     for k, v in enumerate(vec)))

    raw_assessment = doc.get("assessment", [])
    if not isinstance(raw_assessment, list):
        raise ModelError("bad-schema", "/assessment", "expected a list")
    entries = []
    for i, entry in enumerate(raw_assessment):
        loc = f"/assessment/{i}"
        if not isinstance(entry, dict) or "keep" not in entry or "reject" not in entry:
            raise ModelError("bad-schema", loc, "expected {keep: [...], reject: [...]}")
        keep = _names(entry["keep"], f"{loc}/keep", options)
        reject = _names(entry["reject"], f"{loc}/reject", options)
        kept_values = {options[k] for k in keep}
        clash = [r for r in reject if options[r] in kept_values]
        if clash:
            raise ModelError("overlap", loc, f"options both kept and rejected: {clash}")
        entries.append((keep, reject))
    return Model(outcomes, options, tuple(entries))


def parse_model(text: str) -> Model:
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ModelError("bad-json", f"line {exc.lineno} col {exc.colno}", exc.msg) from None
    return model_from_dict(doc)


def load_model(path) -> Model:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


def model_to_dict(model: Model) -> dict:
    return {
        "schema": SCHEMA,
        "outcomes": list(model.outcomes.labels),
        "options": {name: [format_number(v) for v in o]
                    for name, o in model.options.items()},
        "assessment": [{"keep": list(k), "reject": list(r)} for k, r in model.entries],
    }


def dump_model(model: Model) -> str:
    return json.dumps(model_to_dict(model), indent=2)
