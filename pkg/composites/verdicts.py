"""Verdict types shared by composite.property_report and the claims harness."""

import enum
from dataclasses import dataclass, field

import pandas as pd


class ClaimId(enum.Enum):
    P1a = "P1a"
    P1b = "P1b"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"
    P8 = "P8"
    T9 = "T9"
    P10 = "P10"
    P11 = "P11"
    P12a = "P12a"
    P12b = "P12b"
    P13 = "P13"
    T_DEDEKIND = "T_DEDEKIND"
    P14a = "P14a"
    P14b = "P14b"
    P14c = "P14c"
    P14d = "P14d"
    P01 = "P01"
    P02 = "P02"
    P04 = "P04"
    P06 = "P06"
    P07 = "P07"
    P09 = "P09"
    P10G = "P10G"
    SEQ_EXACT = "SEQ_EXACT"
    DIAGRAM = "DIAGRAM"

    def __str__(self):
        return self.value


class Tested(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNTESTED = "UNTESTED"

    def __str__(self):
        return self.value

    @classmethod
    def of(cls, holds):
        if holds is None:
            return cls.UNTESTED
        return cls.PASS if holds else cls.FAIL


class Outcome(enum.Enum):
    AGREE = "agree"
    CONTRADICT = "contradict"
    UNTESTED = "untested"


@dataclass(frozen=True)
class Asserted:
    """true, false, or conditional on a hypothesis the instance does not settle."""

    value: bool | None
    condition: str = ""

    @classmethod
    def true(cls):
        return cls(True)

    @classmethod
    def false(cls):
        return cls(False)

    @classmethod
    def conditional(cls, text):
        return cls(None, text)

    @classmethod
    def of(cls, value):
        return cls(bool(value))

    def __str__(self):
        if self.value is None:
            return f"conditional({self.condition})"
        return "true" if self.value else "false"


def outcome(asserted: Asserted, tested: Tested) -> Outcome:
    if asserted.value is None or tested is Tested.UNTESTED:
        return Outcome.UNTESTED
    if asserted.value == (tested is Tested.PASS):
        return Outcome.AGREE
    return Outcome.CONTRADICT


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: ClaimId
    statement: str
    asserted: Asserted
    tested: Tested
    citation: str
    witness: dict = field(default_factory=dict)

    @property
    def outcome(self) -> Outcome:
        return outcome(self.asserted, self.tested)


PROPERTIES = (
    "atomic",
    "accp",
    "bfd",
    "hfd",
    "ffd",
    "idf",
    "ufd",
    "noetherian",
    "integrally_closed",
    "s_domain",
    "hilbert",
    "dedekind",
)

# arrows of the factorization diagram
IMPLICATIONS = (
    ("ufd", "ffd"),
    ("ufd", "hfd"),
    ("ffd", "bfd"),
    ("ffd", "idf"),
    ("hfd", "atomic"),
    ("bfd", "accp"),
    ("accp", "atomic"),
)


@dataclass(frozen=True)
class PropertyEntry:
    asserted: Asserted
    citation: str
    tested: Tested = Tested.UNTESTED
    witness: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PropertyReport:
    ring: object
    entries: dict

    def __getitem__(self, name) -> PropertyEntry:
        return self.entries[name]

    def diagram_violations(self):
        """Arrows a ⇒ b whose asserted verdicts read a = true, b = false."""
        violations = []
        for a, b in IMPLICATIONS:
            if self.entries[a].asserted.value is True and self.entries[b].asserted.value is False:
                violations.append(f"{a} => {b}")
        return violations

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "property": name,
                "asserted": str(entry.asserted),
                "tested": str(entry.tested),
                "cite": entry.citation,
            }
            for name, entry in self.entries.items()
        ]
        return pd.DataFrame(rows, columns=["property", "asserted", "tested", "cite"])
