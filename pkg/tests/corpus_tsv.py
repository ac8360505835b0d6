"""Crafted Eurostat bulk-TSV samples with pinned outcomes.

Each case is either a successful parse (``expect`` lists the
observations in row order as ``(geo, value, flags)``) or a pinned
failure (``error`` plus a message fragment and, where the parser
reports one, the 1-based line number). The samples imitate the real
bulk-download layout: comma-separated dimension key ending in
``geo\\time``, tab-separated year columns with padded labels, ``:``
for missing, and space-separated lowercase flag letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from greendex.errors import EmptySelectionError, FormatError


@dataclass(frozen=True)
class TsvCase:
    name: str
    raw: bytes
    year: int = 2019
    geo_filter: frozenset[str] | None = None
    expect: tuple = ()
    error: type | None = None
    error_match: str = ""
    error_line: int | None = None


_HDR = "indic_is,unit,geo\\time\t2020 \t2019 \t2018 \n"

CORPUS = [
    TsvCase(
        name="basic two rows",
        raw=(_HDR
             + "E_IOS,PC_ENT,AT\t67 \t63 \t60 \n"
             + "E_IOS,PC_ENT,BE\t71 \t68.5 \t66 \n").encode(),
        expect=(("AT", 63.0, frozenset()), ("BE", 68.5, frozenset())),
    ),
    TsvCase(
        name="flag letters kept as metadata",
        raw=(_HDR
             + "E_IOS,PC_ENT,AT\t67 \t12.3 b\t60 \n"
             + "E_IOS,PC_ENT,BE\t71 \t5 ep\t66 \n").encode(),
        expect=(("AT", 12.3, frozenset({"b"})),
                ("BE", 5.0, frozenset({"e", "p"}))),
    ),
    TsvCase(
        name="colon is a missing value",
        raw=(_HDR
             + "E_IOS,PC_ENT,AT\t67 \t: \t60 \n"
             + "E_IOS,PC_ENT,BE\t71 \t68.5 \t66 \n").encode(),
        expect=(("AT", None, frozenset()), ("BE", 68.5, frozenset())),
    ),
    TsvCase(
        name="missing value with confidentiality flag",
        raw=(_HDR + "E_IOS,PC_ENT,MT\t: \t: c\t60 \n").encode(),
        expect=(("MT", None, frozenset({"c"})),),
    ),
    TsvCase(
        name="geo filter keeps only requested codes",
        raw=(_HDR
             + "E_IOS,PC_ENT,AT\t67 \t63 \t60 \n"
             + "E_IOS,PC_ENT,BE\t71 \t68.5 \t66 \n"
             + "E_IOS,PC_ENT,EU28\t70 \t67 \t64 \n").encode(),
        geo_filter=frozenset({"AT", "BE"}),
        expect=(("AT", 63.0, frozenset()), ("BE", 68.5, frozenset())),
    ),
    TsvCase(
        name="geo filter matching nothing",
        raw=(_HDR + "E_IOS,PC_ENT,AT\t67 \t63 \t60 \n").encode(),
        geo_filter=frozenset({"XK"}),
        error=EmptySelectionError,
        error_match="no observation",
    ),
    TsvCase(
        name="requested year not a column",
        raw=(_HDR + "E_IOS,PC_ENT,AT\t67 \t63 \t60 \n").encode(),
        year=2025,
        error=EmptySelectionError,
        error_match="2025",
    ),
    TsvCase(
        name="header missing the geo\\time marker",
        raw=("indic_is,unit,country\t2020 \t2019 \n"
             "E_IOS,PC_ENT,AT\t67 \t63 \n").encode(),
        error=FormatError,
        error_match="header must end",
        error_line=1,
    ),
    TsvCase(
        name="row with too few cells",
        raw=(_HDR
             + "E_IOS,PC_ENT,AT\t67 \t63 \t60 \n"
             + "E_IOS,PC_ENT,BE\t71 \t68.5 \n").encode(),
        error=FormatError,
        error_match="fields",
        error_line=3,
    ),
    TsvCase(
        name="uppercase flag letter rejected",
        raw=(_HDR + "E_IOS,PC_ENT,AT\t67 \t12.3 B\t60 \n").encode(),
        error=FormatError,
        error_match="bad flag",
        error_line=2,
    ),
    TsvCase(
        name="non-numeric cell rejected",
        raw=(_HDR + "E_IOS,PC_ENT,AT\t67 \tn/a \t60 \n").encode(),
        error=FormatError,
        error_match="non-numeric",
        error_line=2,
    ),
    TsvCase(
        name="row key with wrong dimension count",
        raw=(_HDR + "E_IOS,AT\t67 \t63 \t60 \n").encode(),
        error=FormatError,
        error_match="dimensions",
        error_line=2,
    ),
    TsvCase(
        name="scientific notation accepted",
        raw=(_HDR + "E_IOS,PC_ENT,AT\t67 \t1.5e1 \t60 \n").encode(),
        expect=(("AT", 15.0, frozenset()),),
    ),
    TsvCase(
        name="blank lines between rows ignored",
        raw=(_HDR
             + "E_IOS,PC_ENT,AT\t67 \t63 \t60 \n"
             + "\n"
             + "E_IOS,PC_ENT,BE\t71 \t68.5 \t66 \n").encode(),
        expect=(("AT", 63.0, frozenset()), ("BE", 68.5, frozenset())),
    ),
    TsvCase(
        name="empty file",
        raw=b"",
        error=FormatError,
        error_match="empty",
        error_line=1,
    ),
]
