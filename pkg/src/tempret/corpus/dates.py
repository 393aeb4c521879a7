# ABOUTME: Civil (proleptic Gregorian) dates with YYYY-MM-DD parsing and epoch-day arithmetic.
# ABOUTME: Epoch days give the integer day differences used by temporal scoring.

import calendar
import re
from dataclasses import dataclass
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator

from tempret.errors import InvalidDate, MalformedDate

_DATE_SHAPE = re.compile(r"[0-9]{4}-[0-9]{2}-[0-9]{2}")

# Fixed English names; calendar.month_name follows the process locale.
MONTH_NAMES = (
    "", "January", "February", "March", "April", "May", "June",
    "July", "August", "September", "October", "November", "December",
)


def days_in_month(year: int, month: int) -> int:
    """Number of days in a month of the proleptic Gregorian calendar."""
    if month == 2:
        return 29 if calendar.isleap(year) else 28
    return 30 if month in (4, 6, 9, 11) else 31


@dataclass(frozen=True, order=True)
class CivilDate:
    """A calendar day. Field order makes comparison follow calendar order."""

    year: int
    month: int
    day: int

    def __post_init__(self) -> None:
        if not 0 <= self.year <= 9999:
            raise InvalidDate(f"year out of range: {self.year}")
        if not 1 <= self.month <= 12:
            raise InvalidDate(f"month out of range: {self.month}")
        if not 1 <= self.day <= days_in_month(self.year, self.month):
            raise InvalidDate(f"day out of range for {self.year:04d}-{self.month:02d}: {self.day}")

    def __str__(self) -> str:
        return self.format()

    def format(self) -> str:
        """Render as YYYY-MM-DD."""
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    @classmethod
    def from_epoch_day(cls, n: int) -> "CivilDate":
        """Inverse of epoch_day."""
        z = n + 719468
        era = z // 146097
        doe = z - era * 146097
        yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
        doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
        mp = (5 * doy + 2) // 153
        day = doy - (153 * mp + 2) // 5 + 1
        month = mp + 3 if mp < 10 else mp - 9
        year = yoe + era * 400 + (1 if month <= 2 else 0)
        return cls(year, month, day)


def parse_date(s: str) -> CivilDate:
    """Parse a YYYY-MM-DD string.

    Raises:
        MalformedDate: If the string is not exactly in YYYY-MM-DD shape
        InvalidDate: If the fields do not name a calendar day
    """
    if not isinstance(s, str) or len(s) != 10 or not _DATE_SHAPE.fullmatch(s):
        raise MalformedDate(f"expected YYYY-MM-DD, got {s!r}")
    return CivilDate(int(s[0:4]), int(s[5:7]), int(s[8:10]))


def epoch_day(d: CivilDate) -> int:
    """Days elapsed since 1970-01-01 (negative before)."""
    # Shift the year to start in March so the leap day is the last day of the year.
    y = d.year - (1 if d.month <= 2 else 0)
    era = y // 400
    yoe = y - era * 400
    doy = (153 * (d.month + (-3 if d.month > 2 else 9)) + 2) // 5 + d.day - 1
    doe = yoe * 365 + yoe // 4 - yoe // 100 + doy
    return era * 146097 + doe - 719468


def spelled_date(d: CivilDate) -> str:
    """Render a date the way passage text spells it, e.g. 'September 7, 2019'."""
    return f"{MONTH_NAMES[d.month]} {d.day}, {d.year}"


def _coerce_date(value: Any) -> CivilDate:
    if isinstance(value, CivilDate):
        return value
    return parse_date(value)


DateField = Annotated[
    CivilDate,
    PlainValidator(_coerce_date),
    PlainSerializer(lambda d: d.format(), return_type=str),
]
"""CivilDate as a pydantic field: accepts YYYY-MM-DD strings, serializes back to them."""
