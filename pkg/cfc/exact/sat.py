"""Positive 3-CNF formulas and a brute-force 1-in-3 satisfiability oracle.

Variables are 0-based in memory and 1-based in formula files:
a header ``nvars nclauses`` followed by one line of three indices per clause.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from cfc.exceptions import InputFormatError, InvalidFormulaError
from cfc.utils import settings
from cfc.utils.utils import iter_data_lines, read_text, write_text

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Formula:
    nvars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.nvars < 0:
            raise InvalidFormulaError(f"nvars must be nonnegative, got {self.nvars}")
        normalized = []
        for clause in self.clauses:
            clause = tuple(sorted(clause))
            if len(clause) != 3 or len(set(clause)) != 3:
                raise InvalidFormulaError(
                    f"clause {clause} must name three distinct variables"
                )
            if clause[0] < 0 or clause[-1] >= self.nvars:
                raise InvalidFormulaError(
                    f"clause {clause} leaves variable range 0..{self.nvars - 1}"
                )
            normalized.append(clause)
        object.__setattr__(self, "clauses", tuple(normalized))

    @classmethod
    def from_clauses(cls, nvars, clauses):
        return cls(nvars=nvars, clauses=tuple(tuple(c) for c in clauses))

    def clauses_of(self, variable):
        return [j for j, clause in enumerate(self.clauses) if variable in clause]

    def is_one_in_three(self, assignment):
        return all(sum(bool(assignment[x]) for x in clause) == 1 for clause in self.clauses)


def one_in_three_sat(formula: Formula) -> Optional[tuple[bool, ...]]:
    """First assignment (in binary counting order) making exactly one variable per clause true."""
    if formula.nvars > settings.SAT_MAX_VARS:
        logger.warning(
            f"brute force over 2^{formula.nvars} assignments, above the {settings.SAT_MAX_VARS} variable guideline"
        )
    for assignment in itertools.product((False, True), repeat=formula.nvars):
        if formula.is_one_in_three(assignment):
            return assignment
    return None


def parse_formula(text) -> Formula:
    lines = iter_data_lines(text)
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise InputFormatError("formula file is empty") from None
    try:
        nvars, nclauses = (int(t) for t in tokens)
    except ValueError as exc:
        raise InputFormatError(f"line {number}: expected 'nvars nclauses'") from exc
    clauses = []
    for number, tokens in lines:
        if len(tokens) != 3:
            raise InputFormatError(f"line {number}: a clause has three variables")
        try:
            clauses.append(tuple(int(t) - 1 for t in tokens))
        except ValueError as exc:
            raise InputFormatError(f"line {number}: {exc}") from exc
    if len(clauses) != nclauses:
        raise InputFormatError(f"header announces {nclauses} clauses, found {len(clauses)}")
    try:
        return Formula.from_clauses(nvars, clauses)
    except InvalidFormulaError as exc:
        raise InputFormatError(str(exc)) from exc


def format_formula(formula: Formula):
    lines = [f"{formula.nvars} {len(formula.clauses)}"]
    lines.extend(" ".join(str(x + 1) for x in clause) for clause in formula.clauses)
    return "\n".join(lines) + "\n"


def read_formula(path) -> Formula:
    return parse_formula(read_text(path))


def write_formula(path, formula: Formula):
    return write_text(path, format_formula(formula))
