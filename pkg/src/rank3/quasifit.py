"""Exact quasipolynomial fits and closed forms for the count tables.

For fixed coatom count c the counts R(c, a) eventually agree with a
quasipolynomial of degree c - 1 whose coefficients repeat with period
lcm(1..c), starting no later than a = c(c-1)/2.  Fitting is pure linear
algebra over the rationals: solve a Vandermonde system per residue class
on the first degree+1 usable table entries, then insist that every
remaining entry agrees exactly.  No floating point is involved anywhere.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm


class FitArityError(ValueError):
    """Table too short to determine the requested fit."""

    def __init__(self, message, required_a_max):
        super().__init__(message)
        self.required_a_max = required_a_max


class FitRejectedError(ValueError):
    """A fitted constituent disagrees with a table value past the samples."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class NonIntegerValueError(ArithmeticError):
    """A quasipolynomial evaluated to a non-integer (internal inconsistency)."""


@dataclass(frozen=True)
class Quasipolynomial:
    """Periodic family of polynomials with exact rational coefficients.

    ``constituents[k]`` holds the coefficients, constant term first, of
    the polynomial used for arguments congruent to k modulo ``period``.
    ``threshold`` is the argument from which agreement with the source
    table is guaranteed; ``observed_threshold`` is the (possibly smaller)
    point from which agreement was actually seen.  Evaluation below the
    threshold is defined but carries no guarantee.
    """
    period: int
    threshold: int
    constituents: tuple
    observed_threshold: int | None = None

    @property
    def degree(self) -> int:
        return max(len(cs) for cs in self.constituents) - 1

    def value_at(self, atoms: int) -> Fraction:
        coeffs = self.constituents[atoms % self.period]
        acc = Fraction(0)
        for coeff in reversed(coeffs):
            acc = acc * atoms + coeff
        return acc

    def evaluate(self, atoms: int) -> int:
        val = self.value_at(atoms)
        if val.denominator != 1:
            raise NonIntegerValueError("value at %d is %s, not an integer" % (atoms, val))
        return int(val)


def default_fit_parameters(coatom_count: int) -> tuple[int, int, int]:
    """(period, degree, threshold) guaranteed to capture R(c, .)."""
    c = coatom_count
    if c < 1:
        raise ValueError("coatom count must be positive")
    return lcm(*range(1, c + 1)), c - 1, c * (c - 1) // 2


def _solve_vandermonde(xs, ys) -> tuple:
    """Coefficients, constant first, of the polynomial through (xs, ys)."""
    n = len(xs)
    rows = [[Fraction(x) ** j for j in range(n)] + [Fraction(y)]
            for x, y in zip(xs, ys)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if rows[i][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[col])]
    return tuple(row[-1] for row in rows)


def fit_quasipolynomial(values, period: int, degree: int, threshold: int) -> Quasipolynomial:
    """Fit one polynomial per residue class and verify against the whole table.

    ``values`` is a CountTable or a plain sequence indexed by atom count
    starting at 0.  Each class is interpolated on its first degree+1
    entries at indices >= threshold; every remaining entry of the class
    must match exactly or the fit is rejected.  The returned threshold is
    the guaranteed one; the observed threshold is lowered greedily while
    the evaluations keep matching the table.
    """
    vals = list(getattr(values, "values", values))
    a_max = len(vals) - 1
    required = threshold + period * (degree + 1) - 1
    if a_max < required:
        raise FitArityError(
            "need a_max >= %d for period %d, degree %d, threshold %d (got %d)"
            % (required, period, degree, threshold, a_max), required)
    constituents = []
    for k in range(period):
        start = threshold + (k - threshold) % period
        xs = [start + period * i for i in range(degree + 1)]
        coeffs = _solve_vandermonde(xs, [vals[x] for x in xs])
        constituents.append(coeffs)
    fit = Quasipolynomial(period, threshold, tuple(constituents))
    for a in range(threshold, a_max + 1):
        if fit.value_at(a) != vals[a]:
            raise FitRejectedError(
                "fitted polynomial disagrees with table at a = %d" % a, a)
    observed = threshold
    while observed > 0 and fit.value_at(observed - 1) == vals[observed - 1]:
        observed -= 1
    return Quasipolynomial(period, threshold, tuple(constituents), observed)


def fit_for_coatoms(values, coatom_count: int) -> Quasipolynomial:
    """Fit with the guaranteed period, degree, and threshold for c coatoms."""
    period, degree, threshold = default_fit_parameters(coatom_count)
    return fit_quasipolynomial(values, period, degree, threshold)


def eval_quasipolynomial(quasipoly: Quasipolynomial, atoms: int) -> int:
    if atoms < 0:
        raise ValueError("atom count must be nonnegative")
    return quasipoly.evaluate(atoms)


def expand_period(quasipoly: Quasipolynomial, period: int) -> Quasipolynomial:
    """Same function, restated with a period that is a multiple of the old."""
    if period % quasipoly.period:
        raise ValueError("%d is not a multiple of period %d" % (period, quasipoly.period))
    constituents = tuple(quasipoly.constituents[k % quasipoly.period] for k in range(period))
    return Quasipolynomial(period, quasipoly.threshold, constituents,
                           quasipoly.observed_threshold)


# -- closed-form box counts ----------------------------------------------------


def p2(n: int) -> int:
    """Distributions of n balls into 2 identical boxes: floor(n/2 + 1)."""
    return (n + 2) // 2 if n >= 0 else 0


def p3(n: int) -> int:
    """Distributions of n balls into 3 identical boxes: floor(n^2/12 + n/2 + 1)."""
    return (n * n + 6 * n + 12) // 12 if n >= 0 else 0


def p21(n: int) -> int:
    """Distributions into 2 identical boxes plus 1 distinct: floor(n^2/4 + n + 1)."""
    return (n + 2) ** 2 // 4 if n >= 0 else 0


CLOSED_FORMS = {"p2": p2, "p3": p3, "p21": p21}


def closed_form_p(kind: str, n: int) -> int:
    try:
        return CLOSED_FORMS[kind](n)
    except KeyError:
        raise ValueError("unknown closed form %r (one of %s)"
                         % (kind, ", ".join(sorted(CLOSED_FORMS)))) from None


# -- published reference forms ---------------------------------------------------
#
# Exact closed forms for small coatom counts, stated once here and used
# both by verify_theorems and by the tests that confirm the fitter
# rediscovers them from raw tables.

_R3_CONSTANTS = (0, -1, -8, 3, -4, -5)  # over 12, period 6

_R4_LINEAR = (Fraction(44, 48), Fraction(47, 48))  # period 2
_R4_CONSTANTS = (0, 13, 8, -45, 40, -19, 0, -5, 8, -27, 40, -37)  # over 72, period 12

_R5_LINEAR = (Fraction(-7268, 160), Fraction(-7273, 160))  # period 2
_R5_CONSTANTS = (  # over 960, period 60
    33600, 34019, 34072, 33627, 33152, 34915, 33624, 33947, 33472, 33507,
    34520, 34459, 32832, 33827, 34072, 34395, 33344, 34147, 33432, 33947,
    34240, 33699, 33752, 34267, 32832, 34595, 34264, 33627, 33152, 34147,
    34200, 34139, 33472, 33507, 33752, 35035, 33024, 33827, 34072, 33627,
    33920, 34339, 33432, 33947, 33472, 34275, 33944, 34267, 32832, 33827,
    34840, 33819, 33152, 34147, 33432, 34715, 33664, 33507, 33752, 34267)

LEADING_TERMS = {
    6: (Fraction(185521, 86400), Fraction(-266581, 6912), Fraction(4268287, 12960)),
    7: (Fraction(35406319, 3628800), Fraction(-205303771, 604800),
        Fraction(986460817, 181440), Fraction(-908874965, 18144)),
}


def reference_quasipolynomial(coatom_count: int) -> Quasipolynomial:
    """Published closed form of R(c, .) for c = 2..5, at its natural period."""
    c = coatom_count
    if c == 2:
        return Quasipolynomial(1, 1, ((Fraction(0), Fraction(1)),))
    if c == 3:
        constituents = tuple(
            (Fraction(k0, 12), Fraction(1, 3), Fraction(3, 4))
            for k0 in _R3_CONSTANTS)
        return Quasipolynomial(6, 0, constituents)
    if c == 4:
        constituents = tuple(
            (Fraction(_R4_CONSTANTS[k], 72), _R4_LINEAR[k % 2],
             Fraction(-5, 6), Fraction(97, 144))
            for k in range(12))
        return Quasipolynomial(12, 0, constituents)
    if c == 5:
        constituents = tuple(
            (Fraction(_R5_CONSTANTS[k], 960), _R5_LINEAR[k % 2],
             Fraction(11771, 480), Fraction(-3079, 480), Fraction(175, 192))
            for k in range(60))
        return Quasipolynomial(60, 3, constituents)
    raise ValueError("no reference closed form for %d coatoms" % c)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    passed: bool
    checked: int
    first_failure: tuple | None = None


@dataclass(frozen=True)
class TheoremReport:
    checks: tuple

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        lines = []
        for c in self.checks:
            status = "ok" if c.passed else "FAIL at %r" % (c.first_failure,)
            lines.append("%-34s %5d values  %s" % (c.name, c.checked, status))
        return "\n".join(lines)


def _run_check(name, pairs):
    checked = 0
    for a, expected, got in pairs:
        checked += 1
        if expected != got:
            return TheoremCheck(name, False, checked, (a, expected, got))
    return TheoremCheck(name, True, checked)


def verify_theorems(tables) -> TheoremReport:
    """Check the published closed forms against computed count tables.

    ``tables`` maps the coatom count to its CountTable; counts for c = 2
    through 5 are used when present.  The five-coatom form holds from
    a = 3 on; at a = 0, 1, 2 it is known to give 35, 9, 6 instead of the
    true 0, 1, 5, and that fixed discrepancy is itself checked.
    """
    checks = []
    if 2 in tables:
        vals = tables[2].values
        checks.append(_run_check(
            "two_coatom_linear",
            ((a, a, vals[a]) for a in range(1, len(vals)))))
    if 3 in tables:
        vals = tables[3].values
        checks.append(_run_check(
            "three_coatom_floor",
            ((a, (9 * a * a + 4 * a + 3) // 12, vals[a]) for a in range(1, len(vals)))))
        checks.append(_run_check(
            "three_coatom_partition_identity",
            ((a, 2 * p3(a - 3) + p3(a - 1) + 2 * p21(a - 2), vals[a])
             for a in range(1, len(vals)))))
    if 4 in tables:
        vals = tables[4].values
        ref = reference_quasipolynomial(4)
        checks.append(_run_check(
            "four_coatom_quasipolynomial",
            ((a, ref.evaluate(a), vals[a]) for a in range(len(vals)))))
    if 5 in tables:
        vals = tables[5].values
        ref = reference_quasipolynomial(5)
        checks.append(_run_check(
            "five_coatom_quasipolynomial",
            ((a, ref.evaluate(a), vals[a]) for a in range(3, len(vals)))))
        small = [(a, ref.evaluate(a), vals[a]) for a in range(min(3, len(vals)))]
        checks.append(_run_check(
            "five_coatom_small_a_exception",
            ((a, (35, 9, 6)[a], got_poly) for a, got_poly, _true in small)))
        checks.append(_run_check(
            "five_coatom_small_a_true_counts",
            ((a, (0, 1, 5)[a], got_true) for a, _poly, got_true in small)))
    return TheoremReport(tuple(checks))


# -- JSON interchange ------------------------------------------------------------


def _minimal_period(row, period):
    for m in range(1, period + 1):
        if period % m:
            continue
        if all(row[k] == row[k % m] for k in range(period)):
            return m
    return period


def quasipolynomial_to_json(quasipoly: Quasipolynomial, coatom_count: int) -> dict:
    """JSON-ready dict: raw constituents plus a factored presentation.

    Rationals travel as exact "p/q" strings.  The "normalized" block
    lists coefficients shared by every residue class under "common" and
    the rest per degree with their minimal repetition period.
    """
    q = quasipoly
    degree = q.degree
    rows = []
    for j in range(degree + 1):
        rows.append(tuple(cs[j] if j < len(cs) else Fraction(0) for cs in q.constituents))
    common = {}
    periodic = []
    for j in range(degree, -1, -1):
        m = _minimal_period(rows[j], q.period)
        if m == 1:
            common[str(j)] = str(rows[j][0])
        else:
            periodic.append({"degree": j, "period": m,
                             "values": [str(v) for v in rows[j][:m]]})
    return {
        "c": coatom_count,
        "period": q.period,
        "degree": degree,
        "n0_guaranteed": q.threshold,
        "n0_observed": q.observed_threshold if q.observed_threshold is not None else q.threshold,
        "constituents": [[str(v) for v in cs] for cs in q.constituents],
        "normalized": {"common": common, "periodic": periodic},
    }


def quasipolynomial_from_json(data) -> tuple[int, Quasipolynomial]:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    constituents = tuple(tuple(Fraction(v) for v in cs) for cs in data["constituents"])
    if len(constituents) != data["period"]:
        raise ValueError("expected %d constituents, got %d"
                         % (data["period"], len(constituents)))
    q = Quasipolynomial(data["period"], data["n0_guaranteed"], constituents,
                        data.get("n0_observed"))
    return data["c"], q
