"""Multivariate polynomials over exact rationals.

Terms live in a dict from exponent tuples to nonzero Fraction coefficients,
so two polynomials are equal exactly when their coefficients agree. The
canonical term order (printing, serialization) is graded lexicographic.
Arithmetic is plain dict convolution; all operations are pure and exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import SchemaError
from .scalars import as_scalar, format_scalar


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping | None = None):
        vars_t = tuple(str(v) for v in variables)
        if len(set(vars_t)) != len(vars_t):
            raise SchemaError("variables", f"duplicate variable names in {vars_t}")
        clean: dict = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != len(vars_t) or any(e < 0 for e in key):
                raise SchemaError(
                    "exponent", f"bad exponent vector {exps} for {len(vars_t)} variables"
                )
            c = clean.get(key, Fraction(0)) + as_scalar(coeff)
            if c:
                clean[key] = c
            elif key in clean:
                del clean[key]
        self.vars = vars_t
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value) -> "MPoly":
        vars_t = tuple(variables)
        return cls(vars_t, {(0,) * len(vars_t): value})

    @classmethod
    def variable(cls, variables, name: str) -> "MPoly":
        vars_t = tuple(variables)
        if name not in vars_t:
            raise SchemaError("variables", f"{name!r} is not one of {vars_t}")
        exps = tuple(1 if v == name else 0 for v in vars_t)
        return cls(vars_t, {exps: 1})

    @classmethod
    def gens(cls, variables) -> tuple:
        """One generator per variable name, sharing the same variable tuple."""
        vars_t = tuple(variables)
        return tuple(cls.variable(vars_t, v) for v in vars_t)

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise SchemaError("variables", "mixed variable tuples in MPoly arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.vars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        out = MPoly.zero(self.vars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly.zero(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(key, Fraction(0)) + c1 * c2
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        out = MPoly.zero(self.vars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise SchemaError("exponent", "MPoly powers take non-negative integers")
        result = MPoly.constant(self.vars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- structural ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def substitute(self, mapping: Mapping[str, "MPoly"]) -> "MPoly":
        """Compose: replace each mapped variable by a polynomial.

        All images must share one variable tuple; unmapped variables are sent
        to themselves (their name must exist in the target tuple).
        """
        if not mapping:
            return self
        target = next(iter(mapping.values())).vars
        images = []
        for name in self.vars:
            img = mapping.get(name)
            if img is None:
                img = MPoly.variable(target, name)
            elif img.vars != target:
                raise SchemaError("variables", "substitution images disagree on variables")
            images.append(img)
        result = MPoly.zero(target)
        for exps, c in self.terms.items():
            term = MPoly.constant(target, c)
            for img, e in zip(images, exps):
                if e:
                    term = term * img**e
            result = result + term
        return result

    def derivative(self, name: str) -> "MPoly":
        if name not in self.vars:
            raise SchemaError("variables", f"{name!r} is not one of {self.vars}")
        idx = self.vars.index(name)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[idx]
            if e:
                key = exps[:idx] + (e - 1,) + exps[idx + 1 :]
                terms[key] = terms.get(key, Fraction(0)) + c * e
        return MPoly(self.vars, terms)

    def evaluate(self, values) -> Fraction:
        values = [as_scalar(v) for v in values]
        if len(values) != len(self.vars):
            raise SchemaError("arity", "wrong number of values for evaluation")
        total = Fraction(0)
        for exps, c in self.terms.items():
            prod = c
            for v, e in zip(values, exps):
                prod *= v**e
            total += prod
        return total

    # -- display / interchange -----------------------------------------

    def _term_str(self, exps, coeff) -> str:
        factors = []
        for name, e in zip(self.vars, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return format_scalar(coeff)
        body = "*".join(factors)
        if coeff == 1:
            return body
        if coeff == -1:
            return f"-{body}"
        return f"{format_scalar(coeff)}*{body}"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [self._term_str(e, c) for e, c in self.sorted_terms()]
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"MPoly({str(self)})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exps": list(e), "coeff": format_scalar(c)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MPoly":
        try:
            variables = doc["vars"]
            terms = {tuple(t["exps"]): t["coeff"] for t in doc["terms"]}
        except (KeyError, TypeError) as exc:
            raise SchemaError("mpoly", f"bad polynomial document: {doc!r}") from exc
        return cls(variables, terms)
