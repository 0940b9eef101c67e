"""Exact multivariate commutative polynomials over Q with Buchberger bases.

Polynomials are sparse maps from exponent tuples to nonzero Fractions.  The
monomial order is graded (optionally weighted) lexicographic with ties broken
by variable declaration order.  Includes normal forms, quotient monomial
bases, and local (truncation-stabilized) quotient reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

Exponents = tuple[int, ...]


class VarSetError(ValueError):
    """Operands belong to different variable sets."""


class DivisionByZeroPolyError(ZeroDivisionError):
    """Exact division by the zero polynomial."""


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("empty variable set")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        for n in self.names:
            if not n or not isinstance(n, str):
                raise ValueError("variable names must be non-empty strings")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise VarSetError(f"unknown variable {name!r}") from None


def varset(*names: str) -> VarSet:
    return VarSet(tuple(names))


class GrlexOrder:
    """Graded lexicographic order, optionally weighted.

    Keys ascend: higher (weighted) total degree is larger; ties broken by the
    exponent tuple, so an earlier variable with a higher exponent wins.
    """

    def __init__(self, vars: VarSet, weights: Optional[Sequence[int]] = None):
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != len(vars) or any(w < 1 for w in weights):
                raise ValueError("need one positive weight per variable")
        self.vars = vars
        self.weights = weights

    def degree(self, exps: Exponents) -> int:
        if self.weights is None:
            return sum(exps)
        return sum(w * e for w, e in zip(self.weights, exps))

    def key(self, exps: Exponents):
        return (self.degree(exps), exps)


def _exps_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def _exps_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exps_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def _exps_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class CommPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarSet, terms: Mapping[Exponents, Fraction]):
        self.vars = vars
        self.terms = {e: Fraction(c) for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero(vars: VarSet) -> "CommPoly":
        return CommPoly(vars, {})

    @staticmethod
    def const(vars: VarSet, c) -> "CommPoly":
        return CommPoly(vars, {(0,) * len(vars): Fraction(c)})

    @staticmethod
    def variable(vars: VarSet, name: str) -> "CommPoly":
        exps = [0] * len(vars)
        exps[vars.index(name)] = 1
        return CommPoly(vars, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(vars: VarSet, exps: Exponents, c=1) -> "CommPoly":
        return CommPoly(vars, {tuple(exps): Fraction(c)})

    # -- basics -------------------------------------------------------------
    def _check(self, other: "CommPoly"):
        if self.vars != other.vars:
            raise VarSetError("mismatched variable sets")

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CommPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other: "CommPoly") -> "CommPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return CommPoly(self.vars, out)

    def __neg__(self) -> "CommPoly":
        return CommPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-other)

    def __mul__(self, other: "CommPoly") -> "CommPoly":
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exps_mul(e1, e2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return CommPoly(self.vars, out)

    def scale(self, c) -> "CommPoly":
        c = Fraction(c)
        return CommPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "CommPoly":
        if n < 0:
            raise ValueError("negative power")
        out = CommPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def lead(self, order: GrlexOrder) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no lead term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def __repr__(self) -> str:
        return f"CommPoly({poly_str(self)})"


def poly_str(f: CommPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f.terms, key=lambda e: (sum(e), e), reverse=True):
        c = f.terms[e]
        mono = "*".join(
            n if k == 1 else f"{n}^{k}"
            for n, k in zip(f.vars.names, e)
            if k
        )
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def divexact(f: CommPoly, g: CommPoly) -> Optional[CommPoly]:
    """Return q with f = q*g, or None when g does not divide f exactly."""
    if g.is_zero():
        raise DivisionByZeroPolyError("division by zero polynomial")
    f._check(g)
    order = GrlexOrder(f.vars)
    ge, gc = g.lead(order)
    quot: dict[Exponents, Fraction] = {}
    rem = f
    while not rem.is_zero():
        re, rc = rem.lead(order)
        if not _exps_divides(ge, re):
            return None
        qe = _exps_div(re, ge)
        qc = rc / gc
        quot[qe] = quot.get(qe, Fraction(0)) + qc
        rem = rem - CommPoly.monomial(f.vars, qe, qc) * g
    return CommPoly(f.vars, quot)


def substitute(
    f: CommPoly,
    images: Mapping[str, CommPoly],
    target: Optional[VarSet] = None,
) -> CommPoly:
    """Compose f with variable images.

    Variables without an explicit image map to the same-named variable of the
    target set (which defaults to the image polynomials' shared set, or f's
    own set when no images are given).
    """
    if images:
        tsets = {im.vars for im in images.values()}
        if len(tsets) > 1:
            raise VarSetError("images use different variable sets")
        inferred = next(iter(tsets))
        if target is None:
            target = inferred
        elif target != inferred:
            raise VarSetError("images do not live in the target variable set")
    elif target is None:
        target = f.vars
    full = []
    for name in f.vars.names:
        if name in images:
            full.append(images[name])
        else:
            full.append(CommPoly.variable(target, name))
    out = CommPoly.zero(target)
    for e, c in f.terms.items():
        term = CommPoly.const(target, c)
        for img, k in zip(full, e):
            if k:
                term = term * img**k
        out = out + term
    return out


def partials(f: CommPoly) -> list[CommPoly]:
    """Partial derivatives, one per variable in declaration order."""
    out = []
    for i in range(len(f.vars)):
        terms: dict[Exponents, Fraction] = {}
        for e, c in f.terms.items():
            if e[i]:
                de = list(e)
                de[i] -= 1
                terms[tuple(de)] = c * e[i]
        out.append(CommPoly(f.vars, terms))
    return out


# -- Groebner bases ---------------------------------------------------------

@dataclass
class CommGB:
    basis: list[CommPoly]
    order: GrlexOrder


def normal_form(f: CommPoly, gb: CommGB) -> CommPoly:
    order = gb.order
    leads = [g.lead(order) for g in gb.basis]
    rem: dict[Exponents, Fraction] = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        for g, (ge, gc) in zip(gb.basis, leads):
            if _exps_divides(ge, e):
                qe = _exps_div(e, ge)
                qc = c / gc
                for te, tc in g.terms.items():
                    ne = _exps_mul(qe, te)
                    if ne == e:
                        continue
                    nv = work.get(ne, Fraction(0)) - qc * tc
                    if nv:
                        work[ne] = nv
                    else:
                        work.pop(ne, None)
                break
        else:
            rem[e] = rem.get(e, Fraction(0)) + c
    return CommPoly(f.vars, rem)


def groebner(gens: Sequence[CommPoly], order: GrlexOrder) -> CommGB:
    """Buchberger with the coprime-lead-term criterion; reduced monic output."""
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        raise ValueError("no nonzero generators")
    basis = [g.scale(1 / g.lead(order)[1]) for g in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop(0)
        fi, fj = basis[i], basis[j]
        ei, _ = fi.lead(order)
        ej, _ = fj.lead(order)
        lcm = _exps_lcm(ei, ej)
        if lcm == _exps_mul(ei, ej):  # coprime leads: S-poly reduces to 0
            continue
        spoly = (
            CommPoly.monomial(fi.vars, _exps_div(lcm, ei)) * fi
            - CommPoly.monomial(fj.vars, _exps_div(lcm, ej)) * fj
        )
        rem = normal_form(spoly, CommGB(basis, order))
        if not rem.is_zero():
            rem = rem.scale(1 / rem.lead(order)[1])
            basis.append(rem)
            pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    # inter-reduce to the unique reduced basis
    leads = [g.lead(order)[0] for g in basis]
    minimal = []
    for idx in range(len(basis)):
        redundant = any(
            k != idx
            and _exps_divides(leads[k], leads[idx])
            and (leads[k] != leads[idx] or k < idx)
            for k in range(len(basis))
        )
        if not redundant:
            minimal.append(idx)
    reduced: list[CommPoly] = []
    for idx in minimal:
        others = [basis[k] for k in minimal if k != idx]
        nf = normal_form(basis[idx], CommGB(others, order)) if others else basis[idx]
        if not nf.is_zero():
            reduced.append(nf.scale(1 / nf.lead(order)[1]))
    reduced.sort(key=lambda g: g.lead(order)[0])
    return CommGB(reduced, order)


@dataclass
class QuotientBasis:
    monomials: list[Exponents]
    finite: bool
    dim: int


def quotient_basis(gb: CommGB, bound: int) -> QuotientBasis:
    """Order-irreducible monomials of total degree < bound.

    ``finite`` requires no irreducible monomial at the top two degrees
    examined (bound-2 and bound-1).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    nvars = len(gb.order.vars)
    leads = [g.lead(gb.order)[0] for g in gb.basis]
    irreducible: list[Exponents] = []
    frontier = [(0,) * nvars]
    top_counts = {}
    for deg in range(bound):
        frontier = [e for e in frontier if not any(_exps_divides(l, e) for l in leads)]
        irreducible.extend(frontier)
        top_counts[deg] = len(frontier)
        nxt = set()
        for e in frontier:
            for i in range(nvars):
                ne = list(e)
                ne[i] += 1
                nxt.add(tuple(ne))
        frontier = sorted(nxt)
    finite = (
        bound >= 2
        and top_counts.get(bound - 1, 1) == 0
        and top_counts.get(bound - 2, 1) == 0
    )
    irreducible.sort(key=lambda e: (sum(e), e))
    return QuotientBasis(irreducible, finite, len(irreducible))


def monomials_of_degree(vars: VarSet, deg: int) -> list[Exponents]:
    nvars = len(vars)

    def rec(i: int, rem: int):
        if i == nvars - 1:
            yield (rem,)
            return
        for k in range(rem + 1):
            for rest in rec(i + 1, rem - k):
                yield (k,) + rest

    return [e for e in rec(0, deg)]


@dataclass
class LocalReport:
    """Truncation-stabilized quotient data for an ideal plus all degree-N
    monomials, reported at the smallest stabilizing N."""

    status: str  # "finite" | "not-finite"
    dim: int
    certified_at: Optional[int]
    graded_dims: list[int]
    basis: list[Exponents]
    reduced_gb: Optional[CommGB]


def local_report(
    gens: Sequence[CommPoly], order: GrlexOrder, maxN: int
) -> LocalReport:
    """Dimension of the quotient by (gens) + all monomials of degree >= N,
    certified by one-step stabilization of the truncated basis count."""
    vars = order.vars
    prev: Optional[QuotientBasis] = None
    prev_gb = None
    for N in range(2, maxN + 1):
        cut = [CommPoly.monomial(vars, e) for e in monomials_of_degree(vars, N)]
        gb = groebner(list(gens) + cut, order)
        qb = quotient_basis(gb, N)
        if prev is not None and prev.dim == qb.dim:
            graded: dict[int, int] = {}
            for e in prev.monomials:
                graded[sum(e)] = graded.get(sum(e), 0) + 1
            gd = [graded.get(d, 0) for d in range(max(graded, default=0) + 1)]
            return LocalReport("finite", prev.dim, N - 1, gd, prev.monomials, prev_gb)
        prev, prev_gb = qb, gb
    graded = {}
    for e in (prev.monomials if prev else []):
        graded[sum(e)] = graded.get(sum(e), 0) + 1
    gd = [graded.get(d, 0) for d in range(max(graded, default=0) + 1)]
    return LocalReport(
        "not-finite", prev.dim if prev else 0, None, gd,
        prev.monomials if prev else [], prev_gb,
    )
