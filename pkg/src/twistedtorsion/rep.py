"""The class phi, the representation alpha, and the twisted map phi (x) alpha.

A :class:`TwistData` assigns to each generator an integer ``phi`` value and
an invertible ``k x k`` constant matrix. ``tensor_apply`` sends a group-ring
element ``sum c_w w`` to ``sum c_w alpha(w) t^phi(w)``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .algebra import ExactMatrix, LaurentPolynomial
from .algebra.domains import INTEGERS, PRIME_FIELD, RATIONALS, CoefficientDomain
from .group import FreeWord, GroupPresentation, GroupRingElement


class ValidationError(ValueError):
    """Input data violates a homomorphism or invertibility requirement."""


class InvalidHomomorphism(ValidationError):
    pass


class InvalidRepresentation(ValidationError):
    pass


# -- constant k x k matrices (tuples of tuples of domain elements) ----------

def mat_identity(k, dom):
    one, zero = dom.convert(1), dom.convert(0)
    return tuple(tuple(one if i == j else zero for j in range(k)) for i in range(k))


def mat_mul(a, b, dom):
    red = dom.reducer
    k = len(a)
    m = len(b[0]) if b else 0
    out = []
    for i in range(k):
        row = []
        for j in range(m):
            s = sum(a[i][l] * b[l][j] for l in range(len(b)))
            row.append(red(s) if red else s)
        out.append(tuple(row))
    return tuple(out)


def _field_rows(a, dom):
    if dom.kind == PRIME_FIELD:
        return [list(r) for r in a]
    return [[Fraction(x) for x in r] for r in a]


def mat_det(a, dom):
    """Determinant by Gaussian elimination over the quotient field."""
    f = dom.field
    m = _field_rows(a, dom)
    k = len(m)
    det = f.convert(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            return dom.convert(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = f.neg(det)
        det = f.mul(det, m[c][c])
        inv = f.inverse(m[c][c])
        for r in range(c + 1, k):
            if m[r][c] != 0:
                fac = f.mul(m[r][c], inv)
                m[r] = [f.convert(x - fac * y) for x, y in zip(m[r], m[c])]
    return dom.convert(det) if dom.kind == INTEGERS else det


def mat_inverse(a, dom):
    """Inverse over ``dom``; raises InvalidRepresentation when not invertible there."""
    f = dom.field
    k = len(a)
    m = [row + [f.convert(1 if i == j else 0) for j in range(k)]
         for i, row in enumerate(_field_rows(a, dom))]
    for c in range(k):
        piv = next((r for r in range(c, k) if m[r][c] != 0), None)
        if piv is None:
            raise InvalidRepresentation("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = f.inverse(m[c][c])
        m[c] = [f.mul(x, inv) for x in m[c]]
        for r in range(k):
            if r != c and m[r][c] != 0:
                fac = m[r][c]
                m[r] = [f.convert(x - fac * y) for x, y in zip(m[r], m[c])]
    try:
        return tuple(tuple(dom.convert(x) for x in row[k:]) for row in m)
    except ValueError:
        raise InvalidRepresentation(f"matrix is not invertible over {dom.tag}") from None


# -- twist data --------------------------------------------------------------

@dataclass(frozen=True)
class UnitSpec:
    """Descriptor of the determinant image ``det(alpha(pi))`` (with -1 adjoined)."""

    kind: str  # "plus-minus-one" | "generated-by" | "unknown"
    generators: tuple = ()

    @classmethod
    def plus_minus_one(cls):
        return cls("plus-minus-one")


@dataclass(frozen=True, eq=False)
class TwistData:
    phi: tuple
    k: int
    domain: CoefficientDomain
    images: tuple

    def __post_init__(self):
        dom = self.domain
        imgs = tuple(tuple(tuple(dom.convert(x) for x in row) for row in m) for m in self.images)
        if len(imgs) != len(self.phi):
            raise ValidationError("need one phi value and one matrix per generator")
        for m in imgs:
            if len(m) != self.k or any(len(r) != self.k for r in m):
                raise InvalidRepresentation(f"generator image is not {self.k}x{self.k}")
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        inverses = []
        for i, m in enumerate(imgs):
            d = mat_det(m, dom)
            if not dom.is_unit(d):
                raise InvalidRepresentation(
                    f"image of generator {i} has determinant {dom.format(d)}, not a unit of {dom.tag}")
            inverses.append(mat_inverse(m, dom))
        object.__setattr__(self, "inverses", tuple(inverses))
        object.__setattr__(self, "_cache", {})

    def __eq__(self, other):
        return (isinstance(other, TwistData) and self.phi == other.phi and self.k == other.k
                and self.domain == other.domain and self.images == other.images)

    def __hash__(self):
        return hash((self.phi, self.k, self.domain, self.images))

    @classmethod
    def trivial(cls, phi, domain, k=1):
        return cls(tuple(phi), k, domain, tuple(mat_identity(k, domain) for _ in phi))

    def phi_of(self, w: FreeWord) -> int:
        return sum(self.phi[i] * e for i, e in w.letters)

    def alpha_of(self, w: FreeWord):
        cache = self._cache
        got = cache.get(w)
        if got is not None:
            return got
        m = mat_identity(self.k, self.domain)
        for i, e in w.letters:
            m = mat_mul(m, self.images[i] if e > 0 else self.inverses[i], self.domain)
        if len(cache) < 65536:
            cache[w] = m
        return m


@dataclass(frozen=True)
class PhiStatus:
    primitive: bool
    divisor: int


def validate_phi(pres: GroupPresentation, phi) -> PhiStatus:
    """Check that ``phi`` kills every relator; report primitivity (gcd of values is 1)."""
    phi = tuple(phi)
    if len(phi) != len(pres.generators):
        raise InvalidHomomorphism(f"phi has {len(phi)} values for {len(pres.generators)} generators")
    for idx, r in enumerate(pres.relators):
        s = sum(phi[i] * e for i, e in r.letters)
        if s != 0:
            raise InvalidHomomorphism(
                f"relator {idx} ({pres.format_relator(idx)}) has phi-weighted exponent sum {s}")
    g = 0
    for v in phi:
        g = gcd(g, v)
    return PhiStatus(primitive=(g == 1), divisor=g)


def validate_representation(pres: GroupPresentation, twist: TwistData) -> None:
    """Raise unless every relator maps to the identity matrix."""
    if len(twist.images) != len(pres.generators):
        raise InvalidRepresentation("one image per generator is required")
    ident = mat_identity(twist.k, twist.domain)
    for idx, r in enumerate(pres.relators):
        if twist.alpha_of(r) != ident:
            raise InvalidRepresentation(
                f"relator {idx} ({pres.format_relator(idx)}) does not map to the identity")


def tensor_apply(elt: GroupRingElement, twist: TwistData) -> ExactMatrix:
    """``sum c * alpha(w) * t^phi(w)`` as a ``k x k`` Laurent matrix."""
    k, dom = twist.k, twist.domain
    acc = [[defaultdict(int) for _ in range(k)] for _ in range(k)]
    for w, c in elt.terms.items():
        e = twist.phi_of(w)
        a = twist.alpha_of(w)
        for i in range(k):
            for j in range(k):
                if a[i][j] != 0:
                    acc[i][j][e] += c * a[i][j]
    rows = [[LaurentPolynomial.from_dict(dom, acc[i][j]) for j in range(k)] for i in range(k)]
    return ExactMatrix._wrap(dom, rows, k, k)


def matrix_tensor_apply(M, twist: TwistData) -> ExactMatrix:
    """Apply :func:`tensor_apply` entrywise; an ``r x s`` input gives ``rk x sk``."""
    if not M:
        return ExactMatrix.zeros(twist.domain, 0, 0)
    blocks = [[tensor_apply(x, twist) for x in row] for row in M]
    return ExactMatrix.from_blocks(twist.domain, blocks)


def determinant_image_spec(twist: TwistData, search_bound: int = 6) -> UnitSpec:
    """Generators of ``det(alpha(pi))``; ``plus-minus-one`` when every det is +-1.

    ``search_bound`` is not used here; membership queries take it separately.
    """
    dom = twist.domain
    gens = []
    for m in twist.images:
        d = mat_det(m, dom)
        if not dom.is_plus_minus_one(d):
            d = dom.field.convert(d)
            if d not in gens and dom.field.neg(d) not in gens:
                gens.append(d)
    if not gens:
        return UnitSpec.plus_minus_one()
    return UnitSpec("generated-by", tuple(gens))


def _prime_support_excludes(c: Fraction, gens) -> bool:
    """True when ``c`` has a prime factor that no generator involves."""
    g = 1
    for x in gens:
        x = Fraction(x)
        g *= abs(x.numerator) * x.denominator
    n = abs(c.numerator) * c.denominator
    while True:
        d = gcd(n, g)
        if d == 1:
            break
        while n % d == 0:
            n //= d
    return n > 1


def unit_membership(spec: UnitSpec, c, domain: CoefficientDomain, search_bound: int = 6):
    """Is ``c`` in ``+-det(alpha(pi))``? Returns True, False, or None (undecided).

    Products of generators and inverses with total exponent at most
    ``search_bound`` are searched; negative answers come only from exact
    arguments (prime support over Q, subgroup closure over small GF(p)).
    """
    f = domain.field
    c = f.convert(c)
    if c == 0:
        return False
    if f.is_plus_minus_one(c):
        return True
    if spec.kind == "plus-minus-one":
        return False
    if spec.kind != "generated-by":
        return None
    gens = [f.convert(g) for g in spec.generators]
    targets = {c, f.neg(c)}
    m = len(gens)
    for total in range(1, search_bound + 1):
        for exps in _exponent_vectors(m, total):
            v = f.convert(1)
            for g, e in zip(gens, exps):
                if e:
                    v = f.mul(v, _power(f, g, e))
            if v in targets:
                return True
    if f.kind == RATIONALS:
        if _prime_support_excludes(c, gens):
            return False
        return None
    if f.kind == PRIME_FIELD and f.p <= 10**6:
        group = {1, f.p - 1}
        frontier = list(group)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % f.p
                    if y not in group:
                        group.add(y)
                        nxt.append(y)
            frontier = nxt
        return c in group
    return None


def _power(f, g, e):
    if f.kind == PRIME_FIELD:
        return pow(g, e, f.p)
    return Fraction(g) ** e


def _exponent_vectors(m, total):
    """Integer vectors of length ``m`` with ``sum |e_i| == total``."""
    for parts in itertools.product(range(-total, total + 1), repeat=m):
        if sum(abs(e) for e in parts) == total:
            yield parts
