"""Builders for the worked algebra families used as fixtures and demos.

Every builder returns a complete Presentation bundling its own ring,
variables, weights and monomial order, so fixtures are self-contained
files.  The families:

    quantum_affine   pair relations XjXi - lam_ji XiXj, optional powers Xi^p
    lie_enveloping   enveloping algebra of a finitely generated Lie algebra
    jimbo            positive quantum-group relations on pairs (i, j)
    q_enveloping     quadric brace relations with the index constraint
    skew_iterated    iterated-skew shape under the lexicographic extension
    two_gen_ore      single relation X2X1 - q X1X2 - a X2 - f(X1)
    sl2_like         three-generator deformation family (plus the
                     woronowicz and le_bruyn parameter bundles)
    three_gen        three generators, one nontrivial overlap
    clifford         Xi^2 - qi and XkXl + XlXk - qkl
    down_up          the two cubic down-up relations

jacobi_sum builds the six-term compatibility element of the q-enveloping
brace data, and span_membership decides membership in a finite span by row
reduction over a field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .linalg import RowSpan, require_field
from .orders import EtLexOrder, GradedLexOrder, natural_grlex
from .polynomials import NcPoly, from_terms
from .presentation import Presentation
from .rings import LAURENT_KIND, LaurentZ, QQ, Ring, RingElement, ZZ, parse_coeff
from .words import Word


def _elem(ring: Ring, value) -> RingElement:
    return ring.element(value)


def _strip(coeffs: list[RingElement]) -> list[RingElement]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _univariate(ring: Ring, order, coeffs, letter: int) -> list:
    """Terms of sum(coeffs[k] * X^k) in the single variable at index letter."""
    return [(c, (letter,) * k) for k, c in enumerate(coeffs)]


def quantum_affine(ring: Ring, n: int, p: int = 2, lam: dict | None = None,
                   omega=()) -> Presentation:
    """Powers Xi^p for i in omega plus XjXi - lam[(j, i)] XiXj for i < j.

    lam entries default to zero; zero and zero-divisor entries are allowed.
    Indices are 1-based as in the variable names.
    """
    if n < 1 or p < 2:
        raise ValueError("need n >= 1 and p >= 2")
    lam = lam or {}
    omega = sorted(set(omega))
    if any(not 1 <= i <= n for i in omega):
        raise ValueError("omega indices out of range")
    order = natural_grlex(n)
    relations = []
    for i in omega:
        relations.append(from_terms(ring, order, [(ring.one, ((i - 1),) * p)]))
    for j in range(2, n + 1):
        for i in range(1, j):
            lam_ji = _elem(ring, lam.get((j, i), 0))
            terms = [(ring.one, (j - 1, i - 1)), (-lam_ji, (i - 1, j - 1))]
            relations.append(from_terms(ring, order, terms))
    names = tuple(f"X{i}" for i in range(1, n + 1))
    return Presentation(ring, names, (1,) * n, order, tuple(relations))


def lie_enveloping(ring: Ring, n: int, brackets: dict) -> Presentation:
    """g_ji = XjXi - XiXj - sum_l brackets[(j, i)][l] * Xl for i < j.

    brackets maps 1-based pairs (j, i) to a length-n coefficient sequence
    (or a dict keyed by 1-based l); missing pairs mean a vanishing bracket.
    """
    order = natural_grlex(n)
    relations = []
    for j in range(2, n + 1):
        for i in range(1, j):
            data = brackets.get((j, i), ())
            if isinstance(data, dict):
                linear = [(-_elem(ring, c), (l - 1,)) for l, c in sorted(data.items())]
            else:
                linear = [(-_elem(ring, c), (l,)) for l, c in enumerate(data)]
            terms = [(ring.one, (j - 1, i - 1)), (-ring.one, (i - 1, j - 1))] + linear
            relations.append(from_terms(ring, order, terms))
    names = tuple(f"X{i}" for i in range(1, n + 1))
    return Presentation(ring, names, (1,) * n, order, tuple(relations))


def jimbo_pairs(N: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 2)]


def jimbo_class(ij: tuple[int, int], mn: tuple[int, int]) -> int:
    """Class number 1..6 of an ordered index pair (ij before mn)."""
    (i, j), (m, n) = ij, mn
    if ij >= mn:
        raise ValueError("pairs must be given in increasing lexicographic order")
    if i == m:
        return 1
    if j < m:
        return 6
    if j == m:
        return 5
    if j == n:
        return 3
    if j < n:
        return 4
    return 2


def jimbo(N: int, ring: Ring | None = None, q=None) -> Presentation:
    """Quantum positive-part relations on the index pairs of size N.

    Defaults to integer Laurent coefficients with the symbol itself as q;
    any ring with a designated unit q works.  The variable for the pair
    (i, j) is x<i><j>, ordered lexicographically by (i, j).
    """
    if N < 1:
        raise ValueError("need N >= 1")
    if ring is None:
        ring = LaurentZ("q")
    if q is None:
        if ring.kind != LAURENT_KIND:
            raise ValueError(f"a designated unit q is required over {ring}")
        q = ring.q(1)
    q = _elem(ring, q)
    if not q.is_unit():
        raise ValueError("q must be a unit")
    pairs = jimbo_pairs(N)
    var = {pair: k for k, pair in enumerate(pairs)}
    nvars = len(pairs)
    order = natural_grlex(nvars)
    q2, qm2 = q ** 2, q ** (-2)
    relations = []
    for a in range(nvars):
        for b in range(a + 1, nvars):
            ij, mn = pairs[a], pairs[b]
            cls = jimbo_class(ij, mn)
            x_ij, x_mn = var[ij], var[mn]
            terms = [(ring.one, (x_mn, x_ij))]
            if cls in (1, 3):
                terms.append((-qm2, (x_ij, x_mn)))
            elif cls in (2, 6):
                terms.append((-ring.one, (x_ij, x_mn)))
            elif cls == 4:
                (i, j), (m, n) = ij, mn
                terms.append((-ring.one, (x_ij, x_mn)))
                terms.append((q2 - qm2, (var[(i, n)], var[(m, j)])))
            else:  # cls == 5: pairs share the middle index j == m
                (i, j), (m, n) = ij, mn
                terms.append((-q2, (x_ij, x_mn)))
                terms.append((q, (var[(i, n)],)))
            relations.append(from_terms(ring, order, terms))

    def name(pair):
        i, j = pair
        return f"x{i}{j}" if j <= 9 else f"x{i}_{j}"

    names = tuple(name(p) for p in pairs)
    return Presentation(ring, names, (1,) * nvars, order, tuple(relations))


class QEnvelopingSpec:
    """Brace data for the quadric relations g_ji = XjXi - q_ji XiXj - {Xj, Xi}.

    The brace {Xj, Xi} is sum(quad[(j,i)][(k,l)] XkXl) + sum(lin[(j,i)][h] Xh)
    + const[(j,i)], indices 1-based, subject to the admissibility constraint
    on quadratic terms: i < k <= l < j and k - i == j - l.
    """

    def __init__(self, ring: Ring, nvars: int, q: dict, quad: dict | None = None,
                 lin: dict | None = None, const: dict | None = None):
        self.ring = ring
        self.nvars = nvars
        self.q = {}
        for j in range(2, nvars + 1):
            for i in range(1, j):
                q_ji = _elem(ring, q.get((j, i), 1))
                if not q_ji:
                    raise ValueError(f"q_{j}{i} must be nonzero")
                self.q[(j, i)] = q_ji
        self.quad = {}
        self.lin = {}
        self.const = {}
        for (j, i), entries in (quad or {}).items():
            self._check_pair(j, i)
            for (k, l), c in entries.items():
                if not (i < k <= l < j) or (k - i) != (j - l):
                    raise ValueError(
                        f"quadratic brace index ({k},{l}) violates the constraint "
                        f"for pair ({j},{i})")
                self.quad.setdefault((j, i), {})[(k, l)] = _elem(ring, c)
        for (j, i), entries in (lin or {}).items():
            self._check_pair(j, i)
            for h, c in entries.items():
                if not 1 <= h <= nvars:
                    raise ValueError(f"linear brace index {h} out of range")
                self.lin.setdefault((j, i), {})[h] = _elem(ring, c)
        for (j, i), c in (const or {}).items():
            self._check_pair(j, i)
            self.const[(j, i)] = _elem(ring, c)

    def _check_pair(self, j: int, i: int) -> None:
        if not (1 <= i < j <= self.nvars):
            raise ValueError(f"({j},{i}) is not a pair with 1 <= i < j <= n")

    def brace(self, j: int, i: int, order) -> NcPoly:
        self._check_pair(j, i)
        terms = []
        for (k, l), c in sorted(self.quad.get((j, i), {}).items()):
            terms.append((c, (k - 1, l - 1)))
        for h, c in sorted(self.lin.get((j, i), {}).items()):
            terms.append((c, (h - 1,)))
        if (j, i) in self.const:
            terms.append((self.const[(j, i)], ()))
        return from_terms(self.ring, order, terms)


def q_enveloping(spec: QEnvelopingSpec) -> Presentation:
    order = natural_grlex(spec.nvars)
    relations = []
    for j in range(2, spec.nvars + 1):
        for i in range(1, j):
            head = from_terms(spec.ring, order, [
                (spec.ring.one, (j - 1, i - 1)),
                (-spec.q[(j, i)], (i - 1, j - 1)),
            ])
            relations.append(head - spec.brace(j, i, order))
    names = tuple(f"X{i}" for i in range(1, spec.nvars + 1))
    return Presentation(spec.ring, names, (1,) * spec.nvars, order, tuple(relations))


def jacobi_sum(spec: QEnvelopingSpec, k: int, j: int, i: int) -> NcPoly:
    """The six-term compatibility element of the brace data, for i < j < k:

    {Xk,Xj}Xi - q_ki q_ji Xi{Xk,Xj} - q_ji {Xk,Xi}Xj + q_kj Xj{Xk,Xi}
    + q_kj q_ki {Xj,Xi}Xk - Xk{Xj,Xi}
    """
    if not (1 <= i < j < k <= spec.nvars):
        raise ValueError("indices must satisfy 1 <= i < j < k <= n")
    order = natural_grlex(spec.nvars)
    b_kj = spec.brace(k, j, order)
    b_ki = spec.brace(k, i, order)
    b_ji = spec.brace(j, i, order)
    q = spec.q
    xi, xj, xk = (i - 1,), (j - 1,), (k - 1,)
    return (b_kj.wordmul((), xi)
            - b_kj.wordmul(xi, ()).scale(q[(k, i)] * q[(j, i)])
            - b_ki.wordmul((), xj).scale(q[(j, i)])
            + b_ki.wordmul(xj, ()).scale(q[(k, j)])
            + b_ji.wordmul((), xk).scale(q[(k, j)] * q[(k, i)])
            - b_ji.wordmul(xk, ()))


def jacobi_span(pres: Presentation) -> list[NcPoly]:
    """The spanning set E1 + E2: every relation g and its four one-letter
    sandwiches Xi g, g Xi, Xj g, g Xj, where (j, i) indexes the relation."""
    out = list(pres.relations)
    idx = 0
    n = pres.nvars
    for j in range(2, n + 1):
        for i in range(1, j):
            g = pres.relations[idx]
            idx += 1
            xi, xj = (i - 1,), (j - 1,)
            out.extend([g.wordmul(xi, ()), g.wordmul((), xi),
                        g.wordmul(xj, ()), g.wordmul((), xj)])
    return out


def span_membership(f: NcPoly, spanning: list[NcPoly], ring: Ring) -> bool:
    """Row-reduction membership of f in the span of the listed polynomials.

    Needs field coefficients; all polynomials must share ring and order.
    """
    require_field(ring)
    support: dict[Word, int] = {}
    for p in list(spanning) + [f]:
        if p.ring != ring:
            raise ValueError("polynomial ring differs from the declared field")
        for _, w in p.terms:
            support.setdefault(w, len(support))
    width = max(len(support), 1)
    span = RowSpan(ring, width)

    def vector(p: NcPoly):
        vec = [ring.zero] * width
        for c, w in p.terms:
            vec[support[w]] = c
        return vec

    for p in spanning:
        span.add(vector(p))
    return span.contains(vector(f))


def skew_iterated(ring: Ring, n: int, q: dict | RingElement | int = 1,
                  middles: dict | None = None,
                  consts: dict | None = None) -> Presentation:
    """g_ji = XjXi - q_ji XiXj - sum(middle monomials) + const_ji under the
    lexicographic extension order (commutative precedence t_n < ... < t_1,
    tie precedence X1 < ... < Xn).

    middles maps (j, i) to a list of (coeff, {variable: exponent}) with all
    monomial variables strictly between i and j.
    """
    order = EtLexOrder(tuple(reversed(range(n))), tuple(range(n)))
    if not isinstance(q, dict):
        q = {(j, i): q for j in range(2, n + 1) for i in range(1, j)}
    relations = []
    for j in range(2, n + 1):
        for i in range(1, j):
            terms = [(ring.one, (j - 1, i - 1)),
                     (-_elem(ring, q.get((j, i), 1)), (i - 1, j - 1))]
            for coeff, mono in (middles or {}).get((j, i), ()):
                letters: list[int] = []
                for v, e in sorted(mono.items()):
                    if not i < v < j:
                        raise ValueError(
                            f"middle variable X{v} of pair ({j},{i}) must lie "
                            f"strictly between the pair indices")
                    letters.extend([v - 1] * e)
                terms.append((-_elem(ring, coeff), tuple(letters)))
            c = _elem(ring, (consts or {}).get((j, i), 0))
            if c:
                terms.append((c, ()))
            relations.append(from_terms(ring, order, terms))
    names = tuple(f"X{i}" for i in range(1, n + 1))
    return Presentation(ring, names, (1,) * n, order, tuple(relations))


def two_gen_ore(ring: Ring, q=1, alpha=0, f=()) -> Presentation:
    """Single relation X2X1 - q X1X2 - alpha X2 - f(X1), with X2 weighted by
    deg f when deg f >= 3 so the relation stays weighted-top-led."""
    coeffs = _strip([_elem(ring, c) for c in f])
    deg_f = len(coeffs) - 1 if coeffs else 0
    w2 = deg_f if deg_f >= 3 else 1
    order = GradedLexOrder((0, 1), (1, w2))
    terms = [(ring.one, (1, 0)), (-_elem(ring, q), (0, 1)),
             (-_elem(ring, alpha), (1,))]
    terms += [(-c, (0,) * k) for k, c in enumerate(coeffs)]
    rel = from_terms(ring, order, terms)
    return Presentation(ring, ("X1", "X2"), (1, w2), order, (rel,))


def sl2_like(ring: Ring, lam=1, gamma=0, omega=1, f=()) -> Presentation:
    """Three-generator family

        X3X1 - lam X1X3 + gamma X3
        X1X2 - lam X2X1 + gamma X2
        X3X2 - omega X2X3 + f(X1)

    under precedence X2 < X1 < X3, weights (1, 1, 1) for deg f <= 2 and
    (1, n, n) for deg f = n >= 3."""
    coeffs = _strip([_elem(ring, c) for c in f])
    deg_f = len(coeffs) - 1 if coeffs else 0
    w = deg_f if deg_f >= 3 else 1
    weights = (1, w, w)
    order = GradedLexOrder((1, 0, 2), weights)
    lam, gamma, omega = _elem(ring, lam), _elem(ring, gamma), _elem(ring, omega)
    g31 = from_terms(ring, order, [(ring.one, (2, 0)), (-lam, (0, 2)), (gamma, (2,))])
    g12 = from_terms(ring, order, [(ring.one, (0, 1)), (-lam, (1, 0)), (gamma, (1,))])
    g32 = from_terms(ring, order, [(ring.one, (2, 1)), (-omega, (1, 2))]
                     + [(c, (0,) * k) for k, c in enumerate(coeffs)])
    return Presentation(ring, ("X1", "X2", "X3"), weights, order, (g31, g12, g32))


def woronowicz(ring: Ring, zeta) -> Presentation:
    """Deformation bundle: lam = zeta^4, omega = zeta^2, gamma = -(1+zeta^2),
    f = -zeta X1; zeta must be a unit."""
    z = _elem(ring, zeta)
    if not z.is_unit():
        raise ValueError("zeta must be a unit")
    gamma = -(ring.one + z ** 2)
    return sl2_like(ring, lam=z ** 4, gamma=gamma, omega=z ** 2,
                    f=(ring.zero, -z))


def le_bruyn(ring: Ring, lam, gamma, omega, a, b) -> Presentation:
    """Conformal bundle: f = a X1^2 + b X1 with lam*gamma*omega*b nonzero."""
    lam, gamma, omega = _elem(ring, lam), _elem(ring, gamma), _elem(ring, omega)
    a, b = _elem(ring, a), _elem(ring, b)
    if not (lam * gamma * omega * b):
        raise ValueError("the product lam*gamma*omega*b must be nonzero")
    return sl2_like(ring, lam=lam, gamma=gamma, omega=omega,
                    f=(ring.zero, b, a))


def three_gen(ring: Ring, lam=1, mu=0, gamma=0) -> Presentation:
    """g21 = X2X1 - X1X2, g31 = X3X1 - lam X1X3 - mu X2X3 - gamma X2,
    g32 = X3X2 - X2X3; exactly one nontrivial overlap."""
    order = natural_grlex(3)
    lam, mu, gamma = _elem(ring, lam), _elem(ring, mu), _elem(ring, gamma)
    g21 = from_terms(ring, order, [(ring.one, (1, 0)), (-ring.one, (0, 1))])
    g31 = from_terms(ring, order, [(ring.one, (2, 0)), (-lam, (0, 2)),
                                   (-mu, (1, 2)), (-gamma, (1,))])
    g32 = from_terms(ring, order, [(ring.one, (2, 1)), (-ring.one, (1, 2))])
    return Presentation(ring, ("X1", "X2", "X3"), (1, 1, 1), order, (g21, g31, g32))


def clifford(ring: Ring, n: int, qi=(), qkl: dict | None = None) -> Presentation:
    """Xi^2 - qi and XkXl + XlXk - qkl for k > l; zero parameters give the
    exterior algebra."""
    order = natural_grlex(n)
    qi = list(qi)
    qi += [0] * (n - len(qi))
    relations = []
    for i in range(1, n + 1):
        relations.append(from_terms(ring, order, [
            (ring.one, (i - 1, i - 1)), (-_elem(ring, qi[i - 1]), ())]))
    for k in range(2, n + 1):
        for l in range(1, k):
            c = _elem(ring, (qkl or {}).get((k, l), 0))
            relations.append(from_terms(ring, order, [
                (ring.one, (k - 1, l - 1)), (ring.one, (l - 1, k - 1)), (-c, ())]))
    names = tuple(f"X{i}" for i in range(1, n + 1))
    return Presentation(ring, names, (1,) * n, order, tuple(relations))


def down_up(ring: Ring, alpha, beta, gamma) -> Presentation:
    """The two cubic relations

        X1^2 X2 - alpha X1X2X1 - beta X2 X1^2 - gamma X1
        X1 X2^2 - alpha X2X1X2 - beta X2^2 X1 - gamma X2

    under precedence X2 < X1."""
    order = GradedLexOrder((1, 0), (1, 1))
    alpha, beta, gamma = _elem(ring, alpha), _elem(ring, beta), _elem(ring, gamma)
    g1 = from_terms(ring, order, [
        (ring.one, (0, 0, 1)), (-alpha, (0, 1, 0)), (-beta, (1, 0, 0)),
        (-gamma, (0,))])
    g2 = from_terms(ring, order, [
        (ring.one, (0, 1, 1)), (-alpha, (1, 0, 1)), (-beta, (1, 1, 0)),
        (-gamma, (1,))])
    return Presentation(ring, ("X1", "X2"), (1, 1), order, (g1, g2))


# ---------------------------------------------------------------------------
# CLI-facing dispatcher: builds presets from string parameters.

_SUBSCRIPTS = re.compile(r"^([a-z]+)_(\d+)_(\d+)$|^([a-z]+)_(\d)(\d)$")

_SL2_BRACKETS = {(2, 1): {1: -2}, (3, 1): {2: 1}, (3, 2): {3: -2}}


def _collect_indexed(params: dict[str, str], prefix: str, ring: Ring) -> dict:
    """Pick out keys like lam_2_1 or lam_21 into {(2, 1): coeff}."""
    out = {}
    for key, value in params.items():
        m = _SUBSCRIPTS.match(key)
        if not m:
            continue
        name = m.group(1) or m.group(4)
        if name != prefix:
            continue
        j, i = (m.group(2), m.group(3)) if m.group(1) else (m.group(5), m.group(6))
        out[(int(j), int(i))] = parse_coeff(value, ring)
    return out


def _coeff_list(text: str, ring: Ring) -> list[RingElement]:
    return [parse_coeff(part.strip(), ring) for part in text.split(",") if part.strip()]


PRESET_NAMES = ("quantum_affine", "lie_enveloping", "jimbo", "q_enveloping",
                "skew_iterated", "two_gen_ore", "sl2_like", "woronowicz",
                "le_bruyn", "three_gen", "clifford", "down_up")


def preset(name: str, ring: Ring | None = None,
           params: dict[str, str] | None = None) -> Presentation:
    """Build a named family from CLI-style string parameters.

    Structured data (Lie brackets, brace data, skew middles) is only fully
    expressible through the library API; the dispatcher exposes the scalar
    parameters and ships a concrete default instance for each family.
    """
    params = dict(params or {})

    def coeff(key, default):
        return parse_coeff(params[key], ring) if key in params else default

    def num(key, default):
        return int(params[key]) if key in params else default

    if name == "quantum_affine":
        ring = ring or ZZ
        omega = [int(s) for s in params.get("omega", "").split(",") if s.strip()]
        lam = _collect_indexed(params, "lam", ring)
        return quantum_affine(ring, num("n", 2), num("p", 2), lam, omega)
    if name == "lie_enveloping":
        ring = ring or ZZ
        n = num("n", 3)
        brackets = {}
        for key, value in params.items():
            m = re.match(r"^c_(\d+)_(\d+)_(\d+)$", key)
            if m:
                j, i, l = (int(g) for g in m.groups())
                brackets.setdefault((j, i), {})[l] = parse_coeff(value, ring)
        if not brackets and n == 3:
            brackets = _SL2_BRACKETS
        return lie_enveloping(ring, n, brackets)
    if name == "jimbo":
        if ring is None:
            return jimbo(num("N", 2))
        return jimbo(num("N", 2), ring, coeff("q", None))
    if name == "q_enveloping":
        ring = ring or ZZ
        n = num("n", 3)
        if params.get("style", "sl2") == "zero":
            q = {(j, i): coeff("q", ring.one) for j in range(2, n + 1)
                 for i in range(1, j)}
            return q_enveloping(QEnvelopingSpec(ring, n, q))
        lin = {pair: dict(entries) for pair, entries in _SL2_BRACKETS.items()}
        return q_enveloping(QEnvelopingSpec(ring, 3, {}, lin=lin))
    if name == "skew_iterated":
        ring = ring or QQ
        q = coeff("q", ring.from_int(2))
        if not q.is_unit():
            raise ValueError("the default skew fixture needs a unit q")
        qm2, q2 = q ** (-2), q ** 2
        return skew_iterated(
            ring, 3,
            q={(2, 1): qm2, (3, 2): qm2, (3, 1): q2},
            middles={(3, 1): [(-q, {2: 1})]})
    if name == "two_gen_ore":
        ring = ring or ZZ
        f = _coeff_list(params.get("f", "0"), ring)
        return two_gen_ore(ring, coeff("q", ring.one), coeff("alpha", ring.zero), f)
    if name == "sl2_like":
        ring = ring or ZZ
        f = _coeff_list(params.get("f", "0,-1"), ring)
        return sl2_like(ring, coeff("lam", ring.one), coeff("gamma", ring.from_int(2)),
                        coeff("omega", ring.one), f)
    if name == "woronowicz":
        ring = ring or QQ
        return woronowicz(ring, coeff("zeta", ring.from_int(2)))
    if name == "le_bruyn":
        ring = ring or QQ
        return le_bruyn(ring, coeff("lam", ring.one), coeff("gamma", ring.one),
                        coeff("omega", ring.one), coeff("a", ring.zero),
                        coeff("b", ring.one))
    if name == "three_gen":
        ring = ring or ZZ
        return three_gen(ring, coeff("lam", ring.one), coeff("mu", ring.zero),
                         coeff("gamma", ring.zero))
    if name == "clifford":
        ring = ring or ZZ
        n = num("n", 3)
        qi = _coeff_list(params.get("qi", ""), ring)
        qkl = _collect_indexed(params, "qkl", ring)
        return clifford(ring, n, qi, qkl)
    if name == "down_up":
        ring = ring or ZZ
        return down_up(ring, coeff("alpha", ring.from_int(2)),
                       coeff("beta", ring.from_int(-1)), coeff("gamma", ring.zero))
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")
