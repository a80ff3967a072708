"""The twisted Laurent-monomial algebra in the variables Y_{i,l}.

Elements are stored in the normal-ordered basis: a finite map from
BasisMonomial (sparse (node, level) -> exponent) to TPoly coefficients.
The noncommutative product is governed by the bicharacter N built from
series coefficients of the inverse quantized Cartan matrix; gamma, alpha
and beta are the generator-level commutation exponents.
"""

from __future__ import annotations

from .cartan import InvCartanSeries, SymmetrizedCartan
from .errors import NotSimplyLaced
from .tpoly import ONE, TPoly

# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------


class Monomial:
    """Immutable sparse exponent map (node i, level l) -> nonzero integer u_{i,l}."""

    __slots__ = ("data", "_hash")

    def __init__(self, data=None):
        if data is None:
            items = ()
        elif isinstance(data, Monomial):
            items = data.data
        else:
            if not isinstance(data, dict):
                data = dict(data)
            items = tuple(sorted((k, e) for k, e in data.items() if e != 0))
        self.data = items
        self._hash = hash(items)

    @staticmethod
    def y(i: int, l: int, e: int = 1) -> "Monomial":
        return Monomial({(i, l): e})

    @staticmethod
    def unit() -> "Monomial":
        return Monomial()

    def u(self, i: int, l: int) -> int:
        return dict(self.data).get((i, l), 0)

    def as_dict(self) -> dict:
        return dict(self.data)

    def items(self):
        return self.data

    def times(self, other: "Monomial") -> "Monomial":
        d = dict(self.data)
        for k, e in other.data:
            d[k] = d.get(k, 0) + e
        return Monomial(d)

    def power(self, n: int) -> "Monomial":
        return Monomial({k: n * e for k, e in self.data})

    def inverse(self) -> "Monomial":
        return self.power(-1)

    def shift(self, dl: int) -> "Monomial":
        return Monomial({(i, l + dl): e for (i, l), e in self.data})

    def levels(self):
        return sorted({l for (_, l), _ in self.data})

    def max_level(self):
        return max((l for (_, l), _ in self.data), default=None)

    def level_slice(self, l: int) -> dict:
        return {(i, ll): e for (i, ll), e in self.data if ll == l}

    def degree(self) -> int:
        return sum(e for _, e in self.data)

    def is_unit(self) -> bool:
        return not self.data

    def is_dominant(self, nodes=None) -> bool:
        if nodes is None:
            return all(e >= 0 for _, e in self.data)
        nodes = set(nodes)
        return all(e >= 0 for (i, _), e in self.data if i in nodes)

    def is_right_negative(self) -> bool:
        """At the maximal occurring level, every exponent is negative."""
        top = self.max_level()
        if top is None:
            return False
        return all(e < 0 for (_, l), e in self.data if l == top)

    def sortkey(self):
        # level-major lexicographic key; any total order works as a tiebreak
        return self.data

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.data == other.data

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self.data:
            return "1"
        parts = []
        for (i, l), e in self.data:
            s = f"Y[{i},{l}]"
            if e != 1:
                s += f"^{e}"
            parts.append(s)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


class YtElement:
    """Finite map BasisMonomial -> TPoly; an element in the normal-ordered basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for m, p in terms.items():
                p = TPoly.coerce(p)
                if not p.is_zero():
                    d[m] = p
        self.terms = d

    @staticmethod
    def zero() -> "YtElement":
        return YtElement()

    @staticmethod
    def unit() -> "YtElement":
        return YtElement({Monomial.unit(): ONE})

    @staticmethod
    def from_monomial(m: Monomial, coeff=ONE) -> "YtElement":
        return YtElement({m: coeff})

    def coeff(self, m: Monomial) -> TPoly:
        return self.terms.get(m, TPoly.zero())

    def items(self):
        return self.terms.items()

    def monomials(self):
        return self.terms.keys()

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "YtElement") -> "YtElement":
        d = dict(self.terms)
        for m, p in other.terms.items():
            d[m] = d.get(m, TPoly.zero()) + p
        return YtElement(d)

    def __neg__(self) -> "YtElement":
        return YtElement({m: -p for m, p in self.terms.items()})

    def __sub__(self, other: "YtElement") -> "YtElement":
        return self + (-other)

    def scale(self, p) -> "YtElement":
        p = TPoly.coerce(p)
        return YtElement({m: q * p for m, q in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, YtElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def at_one(self) -> dict:
        """Specialize t -> 1; returns Monomial -> int with zeros dropped."""
        out = {}
        for m, p in self.terms.items():
            v = p.at_one()
            if v:
                out[m] = v
        return out

    def map_monomials(self, fn) -> "YtElement":
        d = {}
        for m, p in self.terms.items():
            k = fn(m)
            d[k] = d.get(k, TPoly.zero()) + p
        return YtElement(d)

    def shift(self, dl: int) -> "YtElement":
        return self.map_monomials(lambda m: m.shift(dl))

    def dominant_part(self) -> dict:
        return {m: p for m, p in self.terms.items() if m.is_dominant()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mp: mp[0].sortkey())

    def __repr__(self):
        if not self.terms:
            return "YtElement(0)"
        lines = [f"({p}) {m}" for m, p in self.sorted_terms()]
        return "YtElement[" + " + ".join(lines) + "]"


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------


class YtAlgebra:
    """Commutation data and products for a fixed symmetrized Cartan matrix."""

    def __init__(self, cartan: SymmetrizedCartan):
        self.cartan = cartan
        self.series = InvCartanSeries(cartan)
        # caches used by higher layers (sl2 engine, screening, characters)
        self.ft_sl2_cache = {}
        self.fit_cache = {}
        self.fundamental_cache = {}
        self._n_pair_cache = {}

    # -- series lookups ------------------------------------------------

    def tilde(self, a: int, b: int, r: int) -> int:
        """Series coefficient of z^r in C~(z)_{a,b}."""
        return self.series.entry_coeff(a, b, r)

    # -- generator-level commutation exponents -------------------------

    def gamma(self, i: int, l: int, j: int, k: int) -> int:
        """Exponent g with Y_{i,l} Y_{j,k} = t^g Y_{j,k} Y_{i,l}."""
        d = l - k
        rj = self.cartan.ri(j)
        t = lambda r: self.tilde(j, i, r)
        return t(-rj - d) + t(d + rj) - t(rj - d) - t(d - rj)

    def alpha(self, i: int, l: int, j: int, k: int) -> int:
        """Commutation exponent between the A^-1 generators."""
        d = l - k
        if i == j:
            ri = self.cartan.ri(i)
            return 2 * (-(d == 2 * ri) + (d == -2 * ri))
        cij = self.cartan.c(i, j)
        if cij == 0:
            return 0
        ri = self.cartan.ri(i)
        total = 0
        for r in range(cij + 1, -cij, 2):
            total += 2 * (-(d == -ri + r) + (d == ri + r))
        return total

    def beta(self, i: int, l: int, j: int, k: int) -> int:
        """Commutation exponent of A_{i,l} past Y_{j,k}."""
        if i != j:
            return 0
        ri = self.cartan.ri(i)
        d = l - k
        return 2 * (-(d == ri) + (d == -ri))

    # -- the bicharacter ------------------------------------------------

    def n_pair(self, i: int, l: int, j: int, k: int) -> int:
        """N(Y_{i,l}, Y_{j,k}) from two series lookups; depends only on (i, j, l-k)."""
        key = (i, j, l - k)
        hit = self._n_pair_cache.get(key)
        if hit is None:
            rj = self.cartan.ri(j)
            hit = self.tilde(j, i, rj + l - k) - self.tilde(j, i, -rj + l - k)
            self._n_pair_cache[key] = hit
        return hit

    def bichar_n(self, m1: Monomial, m2: Monomial) -> int:
        """N(m1, m2): biadditive extension of n_pair to exponent maps."""
        total = 0
        for (i, l), e1 in m1.items():
            for (j, k), e2 in m2.items():
                total += e1 * e2 * self.n_pair(i, l, j, k)
        return total

    # -- products -------------------------------------------------------

    def mul(self, *elements: YtElement) -> YtElement:
        """Product in the twisted algebra: m1 * m2 = t^N(m1,m2) (m1 m2)."""
        if not elements:
            return YtElement.unit()
        acc = elements[0]
        for other in elements[1:]:
            d = {}
            for m1, p1 in acc.terms.items():
                for m2, p2 in other.terms.items():
                    key = m1.times(m2)
                    tw = TPoly.t_power(self.bichar_n(m1, m2))
                    d[key] = d.get(key, TPoly.zero()) + p1 * p2 * tw
            acc = YtElement(d)
        return acc

    def word_product(self, word) -> YtElement:
        """Product of Y-generators (i, l, e) taken left to right."""
        acc = YtElement.unit()
        for i, l, e in word:
            acc = self.mul(acc, YtElement.from_monomial(Monomial.y(i, l, e)))
        return acc

    # -- the A variables ------------------------------------------------

    def a_expand(self, i: int, l: int) -> Monomial:
        """Y-exponent map of A_{i,l}."""
        ri = self.cartan.ri(i)
        d = {(i, l - ri): 1, (i, l + ri): 1}
        for j in self.cartan.nodes():
            cji = self.cartan.c(j, i)
            if j != i and cji < 0:
                for s in range(cji + 1, -cji, 2):
                    d[(j, l + s)] = d.get((j, l + s), 0) - 1
        return Monomial(d)

    def a_expand_inv(self, i: int, l: int) -> Monomial:
        return self.a_expand(i, l).inverse()

    def a_inv_elem(self, i: int, l: int) -> YtElement:
        """A_{i,l}^-1 as an element (its Y-expansion is already normal ordered)."""
        return YtElement.from_monomial(self.a_expand_inv(i, l))

    def a_elem(self, i: int, l: int) -> YtElement:
        return YtElement.from_monomial(self.a_expand(i, l))

    def a_monomial_expand(self, v: dict) -> Monomial:
        """Y-exponent map of prod A_{i,l}^-v_{i,l}."""
        acc = Monomial.unit()
        for (i, l), e in sorted(v.items()):
            acc = acc.times(self.a_expand_inv(i, l).power(e))
        return acc

    def factor_over_A(self, m: Monomial, base: Monomial):
        """Unique v >= 0 with m = base * prod A_{i,l}^-v_{i,l}, or None.

        Peels the forced exponent at the lowest uncancelled level: the
        unique lowest Y-entry of A_{i,l}^-1 is (i, l - r_i) with exponent
        -1, and every A used must keep all its entries at or below the
        highest level of the discrepancy.
        """
        diff = m.times(base.inverse())
        if diff.is_unit():
            return {}
        lmax = diff.max_level()
        v = {}
        cur = diff.as_dict()
        while cur:
            (i, l0) = min(cur, key=lambda k: (k[1], k[0]))
            e = cur[(i, l0)]
            if e > 0:
                return None
            ri = self.cartan.ri(i)
            l = l0 + ri
            if l + ri > lmax:
                return None
            v[(i, l)] = v.get((i, l), 0) - e
            for key, de in self.a_expand_inv(i, l).items():
                nv = cur.get(key, 0) + e * de  # remove (-e) copies
                if nv:
                    cur[key] = nv
                elif key in cur:
                    del cur[key]
        return v

    def a_depth(self, m: Monomial, base: Monomial):
        v = self.factor_over_A(m, base)
        return None if v is None else sum(v.values())

    def leq(self, m: Monomial, mp: Monomial) -> bool:
        """m <= m' in the partial order generated by the A_{i,l}^-1."""
        return self.factor_over_A(m, mp) is not None

    # -- bar involution -------------------------------------------------

    def bar(self, x: YtElement) -> YtElement:
        """t -> t^-1, antimultiplicative; fixes every A_{i,l}^-1."""
        d = {}
        for m, p in x.terms.items():
            q = p.invert_t() * TPoly.t_power(self.bichar_n(m, m))
            d[m] = d.get(m, TPoly.zero()) + q
        return YtElement(d)

    # -- word bookkeeping ----------------------------------------------

    def _word_twist(self, word) -> int:
        total = 0
        for a in range(len(word)):
            ia, la, ea = word[a]
            for b in range(a + 1, len(word)):
                ib, lb, eb = word[b]
                total += ea * eb * self.n_pair(ia, la, ib, lb)
        return total

    def nt_exponent(self, word) -> int:
        """Twist of an ordered generator word against its level-sorted form."""
        word = [tuple(g) for g in word]
        sorted_word = sorted(word, key=lambda g: g[1])  # stable in level
        return self._word_twist(word) - self._word_twist(sorted_word)

    def nt_bichar(self, m1: Monomial, m2: Monomial) -> int:
        """Antisymmetrized level-ordered bicharacter on exponent maps."""
        levels1 = m1.levels()
        levels2 = m2.levels()
        total = 0
        for l in levels1:
            s1 = Monomial(m1.level_slice(l))
            for lp in levels2:
                if lp >= l:
                    continue
                s2 = Monomial(m2.level_slice(lp))
                total += self.bichar_n(s1, s2) - self.bichar_n(s2, s1)
        return total

    # -- simply-laced extras --------------------------------------------

    def _require_ade(self):
        if not self.cartan.is_simply_laced():
            raise NotSimplyLaced("operation requires an ADE Cartan matrix")

    def yv_exponents(self, y: dict, v: dict) -> Monomial:
        """Y-exponent map of prod Y^y * prod A^-v."""
        m = Monomial(y)
        return m.times(self.a_monomial_expand(v))

    def d_bicharacter(self, y1: dict, v1: dict, y2: dict, v2: dict) -> int:
        """The correction bicharacter d on (y, v)-presented monomials (ADE only)."""
        self._require_ade()

        def u(y, v, i, l):
            total = y.get((i, l), 0) - v.get((i, l - 1), 0) - v.get((i, l + 1), 0)
            for j in self.cartan.nodes():
                if j != i and self.cartan.c(i, j) == -1:
                    total += v.get((j, l), 0)
            return total

        keys = set()
        for src in (y1, v1, y2, v2):
            keys.update(src)
        grid = {(i, l) for i, l in keys}
        grid |= {(i, l - 1) for i, l in keys} | {(i, l + 1) for i, l in keys}
        total = 0
        for i, l in grid:
            total += v1.get((i, l + 1), 0) * u(y2, v2, i, l)
            total += y1.get((i, l + 1), 0) * v2.get((i, l), 0)
        return total

    def vv_epsilon(self, i: int, l: int, j: int, k: int) -> int:
        """Geometric pairing coefficient (ADE only)."""
        self._require_ade()
        return self.tilde(i, j, l + 1 - k)

    def vv_epsilon_prime(self, i: int, l: int, j: int, k: int) -> int:
        self._require_ade()
        return self.tilde(i, j, l - 1 - k)
