"""The t-algorithm, fundamental q,t-characters, deformed products,
and the bar-invariant canonical basis with its KL-analogue polynomials."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .algebra import Monomial, YtAlgebra, YtElement
from .errors import (
    AlgorithmFails,
    BudgetExceeded,
    InternalInconsistency,
    InversionFails,
    NonIntegralShift,
    NotDominant,
)
from .screening import f_it
from .tpoly import ONE, TPoly, ZERO


@dataclass(frozen=True)
class Budget:
    """Guard rails for the frontier computation (termination is conjectural)."""

    max_monomials: int = 200000
    max_a_depth: int = 60

    def __post_init__(self):
        if self.max_monomials < 1 or self.max_a_depth < 1:
            raise ValueError("budgets must be >= 1")


DEFAULT_BUDGET = Budget()


def t_algorithm(alg: YtAlgebra, m_plus: Monomial, budget: Budget = DEFAULT_BUDGET,
                record_blocks: bool = False):
    """Frontier computation of the deformed character with highest monomial m_plus.

    Monomials are processed in (A-depth, lexicographic) order, which extends
    the partial order.  Each processed node-i-dominant monomial with nonzero
    leftover coefficient contributes its f_it expansion to the accumulators;
    a non-dominant monomial must receive the same value from every node that
    sees a negative exponent, and disagreement aborts loudly.
    """
    if not m_plus.is_dominant():
        raise NotDominant(f"seed {m_plus} is not dominant")
    nodes = list(alg.cartan.nodes())
    acc = {i: {} for i in nodes}
    s = {}
    heap = [(0, m_plus.sortkey(), m_plus)]
    seen = {m_plus}
    blocks = [] if record_blocks else None
    while heap:
        _, _, m = heapq.heappop(heap)
        si = {i: acc[i].pop(m, ZERO) for i in nodes}
        if m == m_plus:
            sm = ONE
        elif m.is_dominant():
            sm = ZERO
        else:
            vals = [si[i] for i in nodes if not m.is_dominant([i])]
            for v in vals[1:]:
                if v != vals[0]:
                    raise AlgorithmFails(
                        f"node values disagree at {m}: {vals[0]} vs {v}"
                    )
            sm = vals[0]
        s[m] = sm
        for i in nodes:
            if not m.is_dominant([i]):
                continue
            mu_i = sm - si[i]
            if mu_i.is_zero():
                continue
            f = f_it(alg, i, m)
            if record_blocks:
                blocks.append((i, m, f))
            for mr, coeff in f.items():
                if mr == m:
                    continue
                acc[i][mr] = acc[i].get(mr, ZERO) + mu_i * coeff
                if mr not in seen:
                    seen.add(mr)
                    if len(seen) > budget.max_monomials:
                        raise BudgetExceeded(
                            f"more than {budget.max_monomials} monomials discovered"
                        )
                    depth = alg.a_depth(mr, m_plus)
                    if depth is None:
                        raise InternalInconsistency(
                            f"discovered monomial {mr} does not factor over the seed"
                        )
                    if depth > budget.max_a_depth:
                        raise BudgetExceeded(f"A-depth {depth} exceeds budget")
                    heapq.heappush(heap, (depth, mr.sortkey(), mr))
    result = YtElement(s)
    if record_blocks:
        return result, blocks
    return result


def fundamental(alg: YtAlgebra, i: int, l: int = 0, budget: Budget = DEFAULT_BUDGET) -> YtElement:
    """Deformed character of the fundamental with highest monomial Y_{i,l}."""
    base = alg.fundamental_cache.get(i)
    if base is None:
        base = t_algorithm(alg, Monomial.y(i, 0), budget)
        alg.fundamental_cache[i] = base
    return base if l == 0 else base.shift(l)


def _normalize_leading(elem: YtElement, m: Monomial) -> YtElement:
    lead = elem.coeff(m)
    sp = lead.single_power()
    if sp is None or sp[1] != 1:
        raise InternalInconsistency(f"leading coefficient on {m} is {lead}, not a t-power")
    return elem.scale(TPoly.t_power(-sp[0]))


def e_t(alg: YtAlgebra, m: Monomial, budget: Budget = DEFAULT_BUDGET) -> YtElement:
    """Ordered product of shifted fundamentals (levels increasing).

    The leading coefficient on m is the t-power accumulated by ordering the
    highest terms, not 1; peeling and the canonical basis divide it out where
    they need a unit leading term.
    """
    if not m.is_dominant():
        raise NotDominant(f"{m} is not dominant")
    acc = YtElement.unit()
    for (i, l), u in sorted(m.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        factor = fundamental(alg, i, l, budget)
        for _ in range(u):
            acc = alg.mul(acc, factor)
    return acc


def e_t_normalized(alg: YtAlgebra, m: Monomial, budget: Budget = DEFAULT_BUDGET) -> YtElement:
    """e_t rescaled so the coefficient of m is exactly 1."""
    return _normalize_leading(e_t(alg, m, budget), m)


# ---------------------------------------------------------------------------
# representation-ring elements and the deformed product
# ---------------------------------------------------------------------------


class RepElement:
    """Z[t^±]-combination of commutative monomials in the classes X_{i,l}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for m, p in terms.items():
                if any(e < 0 for _, e in m.items()):
                    raise ValueError(f"Rep-monomial {m} has a negative exponent")
                p = TPoly.coerce(p)
                if not p.is_zero():
                    d[m] = p
        self.terms = d

    @staticmethod
    def from_monomial(m: Monomial, coeff=ONE) -> "RepElement":
        return RepElement({m: coeff})

    def items(self):
        return self.terms.items()

    def coeff(self, m: Monomial) -> TPoly:
        return self.terms.get(m, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        d = dict(self.terms)
        for m, p in other.terms.items():
            d[m] = d.get(m, ZERO) + p
        return RepElement(d)

    def __eq__(self, other):
        return isinstance(other, RepElement) and self.terms == other.terms

    def scale(self, p) -> "RepElement":
        p = TPoly.coerce(p)
        return RepElement({m: q * p for m, q in self.terms.items()})

    def mul_commutative(self, other) -> "RepElement":
        """Ordinary commutative product (the t=1 shadow of *)."""
        d = {}
        for m1, p1 in self.terms.items():
            for m2, p2 in other.terms.items():
                key = m1.times(m2)
                d[key] = d.get(key, ZERO) + p1 * p2
        return RepElement(d)

    def at_one(self) -> dict:
        out = {}
        for m, p in self.terms.items():
            v = p.at_one()
            if v:
                out[m] = v
        return out

    def __repr__(self):
        if not self.terms:
            return "RepElement(0)"
        parts = [f"({p}) {_rep_str(m)}" for m, p in sorted(self.terms.items(), key=lambda kv: kv[0].sortkey())]
        return "RepElement[" + " + ".join(parts) + "]"


def _rep_str(m: Monomial) -> str:
    if m.is_unit():
        return "1"
    parts = []
    for (i, l), e in m.items():
        s = f"X[{i},{l}]"
        if e != 1:
            s += f"^{e}"
        parts.append(s)
    return " ".join(parts)


def chi_qt(alg: YtAlgebra, x: RepElement, budget: Budget = DEFAULT_BUDGET) -> YtElement:
    """Linear extension of X-monomial -> E_t(matching Y-monomial)."""
    out = YtElement.zero()
    for m, p in x.items():
        out = out + e_t(alg, m, budget).scale(p)
    return out


def q_char(alg: YtAlgebra, x: RepElement, budget: Budget = DEFAULT_BUDGET) -> dict:
    """Classical character: chi_qt specialized at t = 1."""
    return chi_qt(alg, x, budget).at_one()


def chi_qt_inverse(alg: YtAlgebra, z: YtElement, budget: Budget = DEFAULT_BUDGET) -> RepElement:
    """Invert chi_qt by peeling maximal dominant monomials."""
    out = {}
    z = YtElement(dict(z.terms))
    while not z.is_zero():
        doms = [m for m in z.monomials() if m.is_dominant()]
        if not doms:
            raise InversionFails("nonzero residual without a dominant monomial")
        maximal = [
            m for m in doms
            if not any(other != m and alg.leq(m, other) for other in doms)
        ]
        mu = max(maximal, key=lambda m: (m.degree(), m.sortkey()))
        e = e_t(alg, mu, budget)
        sp = e.coeff(mu).single_power()
        if sp is None or sp[1] != 1:
            raise InversionFails(f"leading coefficient of E_t({mu}) is not a t-power")
        lam = z.coeff(mu) * TPoly.t_power(-sp[0])
        out[mu] = out.get(mu, ZERO) + lam
        z = z - e.scale(lam)
    return RepElement(out)


def star_product(alg: YtAlgebra, x: RepElement, y: RepElement,
                 budget: Budget = DEFAULT_BUDGET) -> RepElement:
    """Deformed Grothendieck product."""
    z = alg.mul(chi_qt(alg, x, budget), chi_qt(alg, y, budget))
    return chi_qt_inverse(alg, z, budget)


# ---------------------------------------------------------------------------
# canonical basis and KL-analogue polynomials
# ---------------------------------------------------------------------------


def _dominant_closure(alg: YtAlgebra, m: Monomial, budget: Budget):
    """All dominant monomials reachable through iterated E_t expansions."""
    e_cache = {}
    queue = [m]
    seen = {m}
    while queue:
        mu = queue.pop()
        e = e_t_normalized(alg, mu, budget)
        e_cache[mu] = e
        for nu in e.dominant_part():
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return e_cache


def lt_and_kl(alg: YtAlgebra, m: Monomial, budget: Budget = DEFAULT_BUDGET):
    """Canonical-basis expansion of E_t(m).

    Returns (kl, lt): kl is a list of (monomial, shift, P) triples where the
    bar-invariant representative of the lower dominant monomial mu is
    t^shift * mu, and P is the KL-analogue polynomial in t^-1 Z[t^-1];
    lt maps each dominant monomial to its (representative-normalized)
    canonical element.
    """
    if not m.is_dominant():
        raise NotDominant(f"{m} is not dominant")
    e_cache = _dominant_closure(alg, m, budget)
    doms = list(e_cache)
    depth = {mu: alg.a_depth(mu, m) for mu in doms}
    if any(d is None for d in depth.values()):
        raise InternalInconsistency("dominant closure left the cone below m")
    order = sorted(doms, key=lambda mu: (-depth[mu], mu.sortkey()))  # deepest first
    nn = {mu: alg.bichar_n(mu, mu) for mu in doms}
    lhat = {}
    f_cache = {}
    kl_for = {}
    for mu in order:
        fhat = t_algorithm(alg, mu, budget)
        f_cache[mu] = fhat
        residual = e_cache[mu] - fhat
        lowers = sorted(
            (nu for nu in doms if nu != mu and depth[nu] > depth[mu] and alg.leq(nu, mu)),
            key=lambda nu: (depth[nu], nu.sortkey()),
        )
        rows = []
        lsum = fhat
        for nu in lowers:
            a = residual.coeff(nu)
            if not a.is_zero():
                residual = residual - lhat[nu].scale(a)
            diff = nn[nu] - nn[mu]
            if diff % 2:
                raise NonIntegralShift(f"odd quadratic-form gap between {nu} and {mu}")
            c = diff // 2
            alpha = a * TPoly.t_power(-c)
            neg, const, pos = alpha.split_signs()
            beta = const + pos + pos.invert_t()
            p = alpha - beta
            rows.append((nu, c, p))
            if not beta.is_zero():
                lsum = lsum + lhat[nu].scale(beta * TPoly.t_power(c))
        if not residual.is_zero():
            raise InternalInconsistency(
                f"E_t({mu}) did not close over the canonical basis"
            )
        lhat[mu] = lsum
        kl_for[mu] = rows
    shift = {mu: (nn[mu] - nn[m]) // 2 for mu in doms}
    lt = {mu: lhat[mu].scale(TPoly.t_power(shift[mu])) for mu in doms}
    return kl_for[m], lt


def decomposition_t1(alg: YtAlgebra, m: Monomial, budget: Budget = DEFAULT_BUDGET):
    """Putative classical multiplicities: all P evaluated at t = 1."""
    kl, _ = lt_and_kl(alg, m, budget)
    return [(nu, p.at_one()) for nu, _, p in kl]


def positivity_report(alg: YtAlgebra, i: int, budget: Budget = DEFAULT_BUDGET):
    """Scan fundamental(i, 0) for negative coefficients."""
    f = fundamental(alg, i, 0, budget)
    offending = [(m, p) for m, p in f.items() if not p.nonnegative()]
    return {"node": i, "positive": not offending, "offending": offending}


# ---------------------------------------------------------------------------
# character trees
# ---------------------------------------------------------------------------


class CharacterTree:
    """Colored-edge view of a deformed character, mirroring the usual figures."""

    def __init__(self, root: Monomial, vertices, edges):
        self.root = root
        self.vertices = vertices  # list of Monomial
        self.edges = edges  # list of (src, dst, (i, l))


def character_tree(alg: YtAlgebra, m_plus: Monomial,
                   budget: Budget = DEFAULT_BUDGET) -> CharacterTree:
    result, blocks = t_algorithm(alg, m_plus, budget, record_blocks=True)
    support = set(result.monomials())
    edges = {}
    for i, _, f in blocks:
        members = [mm for mm in f.monomials() if mm in support]
        for m1 in members:
            for m2 in members:
                if m1 == m2:
                    continue
                v = alg.factor_over_A(m2, m1)
                if v and sum(v.values()) == 1:
                    [(key, _)] = v.items()
                    if key[0] == i:
                        edges[(m1, m2)] = key
    vertices = sorted(support, key=lambda m: m.sortkey())
    edge_list = sorted(
        ((src, dst, key) for (src, dst), key in edges.items()),
        key=lambda e: (e[0].sortkey(), e[1].sortkey()),
    )
    return CharacterTree(m_plus, vertices, edge_list)
