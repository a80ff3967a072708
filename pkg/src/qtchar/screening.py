"""Deformed screening operators and their kernels.

s_it maps an element to a vector over the canonical screening-current
window; the kernel elements e_it and f_it generate the node-i kernel, f_it
being the unique kernel element whose only i-dominant monomial is m.
"""

from __future__ import annotations

from .algebra import Monomial, YtAlgebra, YtElement
from .errors import NotIDominant
from .sl2 import ft_sl2, sl2_algebra
from .tpoly import ONE, TPoly


class ScreeningVector:
    """Element of the free module over node i: canonical index l in [-r_i, r_i)."""

    __slots__ = ("i", "ri", "comps")

    def __init__(self, i: int, ri: int):
        self.i = i
        self.ri = ri
        self.comps = {l: YtElement.zero() for l in range(-ri, ri)}

    def add(self, l: int, elem: YtElement):
        if not (-self.ri <= l < self.ri):
            raise ValueError(f"index {l} outside canonical window")
        self.comps[l] = self.comps[l] + elem

    def component(self, l: int) -> YtElement:
        return self.comps[l]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.comps.values())

    def __eq__(self, other):
        return (
            isinstance(other, ScreeningVector)
            and (self.i, self.ri) == (other.i, other.ri)
            and self.comps == other.comps
        )

    def __repr__(self):
        parts = [f"{l}: {v!r}" for l, v in sorted(self.comps.items()) if not v.is_zero()]
        return f"ScreeningVector(i={self.i}, " + ("0" if not parts else "; ".join(parts)) + ")"


def _sigma(u: int) -> TPoly:
    """(t^{2u} - 1)/(t^2 - 1) in closed form; a Laurent polynomial for every u."""
    if u == 0:
        return TPoly.zero()
    if u > 0:
        return TPoly({2 * s: 1 for s in range(u)})
    return TPoly({-2 * s: -1 for s in range(1, -u + 1)})


def s_it(alg: YtAlgebra, i: int, x: YtElement) -> ScreeningVector:
    """Apply the node-i deformed screening operator."""
    ri = alg.cartan.ri(i)
    out = ScreeningVector(i, ri)
    for m, p in x.items():
        for (j, l), u in m.items():
            if j != i or u == 0:
                continue
            coeff = YtElement.from_monomial(m, p * _sigma(u))
            ll = l
            # reduce the current index into the canonical window, absorbing
            # the A factors into the left coefficient
            while ll >= ri:
                step = alg.a_elem(i, ll - ri).scale(TPoly.t_power(1))
                coeff = alg.mul(coeff, step)
                ll -= 2 * ri
            while ll < -ri:
                step = alg.a_inv_elem(i, ll + ri).scale(TPoly.t_power(-1))
                coeff = alg.mul(coeff, step)
                ll += 2 * ri
            out.add(ll, coeff)
    return out


def in_kernel(alg: YtAlgebra, i: int, x: YtElement) -> bool:
    return s_it(alg, i, x).is_zero()


def in_kernel_all(alg: YtAlgebra, x: YtElement) -> bool:
    return all(in_kernel(alg, i, x) for i in alg.cartan.nodes())


def _check_i_dominant(alg: YtAlgebra, i: int, m: Monomial):
    if not m.is_dominant([i]):
        raise NotIDominant(f"{m} is not dominant for node {i}")


def e_it(alg: YtAlgebra, i: int, m: Monomial) -> YtElement:
    """Ordered product of node-i kernel generators and spectator variables."""
    _check_i_dominant(alg, i, m)
    ri = alg.cartan.ri(i)
    acc = YtElement.unit()
    for l in m.levels():
        ui = m.u(i, l)
        if ui:
            bracket = YtElement.unit() + alg.a_inv_elem(i, l + ri).scale(TPoly.t_power(1))
            factor = alg.mul(YtElement.from_monomial(Monomial.y(i, l)), bracket)
            for _ in range(ui):
                acc = alg.mul(acc, factor)
        for j in alg.cartan.nodes():
            if j != i:
                uj = m.u(j, l)
                if uj:
                    acc = alg.mul(acc, YtElement.from_monomial(Monomial.y(j, l, uj)))
    return acc


def _residue_shadows(alg: YtAlgebra, i: int, m: Monomial):
    """Split the node-i exponents of m into rank-1 monomials per residue class."""
    ri = alg.cartan.ri(i)
    shadows = {}
    for (j, l), u in m.items():
        if j == i:
            k = l % ri
            shadows.setdefault(k, {})[(1, (l - k) // ri)] = u
    return {k: Monomial(d) for k, d in shadows.items()}


def f_it(alg: YtAlgebra, i: int, m: Monomial) -> YtElement:
    """Kernel element with m as its unique i-dominant monomial.

    Built by lifting the rank-1 character of each residue shadow: express
    ft_sl2 as an A^-1-string polynomial over the shadow, relabel the string
    levels back to node i, and multiply everything onto m.
    """
    cached = alg.fit_cache.get((i, m))
    if cached is not None:
        return cached
    _check_i_dominant(alg, i, m)
    ri = alg.cartan.ri(i)
    s2 = sl2_algebra()
    result = YtElement.from_monomial(m)
    for k, mk in sorted(_residue_shadows(alg, i, m).items()):
        ft = ft_sl2(s2, mk)
        chi = YtElement.zero()
        for mu, lam in ft.items():
            v = s2.factor_over_A(mu, mk)
            if v is None:
                raise NotIDominant(f"rank-1 character term {mu} does not factor over {mk}")
            a_v = s2.a_monomial_expand(v)
            c = lam * TPoly.t_power(-s2.bichar_n(mk, a_v))
            target = alg.a_monomial_expand(
                {(i, k + lv * ri): e for (_, lv), e in v.items()}
            )
            chi = chi + YtElement.from_monomial(target, c)
        result = alg.mul(result, chi)
    if result.coeff(m) != ONE:
        raise AssertionError(f"f_it leading coefficient on {m} is {result.coeff(m)}")
    alg.fit_cache[(i, m)] = result
    return result


def i_dominant_part(x: YtElement, i: int) -> dict:
    return {m: p for m, p in x.items() if m.is_dominant([i])}
