"""Exact q-characters and t-deformed q,t-characters for finite-type Cartan data."""

from .algebra import Monomial, YtAlgebra, YtElement
from .cartan import (
    CartanMatrix,
    InvCartanSeries,
    SymmetrizedCartan,
    cartan_from_json,
    named_cartan,
    validate_cartan,
)
from .characters import (
    Budget,
    CharacterTree,
    RepElement,
    character_tree,
    chi_qt,
    chi_qt_inverse,
    decomposition_t1,
    e_t,
    e_t_normalized,
    fundamental,
    lt_and_kl,
    positivity_report,
    q_char,
    star_product,
    t_algorithm,
)
from .errors import (
    AlgorithmFails,
    BudgetExceeded,
    DomainError,
    InternalInconsistency,
    InversionFails,
    NonIntegralShift,
    NotCartan,
    NotDominant,
    NotFiniteType,
    NotIDominant,
    NotSimplyLaced,
    NotSymmetrizable,
    ParseError,
    QtcharError,
)
from .screening import ScreeningVector, e_it, f_it, in_kernel, in_kernel_all, s_it
from .sl2 import (
    Segment,
    classic_L,
    decompose_segments,
    et_sl2,
    ft_segment,
    ft_sl2,
    is_irregular,
    sl2_algebra,
)
from .tpoly import TPoly


def algebra(cartan) -> YtAlgebra:
    """Convenience constructor: name, JSON dict, or matrix -> YtAlgebra."""
    if isinstance(cartan, YtAlgebra):
        return cartan
    if isinstance(cartan, SymmetrizedCartan):
        return YtAlgebra(cartan)
    if isinstance(cartan, (str, dict)):
        return YtAlgebra(cartan_from_json(cartan))
    return YtAlgebra(validate_cartan(cartan))


__all__ = [name for name in dir() if not name.startswith("_")]
