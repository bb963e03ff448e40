"""Finite quasigroups, their semisymmetrizations, and executable checks of the
category-level facts relating homotopies to homomorphisms."""

from .errors import BudgetExceeded, InputError, PreconditionError, QSSError
from .qcore import (
    Biquasigroup,
    ParastropheKind,
    Quasigroup,
    TwistedQuasigroup,
    apply,
    cyclic_rotate,
    from_mul_table,
    is_semisymmetric,
    is_twisted_quasigroup,
    parastrophe,
    semisymmetry_report,
    validate_latin,
)
from .morphisms import (
    Homomorphism,
    Homotopy,
    complete_homotopy,
    compose_homotopies,
    enumerate_homomorphisms,
    enumerate_homotopies,
    find_isomorphism,
    find_isotopy,
    homotopy_identity_report,
    identity_homotopy,
    is_homomorphism,
    is_homotopy,
)
from .semisym import (
    GammaVariant,
    TaggedQuasigroup,
    delta_arrow,
    delta_object,
    gamma_arrow,
    gamma_object,
    gamma_tagged,
    otimes_cube,
    twisted_semisymmetrization,
)
from .enumeration import EnumerationConfig, count_latin_squares, enumerate_latin_squares

__version__ = "0.1.0"
