"""Incidence coalgebras of locally finite categories, verified exactly.

The package builds the scaled incidence coalgebra of a finite fragment of a
locally finite category, upgrades it to a bialgebra or weak Hopf algebra
when the monoidal structure cooperates, and checks every law as an exact
identity of rational vectors.  Instance families live in their own modules
(word pairs over a related monoid, skew shapes, operadic forests, abstract
bigraphs, group quivers, crossed-module 2-groups); :mod:`inchopf.config`
builds them from text configs and :mod:`inchopf.cli` fronts everything from
the command line.
"""

from .category import (
    CategoryInstance,
    check_locally_finite,
    check_mobius,
    compose,
    fragment,
    is_identity,
    morphism_length,
    n2,
    nhat,
)
from .config import LoadedInstance, load_file, load_text
from .errors import (
    ComposeError,
    ConfigError,
    EnumerationBoundError,
    InchopfError,
    InvariantError,
    LengthDivergenceError,
    MorphismParseError,
    UndefinedKeyError,
    UnsupportedOperationError,
)
from .incidence import (
    IncidenceConfig,
    WeakHopfData,
    antipode_combinatorial,
    bialgebra_config,
    check_bialgebra,
    check_coalgebra,
    check_weak_hopf,
    convolve,
    coproduct,
    counit,
    product_lin,
)
from .linalg import FreeVec, render
from .monoidal import (
    MonoidalInstance,
    check_combinatorial,
    check_interchange,
    check_monoidal_laws,
    check_nlf,
    mproduct,
)
from .reports import CheckResult, LiftReport, Report

__all__ = [
    "CategoryInstance",
    "CheckResult",
    "ComposeError",
    "ConfigError",
    "EnumerationBoundError",
    "FreeVec",
    "InchopfError",
    "IncidenceConfig",
    "InvariantError",
    "LengthDivergenceError",
    "LiftReport",
    "LoadedInstance",
    "MonoidalInstance",
    "MorphismParseError",
    "Report",
    "UndefinedKeyError",
    "UnsupportedOperationError",
    "WeakHopfData",
    "antipode_combinatorial",
    "bialgebra_config",
    "check_bialgebra",
    "check_coalgebra",
    "check_combinatorial",
    "check_interchange",
    "check_locally_finite",
    "check_mobius",
    "check_monoidal_laws",
    "check_nlf",
    "check_weak_hopf",
    "compose",
    "convolve",
    "coproduct",
    "counit",
    "fragment",
    "is_identity",
    "load_file",
    "load_text",
    "morphism_length",
    "mproduct",
    "n2",
    "nhat",
    "product_lin",
    "render",
]
__version__ = "0.1.0"
