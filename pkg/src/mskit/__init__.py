"""mskit: exact computation with quiver algebras in special multiserial shape.

The package provides:

* quivers, paths and exact scalars (``quiver``, ``fields``),
* finite-dimensional algebras ``KQ/I`` described by an allowed-composition
  table, cutoffs and socle identifications (``presentation``),
* Brauer configurations and their algebras (``brauer``),
* recovery of a configuration from a symmetric presentation (``recovery``),
* quiver representations and multiserial decomposition (``modules``,
  ``decompose``),
* symmetric radical-cube-zero algebras given by Gram data (``radcube``),
* file formats, random generators and a batch CLI (``formats``,
  ``randgen``, ``cli``).
"""

from mskit.fields import FieldError, PrimeField, QQ, Rationals, field_by_name
from mskit.quiver import (
    Arrow,
    LinearCombination,
    Path,
    Quiver,
    QuiverError,
    compose,
    divide_left,
    path_ge,
)
from mskit.presentation import (
    ConditionReport,
    PiTable,
    PresentationError,
    SpecialCycleSet,
    SpecialPresentation,
    check_conditions,
)
from mskit.brauer import (
    BrauerConfiguration,
    ConfigurationError,
    Polygon,
    RelationSet,
    build_algebra,
    build_quiver,
    build_relations,
    special_cycles,
)
from mskit.recovery import (
    RecoveryError,
    SigmaData,
    config_isomorphic,
    induced_permutation,
    recover_configuration,
    rescale_to_unit_idents,
    solve_unit_rescaling,
    symmetry_violations,
    verify_symmetric,
)
from mskit.modules import (
    Representation,
    RepresentationError,
    Subspace,
    cyclic_uniserial,
    direct_sum,
    projective_rep,
    quotient_rep,
    radical_generators,
    submodule_generated,
    uniform_generators,
)
from mskit.decompose import (
    DecompositionError,
    decompose_exhaustive,
    decompose_multiserial,
    verify_multiserial,
)
from mskit.radcube import (
    ArrBasis,
    GramDegeneracyError,
    GramError,
    GramSpec,
    extract_presentation,
    normalize_arr,
    radcube_to_configuration,
    validate_gram,
)

__version__ = "0.1.0"
