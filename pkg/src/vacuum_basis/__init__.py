"""Combinatorial bases of vacuum standard modules L(kΛ0) for affine C_ℓ^(1)."""
from .arrays import ArrayKind, ArrayPosition, Generator, GeneratorArray, array_position, downward_paths_through
from .character import GradedDimTable, graded_dims
from .derivations import (ShiftPlan, apply_T, color_shift, shift_plan, verify_color_shift_end_to_end,
                          verify_lemma_powers, verify_lemma_single)
from .kernels import BACKEND
from .lie import ColorLabel, IndexLabel, LieAlgebraModel, WeightVector, build_symplectic_model
from .partitions import (ColoredPartition, ResourceCapExceeded, enumerate_admissible, is_admissible,
                         max_path_load, phi_bijection, sort_monomial)
from .pbw import (GradedSlice, ModuleVector, PBWAlgebra, UElement, VacuumModule, VacuumQuotient,
                  adjoint_word_action, build_quotient_slices)
from .theorem import verify_theorem

__version__ = "0.1.0"
