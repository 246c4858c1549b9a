"""GaN/AlN core/shell wire and dot subbands, donor states and intersubband optics."""

from ._core import (
    Geometry,
    Matching,
    Shape,
    LineshapeMode,
    MaterialParams,
    WellProfile,
    SubbandState,
    QdState,
    DonorState,
    TransitionData,
    LineModel,
    ModelOptions,
    ThermalConfig,
    Error,
    __version__,
    material_lookup,
    resolve,
    conduction_offset,
    find_levels,
    qd_find_levels,
    radial_wavefunction,
    minimize_energy,
    dipole_element,
    qd_dipole,
    wire_line,
    dot_line,
    dielectric_function,
    qd_absorption,
    qwr_absorption,
    bessel_j,
    bessel_k,
    spherical_bessel_j,
    spherical_k,
    run_config,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
