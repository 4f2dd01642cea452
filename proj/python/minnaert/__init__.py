"""Python access to the minnaert core library."""

from ._core import (
    Fc2Variant,
    NondimMedium,
    PhysicalMedium,
    ScatterScene,
    elastic_spectrum,
    elastic_static_limits,
    first_order_resonance,
    helmholtz_spectrum,
    inverse_ft,
    lambda_exact,
    make_nondim,
    nondimensionalize,
    omega0_imag,
    pulse_ft,
    residue_approximation,
    resonance_radius,
    scattered_field,
    sph_bessel_j,
    sph_hankel_h1,
    time_windows,
)

__all__ = [name for name in dir() if not name.startswith("_")]
