#pragma once

#include <vector>

#include "evoo/eem.hpp"

namespace evoo {

/// Half-width of the Rayleigh-scatter mask: the masked window is the
/// emission pixel nearest to the excitation wavelength plus 5 pixels on
/// each side (11 pixels total before clipping at the grid edges).
inline constexpr int kRayleighHalfWidth = 5;

/// Returns a copy of `eem` with the Rayleigh-scatter window of every
/// excitation row set to zero. Idempotent; the input is not modified.
EEM mask_rayleigh(const EEM& eem);

/// Copy of the intensity row at excitation wavelength `excitation_nm`.
/// Throws NotFoundError if the wavelength is not on the grid.
std::vector<double> emission_spectrum(const EEM& eem, double excitation_nm);

/// Element-wise `aged - fresh`; may contain negative values.
/// Throws MismatchError on grid or oil-label mismatch.
Matrix diff_eem(const EEM& aged, const EEM& fresh);

}  // namespace evoo
