#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace evoo {

/// Rectangular excitation x emission wavelength grid of an EEM measurement.
///
/// Both axes must be strictly increasing with a uniform step. The default
/// grid is the instrument grid used throughout: excitation 300-650 nm in
/// steps of 10 nm (36 wavelengths), emission 300-800 nm in steps of 2 nm
/// (251 wavelengths).
class WavelengthGrid {
public:
    WavelengthGrid(std::vector<double> excitation_nm, std::vector<double> emission_nm);

    static WavelengthGrid instrument_default();

    const std::vector<double>& excitation() const { return excitation_; }
    const std::vector<double>& emission() const { return emission_; }
    std::size_t n_excitation() const { return excitation_.size(); }
    std::size_t n_emission() const { return emission_.size(); }
    double excitation_step() const { return excitation_step_; }
    double emission_step() const { return emission_step_; }

    /// Index of an excitation wavelength that is exactly on the grid.
    std::optional<std::size_t> excitation_index(double nm) const;

    /// Index of the emission pixel nearest to `nm`, ties broken toward the
    /// lower index; values outside the range clamp to the nearest end.
    std::size_t nearest_emission_index(double nm) const;

    bool operator==(const WavelengthGrid& other) const {
        return excitation_ == other.excitation_ && emission_ == other.emission_;
    }
    bool operator!=(const WavelengthGrid& other) const { return !(*this == other); }

private:
    std::vector<double> excitation_;
    std::vector<double> emission_;
    double excitation_step_ = 0.0;
    double emission_step_ = 0.0;
};

}  // namespace evoo
