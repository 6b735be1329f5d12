#include "evoo/grid.hpp"

#include <cmath>
#include <string>

#include "evoo/errors.hpp"

namespace evoo {

namespace {

double uniform_step(const std::vector<double>& axis, const char* name) {
    if (axis.size() < 2) {
        throw DomainError(std::string(name) + " axis needs at least 2 wavelengths");
    }
    const double step = (axis.back() - axis.front()) / static_cast<double>(axis.size() - 1);
    if (!(step > 0.0)) {
        throw DomainError(std::string(name) + " axis must be strictly increasing");
    }
    for (std::size_t i = 1; i < axis.size(); ++i) {
        const double d = axis[i] - axis[i - 1];
        if (!(d > 0.0) || std::abs(d - step) > 1e-9 * std::max(1.0, step)) {
            throw DomainError(std::string(name) + " axis must have a uniform step");
        }
    }
    return step;
}

std::vector<double> arange(double lo, double hi, double step) {
    std::vector<double> v;
    const auto n = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(lo + step * static_cast<double>(i));
    return v;
}

}  // namespace

WavelengthGrid::WavelengthGrid(std::vector<double> excitation_nm, std::vector<double> emission_nm)
    : excitation_(std::move(excitation_nm)), emission_(std::move(emission_nm)) {
    excitation_step_ = uniform_step(excitation_, "excitation");
    emission_step_ = uniform_step(emission_, "emission");
}

WavelengthGrid WavelengthGrid::instrument_default() {
    return WavelengthGrid(arange(300.0, 650.0, 10.0), arange(300.0, 800.0, 2.0));
}

std::optional<std::size_t> WavelengthGrid::excitation_index(double nm) const {
    const double pos = (nm - excitation_.front()) / excitation_step_;
    const auto i = static_cast<long long>(std::llround(pos));
    if (i < 0 || i >= static_cast<long long>(excitation_.size())) return std::nullopt;
    if (std::abs(excitation_[static_cast<std::size_t>(i)] - nm) > 1e-9) return std::nullopt;
    return static_cast<std::size_t>(i);
}

std::size_t WavelengthGrid::nearest_emission_index(double nm) const {
    if (nm <= emission_.front()) return 0;
    if (nm >= emission_.back()) return emission_.size() - 1;
    const double pos = (nm - emission_.front()) / emission_step_;
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = lo + 1;
    // <= keeps ties on the lower index
    return (nm - emission_[lo] <= emission_[hi] - nm) ? lo : hi;
}

}  // namespace evoo
