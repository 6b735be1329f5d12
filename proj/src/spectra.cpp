#include "evoo/spectra.hpp"

#include <algorithm>
#include <string>

#include "evoo/errors.hpp"

namespace evoo {

EEM mask_rayleigh(const EEM& eem) {
    const auto& grid = eem.grid();
    Matrix out = eem.intensity();
    const auto n_em = static_cast<long long>(grid.n_emission());
    for (std::size_t r = 0; r < grid.n_excitation(); ++r) {
        const auto c = static_cast<long long>(grid.nearest_emission_index(grid.excitation()[r]));
        const long long lo = std::max(0LL, c - kRayleighHalfWidth);
        const long long hi = std::min(n_em - 1, c + kRayleighHalfWidth);
        for (long long j = lo; j <= hi; ++j) {
            out.at(r, static_cast<std::size_t>(j)) = 0.0;
        }
    }
    return EEM(grid, std::move(out), eem.meta());
}

std::vector<double> emission_spectrum(const EEM& eem, double excitation_nm) {
    const auto idx = eem.grid().excitation_index(excitation_nm);
    if (!idx) {
        throw NotFoundError("excitation wavelength " + std::to_string(excitation_nm) +
                            " nm is not on the grid");
    }
    const auto row = eem.intensity().row(*idx);
    return {row.begin(), row.end()};
}

Matrix diff_eem(const EEM& aged, const EEM& fresh) {
    if (aged.grid() != fresh.grid()) {
        throw MismatchError("EEM grids differ");
    }
    if (aged.meta().oil_label != fresh.meta().oil_label) {
        throw MismatchError("oil labels differ: " + aged.meta().oil_label + " vs " +
                            fresh.meta().oil_label);
    }
    Matrix out(aged.intensity().rows(), aged.intensity().cols());
    auto a = aged.intensity().data();
    auto f = fresh.intensity().data();
    auto o = out.data();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = a[i] - f[i];
    return out;
}

}  // namespace evoo
