#include "evoo/features.hpp"

#include <algorithm>
#include <cmath>

#include "evoo/errors.hpp"
#include "evoo/spectra.hpp"

namespace evoo {

double relative_error(std::span<const double> reference, std::span<const double> aged) {
    if (reference.size() != aged.size()) {
        throw MismatchError("spectrum lengths differ: " + std::to_string(reference.size()) +
                            " vs " + std::to_string(aged.size()));
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = reference[i] - aged[i];
        num += d * d;
        den += reference[i] * reference[i];
    }
    if (den == 0.0) {
        throw DomainError("zero-norm reference spectrum");
    }
    return num / den;
}

Matrix masked_mean_intensity(const Dataset& data, const std::string& oil, int step) {
    const auto reps = data.replicates(oil, step);
    if (reps.empty()) {
        throw NotFoundError("missing sample: no EEM for (" + oil + ", step " +
                            std::to_string(step) + ")");
    }
    Matrix mean(reps.front()->intensity().rows(), reps.front()->intensity().cols());
    for (const EEM* e : reps) {
        const EEM masked = mask_rayleigh(*e);
        auto src = masked.intensity().data();
        auto dst = mean.data();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
    }
    const double inv = 1.0 / static_cast<double>(reps.size());
    for (double& v : mean.data()) v *= inv;
    return mean;
}

namespace {

std::vector<REFeature> profile_from_matrices(const WavelengthGrid& grid, const Matrix& reference,
                                             const Matrix& aged, const std::string& oil,
                                             int step) {
    std::vector<REFeature> out;
    out.reserve(grid.n_excitation());
    for (std::size_t r = 0; r < grid.n_excitation(); ++r) {
        REFeature f;
        f.oil_label = oil;
        f.ageing_step = step;
        f.excitation_nm = grid.excitation()[r];
        f.value = relative_error(reference.row(r), aged.row(r));
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<REFeature> re_profile(const Dataset& data, const std::string& oil, int step) {
    const Matrix reference = masked_mean_intensity(data, oil, 0);
    const Matrix aged = masked_mean_intensity(data, oil, step);
    return profile_from_matrices(*data.grid(), reference, aged, oil, step);
}

std::vector<REFeature> re_profile_replicate(const Dataset& data, const std::string& oil, int step,
                                            int replicate) {
    const Matrix reference = masked_mean_intensity(data, oil, 0);
    const EEM aged = mask_rayleigh(data.eem(oil, step, replicate));
    return profile_from_matrices(*data.grid(), reference, aged.intensity(), oil, step);
}

VoteResult vote_wavelengths(const Dataset& data) {
    VoteResult result;
    for (const std::string& oil : data.oils()) {
        const auto profile = re_profile(data, oil, 9);
        // argmax with ties toward the lower wavelength
        std::size_t best = 0;
        for (std::size_t i = 1; i < profile.size(); ++i) {
            if (profile[i].value > profile[best].value) best = i;
        }
        if (profile[best].value == 0.0) {
            result.warnings.push_back("degenerate profile for oil " + oil +
                                      ": all relative errors are zero");
        }
        result.votes.push_back({oil, profile[best].excitation_nm});
    }
    return result;
}

SelectedWavelengths select_wavelengths(const std::vector<WavelengthVote>& votes) {
    if (votes.empty()) {
        throw DomainError("empty vote list");
    }
    std::map<double, int> raw;
    for (const auto& v : votes) raw[v.winning_wavelength_nm] += 1;

    // Merge each wavelength into an adjacent (+-10 nm) neighbour holding a
    // larger raw count (equal counts merge toward the lower wavelength).
    // Comparisons use raw counts only; no transitive chaining.
    std::map<double, int> merged;
    for (const auto& [nm, count] : raw) {
        double target = nm;
        int target_count = count;
        for (double neighbour : {nm - 10.0, nm + 10.0}) {
            auto it = raw.find(neighbour);
            if (it == raw.end()) continue;
            const bool stronger = it->second > target_count ||
                                  (it->second == target_count && neighbour < target);
            if (stronger) {
                target = neighbour;
                target_count = it->second;
            }
        }
        merged[target] += count;
    }

    std::vector<std::pair<double, int>> ranked(merged.begin(), merged.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;  // ties toward the lower wavelength
    });
    if (ranked.size() < 2) {
        throw DomainError("fewer than two distinct wavelengths after merging");
    }

    SelectedWavelengths sel;
    sel.primary_nm = ranked[0].first;
    sel.secondary_nm = ranked[1].first;
    sel.vote_counts = std::move(merged);
    return sel;
}

}  // namespace evoo
