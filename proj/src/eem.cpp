#include "evoo/eem.hpp"

#include <cmath>
#include <string>

#include "evoo/errors.hpp"

namespace evoo {

int days_for_step(int step) {
    if (step < 0 || step >= kNumSteps) {
        throw DomainError("ageing step out of range 0..9: " + std::to_string(step));
    }
    return kAgeingDays[static_cast<std::size_t>(step)];
}

void validate(const SampleMeta& meta) {
    if (meta.oil_label.size() != 1 || meta.oil_label[0] < 'A' || meta.oil_label[0] > 'X') {
        throw DomainError("oil label must be one of A..X, got '" + meta.oil_label + "'");
    }
    if (meta.ageing_days != days_for_step(meta.ageing_step)) {
        throw DomainError("ageing days " + std::to_string(meta.ageing_days) +
                          " do not match the schedule for step " +
                          std::to_string(meta.ageing_step));
    }
    if (meta.replicate < 1 || meta.replicate > kNumReplicates) {
        throw DomainError("replicate out of range 1..3: " + std::to_string(meta.replicate));
    }
}

EEM::EEM(WavelengthGrid grid, Matrix intensity, SampleMeta meta)
    : grid_(std::move(grid)), intensity_(std::move(intensity)), meta_(std::move(meta)) {
    validate(meta_);
    if (intensity_.rows() != grid_.n_excitation() || intensity_.cols() != grid_.n_emission()) {
        throw MismatchError("intensity shape (" + std::to_string(intensity_.rows()) + "x" +
                            std::to_string(intensity_.cols()) + ") does not match grid (" +
                            std::to_string(grid_.n_excitation()) + "x" +
                            std::to_string(grid_.n_emission()) + ")");
    }
    for (double v : intensity_.data()) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("intensities must be finite and non-negative");
        }
    }
}

}  // namespace evoo
