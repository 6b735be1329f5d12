#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evoo/grid.hpp"

namespace evoo {

/// Accelerated-ageing schedule: days at 60 C for each ageing step 0..9.
inline constexpr std::array<int, 10> kAgeingDays{0, 2, 4, 7, 9, 18, 27, 36, 45, 53};
inline constexpr int kNumSteps = 10;
inline constexpr int kNumOils = 24;
inline constexpr int kNumReplicates = 3;

/// Days in the oven for a given ageing step; throws DomainError off-schedule.
int days_for_step(int step);

/// Identity of one measurement.
struct SampleMeta {
    std::string oil_label;  // one of "A".."X"
    int ageing_step = 0;    // 0..9
    int ageing_days = 0;    // must match the schedule for the step
    int replicate = 1;      // 1..3
};

/// Throws DomainError if the meta violates the sample-design invariants.
void validate(const SampleMeta& meta);

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& at(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    std::span<double> row(std::size_t r) { return {v_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {v_.data() + r * cols_, cols_}; }
    std::span<const double> data() const { return v_; }
    std::span<double> data() { return v_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> v_;
};

/// One sample's excitation-emission matrix.
///
/// Immutable after construction; construction rejects NaN, infinite or
/// negative intensities and any shape that does not match the grid.
class EEM {
public:
    EEM(WavelengthGrid grid, Matrix intensity, SampleMeta meta);

    const WavelengthGrid& grid() const { return grid_; }
    const Matrix& intensity() const { return intensity_; }
    const SampleMeta& meta() const { return meta_; }

private:
    WavelengthGrid grid_;
    Matrix intensity_;
    SampleMeta meta_;
};

}  // namespace evoo
