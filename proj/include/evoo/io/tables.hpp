#pragma once

#include <string>
#include <vector>

#include "evoo/dataset.hpp"
#include "evoo/eem.hpp"
#include "evoo/uvparams.hpp"

namespace evoo::io {

/// Canonical long-format EEM table:
///   oil_label,ageing_step,replicate,excitation_nm,emission_nm,intensity
/// UTF-8, comma separated, header mandatory, '.' decimal separator.
struct EemLoadResult {
    std::vector<EEM> eems;  // canonical (oil, step, replicate) order
    std::vector<std::string> warnings;
};

/// Loads and validates the table; the grid is inferred per sample and must
/// be identical across samples. When `expected` is non-null a differing
/// grid only produces a warning (foreign grids are legal).
EemLoadResult load_eem_table(const std::string& path,
                             const WavelengthGrid* expected = nullptr);

void write_eem_table(const std::string& path, const std::vector<EEM>& eems);

/// Canonical UV table:
///   oil_label,ageing_step,k232,k264,k268,k272[,delta_k]
/// k264/k272 cells may be empty; delta_k is recomputed when absent and
/// verified (1e-12) when present and verifiable.
struct UvLoadResult {
    std::vector<UVRecord> records;
    std::vector<std::string> warnings;
};

UvLoadResult load_uv_table(const std::string& path,
                           DeltaKVariant variant = DeltaKVariant::as_printed);

void write_uv_table(const std::string& path, const std::vector<UVRecord>& records);

/// Convenience: load both tables into one Dataset.
Dataset load_dataset(const std::string& eem_path, const std::string& uv_path,
                     DeltaKVariant variant, std::vector<std::string>* warnings = nullptr);

}  // namespace evoo::io
