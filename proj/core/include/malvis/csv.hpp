#pragma once

#include <filesystem>
#include <vector>

#include "malvis/prs.hpp"

namespace malvis {

/// Sample CSV schema: J count columns then one integer label column.
std::vector<SampleRecord> read_samples_csv(const std::filesystem::path& path,
                                           bool has_header);
void write_samples_csv(const std::filesystem::path& path,
                       const std::vector<SampleRecord>& samples,
                       bool write_header);

}  // namespace malvis
