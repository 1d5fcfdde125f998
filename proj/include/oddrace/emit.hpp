#pragma once

#include <string>
#include <vector>

#include "oddrace/prime_scan.hpp"

namespace oddrace {

enum class OutputFormat : std::uint8_t { Csv, Tsv, Json };

/// Reals are printed with 4 decimal places, '.' decimal separator, no locale.
std::string format_real(double v);

std::string emit_table1(const std::vector<RecordRow>& rows, OutputFormat fmt);
std::string emit_table2(const std::vector<Table2Row>& rows, OutputFormat fmt);
std::string emit_table3(const std::vector<IncrementRow>& rows, OutputFormat fmt,
                        bool with_ratio = false);
std::string emit_scan_summary(const RaceScanResult& scan, OutputFormat fmt);

} // namespace oddrace
