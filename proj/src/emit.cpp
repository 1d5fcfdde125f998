#include "oddrace/emit.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace oddrace {

namespace {

using nlohmann::json;

constexpr char kTable3ApproxHeader[] = "by(45)"; // header quoted from the reference table

std::string join_row(const std::vector<std::string>& cells, char sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    out += '\n';
    return out;
}

std::string tabular(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows, OutputFormat fmt) {
    const char sep = fmt == OutputFormat::Csv ? ',' : '\t';
    std::string out = join_row(header, sep);
    for (const auto& r : rows) out += join_row(r, sep);
    return out;
}

// 4 decimal places, parsed back for the JSON path so emitted numbers carry
// exactly the displayed precision
double rounded4(double v) { return std::stod(format_real(v)); }

} // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string emit_table1(const std::vector<RecordRow>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"n", r.n}, {"m_n", r.m_n}});
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) cells.push_back({std::to_string(r.n), std::to_string(r.m_n)});
    return tabular({"n", "m_n"}, cells, fmt);
}

std::string emit_table2(const std::vector<Table2Row>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"m", r.m}, {"x", rounded4(r.x)}, {"x_star", rounded4(r.x_star)}});
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.m), format_real(r.x), format_real(r.x_star)});
    return tabular({"m", "x", "x_star"}, cells, fmt);
}

std::string emit_table3(const std::vector<IncrementRow>& rows, OutputFormat fmt,
                        bool with_ratio) {
    if (fmt == OutputFormat::Json) {
        json j = json::array();
        for (const auto& r : rows) {
            json row{{"n", r.n},
                     {"delta", r.delta_exact},
                     {kTable3ApproxHeader, r.delta_approx_rounded}};
            if (with_ratio && r.even_odd_ratio > 0.0) row["ratio"] = rounded4(r.even_odd_ratio);
            j.push_back(row);
        }
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> row{std::to_string(r.n), std::to_string(r.delta_exact),
                                     std::to_string(r.delta_approx_rounded)};
        if (with_ratio) row.push_back(r.even_odd_ratio > 0.0 ? format_real(r.even_odd_ratio) : "");
        cells.push_back(std::move(row));
    }
    std::vector<std::string> header{"n", "delta", kTable3ApproxHeader};
    if (with_ratio) header.push_back("ratio");
    return tabular(header, cells, fmt);
}

std::string emit_scan_summary(const RaceScanResult& scan, OutputFormat fmt) {
    const auto& st = scan.final_state;
    if (fmt == OutputFormat::Json) {
        json j{{"limit", scan.config.limit},
               {"pi", st.pi()},
               {"pi_evil", st.pi_evil},
               {"pi_odious", st.pi_odious},
               {"excess", st.excess()},
               {"record_primes", scan.record_primes}};
        return j.dump() + "\n";
    }
    std::vector<std::vector<std::string>> cells{{std::to_string(scan.config.limit),
                                                 std::to_string(st.pi()),
                                                 std::to_string(st.pi_evil),
                                                 std::to_string(st.pi_odious),
                                                 std::to_string(st.excess())}};
    return tabular({"limit", "pi", "pi_evil", "pi_odious", "excess"}, cells, fmt);
}

} // namespace oddrace
