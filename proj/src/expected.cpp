#include "oddrace/expected.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifndef ODDRACE_DATA_FILE
#define ODDRACE_DATA_FILE "data/expected_values.json"
#endif

namespace oddrace {

std::string default_expected_path() { return ODDRACE_DATA_FILE; }

ExpectedValues load_expected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open expected-values file: " + path);
    nlohmann::json j;
    in >> j;

    ExpectedValues out;
    for (const auto& row : j.at("table1").at("rows"))
        out.table1[row.at("n").get<unsigned>()] = row.at("m_n").get<std::int64_t>();
    for (const auto& row : j.at("table2").at("rows"))
        out.table2[row.at("m").get<unsigned>()] = {row.at("x").get<double>(),
                                                   row.at("x_star").get<double>()};
    for (const auto& row : j.at("table3").at("rows"))
        out.table3[row.at("n").get<unsigned>()] = {row.at("delta").get<std::int64_t>(),
                                                   row.at("by(45)").get<std::int64_t>()};
    out.record_primes_prefix = j.at("record_primes_prefix").get<std::vector<std::uint64_t>>();
    out.record_primes_prefix_computed =
        j.at("record_primes_prefix_computed").get<std::vector<std::uint64_t>>();
    out.conjecture1_exceptions = j.at("conjecture1_exceptions").get<std::vector<std::uint64_t>>();
    return out;
}

} // namespace oddrace
