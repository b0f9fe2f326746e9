#ifndef INVAR_IO_HPP
#define INVAR_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "invar/congruence.hpp"
#include "invar/sl2.hpp"
#include "invar/torus.hpp"

namespace invar::io {

using ordered_json = nlohmann::ordered_json;

/// Canonical basis document:
/// {"weights":[...],"modulus":n,"complete_to_degree":c,"elements":[[...]]}
ordered_json to_json(const HilbertBasis& basis);
HilbertBasis basis_from_json(const nlohmann::json& j);

std::string to_csv(const HilbertBasis& basis);
std::string to_table(const HilbertBasis& basis);

ordered_json to_json(const BoundReport& report);
std::string to_csv(const BoundReport& report);   // columns: degree,actual,bound
std::string to_table(const BoundReport& report);

ordered_json to_json(const SeriesTable& table);
std::string to_csv(const SeriesTable& table);    // rows n, columns d
std::string to_table(const SeriesTable& table);

ordered_json to_json(const TransportReport& report);
ordered_json to_json(const OlsonReport& report);
ordered_json to_json(const ReciprocityReport& report);

ordered_json to_json(const GrowthDiagnostic& diag);
std::string to_csv(const GrowthDiagnostic& diag);
/// Two whitespace-separated columns (log n, log a_n(d)) for plotting.
std::string to_plot_data(const GrowthDiagnostic& diag);

/// Fixed-format double rendering used everywhere output must be
/// byte-reproducible.
std::string format_double(double x);

/// Writes via a temporary file in the same directory plus rename, so a
/// failed run leaves no partial output.
void write_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace invar::io

#endif
