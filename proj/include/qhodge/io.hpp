#pragma once

#include "qhodge/amodel.hpp"
#include "qhodge/hodge.hpp"

#include "json.hpp"

namespace qhodge {

using Json = nlohmann::ordered_json;

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kModuleSchema = "qhodge.module/1";
inline constexpr const char* kPotentialSchema = "qhodge.potential/1";
inline constexpr const char* kReportSchema = "qhodge.report/1";

/// Series as a JSON object: exponent tuple "m_1,...,m_r" -> scalar string.
Json series_to_json(const QSeries& f);
QSeries series_from_json(const Json& j, int r, int order, const std::string& where);

Json logpoly_to_json(const LogPolySeries& f);

Json module_to_json(const FrobeniusModule& m);
FrobeniusModule module_from_json(const Json& j);

Json potential_to_json(const QuantumPotential& phi);
/// Needs the module for rank / framing context.  `order_override` > 0
/// re-truncates every series to that order.
QuantumPotential potential_from_json(const FrobeniusModule& m, const Json& j, int order_override = -1);

Json scalar_matrix_to_json(const ScalarMat& m);
Json series_matrix_to_json(const SeriesMat& m);
Json logpoly_matrix_to_json(const LogPolyMat& m);
Json certificate_to_json(const Certificate& c);

FrobeniusModule load_module(const std::string& path);
QuantumPotential load_potential(const FrobeniusModule& m, const std::string& path, int order_override = -1);
Json load_json(const std::string& path);

}  // namespace qhodge
