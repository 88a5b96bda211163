#pragma once

// Machine-readable reports: rationals as "p/q" strings, matrices as arrays of
// string rows. JSON by default, CSV for flat results.

#include "betamat/exact_core.hpp"
#include "betamat/identities.hpp"
#include "betamat/positivity.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace betamat {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = BETAMAT_VERSION;

struct Report {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  std::optional<std::uint64_t> seed;
  std::string version = kVersion;

  friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& report);
Report report_from_json(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json inertia_to_json(const InertiaTriple& inertia);
json verification_to_json(const VerificationReport& report);
json minor_to_json(const MinorIndex& idx);

/// Row-per-line CSV of "p/q" cells.
std::string matrix_to_csv(const Matrix& m);
/// Parses CSV produced by matrix_to_csv (blank lines ignored).
Matrix matrix_from_csv(const std::string& text);

}  // namespace betamat
