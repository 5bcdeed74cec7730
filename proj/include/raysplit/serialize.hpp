#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "raysplit/identities.hpp"
#include "raysplit/necklaces.hpp"
#include "raysplit/spectral.hpp"

namespace raysplit {

/// {"n_L":..,"n_R":..,"n":..,"alpha":..,"beta":..,"gamma":..,"chi":..}
nlohmann::json stats_json(const NecklaceStats& st);

/// Ascending-power coefficient array of "num" / "num/den" strings.
nlohmann::json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// {identity, params, lhs, rhs, verified, term_count, contributors}
nlohmann::json report_json(const IdentityReport& rep);

/// One row of the statistics table: the necklace, its primitive, the
/// repetition index, and the primitive's statistics.
struct NecklaceRow {
    std::string w;
    std::string primitive;
    int nu = 1;
    NecklaceStats stats;
};

std::vector<NecklaceRow> necklace_table(int length, bool prime_only);
nlohmann::json necklace_table_json(const std::vector<NecklaceRow>& rows);
std::string necklace_table_csv(const std::vector<NecklaceRow>& rows);

nlohmann::json spectrum_json(const Spectrum& spectrum);
/// "index,k,residual" rows, LF endings, '.' decimal point.
std::string spectrum_csv(const Spectrum& spectrum);

/// "k,exact,trace,diff" rows for the density comparison.
std::string density_csv(std::span<const double> k, std::span<const double> exact,
                        std::span<const double> trace);

}  // namespace raysplit
