#pragma once

#include <nlohmann/json.hpp>

#include "tropical/essential.hpp"
#include "tropical/ideals.hpp"
#include "tropical/polynomial.hpp"
#include "tropical/sets.hpp"
#include "tropical/univariate.hpp"

namespace tropical {

inline constexpr const char* kJsonSchema = "tropc/1";

nlohmann::json to_json(const TropicalNumber& a);
TropicalNumber number_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EssentialComplex& ec);
nlohmann::json to_json(const Factorization& fz);
nlohmann::json to_json(const ComSet1D& c);
/// Coordinates are emitted as doubles for plotting.
nlohmann::json to_json(const CornerLocus& locus);
nlohmann::json to_json(const RadicalCertificate& cert);

}  // namespace tropical
