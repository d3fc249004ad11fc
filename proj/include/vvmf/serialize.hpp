#pragma once

#include "vvmf/fourier.hpp"
#include "vvmf/weil.hpp"

#include <json.hpp>

namespace vvmf {

/// {"orders":[d1,...], "q":[["coords","num/den"],...]} where q lists the
/// values on generators and on pairwise sums (enough to rebuild the bilinear
/// form).
nlohmann::json module_to_json(const FiniteQuadraticModule& A);
FiniteQuadraticModule module_from_json(const nlohmann::json& j);

/// {"module":..., "k2":2k, "nmax":"num/den",
///  "coeffs":[{"lam":[...], "n":"num/den", "c":"cyclo", "float":[re,im]}...]}
nlohmann::json expansion_to_json(const FourierExpansion& f);
FourierExpansion expansion_from_json(const nlohmann::json& j);

/// {"m":[[a,b],[c,d]], "branch":+-1}
nlohmann::json mp_to_json(const MetaplecticElement& g);
MetaplecticElement mp_from_json(const nlohmann::json& j);

/// Row-major integer Gram matrix.
nlohmann::json gram_to_json(const IMatrix& g);
IMatrix gram_from_json(const nlohmann::json& j);

/// Matrix of serialized Cyclotomic strings.
nlohmann::json cyc_matrix_to_json(const CycMatrix& m);

} // namespace vvmf
