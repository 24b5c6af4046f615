#pragma once

#include <string>

#include "triham/frobenius/prepotential.hpp"

namespace triham::frobenius {

/// JSON document schema (complex scalars as [re, im]):
/// {
///   "n": 4, "charge": 0.5, "degrees": [1, 1, 0.5, 0.5],
///   "eta": [[re,im], ... n*n entries, row-major],
///   "monomials": [{"coeff": [re,im], "exponents": [k1..kn]}, ...],
///   "radicals":  [{"coeff": [re,im], "power": 2.5,
///                  "Q": [{"coeff": [re,im], "exponents": [...]}, ...]}, ...]
/// }
std::string to_json(const Prepotential& F);
Prepotential prepotential_from_json(const std::string& text);
Prepotential load_prepotential(const std::string& path);
void save_prepotential(const Prepotential& F, const std::string& path);

}  // namespace triham::frobenius
