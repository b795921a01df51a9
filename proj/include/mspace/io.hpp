#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "mspace/classify.hpp"
#include "mspace/spectrum.hpp"
#include "mspace/subspace.hpp"
#include "mspace/verify.hpp"

namespace mspace {

using ParsedSpace = std::variant<MatrixSubspace, AffineSpace>;

// Parses the line-oriented .mspace format:
//
//   # comment
//   field 3            (a prime, or the word "rational")
//   n 2
//   offset             (optional; its presence makes the space affine)
//   1 0
//   0 1
//   space 1            (number of basis matrices, each n rows of n entries)
//   0 1
//   0 0
//
// Entries are integers or a/b fractions; F_p entries reduce mod p, fractions
// canonicalize. The parsed space is canonicalized on construction.
ParsedSpace parse_mspace(const std::string& text);

std::string serialize(const MatrixSubspace& v);
std::string serialize(const AffineSpace& a);
std::string serialize(const ParsedSpace& s);

nlohmann::ordered_json matrix_json(const Matrix& m);
nlohmann::ordered_json decomposition_json(const Decomposition& dec, const FieldDesc& field, int n);
nlohmann::ordered_json spectrum_json(const SpectrumReport& report, const FieldDesc& field, int n);
nlohmann::ordered_json suite_json(const SuiteReport& report);

std::string format_suite_text(const SuiteReport& report);

} // namespace mspace
