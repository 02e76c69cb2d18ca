#ifndef WGS_SERIALIZE_HPP_
#define WGS_SERIALIZE_HPP_

// JSON documents for operators, vectors, alphabets, and decompositions.
// Serialization is canonical: fixed key order, reals in their shortest
// round-tripping form (integral values are written as integers), so saving
// a loaded document reproduces it byte for byte.

#include <filesystem>
#include <string>
#include <vector>

#include "wgs/adjoint.hpp"
#include "wgs/semigroup.hpp"
#include "wgs/types.hpp"

namespace wgs {

std::string save_operator(const WeightedShift& op);
WeightedShift load_operator(const std::string& text);

std::string save_vector(const Vector& x);
Vector load_vector(const std::string& text);

WeightAlphabet load_alphabet(const std::string& text);

struct DecompositionFiles {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> terms;
};

// Writes one operator document per term plus a manifest into dir (created
// if needed). The manifest records the term count, the anchor index, the
// per-coordinate fiber counts, and the source norm.
DecompositionFiles write_decomposition(const std::filesystem::path& dir,
                                       const AdjointDecomposition& d);

// Loads a manifest written by write_decomposition, or any JSON object with
// an "n" field and a "terms" array of operator document paths (resolved
// relative to the manifest). An empty term list loads as the zero operator.
ShiftSum load_sum_manifest(const std::filesystem::path& manifest_path);

}  // namespace wgs

#endif  // WGS_SERIALIZE_HPP_
