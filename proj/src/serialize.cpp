#include "wgs/serialize.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace wgs {

namespace {

using ojson = nlohmann::ordered_json;
using njson = nlohmann::json;

// Integral reals are emitted as JSON integers; everything else relies on
// the shortest round-tripping double representation of the dumper. The sign
// of a negative zero is kept (it matters for bit-exact round trips of
// conjugated weights).
ojson real_to_json(double v) {
  if (v == 0.0 && std::signbit(v)) return v;
  if (std::floor(v) == v && std::abs(v) <= 9.007199254740992e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

ojson complex_to_json(Complex z) {
  return ojson::array({real_to_json(z.real()), real_to_json(z.imag())});
}

njson parse_document(const std::string& text) {
  try {
    return njson::parse(text);
  } catch (const njson::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) +
                         ": " + e.what(),
                     e.byte);
  }
}

void require_object(const njson& doc, const char* what) {
  if (!doc.is_object()) {
    throw ValidationError(std::string(what) + " document must be a JSON object");
  }
}

void check_schema_version(const njson& doc) {
  if (!doc.contains("schema_version")) return;
  const njson& v = doc.at("schema_version");
  if (!v.is_string() || v.get<std::string>() != "1") {
    throw ValidationError("unsupported schema_version, expected \"1\"");
  }
}

std::size_t read_dimension(const njson& doc) {
  if (!doc.contains("n")) throw ValidationError("missing field n");
  const njson& n = doc.at("n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) {
    throw ValidationError("n must be a positive integer");
  }
  return n.get<std::size_t>();
}

double read_real(const njson& j, const std::string& where) {
  if (!j.is_number()) {
    throw ValidationError(where + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ValidationError(where + " is not finite");
  }
  return v;
}

Complex read_complex(const njson& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError(where + " must be a [re, im] pair");
  }
  return Complex{read_real(j[0], where + "[0]"), read_real(j[1], where + "[1]")};
}

std::vector<Complex> read_complex_list(const njson& doc, const char* field,
                                       std::size_t n) {
  if (!doc.contains(field)) {
    throw ValidationError(std::string("missing field ") + field);
  }
  const njson& list = doc.at(field);
  if (!list.is_array() || list.size() != n) {
    throw ValidationError(std::string(field) + " must be an array of length " +
                          std::to_string(n));
  }
  std::vector<Complex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(
        read_complex(list[i], std::string(field) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot read file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot write file " + path.string());
  }
  out << text;
  if (!out) {
    throw ValidationError("failed writing file " + path.string());
  }
}

}  // namespace

std::string save_operator(const WeightedShift& op) {
  ojson doc;
  doc["schema_version"] = "1";
  doc["n"] = op.dim();
  ojson image = ojson::array();
  for (std::size_t v : op.map().image()) image.push_back(v);
  doc["phi"] = std::move(image);
  ojson weights = ojson::array();
  for (const Complex& w : op.weights().entries()) {
    weights.push_back(complex_to_json(w));
  }
  doc["weights"] = std::move(weights);
  return doc.dump();
}

WeightedShift load_operator(const std::string& text) {
  const njson doc = parse_document(text);
  require_object(doc, "operator");
  check_schema_version(doc);
  const std::size_t n = read_dimension(doc);

  if (!doc.contains("phi")) throw ValidationError("missing field phi");
  const njson& phi = doc.at("phi");
  if (!phi.is_array() || phi.size() != n) {
    throw ValidationError("phi must be an array of length " +
                          std::to_string(n));
  }
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!phi[i].is_number_integer()) {
      throw ValidationError("phi[" + std::to_string(i) +
                            "] must be an integer");
    }
    const std::int64_t v = phi[i].get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw ValidationError("phi[" + std::to_string(i) + "]=" +
                            std::to_string(v) + " out of range [0," +
                            std::to_string(n) + ")");
    }
    image[i] = static_cast<std::size_t>(v);
  }

  std::vector<Complex> weights = read_complex_list(doc, "weights", n);
  return WeightedShift(IndexMap(std::move(image)),
                       WeightVector(std::move(weights)));
}

std::string save_vector(const Vector& x) {
  ojson doc;
  doc["schema_version"] = "1";
  doc["n"] = x.dim();
  ojson coords = ojson::array();
  for (const Complex& z : x.coords()) coords.push_back(complex_to_json(z));
  doc["coords"] = std::move(coords);
  return doc.dump();
}

Vector load_vector(const std::string& text) {
  const njson doc = parse_document(text);
  require_object(doc, "vector");
  check_schema_version(doc);
  const std::size_t n = read_dimension(doc);
  return Vector(read_complex_list(doc, "coords", n));
}

WeightAlphabet load_alphabet(const std::string& text) {
  const njson doc = parse_document(text);
  require_object(doc, "alphabet");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw ValidationError("alphabet document needs a string field kind");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "finite") {
    if (!doc.contains("elements") || !doc.at("elements").is_array()) {
      throw ValidationError("finite alphabet needs an elements array");
    }
    const njson& list = doc.at("elements");
    std::vector<Complex> elements;
    elements.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      elements.push_back(
          read_complex(list[i], "elements[" + std::to_string(i) + "]"));
    }
    return WeightAlphabet::finite_set(std::move(elements));
  }
  if (kind == "annulus") {
    if (!doc.contains("delta")) {
      throw ValidationError("annulus alphabet needs a delta field");
    }
    return WeightAlphabet::annulus(read_real(doc.at("delta"), "delta"));
  }
  if (kind == "null_sequence") {
    if (!doc.contains("rule") || !doc.at("rule").is_string()) {
      throw ValidationError("null_sequence alphabet needs a string rule");
    }
    const std::string rule = doc.at("rule").get<std::string>();
    if (rule == "reciprocal") {
      return WeightAlphabet::null_sequence(NullSequenceRule::reciprocal());
    }
    if (rule == "geometric") {
      if (!doc.contains("scale") || !doc.contains("ratio")) {
        throw ValidationError("geometric rule needs scale and ratio fields");
      }
      return WeightAlphabet::null_sequence(NullSequenceRule::geometric(
          read_real(doc.at("scale"), "scale"),
          read_real(doc.at("ratio"), "ratio")));
    }
    throw ValidationError("unknown null sequence rule \"" + rule + "\"");
  }
  throw ValidationError("unknown alphabet kind \"" + kind + "\"");
}

DecompositionFiles write_decomposition(const std::filesystem::path& dir,
                                       const AdjointDecomposition& d) {
  std::filesystem::create_directories(dir);
  DecompositionFiles files;

  ojson manifest;
  manifest["schema_version"] = "1";
  manifest["kind"] = "adjoint_decomposition";
  manifest["n"] = d.dim;
  manifest["term_count"] = d.terms.size();
  manifest["anchor"] = d.anchor;
  ojson counts = ojson::array();
  for (std::size_t c : d.fiber_counts) counts.push_back(c);
  manifest["fiber_counts"] = std::move(counts);
  manifest["source_norm"] = real_to_json(d.source_norm);

  ojson names = ojson::array();
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "term_%04zu.json", i);
    const std::filesystem::path term_path = dir / name;
    write_text_file(term_path, save_operator(d.terms[i]) + "\n");
    files.terms.push_back(term_path);
    names.push_back(std::string(name));
  }
  manifest["terms"] = std::move(names);

  files.manifest = dir / "manifest.json";
  write_text_file(files.manifest, manifest.dump(2) + "\n");
  return files;
}

ShiftSum load_sum_manifest(const std::filesystem::path& manifest_path) {
  const njson doc = parse_document(read_text_file(manifest_path));
  require_object(doc, "manifest");
  check_schema_version(doc);
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw ValidationError("manifest needs a terms array");
  }
  const std::filesystem::path base = manifest_path.parent_path();

  std::vector<WeightedShift> terms;
  for (const njson& entry : doc.at("terms")) {
    if (!entry.is_string()) {
      throw ValidationError("manifest term entries must be file paths");
    }
    const std::filesystem::path term_path =
        base / std::filesystem::path(entry.get<std::string>());
    terms.push_back(load_operator(read_text_file(term_path)));
  }

  if (terms.empty()) {
    const std::size_t n = read_dimension(doc);
    return ShiftSum({WeightedShift::zero(n)});
  }
  if (doc.contains("n")) {
    const std::size_t n = read_dimension(doc);
    if (terms.front().dim() != n) {
      throw ValidationError("manifest n=" + std::to_string(n) +
                            " does not match term dimension " +
                            std::to_string(terms.front().dim()));
    }
  }
  return ShiftSum(std::move(terms));
}

}  // namespace wgs
