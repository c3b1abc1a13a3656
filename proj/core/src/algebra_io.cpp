#include "stlie/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stlie {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

template <class F>
AnyAlgebra parse_with_field(const F& K, const json& j, std::string_view origin) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != dim) {
    throw SpecParseError(std::string(origin) + ": basis has " +
                         std::to_string(labels.size()) + " labels, dim is " +
                         std::to_string(dim));
  }

  auto parse_vec = [&](const json& arr, const char* what) {
    if (!arr.is_array() || arr.size() != dim) {
      throw SpecParseError(std::string(origin) + ": " + what + " must be a list of " +
                           std::to_string(dim) + " scalars");
    }
    typename KAlgebra<F>::Vec v;
    v.reserve(dim);
    for (const json& e : arr) v.push_back(K.parse(e.get<std::string>()));
    return v;
  };

  typename KAlgebra<F>::Vec unit = parse_vec(j.at("unit"), "unit");
  std::size_t unit_index = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    if (K.is_zero(unit[i])) continue;
    if (unit_index != dim || !K.eq(unit[i], K.one())) {
      throw InvalidAlgebraError(std::string(origin) +
                                ": unit must be a basis element (a 0/1 coordinate vector)");
    }
    unit_index = i;
  }
  if (unit_index == dim) {
    throw InvalidAlgebraError(std::string(origin) + ": unit vector is zero");
  }

  const json& mult = j.at("mult");
  if (!mult.is_array() || mult.size() != dim) {
    throw SpecParseError(std::string(origin) + ": mult must be a dim x dim array");
  }
  std::vector<typename KAlgebra<F>::Vec> table;
  table.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = mult[i];
    if (!row.is_array() || row.size() != dim) {
      throw SpecParseError(std::string(origin) + ": mult row " + std::to_string(i) +
                           " must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t k = 0; k < dim; ++k) table.push_back(parse_vec(row[k], "mult entry"));
  }
  return KAlgebra<F>(K, std::move(labels), unit_index, std::move(table));
}

}  // namespace

AnyAlgebra parse_algebra_json(std::string_view text, std::string_view origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string(origin) + ":" +
                         std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  try {
    const json& f = j.at("field");
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "Fp") {
      std::uint64_t p = f.at("p").get<std::uint64_t>();
      return parse_with_field(PrimeField(p), j, origin);
    }
    if (kind == "Q") {
      return parse_with_field(RationalField(), j, origin);
    }
    throw SpecParseError(std::string(origin) + ": unknown field kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw SpecParseError(std::string(origin) + ": " + e.what());
  }
}

AnyAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open algebra spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str(), path);
}

AnyAlgebra resolve_algebra(const std::string& builtin_name, const std::string& spec_path) {
  if (!builtin_name.empty() && !spec_path.empty()) {
    throw Error("give either a builtin name or a spec file, not both");
  }
  if (!builtin_name.empty()) {
    const CatalogEntry* e = find_builtin(builtin_name);
    if (!e) {
      std::string names;
      for (const CatalogEntry& c : builtin_catalog()) {
        if (!names.empty()) names += ", ";
        names += c.name;
      }
      throw Error("unknown builtin algebra '" + builtin_name + "' (have: " + names + ")");
    }
    return e->algebra;
  }
  if (!spec_path.empty()) return load_algebra_file(spec_path);
  throw Error("no algebra given: use a builtin name or a spec file");
}

namespace {

template <class F>
nlohmann::ordered_json field_json(const F& K) {
  nlohmann::ordered_json f;
  if constexpr (std::is_same_v<F, PrimeField>) {
    f["kind"] = "Fp";
    f["p"] = K.modulus();
  } else {
    f["kind"] = "Q";
  }
  return f;
}

}  // namespace

std::string algebra_to_json(const AnyAlgebra& a) {
  return std::visit(
      [](const auto& alg) {
        const auto& K = alg.field();
        nlohmann::ordered_json j;
        j["field"] = field_json(K);
        j["dim"] = alg.dim();
        j["basis"] = alg.labels();
        auto vec_json = [&](const auto& v) {
          std::vector<std::string> out;
          for (const auto& e : v) out.push_back(K.to_string(e));
          return out;
        };
        j["unit"] = vec_json(alg.unit_element());
        nlohmann::ordered_json mult = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < alg.dim(); ++i) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (std::size_t k = 0; k < alg.dim(); ++k) row.push_back(vec_json(alg.table(i, k)));
          mult.push_back(row);
        }
        j["mult"] = mult;
        return j.dump(2);
      },
      a);
}

}  // namespace stlie
