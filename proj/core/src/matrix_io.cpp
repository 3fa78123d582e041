#include "autrep/matrix_io.hpp"

#include "json.hpp"

#include <sstream>

namespace autrep {

namespace {

using nlohmann::json;

template <class R>
Mat<R> matrix_from_entries(const json& entries, std::size_t d) {
  Mat<R> m(d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = entries.at(i);
    if (!row.is_array() || row.size() != d)
      throw std::invalid_argument("row " + std::to_string(i) + ": expected " +
                                  std::to_string(d) + " entries");
    for (std::size_t j = 0; j < d; ++j) {
      const json& cell = row.at(j);
      if (!cell.is_string())
        throw std::invalid_argument("entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): expected a string scalar");
      try {
        m.at(i, j) = Ring<R>::parse(cell.get<std::string>());
      } catch (const std::exception& e) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): " + e.what());
      }
    }
  }
  return m;
}

AnyMatrix dispatch_matrix(const std::string& ring, const json& entries, std::size_t d) {
  if (ring == "rational") return matrix_from_entries<Rational>(entries, d);
  if (ring == "gaussian") return matrix_from_entries<Gaussian>(entries, d);
  if (ring == "laurent") return matrix_from_entries<Laurent>(entries, d);
  throw std::invalid_argument("unknown ring tag '" + ring + "'");
}

json header_checked(const std::string& text) {
  json doc = json::parse(text);  // nlohmann errors carry byte positions
  if (!doc.is_object()) throw std::invalid_argument("top-level JSON object expected");
  if (!doc.contains("ring") || !doc["ring"].is_string())
    throw std::invalid_argument("missing string field 'ring'");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw std::invalid_argument("missing nonnegative integer field 'dim'");
  return doc;
}

template <class R>
json entries_json(const Mat<R>& m) {
  json rows = json::array();
  for (const auto& row : entries_as_strings(m)) rows.push_back(row);
  return rows;
}

}  // namespace

AnyMatrix parse_matrix_json(const std::string& text) {
  json doc = header_checked(text);
  std::size_t d = doc["dim"].get<std::size_t>();
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != d)
    throw std::invalid_argument("'entries' must be an array of " + std::to_string(d) +
                                " rows");
  return dispatch_matrix(doc["ring"].get<std::string>(), doc["entries"], d);
}

std::string matrix_to_json(const AnyMatrix& m, int indent) {
  json doc;
  std::visit(
      [&](const auto& mat) {
        doc["ring"] = ring_name(m);
        doc["dim"] = mat.dim();
        doc["entries"] = entries_json(mat);
      },
      m);
  return doc.dump(indent);
}

AnyTuple parse_tuple_json(const std::string& text) {
  json doc = header_checked(text);
  std::size_t d = doc["dim"].get<std::size_t>();
  if (!doc.contains("mats") || !doc["mats"].is_array() || doc["mats"].empty())
    throw std::invalid_argument("'mats' must be a nonempty array");
  std::string ring = doc["ring"].get<std::string>();
  AnyTuple out;
  out.rank = doc["mats"].size();
  out.dim = d;
  auto load = [&](auto tag) {
    using R = decltype(tag);
    std::vector<Mat<R>> ms;
    for (std::size_t k = 0; k < out.rank; ++k) {
      try {
        ms.push_back(matrix_from_entries<R>(doc["mats"].at(k), d));
      } catch (const std::exception& e) {
        throw std::invalid_argument("mats[" + std::to_string(k) + "]: " + e.what());
      }
    }
    out.mats = std::move(ms);
  };
  if (ring == "rational") {
    load(Rational());
  } else if (ring == "gaussian") {
    load(Gaussian());
  } else if (ring == "laurent") {
    load(Laurent());
  } else {
    throw std::invalid_argument("unknown ring tag '" + ring + "'");
  }
  return out;
}

std::string tuple_to_json(const AnyTuple& t, int indent) {
  json doc;
  static const char* names[] = {"rational", "gaussian", "laurent"};
  doc["ring"] = names[t.mats.index()];
  std::visit(
      [&](const auto& ms) {
        json arr = json::array();
        for (const auto& m : ms) arr.push_back(entries_json(m));
        doc["mats"] = std::move(arr);
      },
      t.mats);
  doc["dim"] = t.dim;
  doc["rank"] = t.rank;
  return doc.dump(indent);
}

const char* ring_name(const AnyMatrix& m) {
  if (std::holds_alternative<RatMat>(m)) return "rational";
  if (std::holds_alternative<GaussMat>(m)) return "gaussian";
  return "laurent";
}

}  // namespace autrep
