#include "ncreal/json_io.hpp"

#include <stdexcept>

namespace ncreal {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw FormatError("rational must be a string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const MatQ& a) {
  Json rows = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < a.cols(); ++k) row.push_back(a(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

MatQ matrix_from_json(const Json& j, std::optional<Index> rows, std::optional<Index> cols) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const Index r = static_cast<Index>(j.size());
  Index c = cols.value_or(0);
  if (r > 0) {
    if (!j[0].is_array()) throw FormatError("matrix row must be an array");
    c = static_cast<Index>(j[0].size());
  }
  if ((rows && *rows != r) || (cols && *cols != c)) {
    throw FormatError("matrix has shape " + std::to_string(r) + "x" + std::to_string(c) + ", expected " +
                      (rows ? std::to_string(*rows) : "?") + "x" + (cols ? std::to_string(*cols) : "?"));
  }
  MatQ out(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) throw FormatError("ragged matrix");
    for (Index k = 0; k < c; ++k) out(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
  }
  return out;
}

Json to_json(const BimodOp& op) {
  Json terms = Json::array();
  for (const BimodTerm& t : op.terms()) {
    Json term;
    term["C"] = to_json(t.C);
    term["B"] = to_json(t.B);
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  return out;
}

BimodOp bimod_from_json(const Json& j, Index m, Index n_out, Index n_in) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw FormatError("operator must be {\"terms\": [...]}");
  }
  BimodOp op(m, n_out, n_in);
  for (const Json& t : j["terms"]) {
    if (!t.contains("C") || !t.contains("B")) throw FormatError("term needs C and B");
    op.add_term(matrix_from_json(t["C"], m * n_out, m), matrix_from_json(t["B"], m, m * n_in));
  }
  return op;
}

void check_format(const Json& j) {
  if (!j.is_object() || !j.contains("format")) throw FormatError("missing \"format\" tag");
  if (j["format"] != kFormatTag) {
    throw FormatError("unsupported format tag " + j["format"].dump() + ", expected \"" + kFormatTag + "\"");
  }
}

Json point_to_json(const MatTuple& q) {
  Json out;
  out["format"] = kFormatTag;
  Json mats = Json::array();
  for (const MatQ& a : q.mats) mats.push_back(to_json(a));
  out["point"] = std::move(mats);
  return out;
}

namespace {

MatTuple tuple_from(const Json& arr, std::optional<Index> g, std::optional<Index> m) {
  if (!arr.is_array()) throw FormatError("point must be an array of matrices");
  if (g && static_cast<Index>(arr.size()) != *g) throw FormatError("point has the wrong number of letters");
  MatTuple q;
  for (const Json& a : arr) q.mats.push_back(matrix_from_json(a, m, m));
  if (!q.mats.empty()) {
    const Index s = q.size();
    for (const MatQ& a : q.mats) {
      if (a.rows() != s || a.cols() != s) throw FormatError("point matrices must be square and equal-sized");
    }
  }
  return q;
}

Index get_count(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    throw FormatError(std::string("missing or invalid \"") + key + "\"");
  }
  return static_cast<Index>(j[key].get<long long>());
}

}  // namespace

MatTuple point_from_json(const Json& j) {
  check_format(j);
  if (!j.contains("point")) throw FormatError("missing \"point\"");
  return tuple_from(j["point"], std::nullopt, std::nullopt);
}

Json to_json(const Realization& r) {
  Json out;
  out["format"] = kFormatTag;
  out["m"] = r.m;
  out["g"] = r.g;
  out["n"] = r.n;
  out["point"] = point_to_json(r.point)["point"];
  out["c"] = to_json(r.c);
  out["b"] = to_json(r.b);
  Json ops = Json::array();
  for (const BimodOp& op : r.A) ops.push_back(to_json(op));
  out["A"] = std::move(ops);
  return out;
}

Realization realization_from_json(const Json& j) {
  check_format(j);
  Realization r;
  r.m = get_count(j, "m");
  r.g = get_count(j, "g");
  r.n = get_count(j, "n");
  if (r.m < 1) throw FormatError("\"m\" must be >= 1");
  for (const char* key : {"point", "c", "b", "A"}) {
    if (!j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  }
  r.point = tuple_from(j["point"], r.g, r.m);
  r.c = matrix_from_json(j["c"], r.m, r.m * r.n);
  r.b = matrix_from_json(j["b"], r.m * r.n, r.m);
  if (!j["A"].is_array() || static_cast<Index>(j["A"].size()) != r.g) {
    throw FormatError("\"A\" must hold one operator per letter");
  }
  for (const Json& op : j["A"]) r.A.push_back(bimod_from_json(op, r.m, r.n, r.n));
  r.validate();
  return r;
}

Json to_json(const SymRealization& sr) {
  Json out;
  out["format"] = kFormatTag;
  out["m"] = sr.m;
  out["g"] = sr.g;
  out["n"] = sr.n;
  out["point"] = point_to_json(sr.point)["point"];
  out["signature"] = Json::array({sr.signature.positive, sr.signature.negative});
  out["D"] = to_json(sr.D);
  out["c"] = to_json(sr.c);
  Json ops = Json::array();
  for (const BimodOp& op : sr.H) ops.push_back(to_json(op));
  out["H"] = std::move(ops);
  return out;
}

Json to_json(const TruncSeries& s) {
  Json coeffs = Json::object();
  for (const Word& w : words_up_to(s.letters(), s.order())) {
    auto it = s.coeffs().find(w);
    if (it != s.coeffs().end()) coeffs[word_to_string(w)] = to_json(it->second);
  }
  Json out;
  out["m"] = s.base_size();
  out["g"] = s.letters();
  out["order"] = s.order();
  out["coefficients"] = std::move(coeffs);
  return out;
}

}  // namespace ncreal
