#include "fairdiv/json_io.hpp"

#include <stdexcept>

namespace fairdiv {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument("document: malformed JSON");
  }
  return doc;
}

Mat parse_matrix(const Json& j, const std::string& path, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows");
  }
  Mat out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      fail(row_path, "expected " + std::to_string(cols) + " entries");
    }
    for (Index g = 0; g < cols; ++g) {
      out(i, g) = rational_from_json(row[static_cast<size_t>(g)],
                                     row_path + "[" + std::to_string(g) + "]");
    }
  }
  return out;
}

Index parse_count(const Json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    fail(key, "expected an integer");
  }
  auto v = doc[key].get<long long>();
  if (v < 0) fail(key, "must be non-negative");
  return static_cast<Index>(v);
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_number_unsigned()) {
    return Rational(j.get<unsigned long long>());
  }
  if (j.is_number_float()) {
    fail(path, "floating-point literals are not exact; use a decimal or \"p/q\" string");
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a number or string");
}

Json rational_to_json(const Rational& r) { return Json(to_pq_string(r)); }

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    out.push_back(vec_to_json(m.row(i).transpose()));
  }
  return out;
}

Instance parse_instance(const std::string& text) {
  Json doc = parse_document(text);
  if (!doc.is_object()) fail("document", "expected a JSON object");
  Index n = parse_count(doc, "n");
  Index m = parse_count(doc, "m");
  if (!doc.contains("values")) fail("values", "missing");
  if (!doc.contains("sizes")) fail("sizes", "missing");
  if (!doc.contains("budgets")) fail("budgets", "missing");

  Instance inst;
  inst.values = parse_matrix(doc["values"], "values", n, m);
  inst.sizes = parse_matrix(doc["sizes"], "sizes", n, m);
  const Json& budgets = doc["budgets"];
  if (!budgets.is_array() || static_cast<Index>(budgets.size()) != n) {
    fail("budgets", "expected " + std::to_string(n) + " entries");
  }
  inst.budgets.resize(n);
  for (Index i = 0; i < n; ++i) {
    inst.budgets(i) = rational_from_json(budgets[static_cast<size_t>(i)],
                                         "budgets[" + std::to_string(i) + "]");
  }
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  Json doc;
  doc["n"] = inst.n();
  doc["m"] = inst.m();
  doc["values"] = mat_to_json(inst.values);
  doc["sizes"] = mat_to_json(inst.sizes);
  doc["budgets"] = vec_to_json(inst.budgets);
  return doc.dump(2);
}

Allocation parse_allocation(const std::string& text, const Instance& inst) {
  Json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("bundles")) fail("bundles", "missing");
  return parse_matrix(doc["bundles"], "bundles", inst.n(), inst.m());
}

std::string serialize_allocation(const Allocation& alloc) {
  Json doc;
  doc["bundles"] = mat_to_json(alloc);
  return doc.dump(2);
}

}  // namespace fairdiv
