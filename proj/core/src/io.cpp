#include "hjj/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hjj/errors.hpp"

namespace hjj {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (j.is_object() && it != j.end()) return *it;
  throw ParseError(ctx + ": missing \"" + key + "\"");
}

Rational scalar(const json& v, const std::string& ctx) {
  if (!v.is_string()) throw ParseError(ctx + ": scalars are rational strings like \"-3/2\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

Matrix matrix_from(const json& rows, const std::string& ctx) {
  if (!rows.is_array() || rows.empty())
    throw ParseError(ctx + ": expected a non-empty array of rows");
  std::size_t width = 0;
  std::vector<Vec> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    std::string rctx = ctx + "[" + std::to_string(r) + "]";
    if (!row.is_array()) throw ParseError(rctx + ": expected an array of scalars");
    if (r == 0)
      width = row.size();
    else if (row.size() != width)
      throw ParseError(rctx + ": ragged row");
    Vec entries;
    entries.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      entries.push_back(scalar(row[c], rctx + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(entries));
  }
  return Matrix::from_rows(out);
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& name,
                        const std::string& ctx) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return i;
  throw ParseError(ctx + ": unknown basis label \"" + name + "\"");
}

// {"e2":"1", ...} -> coefficient vector over the basis.
Vec vector_entry(const json& value, const std::vector<std::string>& labels,
                 const std::string& ctx) {
  if (!value.is_object()) throw ParseError(ctx + ": expected an object of label/scalar pairs");
  Vec out(labels.size());
  for (const auto& [key, coeff] : value.items())
    out[label_index(labels, key, ctx)] = scalar(coeff, ctx + "." + key);
  return out;
}

std::pair<std::size_t, std::size_t> pair_key(const std::string& key,
                                             const std::vector<std::string>& labels,
                                             const std::string& ctx) {
  std::size_t comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    throw ParseError(ctx + ": pair keys look like \"e1,e2\"");
  return {label_index(labels, key.substr(0, comma), ctx),
          label_index(labels, key.substr(comma + 1), ctx)};
}

// Sparse symmetric assembly with mirror-conflict detection, shared by forms
// and series coefficients.
BilinearMap bilinear_from(const json& j, const std::vector<std::string>& labels,
                          const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object of pair/value entries");
  std::size_t d = labels.size();
  BilinearMap map(d, d);
  std::vector<bool> seen(d * d, false);
  for (const auto& [key, value] : j.items()) {
    auto [i, jdx] = pair_key(key, labels, ctx + "." + key);
    Vec entry = vector_entry(value, labels, ctx + "." + key);
    for (auto [p, q] : {std::pair{i, jdx}, std::pair{jdx, i}}) {
      if (seen[p * d + q]) {
        Vec held(d);
        for (std::size_t k = 0; k < d; ++k) held[k] = map.at(p, q, k);
        if (held != entry)
          throw ConflictingProduct(ctx + ": entries for (" + labels[i] + "," + labels[jdx] +
                                   ") disagree");
        continue;
      }
      seen[p * d + q] = true;
      for (std::size_t k = 0; k < d; ++k) map.at(p, q, k) = entry[k];
    }
  }
  return map;
}

}  // namespace

HomAlgebra parse_algebra_text(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);

  const json& basis = field(j, "basis", origin);
  if (!basis.is_array() || basis.empty())
    throw ParseError(origin + ": \"basis\" must be a non-empty array of labels");
  std::vector<std::string> labels;
  labels.reserve(basis.size());
  for (const json& name : basis) {
    if (!name.is_string() || name.get<std::string>().empty())
      throw ParseError(origin + ": basis labels are non-empty strings");
    labels.push_back(name.get<std::string>());
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t k = i + 1; k < labels.size(); ++k)
      if (labels[i] == labels[k])
        throw ParseError(origin + ": duplicate basis label \"" + labels[i] + "\"");

  Matrix alpha = matrix_from(field(j, "alpha", origin), origin + ": alpha");
  if (alpha.rows() != labels.size() || alpha.cols() != labels.size())
    throw ParseError(origin + ": alpha must be square of the basis size");

  const json& products = field(j, "products", origin);
  if (!products.is_array())
    throw ParseError(origin + ": \"products\" must be an array");
  std::vector<HomAlgebra::ProductEntry> entries;
  entries.reserve(products.size());
  for (std::size_t p = 0; p < products.size(); ++p) {
    std::string ctx = origin + ": products[" + std::to_string(p) + "]";
    const json& e = products[p];
    if (!e.is_object()) throw ParseError(ctx + ": expected an object");
    const json& left = field(e, "left", ctx);
    const json& right = field(e, "right", ctx);
    if (!left.is_string() || !right.is_string())
      throw ParseError(ctx + ": \"left\"/\"right\" are basis labels");
    entries.push_back({label_index(labels, left.get<std::string>(), ctx + ".left"),
                       label_index(labels, right.get<std::string>(), ctx + ".right"),
                       vector_entry(field(e, "value", ctx), labels, ctx + ".value")});
  }
  return HomAlgebra::from_products(std::move(labels), std::move(alpha), entries);
}

HomAlgebra parse_algebra(const std::string& path) {
  return parse_algebra_text(read_file(path), path);
}

std::string serialize_algebra(const HomAlgebra& a) {
  ordered_json j;
  j["basis"] = a.labels();

  ordered_json alpha = ordered_json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(a.alpha()(r, c).str());
    alpha.push_back(std::move(row));
  }
  j["alpha"] = std::move(alpha);

  ordered_json products = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i; k < a.dim(); ++k) {
      Vec value = a.product_of_basis(i, k);
      if (is_zero(value)) continue;
      ordered_json entry;
      entry["left"] = a.label(i);
      entry["right"] = a.label(k);
      ordered_json coeffs;
      for (std::size_t m = 0; m < a.dim(); ++m)
        if (!value[m].is_zero()) coeffs[a.label(m)] = value[m].str();
      entry["value"] = std::move(coeffs);
      products.push_back(std::move(entry));
    }
  j["products"] = std::move(products);
  return j.dump(2) + "\n";
}

Representation parse_representation_text(const std::string& text, const HomAlgebra& a,
                                         const std::string& origin) {
  json j = parse_json(text, origin);

  const json& dim = field(j, "dim", origin);
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw ParseError(origin + ": \"dim\" must be a positive integer");
  std::size_t dv = dim.get<std::size_t>();

  Matrix phi = matrix_from(field(j, "phi", origin), origin + ": phi");
  if (phi.rows() != dv || phi.cols() != dv)
    throw ParseError(origin + ": phi must be dim x dim");

  const json& rho = field(j, "rho", origin);
  if (!rho.is_object()) throw ParseError(origin + ": \"rho\" must map labels to matrices");
  std::vector<Matrix> action(a.dim(), Matrix());
  std::vector<bool> given(a.dim(), false);
  for (const auto& [key, rows] : rho.items()) {
    std::size_t i = label_index(a.labels(), key, origin + ": rho");
    Matrix m = matrix_from(rows, origin + ": rho." + key);
    if (m.rows() != dv || m.cols() != dv)
      throw ParseError(origin + ": rho." + key + " must be dim x dim");
    action[i] = std::move(m);
    given[i] = true;
  }
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!given[i])
      throw ParseError(origin + ": rho is missing basis label \"" + a.label(i) + "\"");
  return Representation(a, std::move(action), std::move(phi));
}

Representation parse_representation(const std::string& path, const HomAlgebra& a) {
  return parse_representation_text(read_file(path), a, path);
}

Matrix parse_operator_matrix_text(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  return matrix_from(field(j, "matrix", origin), origin + ": matrix");
}

Matrix parse_operator_matrix(const std::string& path) {
  return parse_operator_matrix_text(read_file(path), path);
}

BilinearForm parse_form_text(const std::string& text, const HomAlgebra& a,
                             const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) throw ParseError(origin + ": expected an object of pair/scalar entries");
  std::size_t d = a.dim();
  BilinearForm form(d);
  std::vector<bool> seen(d * d, false);
  for (const auto& [key, value] : j.items()) {
    auto [i, jdx] = pair_key(key, a.labels(), origin + ": " + key);
    Rational v = scalar(value, origin + ": " + key);
    for (auto [p, q] : {std::pair{i, jdx}, std::pair{jdx, i}}) {
      if (seen[p * d + q]) {
        if (form.at(p, q) != v)
          throw ConflictingProduct(origin + ": entries for (" + a.label(i) + "," + a.label(jdx) +
                                   ") disagree");
        continue;
      }
      seen[p * d + q] = true;
      form.at(p, q) = v;
    }
  }
  return form;
}

BilinearForm parse_form(const std::string& path, const HomAlgebra& a) {
  return parse_form_text(read_file(path), a, path);
}

FormalProductSeries parse_product_series_text(const std::string& text, const HomAlgebra& a,
                                              const std::string& origin) {
  json j = parse_json(text, origin);

  const json& order = field(j, "order", origin);
  if (!order.is_number_unsigned())
    throw ParseError(origin + ": \"order\" must be a non-negative integer");
  const json& coeffs = field(j, "coeffs", origin);
  if (!coeffs.is_array() || coeffs.size() != order.get<std::size_t>() + 1)
    throw ParseError(origin + ": \"coeffs\" must list exactly order+1 maps");

  std::vector<BilinearMap> maps;
  maps.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    maps.push_back(bilinear_from(coeffs[i], a.labels(),
                                 origin + ": coeffs[" + std::to_string(i) + "]"));
  return FormalProductSeries(a, std::move(maps));
}

FormalProductSeries parse_product_series(const std::string& path, const HomAlgebra& a) {
  return parse_product_series_text(read_file(path), a, path);
}

}  // namespace hjj
