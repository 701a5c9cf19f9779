//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/json_io.h"

#include <map>

namespace mckay {

namespace {

constexpr const char *kSchema = "mckay-subject/1";

[[noreturn]] void malformed(const std::string &what) {
  throw Error(Errc::kInvalidArgument, "malformed JSON: " + what);
}

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rat parse_rat(const Json &j) {
  if (!j.is_string())
    malformed("rational must be a string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0)
    malformed("bad rational '" + j.get<std::string>() + "'");
  r.canonicalize();
  return r;
}

Integer parse_int(const Json &j) {
  if (!j.is_string())
    malformed("integer must be a string");
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0)
    malformed("bad integer '" + j.get<std::string>() + "'");
  return z;
}

Json module_set_to_json(const ModuleSet &m) {
  Json j;
  j["labels"] = m.labels;
  j["degrees"] = m.degrees;
  Json values = Json::array();
  for (const ClassFunction &chi : m.chars) {
    Json row = Json::array();
    for (const CycloNum &v : chi.values())
      row.push_back(cyclo_to_json(v));
    values.push_back(std::move(row));
  }
  j["values"] = std::move(values);
  return j;
}

Json group_to_json(const MatrixGroup &g, const ModuleSet &table) {
  Json j;
  j["name"] = g.name();
  j["dimension"] = g.dim();
  j["order"] = g.order();
  Json gens = Json::array();
  for (const CycloMatrix &m : g.generators())
    gens.push_back(matrix_to_json(m));
  j["generators"] = std::move(gens);
  Json classes = Json::array();
  for (const ConjugacyClass &c : g.classes())
    classes.push_back({{"representative",
                        matrix_to_json(g.element(c.representative))},
                       {"size", c.members.size()},
                       {"element_order", c.element_order}});
  j["classes"] = std::move(classes);
  j["characters"] = module_set_to_json(table);
  return j;
}

GroupPtr group_from_json(const Json &j) {
  std::vector<CycloMatrix> gens;
  for (const Json &m : field(j, "generators"))
    gens.push_back(matrix_from_json(m));
  return std::make_shared<const MatrixGroup>(MatrixGroup::generate(
      field(j, "name").get<std::string>(), std::move(gens),
      field(j, "order").get<int>()));
}

Json side_to_json(const Subject &s, Side side) {
  Json j;
  j["side"] = side_name(side);
  j["modules"] = module_set_to_json(side_modules(s, side));
  std::vector<TensorMatrix> mats = subject_tensor_matrices(s, side);
  Json tensors = Json::array();
  for (const TensorMatrix &m : mats)
    tensors.push_back({{"r", m.r}, {"entries", m.entries}});
  j["tensor_matrices"] = std::move(tensors);
  if (s.dim() == 2) {
    // The trivial group has a single looped vertex and no affine type.
    try {
      j["affine_type"] = classify_affine_type(mats[0]).type.tag();
    } catch (const Error &e) {
      if (e.code() != Errc::kUnclassified)
        throw;
      j["affine_type"] = nullptr;
    }
  }
  SeriesBundle b = series_by_determinant(s.dim(), mats);
  Json series = Json::array();
  for (std::size_t i = 0; i < b.series.size(); ++i) {
    Json f = ratfun_to_json(b.series[i]);
    series.push_back({{"label", b.labels[i]},
                      {"num", f["num"]},
                      {"den", f["den"]}});
  }
  j["series"] = std::move(series);
  return j;
}

}  // namespace

Json cyclo_to_json(const CycloNum &x) {
  Json terms = Json::array();
  for (const auto &[e, c] : x.coeffs())
    terms.push_back({e, c.get_str()});
  return {{"conductor", x.conductor()}, {"terms", std::move(terms)}};
}

CycloNum cyclo_from_json(const Json &j) {
  const Json &c = field(j, "conductor");
  if (!c.is_number_integer())
    malformed("conductor must be an integer");
  int m = c.get<int>();
  if (m < 1)
    malformed("conductor must be positive");
  std::map<long, Rat> coeffs;
  for (const Json &t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      malformed("term must be [exponent, rational]");
    long e = t[0].get<long>();
    if (e < 0 || e >= euler_phi(m) || coeffs.count(e))
      malformed("term exponent out of range");
    coeffs[e] = parse_rat(t[1]);
  }
  return CycloNum::make(m, coeffs);
}

Json poly_to_json(const IntPoly &p) {
  Json j = Json::array();
  for (const Integer &c : p.coeffs())
    j.push_back(c.get_str());
  return j;
}

IntPoly poly_from_json(const Json &j) {
  if (!j.is_array())
    malformed("polynomial must be an array");
  std::vector<Integer> c;
  for (const Json &x : j)
    c.push_back(parse_int(x));
  return IntPoly(std::move(c));
}

Json ratfun_to_json(const RatFun &f) {
  return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFun ratfun_from_json(const Json &j) {
  return RatFun::normalize(poly_from_json(field(j, "num")),
                           poly_from_json(field(j, "den")));
}

Json matrix_to_json(const CycloMatrix &m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.n; ++k)
      row.push_back(cyclo_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycloMatrix matrix_from_json(const Json &j) {
  if (!j.is_array() || j.empty())
    malformed("matrix must be a nonempty array of rows");
  CycloMatrix m;
  m.n = static_cast<int>(j.size());
  for (const Json &row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.n)
      malformed("matrix must be square");
    for (const Json &x : row)
      m.a.push_back(cyclo_from_json(x));
  }
  return m;
}

Json subject_to_json(const Subject &s) {
  Json j;
  j["schema"] = kSchema;
  j["name"] = s.name;
  j["kind"] = s.is_pair ? "pair" : "group";
  j["dimension"] = s.dim();
  j["G"] = group_to_json(*s.G, s.g_table);
  if (s.is_pair) {
    j["index"] = s.index();
    Json n = group_to_json(*s.N, s.n_table);
    Json in_g = Json::array();
    for (const CycloMatrix &m : s.N->generators())
      in_g.push_back(*s.G->index_of(m));
    n["generator_indices_in_G"] = std::move(in_g);
    j["N"] = std::move(n);
  }
  j["classes_meeting_N"] = s.upsilon;
  Json sides = Json::array();
  sides.push_back(side_to_json(s, Side::kRestriction));
  if (s.is_pair)
    sides.push_back(side_to_json(s, Side::kInduction));
  j["sides"] = std::move(sides);
  return j;
}

namespace {

Subject rebuild_subject(const Json &j) {
  if (field(j, "schema") != kSchema)
    malformed("unknown schema");
  std::string name = field(j, "name").get<std::string>();
  std::string kind = field(j, "kind").get<std::string>();
  GroupPtr g = group_from_json(field(j, "G"));
  if (kind == "group")
    return assemble_subject(g, nullptr, std::nullopt);
  if (kind != "pair")
    malformed("kind must be 'group' or 'pair'");
  const Json &n = field(j, "N");
  std::vector<int> idx;
  for (const Json &m : field(n, "generators")) {
    auto k = g->index_of(matrix_from_json(m));
    if (!k)
      throw Error(Errc::kNotASubgroup, "generator of N is not in G");
    idx.push_back(*k);
  }
  GroupPtr sub = subgroup(*g, field(n, "name").get<std::string>(), idx,
                          field(n, "order").get<int>());
  return assemble_subject(g, sub, parse_pair_name(name));
}

}  // namespace

Subject subject_from_json(const Json &j) {
  try {
    return rebuild_subject(j);
  } catch (const nlohmann::json::exception &e) {
    malformed(e.what());
  }
}

std::string canonical_json(const Subject &s) {
  return subject_to_json(s).dump(2) + "\n";
}

}  // namespace mckay
