//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "mckay/mckay.h"

namespace mckay {

std::string side_name(Side side) {
  return side == Side::kRestriction ? "rest" : "ind";
}

Side parse_side(std::string_view s) {
  if (s == "rest" || s == "restriction")
    return Side::kRestriction;
  if (s == "ind" || s == "induction")
    return Side::kInduction;
  throw Error(Errc::kInvalidArgument,
              "side must be 'rest' or 'ind', got '" + std::string(s) + "'");
}

IntMatrix transpose(const IntMatrix &m) {
  IntMatrix t(m.empty() ? 0 : m[0].size(), std::vector<long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      t[j][i] = m[i][j];
  return t;
}

namespace {

using Pairing = CycloNum (*)(const ClassFunction &, const ClassFunction &);

TensorMatrix tensor_matrix_with(const ModuleSet &modules,
                                const ClassFunction &multiplier, int r,
                                Pairing pairing) {
  std::size_t k = modules.size();
  TensorMatrix out;
  out.labels = modules.labels;
  out.degrees = modules.degrees;
  out.r = r;
  out.entries.assign(k, std::vector<long>(k, 0));
  std::vector<CycloNum> norms;
  for (const ClassFunction &m : modules.chars)
    norms.push_back(pairing(m, m));
  for (std::size_t j = 0; j < k; ++j) {
    ClassFunction prod = multiplier * modules.chars[j];
    ClassFunction rest = prod;
    for (std::size_t i = 0; i < k; ++i) {
      CycloNum m = pairing(prod, modules.chars[i]) / norms[i];
      if (!m.is_integer() || sgn(m.integer_value()) < 0)
        throw Error(Errc::kNonIntegralMultiplicity,
                    "multiplicity " + m.to_string() + " of " +
                        modules.labels[i] + " in the product with " +
                        modules.labels[j]);
      out.entries[j][i] = m.integer_value().get_si();
      if (out.entries[j][i] != 0)
        rest -= m * modules.chars[i];
    }
    for (const CycloNum &x : rest.values())
      if (!x.is_zero())
        throw Error(Errc::kNonIntegralMultiplicity,
                    "product with " + modules.labels[j] +
                        " is not a combination of the modules");
  }
  return out;
}

}  // namespace

TensorMatrix tensor_matrix(const ModuleSet &modules,
                           const ClassFunction &multiplier, int r) {
  return tensor_matrix_with(modules, multiplier, r, &inner_product);
}

TensorMatrix tensor_matrix_elementwise(const ModuleSet &modules,
                                       const ClassFunction &multiplier,
                                       int r) {
  return tensor_matrix_with(modules, multiplier, r,
                            &inner_product_elementwise);
}

const ModuleSet &side_modules(const Subject &s, Side side) {
  if (!s.is_pair || side == Side::kRestriction)
    return s.restricted;
  return s.induced;
}

ClassFunction side_multiplier(const Subject &s, Side side, int r) {
  if (s.is_pair && side == Side::kRestriction)
    return exterior_power_character(natural_character(s.N), r);
  return exterior_power_character(natural_character(s.G), r);
}

TensorMatrix subject_tensor_matrix(const Subject &s, Side side, int r) {
  return tensor_matrix(side_modules(s, side), side_multiplier(s, side, r), r);
}

std::vector<TensorMatrix> subject_tensor_matrices(const Subject &s,
                                                  Side side) {
  std::vector<TensorMatrix> out;
  for (int r = 1; r < s.dim(); ++r)
    out.push_back(subject_tensor_matrix(s, side, r));
  return out;
}

void CheckReport::expect(bool cond, const std::string &what) {
  ++checks;
  if (!cond)
    failures.push_back(what);
}

void CheckReport::merge(const CheckReport &other) {
  checks += other.checks;
  for (const std::string &f : other.failures)
    failures.push_back(other.name.empty() ? f : other.name + ": " + f);
  for (const std::string &n : other.notes)
    notes.push_back(other.name.empty() ? n : other.name + ": " + n);
}

CheckReport verify_transpose_symmetry(const Subject &s) {
  CheckReport rep;
  rep.name = s.name;
  int n = s.dim();
  std::vector<const ModuleSet *> tables {&s.g_table};
  if (s.is_pair)
    tables.push_back(&s.n_table);
  for (const ModuleSet *t : tables) {
    std::vector<TensorMatrix> a(n + 1);
    for (int r = 0; r <= n; ++r)
      a[r] = tensor_matrix(
          *t, exterior_power_character(natural_character(t->group), r), r);
    for (int r = 0; r <= n; ++r)
      rep.expect(a[r].entries == transpose(a[n - r].entries),
                 t->group->name() + ": A_" + std::to_string(r) +
                     " != A_" + std::to_string(n - r) + "^T");
  }
  return rep;
}

CheckReport verify_eigen_structure(const Subject &s, Side side, int r) {
  CheckReport rep;
  rep.name = s.name + " " + side_name(side) + " r=" + std::to_string(r);
  const ModuleSet &mods = side_modules(s, side);
  ClassFunction mult = side_multiplier(s, side, r);
  TensorMatrix m = tensor_matrix(mods, mult, r);
  const MatrixGroup &h = *mods.group;
  CycloNum dim = mult.degree();
  std::size_t k = mods.size();
  for (int gc : s.upsilon) {
    int rep_elem = s.G->classes()[gc].representative;
    auto idx = h.index_of(s.G->element(rep_elem));
    if (!idx) {
      rep.failures.push_back("class representative not in module group");
      continue;
    }
    int hc = h.class_of(*idx);
    std::vector<CycloNum> v;
    for (const ClassFunction &chi : mods.chars)
      v.push_back(chi[hc]);
    CycloNum lambda = dim - mult[hc];
    for (std::size_t j = 0; j < k; ++j) {
      CycloNum lhs = dim * v[j];
      for (std::size_t i = 0; i < k; ++i)
        if (m.entries[j][i] != 0)
          lhs -= CycloNum(m.entries[j][i]) * v[i];
      rep.expect(lhs == lambda * v[j],
                 "eigen relation fails at class " + std::to_string(gc) +
                     " row " + mods.labels[j]);
    }
  }
  return rep;
}

namespace {

struct Edge {
  std::size_t a, b;
  long count;
  bool arrow_a, arrow_b;  // arrow pointing to a / to b
};

// Vertices i, j joined by max(m_ij, m_ji) edges; an arrow points to i when
// m_ij > 1. Loops come from diagonal entries.
std::vector<Edge> quiver_edges(const TensorMatrix &m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.entries[i][i] > 0)
      edges.push_back({i, i, m.entries[i][i], false, false});
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      long c = std::max(m.entries[i][j], m.entries[j][i]);
      if (c > 0)
        edges.push_back(
            {i, j, c, m.entries[i][j] > 1, m.entries[j][i] > 1});
    }
  }
  return edges;
}

std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string quiver_dot(const TensorMatrix &m, const std::string &title) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(title) << "\" {\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    os << "  v" << i << " [label=\"" << dot_escape(m.labels[i]) << " ("
       << m.degrees[i] << ")\"];\n";
  for (const Edge &e : quiver_edges(m)) {
    const char *dir = "none";
    if (e.arrow_a && e.arrow_b)
      dir = "both";
    else if (e.arrow_b)
      dir = "forward";
    else if (e.arrow_a)
      dir = "back";
    for (long c = 0; c < e.count; ++c)
      os << "  v" << e.a << " -> v" << e.b << " [dir=" << dir << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string quiver_json(const TensorMatrix &m, const std::string &title) {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    j["vertices"].push_back({{"label", m.labels[i]}, {"degree", m.degrees[i]}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge &e : quiver_edges(m)) {
    nlohmann::ordered_json arrows = nlohmann::ordered_json::array();
    if (e.arrow_a)
      arrows.push_back(e.a);
    if (e.arrow_b)
      arrows.push_back(e.b);
    j["edges"].push_back({{"from", e.a},
                          {"to", e.b},
                          {"multiplicity", e.count},
                          {"arrow_to", arrows}});
  }
  j["matrix"] = m.entries;
  return j.dump(2) + "\n";
}

}  // namespace mckay
