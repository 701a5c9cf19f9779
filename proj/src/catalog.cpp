//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "mckay/catalog.h"

#include <charconv>

namespace mckay {

namespace {

bool parse_int(std::string_view s, int *out) {
  if (s.empty())
    return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void unknown(std::string_view what, std::string_view name) {
  throw Error(Errc::kUnknownName,
              std::string(what) + " '" + std::string(name) +
                  "' (groups: C<k>, D<k>, T, O, I, SL3C<m>-<a>-<b>-<c>; "
                  "pairs: D<n-1><D<2n-2>, C<2n><D<n>, C<2n><D<2n>, T<O, "
                  "D2<T)");
}

std::string strip_prefix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) == prefix)
    name.remove_prefix(prefix.size());
  return std::string(name);
}

}  // namespace

GroupSpec parse_group_name(std::string_view raw) {
  std::string name = strip_prefix(raw, "group:");
  if (name == "T")
    return BinaryTetrahedralSpec {};
  if (name == "O")
    return BinaryOctahedralSpec {};
  if (name == "I")
    return BinaryIcosahedralSpec {};
  int k = 0;
  if (name.rfind("SL3C", 0) == 0) {
    std::string_view rest = std::string_view(name).substr(4);
    int parts[4];
    for (int i = 0; i < 4; ++i) {
      auto pos = rest.find('-');
      std::string_view tok = rest.substr(0, pos);
      if (!parse_int(tok, &parts[i]) || (i < 3) == (pos == rest.npos))
        unknown("group", raw);
      rest = pos == rest.npos ? std::string_view() : rest.substr(pos + 1);
    }
    if (parts[0] < 1)
      unknown("group", raw);
    return SL3CyclicSpec {parts[0], {parts[1], parts[2], parts[3]}};
  }
  if (name.size() > 1 && parse_int(std::string_view(name).substr(1), &k) &&
      k >= 1) {
    if (name[0] == 'C')
      return CyclicSpec {k};
    if (name[0] == 'D')
      return BinaryDihedralSpec {k};
  }
  unknown("group", raw);
}

std::string pair_name(const PairSpec &spec) {
  int n = spec.n;
  switch (spec.family) {
  case PairFamily::kDihedralInDihedral:
    return "D" + std::to_string(n - 1) + "<D" + std::to_string(2 * (n - 1));
  case PairFamily::kCyclicInDihedral:
    return "C" + std::to_string(2 * n) + "<D" + std::to_string(n);
  case PairFamily::kCyclicInDoubleDihedral:
    return "C" + std::to_string(2 * n) + "<D" + std::to_string(2 * n);
  case PairFamily::kTetrahedralInOctahedral:
    return "T<O";
  case PairFamily::kQuaternionInTetrahedral:
    return "D2<T";
  }
  return "?";
}

PairSpec parse_pair_name(std::string_view raw) {
  std::string name = strip_prefix(raw, "pair:");
  auto lt = name.find('<');
  if (lt == std::string::npos)
    unknown("pair", raw);
  GroupSpec n = parse_group_name(name.substr(0, lt));
  GroupSpec g = parse_group_name(name.substr(lt + 1));
  const auto *nd = std::get_if<BinaryDihedralSpec>(&n);
  const auto *nc = std::get_if<CyclicSpec>(&n);
  const auto *gd = std::get_if<BinaryDihedralSpec>(&g);
  if (std::holds_alternative<BinaryTetrahedralSpec>(n) &&
      std::holds_alternative<BinaryOctahedralSpec>(g))
    return {PairFamily::kTetrahedralInOctahedral, 0};
  if (nd != nullptr && nd->n == 2 &&
      std::holds_alternative<BinaryTetrahedralSpec>(g))
    return {PairFamily::kQuaternionInTetrahedral, 0};
  if (nd != nullptr && gd != nullptr && gd->n == 2 * nd->n && nd->n >= 2)
    return {PairFamily::kDihedralInDihedral, nd->n + 1};
  if (nc != nullptr && gd != nullptr) {
    if (nc->n == 2 * gd->n && gd->n >= 2)
      return {PairFamily::kCyclicInDihedral, gd->n};
    if (nc->n == gd->n && nc->n % 2 == 0)
      return {PairFamily::kCyclicInDoubleDihedral, nc->n / 2};
  }
  unknown("pair", raw);
}

Subject assemble_subject(GroupPtr g, GroupPtr n,
                         const std::optional<PairSpec> &pair) {
  Subject s;
  s.G = std::move(g);
  s.g_table = character_table(s.G);
  if (!pair) {
    s.N = s.G;
    s.name = "group:" + s.G->name();
    s.n_table = s.g_table;
    s.restricted = s.g_table;
    for (int c = 0; c < s.G->class_count(); ++c)
      s.upsilon.push_back(c);
    return s;
  }
  s.is_pair = true;
  s.pair = *pair;
  s.name = "pair:" + pair_name(*pair);
  s.N = std::move(n);
  s.n_table = character_table(s.N);
  s.restricted = restrict_characters(s.g_table, s.N);
  s.induced = induce_characters(s.n_table, s.G);
  s.upsilon = classes_meeting(*s.N, *s.G);
  return s;
}

Subject make_group_subject(const GroupSpec &spec) {
  return assemble_subject(build_group(spec), nullptr, std::nullopt);
}

Subject make_pair_subject(const PairSpec &spec) {
  GroupPtr g, sub;
  int n = spec.n;
  auto gen_index = [&](int i) { return *g->index_of(g->generators()[i]); };
  switch (spec.family) {
  case PairFamily::kDihedralInDihedral: {
    if (n < 3)
      throw Error(Errc::kInvalidArgument, "family parameter must be >= 3");
    g = build_group(BinaryDihedralSpec {2 * (n - 1)});
    int x = gen_index(0), y = gen_index(1);
    sub = subgroup(*g, "D" + std::to_string(n - 1),
                   {g->multiply(x, x), y}, 4 * (n - 1));
    break;
  }
  case PairFamily::kCyclicInDihedral:
    if (n < 2)
      throw Error(Errc::kInvalidArgument, "family parameter must be >= 2");
    g = build_group(BinaryDihedralSpec {n});
    sub = subgroup(*g, "C" + std::to_string(2 * n), {gen_index(0)}, 2 * n);
    break;
  case PairFamily::kCyclicInDoubleDihedral: {
    if (n < 1)
      throw Error(Errc::kInvalidArgument, "family parameter must be >= 1");
    g = build_group(BinaryDihedralSpec {2 * n});
    int x = gen_index(0);
    sub = subgroup(*g, "C" + std::to_string(2 * n), {g->multiply(x, x)},
                   2 * n);
    break;
  }
  case PairFamily::kTetrahedralInOctahedral:
    g = build_group(BinaryOctahedralSpec {});
    sub = subgroup(*g, "T", {gen_index(0), gen_index(1), gen_index(2)}, 24);
    break;
  case PairFamily::kQuaternionInTetrahedral:
    g = build_group(BinaryTetrahedralSpec {});
    sub = subgroup(*g, "D2", {gen_index(0), gen_index(1)}, 8);
    break;
  }
  return assemble_subject(g, sub, spec);
}

Subject load_subject(std::string_view name) {
  if (name.substr(0, 5) == "pair:")
    return make_pair_subject(parse_pair_name(name));
  return make_group_subject(parse_group_name(name));
}

std::vector<std::string> catalog_groups() {
  std::vector<std::string> out;
  for (int k = 2; k <= 8; ++k)
    out.push_back("group:C" + std::to_string(k));
  for (int k = 2; k <= 8; ++k)
    out.push_back("group:D" + std::to_string(k));
  out.insert(out.end(), {"group:T", "group:O", "group:I"});
  return out;
}

std::vector<std::string> catalog_sl3_groups() {
  return {"group:SL3C3-1-1-1", "group:SL3C4-1-1-2", "group:SL3C5-1-1-3",
          "group:SL3C6-1-2-3", "group:SL3C7-1-2-4"};
}

std::vector<std::string> catalog_pairs() {
  std::vector<std::string> out;
  for (int n = 3; n <= 8; ++n)
    out.push_back("pair:" + pair_name({PairFamily::kDihedralInDihedral, n}));
  for (int n = 2; n <= 8; ++n)
    out.push_back("pair:" + pair_name({PairFamily::kCyclicInDihedral, n}));
  for (int n = 1; n <= 8; ++n)
    out.push_back("pair:" +
                  pair_name({PairFamily::kCyclicInDoubleDihedral, n}));
  out.push_back("pair:T<O");
  out.push_back("pair:D2<T");
  return out;
}

}  // namespace mckay
