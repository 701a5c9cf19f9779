//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/character.h"

namespace mckay {

// Families of normal pairs N < G realized inside one matrix group.
enum class PairFamily {
  kDihedralInDihedral,       // D_{n-1} < D_{2(n-1)}, N = <x^2, y>
  kCyclicInDihedral,         // C_{2n} < D_n, N = <x>
  kCyclicInDoubleDihedral,   // C_{2n} < D_{2n}, N = <x^2>
  kTetrahedralInOctahedral,  // T < O
  kQuaternionInTetrahedral,  // D_2 < T
};

struct PairSpec {
  PairFamily family;
  int n;  // family parameter (unused for T < O and D_2 < T)
};

std::string pair_name(const PairSpec &spec);  // e.g. "C4<D2"

// A group (N = G) or a normal pair with its character data.
struct Subject {
  std::string name;  // "group:..." or "pair:...", round-trips through load
  bool is_pair = false;
  GroupPtr G;
  GroupPtr N;
  ModuleSet g_table;
  ModuleSet n_table;
  ModuleSet restricted;  // on N; the full table when N = G
  ModuleSet induced;     // on G; pairs only
  std::vector<int> upsilon;  // classes of G meeting N
  PairSpec pair {PairFamily::kCyclicInDihedral, 0};

  int dim() const { return G->dim(); }
  int index() const { return G->order() / N->order(); }
};

GroupSpec parse_group_name(std::string_view name);
PairSpec parse_pair_name(std::string_view name);

// Accepts "group:<name>", "pair:<N><<G>", or a bare group name.
Subject load_subject(std::string_view name);
Subject make_group_subject(const GroupSpec &spec);
Subject make_pair_subject(const PairSpec &spec);

// Computes tables, restrictions and inductions for given groups; n is
// ignored when pair is empty.
Subject assemble_subject(GroupPtr g, GroupPtr n,
                         const std::optional<PairSpec> &pair);

// Default catalog used by the verification suites.
std::vector<std::string> catalog_groups();  // SL2 groups, "group:" prefixed
std::vector<std::string> catalog_sl3_groups();
std::vector<std::string> catalog_pairs();  // "pair:" prefixed

}  // namespace mckay
