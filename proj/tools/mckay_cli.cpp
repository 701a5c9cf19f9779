//
// mckay-poincare - Copyright 2026 The mckay-poincare Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mckay/json_io.h"
#include "mckay/suites.h"

namespace {

using namespace mckay;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::string join(const std::vector<std::string> &v, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
}

std::string type_or_dash(const Subject &s, Side side) {
  if (s.dim() != 2)
    return "-";
  return classify_affine_type(subject_tensor_matrix(s, side, 1)).type.tag();
}

int list_groups() {
  std::vector<std::string> names = catalog_groups();
  for (const std::string &g : catalog_sl3_groups())
    names.push_back(g);
  for (const std::string &name : names) {
    const Subject &s = cached_subject(name);
    std::cout << name << "\torder=" << s.G->order()
              << "\tclasses=" << s.G->class_count()
              << "\ttype=" << type_or_dash(s, Side::kRestriction) << "\n";
  }
  return kOk;
}

int list_pairs() {
  for (const std::string &name : catalog_pairs()) {
    const Subject &s = cached_subject(name);
    std::cout << name << "\tindex=" << s.index()
              << "\trest=" << type_or_dash(s, Side::kRestriction)
              << "\tind=" << type_or_dash(s, Side::kInduction) << "\n";
  }
  return kOk;
}

void print_table(const ModuleSet &t) {
  const MatrixGroup &h = *t.group;
  std::cout << "# " << h.name() << ": order " << h.order() << ", "
            << h.class_count() << " classes\n";
  std::cout << "class";
  for (int c = 0; c < h.class_count(); ++c)
    std::cout << "\tc" << c;
  std::cout << "\norder";
  for (const ConjugacyClass &c : h.classes())
    std::cout << "\t" << c.element_order;
  std::cout << "\nsize";
  for (const ConjugacyClass &c : h.classes())
    std::cout << "\t" << c.members.size();
  std::cout << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::cout << t.labels[i];
    for (const CycloNum &v : t.chars[i].values())
      std::cout << "\t" << v.to_string();
    std::cout << "\n";
  }
}

int char_table(const std::string &name) {
  const Subject &s = cached_subject(name);
  print_table(s.g_table);
  if (s.is_pair) {
    std::cout << "\n";
    print_table(s.n_table);
  }
  return kOk;
}

int quiver(const std::string &name, const std::string &side,
           const std::string &format) {
  const Subject &s = cached_subject(name);
  Side sd = parse_side(side);
  TensorMatrix m = subject_tensor_matrix(s, sd, 1);
  std::string title = s.name + (s.is_pair ? " " + side_name(sd) : "");
  std::cout << (format == "json" ? quiver_json(m, title)
                                 : quiver_dot(m, title));
  return kOk;
}

std::string one_minus(int e) {
  return "(1 - t^" + std::to_string(e) + ")";
}

// Unreduced display of (1 + t^h) / ((1 - t^a)(1 - t^b)).
std::string closed_display(const AffineType &t) {
  DegreeData d = degree_data(t);
  std::string den = d.a == d.b ? one_minus(d.a) + "^2"
                               : one_minus(d.a) + one_minus(d.b);
  return "(1 + t^" + std::to_string(d.h) + ") / (" + den + ")";
}

int series(const std::string &name, std::string label, int order,
           const std::string &method, const std::string &side) {
  const Subject &s = cached_subject(name);
  Side sd = parse_side(side);
  std::vector<TensorMatrix> mats = subject_tensor_matrices(s, sd);
  SeriesBundle det = series_by_determinant(s.dim(), mats);
  if (label.empty())
    label = det.labels.front();
  auto it = std::find(det.labels.begin(), det.labels.end(), label);
  if (it == det.labels.end())
    throw Error(Errc::kLabelError, "unknown label '" + label +
                                       "'; labels: " + join(det.labels, ", "));
  std::size_t i = static_cast<std::size_t>(it - det.labels.begin());
  bool all = method == "all";
  std::vector<std::pair<std::string, RatFun>> results;
  if (all || method == "det")
    results.emplace_back("det", det.series[i]);
  if (all || method == "molien")
    results.emplace_back("molien", molien_bundle(s, sd).series[i]);
  std::optional<AffineType> type;
  if (s.dim() == 2)
    type = classify_affine_type(mats[0]).type;
  if (all || method == "closed") {
    if (!type || i != 0) {
      if (!all)
        throw Error(Errc::kInvalidArgument,
                    "closed forms exist only for the trivial module of an "
                    "SL2 subject");
    } else {
      results.emplace_back("closed", closed_form_invariants(*type));
    }
  }
  for (const auto &[m, f] : results)
    std::cout << m << ": " << series_expand(f, order).to_string() << "\n";
  std::cout << "ratfun: " << results.front().second.to_string() << "\n";
  if (type && i == 0 && (all || method == "closed"))
    std::cout << "closed form " << type->tag() << ": "
              << closed_display(*type) << "\n";
  int rc = kOk;
  for (const auto &[m, f] : results)
    if (f != results.front().second) {
      std::cout << "mismatch: " << m << " gives " << f.to_string() << "\n";
      rc = kVerifyFailed;
    }
  return rc;
}

int verify(const std::string &suite) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  int rc = kOk;
  for (const std::string &n : names) {
    CheckReport r = run_suite(n);
    for (const std::string &f : r.failures)
      std::cout << "FAIL " << f << "\n";
    for (const std::string &note : r.notes)
      std::cout << "note: " << note << "\n";
    std::cout << n << ": " << r.checks << " checks, " << r.failures.size()
              << " failures\n";
    if (!r.ok())
      rc = kVerifyFailed;
  }
  return rc;
}

int dump(const std::string &name) {
  std::cout << canonical_json(cached_subject(name));
  return kOk;
}

int reload(const std::string &path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in)
      throw Error(Errc::kInvalidArgument, "cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::kInvalidArgument, std::string("bad JSON: ") + e.what());
  }
  std::cout << canonical_json(subject_from_json(j));
  return kOk;
}

void print_catalog(std::ostream &os) {
  std::vector<std::string> groups = catalog_groups();
  for (const std::string &g : catalog_sl3_groups())
    groups.push_back(g);
  os << "groups: " << join(groups, " ") << "\n";
  os << "pairs: " << join(catalog_pairs(), " ") << "\n";
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app {"Poincare series of relative invariants of finite subgroups "
                "of SL2 and SL3"};
  app.require_subcommand(1);
  std::function<int()> action;

  app.add_subcommand("list-groups", "List catalog groups")
      ->callback([&] { action = list_groups; });
  app.add_subcommand("list-pairs", "List catalog pairs N<G")
      ->callback([&] { action = list_pairs; });

  std::string subject, side = "rest", format = "dot", label, method = "det";
  std::string suite, path;
  int order = Series::kDefaultOrder;

  CLI::App *ct = app.add_subcommand("char-table", "Print character tables");
  ct->add_option("subject", subject, "group:<name> or pair:<N><<G>")
      ->required();
  ct->callback([&] { action = [&] { return char_table(subject); }; });

  CLI::App *qv = app.add_subcommand("quiver", "Emit the r=1 quiver");
  qv->add_option("subject", subject)->required();
  qv->add_option("--side", side)->check(CLI::IsMember({"rest", "ind"}));
  qv->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  qv->callback([&] { action = [&] { return quiver(subject, side, format); }; });

  CLI::App *se = app.add_subcommand("series", "Print a Poincare series");
  se->add_option("subject", subject)->required();
  se->add_option("--label", label, "module label (default: trivial)");
  se->add_option("--order", order, "number of coefficients")
      ->check(CLI::Range(1, 100000));
  se->add_option("--method", method)
      ->check(CLI::IsMember({"det", "molien", "closed", "all"}));
  se->add_option("--side", side)->check(CLI::IsMember({"rest", "ind"}));
  se->callback([&] {
    action = [&] { return series(subject, label, order, method, side); };
  });

  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  CLI::App *ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  ve->callback([&] { action = [&] { return verify(suite); }; });

  CLI::App *du = app.add_subcommand("dump", "Dump a catalog entry");
  du->add_option("subject", subject)->required();
  du->add_option("--format", format)
      ->required()
      ->check(CLI::IsMember({"json"}));
  du->callback([&] { action = [&] { return dump(subject); }; });

  CLI::App *rl = app.add_subcommand(
      "reload", "Rebuild a dumped entry and print its canonical JSON");
  rl->add_option("file", path, "path or - for stdin")->required();
  rl->callback([&] { action = [&] { return reload(path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
    case Errc::kUnknownName:
      print_catalog(std::cerr);
      return kUsage;
    case Errc::kInvalidArgument:
    case Errc::kLabelError:
      return kUsage;
    default:
      return kVerifyFailed;
    }
  }
}
