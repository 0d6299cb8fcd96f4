// csalg: command-line front end for the csa library.
//
// Exit codes: 0 pass, 1 fail or refused construction, 2 input error,
// 3 equivalence report disagreement (bialgebra only).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csa/csa.hpp"

namespace {

using namespace csa;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kTheorem = 3;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

int print_report(const Report& r, bool as_json) {
  std::cout << (as_json ? io::serialize_report(r) : io::render_report(r));
  return r.verdict() ? kPass : kFail;
}

const std::map<std::string, std::pair<GClass, std::string>>& properties() {
  static const std::map<std::string, std::pair<GClass, std::string>> table{
      {"associative", {GClass::G1, "(x,y,z) = 0"}},
      {"g2", {GClass::G2, "(x,y,z) - (y,x,z) = 0"}},
      {"g3", {GClass::G3, "(x,y,z) - (x,z,y) = 0"}},
      {"center-symmetric", {GClass::G4, "(x,y,z) = (z,y,x)"}},
      {"g5", {GClass::G5, "(x,y,z) + (y,z,x) + (z,x,y) = 0"}},
      {"lie-admissible", {GClass::G6, "sum over S3 of sign(s) (s(x,y,z)) = 0"}},
  };
  return table;
}

int cmd_check(const std::string& file, const std::string& property, bool as_json) {
  const auto& table = properties();
  const auto it = table.find(property);
  if (it == table.end()) throw InputError("unknown property '" + property + "'");
  const Algebra a = io::parse_algebra(io::read_file(file), file);
  Report r{"check " + property, {}};
  const CheckResult result = it->second.first == GClass::G4 ? check_center_symmetric(a)
                                                             : check_g_associative(a, it->second.first);
  r.add(property, it->second.second, result);
  return print_report(r, as_json);
}

int cmd_lie(const std::string& file, const std::string& out) {
  const Algebra a = io::parse_algebra(io::read_file(file), file);
  const LieAlgebra g = sub_adjacent(a);
  emit(io::serialize_algebra(Algebra(g.constants(), a.name().empty() ? "" : a.name() + " (bracket)")), out);
  return kPass;
}

int cmd_semidirect(const std::string& alg_file, const std::string& bimod_file, const std::string& out) {
  const Algebra a = io::parse_algebra(io::read_file(alg_file), alg_file);
  const Bimodule m = io::parse_bimodule(io::read_file(bimod_file), a, bimod_file);
  emit(io::serialize_algebra(semidirect_sum(m)), out);
  return kPass;
}

int cmd_matched(const std::string& file, bool as_json, const std::string& out) {
  const CsMatchedPair p = io::parse_matched_pair(io::read_file(file), file);
  const Report r = check_cs_matched_pair(p);
  const int code = print_report(r, as_json);
  if (code == kPass && !out.empty()) io::write_file(out, io::serialize_algebra(bicross_product(p)));
  return code;
}

int cmd_manin(const std::string& file, bool as_json, const std::string& out) {
  const Bialgebra bg = io::parse_bialgebra(io::read_file(file), file);
  const ManinTriple t = build_standard_manin_triple(bg);
  const Report r = verify_manin_triple(t);
  if (!out.empty()) io::write_file(out, io::serialize_algebra(t.total));
  return print_report(r, as_json);
}

int cmd_bialgebra(const std::string& file, bool as_json, std::size_t max_dim) {
  const Bialgebra bg = io::parse_bialgebra(io::read_file(file), file);
  const EquivalenceReport e = equivalence_report(bg, max_dim);
  if (as_json) {
    std::cout << io::serialize_equivalence(e);
  } else {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::cout << "manin_triple      " << yn(e.manin_triple) << "\n"
              << "lie_matched_pair  " << yn(e.lie_matched_pair) << "\n"
              << "cs_matched_pair   " << yn(e.cs_matched_pair) << "\n"
              << "bialgebra         " << yn(e.bialgebra) << "\n";
    for (const Report* r : {&e.manin, &e.lie, &e.cs, &e.bi}) std::cout << io::render_report(*r);
  }
  if (!e.consistent()) {
    std::cerr << "THEOREM VIOLATION: the four equivalent conditions disagree\n";
    return kTheorem;
  }
  return e.all_true() ? kPass : kFail;
}

struct SearchOptions {
  std::size_t dim = 2;
  std::string coeffs = "-1,0,1";
  std::vector<std::string> filters;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 0;
  std::size_t random = 0;
  std::string out;
};

std::vector<Scalar> parse_coeffs(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Scalar::parse(item));
  return out;
}

int cmd_search(const SearchOptions& o) {
  SearchSpec s;
  s.dim = o.dim;
  s.coeffs = parse_coeffs(o.coeffs);
  s.seed = o.seed;
  s.limit = o.limit;
  for (const auto& f : o.filters) {
    if (f == "center-symmetric") {
      s.filters.center_symmetric = true;
    } else if (f == "non-associative") {
      s.filters.non_associative = true;
    } else if (f == "noncommutative") {
      s.filters.noncommutative = true;
    } else {
      throw InputError("unknown filter '" + f + "'");
    }
  }

  std::vector<Algebra> found;
  if (o.random > 0) {
    // Successive seeds; draws failing the filters are skipped.
    const std::size_t attempts = 1000 * o.random;
    for (std::size_t t = 0; t < attempts && found.size() < o.random; ++t) {
      SearchSpec draw = s;
      draw.seed = o.seed + t;
      Algebra a = random_structure(draw);
      if (passes_filters(a, s.filters)) found.push_back(std::move(a));
    }
  } else {
    found = enumerate_structures(s);
  }

  if (!o.out.empty()) std::filesystem::create_directories(o.out);
  for (std::size_t t = 0; t < found.size(); ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "alg_%05zu.json", t + 1);
    const Algebra named(found[t].constants(), "search " + std::string(name, 9));
    if (!o.out.empty()) io::write_file(std::filesystem::path(o.out) / name, io::serialize_algebra(named));
  }
  std::cout << found.size() << " structure(s)\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for center-symmetric algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string out;
  bool as_json = false;

  std::string property = "center-symmetric";
  auto* check = app.add_subcommand("check", "Check a G-associativity property of an algebra");
  check->add_option("file", file, "algebra JSON")->required();
  check->add_option("--property", property, "associative|center-symmetric|lie-admissible|g2|g3|g5");
  check->add_flag("--json", as_json, "machine-readable report");

  auto* lie = app.add_subcommand("lie", "Sub-adjacent Lie algebra of a center-symmetric algebra");
  lie->add_option("file", file, "algebra JSON")->required();
  lie->add_option("--out", out, "output file (default stdout)");

  auto* semi = app.add_subcommand("semidirect", "Semidirect sum of an algebra and a bimodule");
  semi->add_option("algebra", file, "algebra JSON")->required();
  semi->add_option("bimodule", file2, "bimodule JSON")->required();
  semi->add_option("--out", out, "output file (default stdout)");

  auto* matched = app.add_subcommand("matched", "Verify a matched pair; --out writes the bicrossed product");
  matched->add_option("file", file, "matched pair JSON")->required();
  matched->add_flag("--json", as_json, "machine-readable report");
  matched->add_option("--out", out, "bicrossed product output file");

  auto* manin = app.add_subcommand("manin", "Build and verify the standard Manin triple of a bialgebra");
  manin->add_option("file", file, "bialgebra JSON")->required();
  manin->add_flag("--json", as_json, "machine-readable report");
  manin->add_option("--out", out, "write the total algebra here");

  std::size_t max_dim = kDefaultMaxDim;
  auto* bialg = app.add_subcommand("bialgebra", "Four-way equivalence report for a bialgebra");
  bialg->add_option("file", file, "bialgebra JSON")->required();
  bialg->add_flag("--json", as_json, "machine-readable report");
  bialg->add_option("--max-dim", max_dim, "dimension cap");

  SearchOptions so;
  auto* search = app.add_subcommand("search", "Enumerate or sample structure-constant tensors");
  search->add_option("--dim", so.dim, "dimension")->required();
  search->add_option("--coeffs", so.coeffs, "comma-separated rational coefficients");
  search->add_option("--filter", so.filters, "center-symmetric|non-associative|noncommutative")->delimiter(',');
  search->add_option("--limit", so.limit, "stop after this many results");
  search->add_option("--seed", so.seed, "seed for --random");
  search->add_option("--random", so.random, "draw this many filtered random structures");
  search->add_option("--out", so.out, "directory for algebra files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*check) return cmd_check(file, property, as_json);
    if (*lie) return cmd_lie(file, out);
    if (*semi) return cmd_semidirect(file, file2, out);
    if (*matched) return cmd_matched(file, as_json, out);
    if (*manin) return cmd_manin(file, as_json, out);
    if (*bialg) return cmd_bialgebra(file, as_json, max_dim);
    if (*search) return cmd_search(so);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Refusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kFail;
  }
  return kInput;
}
