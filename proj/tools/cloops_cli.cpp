#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cloops/cayley_dickson.hpp"
#include "cloops/core.hpp"
#include "cloops/error.hpp"
#include "cloops/identities.hpp"
#include "cloops/invariants.hpp"
#include "cloops/io.hpp"
#include "cloops/steiner.hpp"
#include "json.hpp"

namespace {

using cloops::IdentityReport;
using cloops::LoopTable;
using json = nlohmann::json;

json report_json(const IdentityReport& r) {
  json j;
  j["holds"] = r.holds;
  if (!r.holds) j["witness"] = r.witness;
  return j;
}

void print_report(const std::string& name, const IdentityReport& r) {
  std::cout << name << ": " << (r.holds ? "yes" : "no");
  if (!r.holds) {
    std::cout << "  witness";
    for (int w : r.witness) std::cout << ' ' << w;
  }
  std::cout << '\n';
}

std::vector<std::string> default_checks() {
  return {"associative", "commutative",     "flexible",         "left_alternative",
          "right_alternative", "inverse_property", "moufang",  "extra",
          "steiner",      "squares_central", "squares_nuclear"};
}

int cmd_check(const std::string& path, const std::string& only, bool as_json) {
  const LoopTable l = cloops::read_loop_file(path);
  json out;
  out["order"] = l.size();
  if (!only.empty()) {
    IdentityReport r = only == "c_loop"              ? cloops::c_loop(l)
                       : only == "c_loop_structural" ? cloops::c_loop_structural(l)
                       : only == "cube_antiautomorphism"
                           ? cloops::cube_antiautomorphism(l)
                           : cloops::check_identity(l, only);
    if (as_json) {
      out["checks"][only] = report_json(r);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "order: " << l.size() << '\n';
      print_report(only, r);
    }
    return 0;
  }

  const IdentityReport c = cloops::c_loop(l);
  const IdentityReport cs = cloops::c_loop_structural(l);
  const auto nuc = cloops::nuclei(l);
  const auto zen = cloops::center(l);
  const long long expo = l.exponent();
  json checks;
  checks["c_loop"] = report_json(c);
  checks["c_loop_structural"] = report_json(cs);
  for (const auto& name : default_checks())
    checks[name] = report_json(cloops::check_identity(l, name));
  checks["cube_antiautomorphism"] = report_json(cloops::cube_antiautomorphism(l));

  std::optional<std::set<int>> spectrum;
  const bool ip = cloops::check_identity(l, "inverse_property").holds;
  if (ip) spectrum = cloops::associator_order_spectrum(l);

  if (as_json) {
    out["checks"] = checks;
    out["nucleus"] = nuc.nucleus;
    out["left_nucleus"] = nuc.left;
    out["middle_nucleus"] = nuc.middle;
    out["right_nucleus"] = nuc.right;
    out["center"] = zen;
    out["exponent"] = expo;
    if (spectrum) out["associator_order_spectrum"] = *spectrum;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "order: " << l.size() << '\n';
  print_report("c_loop", c);
  print_report("c_loop_structural", cs);
  for (const auto& name : default_checks()) print_report(name, cloops::check_identity(l, name));
  print_report("cube_antiautomorphism", cloops::cube_antiautomorphism(l));
  auto print_set = [](const char* name, const std::vector<int>& s) {
    std::cout << name << ": size " << s.size() << " {";
    for (size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << s[i];
    std::cout << "}\n";
  };
  print_set("nucleus", nuc.nucleus);
  print_set("center", zen);
  std::cout << "exponent: " << expo << '\n';
  if (spectrum) {
    std::cout << "associator_order_spectrum: {";
    bool first = true;
    for (int v : *spectrum) {
      if (!first) std::cout << ' ';
      std::cout << v;
      first = false;
    }
    std::cout << "}\n";
  }
  return 0;
}

int cmd_extend(const std::string& cfs_path, const std::string& out_path) {
  const cloops::FactorSet fs = cloops::read_cfs_file(cfs_path);
  const cloops::ExtensionLoop ext = cloops::build_extension(fs);
  cloops::write_loop_file(out_path, ext.table);
  std::cout << "wrote " << out_path << " (order " << ext.table.size() << ", |K| = " << ext.kn
            << ", |Q| = " << ext.qn << ")\n";
  return 0;
}

int cmd_extract(const std::string& loop_path, const std::string& k_spec,
                const std::string& out_path) {
  const LoopTable l = cloops::read_loop_file(loop_path);
  std::vector<int> ksub;
  {
    std::string tok;
    for (char c : k_spec) {
      if (c == ',') {
        ksub.push_back(std::stoi(tok));
        tok.clear();
      } else
        tok += c;
    }
    if (!tok.empty()) ksub.push_back(std::stoi(tok));
  }
  const cloops::ExtractedFactorSet ex = cloops::extract_factor_set(l, ksub);
  cloops::write_cfs_file(out_path, ex.fs);
  std::cout << "wrote " << out_path << " (|K| = " << ex.fs.k.order() << ", |Q| = " << ex.fs.q.size()
            << ")\n";
  return 0;
}

int cmd_cd(int level, const std::string& emit, const std::string& out_path) {
  const cloops::SignedTable t = cloops::doubled_to_level(level);
  if (emit == "constants") {
    const std::string text = cloops::render_constants(t);
    if (out_path.empty())
      std::cout << text;
    else {
      std::ofstream out(out_path);
      out << text;
      std::cout << "wrote " << out_path << '\n';
    }
    return 0;
  }
  if (emit == "loop") {
    const LoopTable l = cloops::signed_loop(t);
    if (out_path.empty())
      cloops::write_loop(std::cout, l);
    else {
      cloops::write_loop_file(out_path, l);
      std::cout << "wrote " << out_path << " (order " << l.size() << ")\n";
    }
    return 0;
  }
  std::cerr << "unknown --emit '" << emit << "'\n";
  return 2;
}

int cmd_steiner(const std::string& sts_path, const std::string& builtin_name,
                const std::string& out_path) {
  LoopTable l = !builtin_name.empty() ? cloops::builtin(builtin_name)
                                      : cloops::steiner_loop(cloops::read_sts_file(sts_path));
  if (out_path.empty())
    cloops::write_loop(std::cout, l);
  else {
    cloops::write_loop_file(out_path, l);
    std::cout << "wrote " << out_path << " (order " << l.size() << ")\n";
  }
  return 0;
}

int cmd_assoc(int n, const std::string& out_path) {
  const LoopTable l = cloops::assoc_loop(n);
  const auto spectrum = cloops::associator_order_spectrum(l);
  std::cout << "order: " << l.size() << '\n';
  std::cout << "max associator order: " << *spectrum.rbegin() << '\n';
  if (!out_path.empty()) {
    cloops::write_loop_file(out_path, l);
    std::cout << "wrote " << out_path << '\n';
  }
  return 0;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, int bound) {
  const LoopTable a = cloops::read_loop_file(a_path);
  const LoopTable b = cloops::read_loop_file(b_path);
  const auto phi = cloops::find_isomorphism(a, b, bound);
  if (!phi) {
    std::cout << "none\n";
    return 1;
  }
  for (size_t i = 0; i < phi->size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << (*phi)[i];
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite loop toolkit: validation, identities, extensions, Steiner and"
               " Cayley-Dickson constructions"};
  app.require_subcommand(1);

  std::string table_path, only, out_path, cfs_path, k_spec, sts_path, builtin_name, emit = "constants";
  std::string iso_a, iso_b;
  bool as_json = false;
  int level = 4, assoc_n = 3, iso_bound = 64;

  auto* check = app.add_subcommand("check", "validate a .loop file and run the identity checks");
  check->add_option("table", table_path, "path to .loop file")->required();
  check->add_option("--only", only, "run a single named check");
  check->add_flag("--json", as_json, "machine-readable output");

  auto* extend = app.add_subcommand("extend", "build the extension loop of a .cfs factor set");
  extend->add_option("cfs", cfs_path, "path to .cfs file")->required();
  extend->add_option("-o,--out", out_path, "output .loop path")->required();

  auto* extract = app.add_subcommand("extract", "extract a factor set from a loop and subloop");
  extract->add_option("table", table_path, "path to .loop file")->required();
  extract->add_option("--k", k_spec, "comma-separated element indices of the subloop")->required();
  extract->add_option("-o,--out", out_path, "output .cfs path")->required();

  auto* cd = app.add_subcommand("cd", "standard doubling levels: structure constants or loop");
  cd->add_option("--level", level, "doubling level (dim 2^level)")->required();
  cd->add_option("--emit", emit, "constants | loop");
  cd->add_option("-o,--out", out_path, "output path (default stdout)");

  auto* steiner = app.add_subcommand("steiner", "Steiner loop of a triple system or a builtin");
  steiner->add_option("--sts", sts_path, "path to .sts file");
  steiner->add_option("--builtin", builtin_name, "steiner10 | table1_16 | sedenion_table2");
  steiner->add_option("-o,--out", out_path, "output .loop path (default stdout)");

  auto* assoc = app.add_subcommand("assoc", "loop with an associator of order exactly n");
  assoc->add_option("--n", assoc_n, "target associator order (> 2)")->required();
  assoc->add_option("-o,--out", out_path, "output .loop path");

  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two loops");
  iso->add_option("a", iso_a, "first .loop file")->required();
  iso->add_option("b", iso_b, "second .loop file")->required();
  iso->add_option("--bound", iso_bound, "search size bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(table_path, only, as_json);
    if (*extend) return cmd_extend(cfs_path, out_path);
    if (*extract) return cmd_extract(table_path, k_spec, out_path);
    if (*cd) return cmd_cd(level, emit, out_path);
    if (*steiner) {
      if (sts_path.empty() == builtin_name.empty()) {
        std::cerr << "steiner: exactly one of --sts / --builtin required\n";
        return 2;
      }
      return cmd_steiner(sts_path, builtin_name, out_path);
    }
    if (*assoc) return cmd_assoc(assoc_n, out_path);
    if (*iso) return cmd_iso(iso_a, iso_b, iso_bound);
  } catch (const cloops::LoopError& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) {
      std::cerr << "  witness";
      for (int w : e.witness()) std::cerr << ' ' << w;
    }
    std::cerr << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
