// Command-line surface over the theta-lift library. Subcommands:
//   lift, occurrence, picture, catalog, ktypes, infchar, verify
// Usage errors exit 2; validation errors exit 1 with the rule name on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "theta/serialize.hpp"
#include "theta/verify.hpp"

namespace {

using nlohmann::json;

long max_cells() {
  if (const char* env = std::getenv("THETA_MAX_CELLS")) return std::atol(env);
  return 10000;
}

std::pair<int, int> parse_pair(const std::string& text) {
  if (text.rfind("sp:", 0) != 0) theta::fail("ShapeError", "--pair must look like sp:P,Q");
  auto comma = text.find(',', 3);
  if (comma == std::string::npos) theta::fail("ShapeError", "--pair must look like sp:P,Q");
  try {
    int p = std::stoi(text.substr(3, comma - 3));
    int q = std::stoi(text.substr(comma + 1));
    if (p < 0 || q < 0) theta::fail("ShapeError", "signature entries must be nonnegative");
    return {p, q};
  } catch (const std::logic_error&) {
    theta::fail("ShapeError", "--pair must look like sp:P,Q");
  }
}

struct RepArg {
  std::string rep_json;
  bool has_chi = false;
  long chi = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rep", rep_json, "O*(4) representation as JSON");
    auto* chi_opt = cmd->add_option("--chi", chi, "O*(2) character exponent k");
    chi_opt->each([this](const std::string&) { has_chi = true; });
  }
  void check() const {
    if (rep_json.empty() == !has_chi)
      theta::fail("ShapeError", "exactly one of --rep and --chi is required");
  }
};

void check_grid(int max) {
  long cells = (static_cast<long>(max) + 1) * (static_cast<long>(max) + 1);
  if (cells > max_cells())
    theta::fail("ShapeError", "grid of " + std::to_string(cells) +
                                  " cells exceeds THETA_MAX_CELLS=" + std::to_string(max_cells()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact theta lifts from O*(2) and O*(4) to Sp(p,q) in Langlands parameters"};
  app.require_subcommand(1);

  auto* lift = app.add_subcommand("lift", "Compute one theta lift");
  std::string pair_text;
  lift->add_option("--pair", pair_text, "target signature, e.g. sp:2,2")->required();
  RepArg lift_rep;
  lift_rep.attach(lift);

  auto* occurrence = app.add_subcommand("occurrence", "Boolean occurrence grid as JSON");
  auto* picture = app.add_subcommand("picture", "ASCII occurrence picture");
  int occ_max = 8;
  occurrence->add_option("--max", occ_max, "grid bound");
  RepArg occ_rep;
  occ_rep.attach(occurrence);
  int pic_max = 8;
  picture->add_option("--max", pic_max, "grid bound");
  RepArg pic_rep;
  pic_rep.attach(picture);

  auto* catalog = app.add_subcommand("catalog", "Dump a closed-form list as JSON lines");
  std::string which;
  int cat_p = 2;
  long cat_bound = 6;
  catalog->add_option("--which", which, "A, B or C")->required();
  catalog->add_option("--p", cat_p, "p of Sp(p,1) or Sp(p,2)");
  catalog->add_option("--bound", cat_bound, "bound on the discrete data");

  auto* ktypes = app.add_subcommand("ktypes", "Lowest K-types of a Langlands parameter");
  std::string ktypes_param;
  ktypes->add_option("--param", ktypes_param, "LanglandsParam JSON")->required();

  auto* infchar = app.add_subcommand("infchar", "Infinitesimal character of a parameter");
  std::string infchar_param;
  infchar->add_option("--param", infchar_param, "LanglandsParam JSON")->required();

  auto* verify = app.add_subcommand("verify", "Run the grid invariant suite");
  int max_pq = 4;
  long max_param = 6;
  bool as_json = false;
  verify->add_option("--max-pq", max_pq, "signature grid bound");
  verify->add_option("--max-param", max_param, "parameter bound");
  verify->add_flag("--json", as_json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lift) {
      lift_rep.check();
      auto [p, q] = parse_pair(pair_text);
      theta::LiftResult result = lift_rep.has_chi
                                     ? theta::theta_ostar2(lift_rep.chi, p, q)
                                     : theta::theta_ostar4(
                                           theta::ostar4_from_json(lift_rep.rep_json), p, q);
      std::cout << theta::to_json(result) << "\n";
      return 0;
    }

    if (*occurrence || *picture) {
      RepArg& arg = *occurrence ? occ_rep : pic_rep;
      int max = *occurrence ? occ_max : pic_max;
      arg.check();
      check_grid(max);
      if (*picture) {
        if (arg.has_chi)
          std::cout << theta::render_picture(theta::OStar2Rep{arg.chi}, max);
        else
          std::cout << theta::render_picture(theta::ostar4_from_json(arg.rep_json), max);
        return 0;
      }
      json grid = json::array();
      for (int q = 0; q <= max; ++q) {
        json row = json::array();
        for (int p = 0; p <= max; ++p) {
          bool occ = arg.has_chi ? theta::occurs(theta::OStar2Rep{arg.chi}, p, q)
                                 : theta::occurs(theta::ostar4_from_json(arg.rep_json), p, q);
          row.push_back(occ);
        }
        grid.push_back(std::move(row));
      }
      std::cout << json{{"max", max}, {"grid", grid}}.dump() << "\n";
      return 0;
    }

    if (*catalog) {
      std::vector<theta::CatalogEntry> entries;
      if (which == "A")
        entries = theta::enumerate_A_p1(cat_p, cat_bound);
      else if (which == "B")
        entries = theta::enumerate_B_p2(cat_p, cat_bound);
      else if (which == "C")
        entries = theta::enumerate_C_22(cat_bound);
      else
        theta::fail("ShapeError", "--which must be A, B or C");
      for (const auto& e : entries) std::cout << theta::to_json(e) << "\n";
      return 0;
    }

    if (*ktypes) {
      theta::LanglandsParam param = theta::param_from_json(ktypes_param);
      std::cout << "[";
      bool first = true;
      if (param.group.kind == theta::GroupKind::Sp) {
        for (const auto& kt : theta::lowest_ktypes_sp(param)) {
          std::cout << (first ? "" : ",") << theta::to_json(kt);
          first = false;
        }
      } else {
        for (const auto& kt : theta::lowest_ktypes_ostar(param)) {
          std::cout << (first ? "" : ",") << theta::to_json(kt);
          first = false;
        }
      }
      std::cout << "]\n";
      return 0;
    }

    if (*infchar) {
      theta::LanglandsParam param = theta::param_from_json(infchar_param);
      std::cout << theta::to_json(theta::infinitesimal_character(param)) << "\n";
      return 0;
    }

    if (*verify) {
      theta::SuiteReport report = theta::run_suite(max_pq, max_param);
      std::cout << (as_json ? report.to_json() + "\n" : report.to_text());
      return report.ok() ? 0 : 1;
    }
  } catch (const theta::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
