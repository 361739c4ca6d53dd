// opalg_cli: check | free | atiyah | curvature | mc
// Exit codes: 0 pass, 1 mathematical failure, 2 truncation-limited, 3 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "opalg/errors.hpp"

namespace {

void parse_window(const std::string& s, cli::RunConfig& cfg) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw opalg::SchemaError("--degrees expects lo:hi");
  try {
    cfg.deg_lo = std::stoi(s.substr(0, colon));
    cfg.deg_hi = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw opalg::SchemaError("--degrees expects lo:hi");
  }
  if (cfg.deg_lo > cfg.deg_hi) throw opalg::SchemaError("--degrees: empty window");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with operads, modules, connections and curvature"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  std::string window = "-2:3", out;
  app.add_option("--arity-cap", cfg.arity_cap, "arity cap for built-in operads")->check(CLI::PositiveNumber);
  app.add_option("--weight-cap", cfg.weight_cap, "weight cap for free constructions")->check(CLI::PositiveNumber);
  app.add_option("--degrees", window, "degree window lo:hi");
  app.add_option("--order", cfg.order, "order of S*_A(M) and of gauge series")->check(CLI::PositiveNumber);
  app.add_flag("--strict", cfg.strict, "count skipped diagram instances as truncation-limited");
  app.add_option("--out", out, "write the report here instead of stdout");

  std::vector<std::string> check_files;
  std::string instance;
  auto* check = app.add_subcommand("check", "axiom checks on operad files and instance files");
  check->add_option("files", check_files)->required();
  std::map<std::string, CLI::App*> single;
  for (const char* name : {"free", "atiyah", "curvature", "mc"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("instance", instance)->required();
    single[name] = sub;
  }
  single["free"]->description("weight-dimension tables of free algebras and modules");
  single["atiyah"]->description("jet module, both Atiyah routes and their comparison");
  single["curvature"]->description("Q, R and T components, flatness, Bianchi witnesses");
  single["mc"]->description("Maurer–Cartan check, R(g), gauge flow and transport");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  cli::Report rep;
  std::string command = app.get_subcommands().front()->get_name();
  std::vector<std::string> inputs = command == "check" ? check_files : std::vector<std::string>{instance};
  try {
    parse_window(window, cfg);
    if (command == "check") {
      cli::cmd_check(rep, check_files, cfg);
    } else {
      cli::Instance I = cli::read_instance(cli::read_file(instance), cfg);
      if (command == "free") cli::cmd_free(rep, I, cfg);
      if (command == "atiyah") cli::cmd_atiyah(rep, I, cfg);
      if (command == "curvature") cli::cmd_curvature(rep, I, cfg);
      if (command == "mc") cli::cmd_mc(rep, I, cfg);
    }
  } catch (const opalg::TruncationExceeded& e) {
    rep.truncated(e.what());
  } catch (const opalg::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const opalg::AxiomError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const opalg::Error& e) {
    rep.check("engine", false, e.what());
  }

  std::string text = rep.text(command, cfg, inputs);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 3;
    }
    f << text;
  }
  return static_cast<int>(rep.status());
}
