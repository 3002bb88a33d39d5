#include "stm/error.hpp"
#include "stm/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

enum Exit { kOk = 0, kOther = 1, kUsage = 2, kInput = 3, kNotCertified = 4, kOrbit = 5, kDecomp = 6 };

int exit_code(stm::Err e) {
  using stm::Err;
  switch (e) {
    case Err::BadInput:
    case Err::NotABijection:
    case Err::Disconnected:
    case Err::UnknownName:
    case Err::NonCycleInput:
    case Err::NotInSpan:
    case Err::NotAnAutomorphism:
    case Err::WordDoesNotStabilize:
      return kInput;
    case Err::OrbitTooLarge:
      return kOrbit;
    case Err::NonCommutingGenerators:
    case Err::IrrationalEigenvalue:
    case Err::NotIrreducible:
    case Err::DecompositionIncomplete:
    case Err::UnsupportedAlgebraType:
      return kDecomp;
    case Err::NotCertified:
      return kNotCertified;
    case Err::NotUnipotent:
      break;
  }
  return kOther;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veech groups, homology actions and monodromy bounds of square-tiled surfaces"};
  app.require_subcommand(1);
  std::string name, file;
  stm::RunConfig cfg;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"orbit", "orbit size and basic invariants"},
      {"veech", "Veech group generators"},
      {"homology", "homology basis, holonomy and intersection form"},
      {"aut", "automorphism group and its action on homology"},
      {"monodromy", "action of the Veech generators on zero-holonomy homology"},
      {"decompose", "isotypic decomposition and symplectic upper bound"},
      {"zariski", "Lie-span lower bound and verdict"},
      {"pipeline", "every stage in one report"},
  };
  for (auto& [cmd, help] : commands) {
    auto* sub = app.add_subcommand(cmd, help);
    auto* pos = sub->add_option("surface", name, "catalog name");
    auto* fopt = sub->add_option("--file", file, "surface JSON file")->check(CLI::ExistingFile);
    pos->excludes(fopt);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-word-len", cfg.max_word_len, "word length cap for the Lie span")
        ->check(CLI::PositiveNumber);
    sub->add_option("--orbit-cap", cfg.orbit_cap, "largest orbit explored")->check(CLI::PositiveNumber);
    sub->add_option("--basis", cfg.basis, "paper: hand-picked curves when known; auto: computed")
        ->check(CLI::IsMember({"paper", "auto"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (name.empty() == file.empty()) {
    std::cerr << "give exactly one of a catalog name or --file\n";
    return kUsage;
  }
  try {
    stm::Origami o;
    if (!file.empty()) {
      std::ifstream in(file);
      stm::Json j;
      try {
        j = stm::Json::parse(in);
      } catch (const stm::Json::exception& e) {
        throw stm::Error(stm::Err::BadInput, e.what());
      }
      o = stm::parse_surface(j);
      cfg.name = j.value("name", file);
    } else {
      o = stm::catalog(name);
      cfg.name = name;
    }
    stm::Analysis a(o, cfg);
    stm::Json out;
    int code = kOk;
    if (cmd == "orbit") out = a.orbit_json();
    if (cmd == "veech") out = a.veech_json();
    if (cmd == "homology") out = a.homology_json();
    if (cmd == "aut") out = a.aut_json();
    if (cmd == "monodromy") out = a.monodromy_json();
    if (cmd == "decompose") {
      out = a.decompose_json();
      if (out.at("bound").contains("error") || !a.decomposition().complete) code = kDecomp;
    }
    if (cmd == "zariski" || cmd == "pipeline") {
      out = cmd == "zariski" ? a.zariski_json() : a.pipeline_json();
      if (!a.verdict().certified) code = kNotCertified;
    }
    std::cout << (cfg.format == "json" ? stm::dump_json(out) : stm::render_text(cmd, out));
    return code;
  } catch (const stm::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
