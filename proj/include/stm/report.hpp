#pragma once

#include "stm/affine.hpp"
#include "stm/aut.hpp"
#include "stm/decomp.hpp"
#include "stm/named_basis.hpp"
#include "stm/orbit.hpp"
#include "stm/zariski.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>

namespace stm {

using Json = nlohmann::json;

struct RunConfig {
  std::string name;  // catalog name, or a label for file input
  std::string format = "json";
  std::size_t max_word_len = 8;
  std::size_t orbit_cap = 1000000;
  std::string basis = "paper";  // "paper": hand-picked curves when known, else auto
};

// {"n": N, "sigma_h": {"cycles": [[...]]} | {"one_line": [...]}, "sigma_v": ...}
Origami parse_surface(const Json& j);

Json rational_json(const Q& q);
Json matrix_json(const Mat& m);
Json chain_json(const Chain& c);

// Lazily runs the stages for one surface and caches each result.
class Analysis {
 public:
  Analysis(Origami o, RunConfig cfg);

  const Origami& surface() const { return o_; }
  const RunConfig& config() const { return cfg_; }
  const OrbitGraph& orbit();
  const std::vector<std::string>& veech_words();
  const Homology& homology();
  const CycleBasis& basis();
  const AutGroup& aut();
  const HomRep& rep();
  const AffineContext& affine();
  const std::vector<AffineElement>& monodromy();
  const IsotypicReport& decomposition();
  const GroupBound& bound();
  const Verdict& verdict();
  Mat omega();
  Mat omega_zero();
  Mat holonomy_matrix();

  Json orbit_json();
  Json veech_json();
  Json homology_json();
  Json aut_json();
  Json monodromy_json();
  Json decompose_json();
  Json zariski_json();
  Json pipeline_json();

 private:
  Origami o_;
  RunConfig cfg_;
  std::optional<OrbitGraph> orbit_;
  std::optional<std::vector<std::string>> words_;
  std::unique_ptr<Homology> hb_;
  std::optional<CycleBasis> basis_;
  std::optional<AutGroup> aut_;
  std::optional<HomRep> rep_;
  std::unique_ptr<AffineContext> affine_;
  std::optional<std::vector<AffineElement>> mono_;
  std::optional<IsotypicReport> decomp_;
  std::optional<GroupBound> bound_;
  std::optional<Verdict> verdict_;
};

// canonical text: sorted keys, fixed indentation
std::string dump_json(const Json& j);
// readable rendering of a report
std::string render_text(const std::string& command, const Json& j);

}  // namespace stm
