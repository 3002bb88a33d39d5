#include "stm/report.hpp"

#include "stm/error.hpp"

#include <algorithm>
#include <sstream>

namespace stm {

namespace {

Perm perm_from_json(int n, const Json& j, const char* what) {
  if (!j.is_object()) throw Error(Err::BadInput, std::string(what) + " must be an object");
  if (j.contains("cycles")) {
    std::vector<std::vector<int>> cycles;
    for (auto& c : j.at("cycles")) cycles.push_back(c.get<std::vector<int>>());
    return perm_from_cycles(n, cycles);
  }
  if (j.contains("one_line")) {
    auto images = j.at("one_line").get<std::vector<int>>();
    if (static_cast<int>(images.size()) != n)
      throw Error(Err::BadInput, std::string(what) + " one_line has the wrong length");
    return perm_from_one_line(images);
  }
  throw Error(Err::BadInput, std::string(what) + " needs \"cycles\" or \"one_line\"");
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(rational_json(x));
  return a;
}

Json columns_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(vec_json(m.col(j)));
  return a;
}

Json mat2_json(const Mat2& m) { return Json::array({Json::array({m[0], m[1]}), Json::array({m[2], m[3]})}); }

Json cycles_json(const std::vector<Chain>& cs, const std::vector<std::string>& labels) {
  Json a = Json::array();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    auto [x, y] = holonomy(cs[k]);
    a.push_back({{"label", labels[k]}, {"chain", chain_json(cs[k])},
                 {"holonomy", Json::array({rational_json(x), rational_json(y)})}});
  }
  return a;
}

}  // namespace

Origami parse_surface(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n <= 0) throw Error(Err::BadInput, "n must be positive");
    return make_origami(perm_from_json(n, j.at("sigma_h"), "sigma_h"), perm_from_json(n, j.at("sigma_v"), "sigma_v"));
  } catch (const Json::exception& e) {
    throw Error(Err::BadInput, e.what());
  }
}

Json rational_json(const Q& q) { return to_string(q); }

Json matrix_json(const Mat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

Json chain_json(const Chain& c) {
  const std::size_t n = c.size() / 2;
  Json o = Json::object();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) o[(i < n ? "h" : "v") + std::to_string(i % n + 1)] = rational_json(c[i]);
  return o;
}

Analysis::Analysis(Origami o, RunConfig cfg) : o_(std::move(o)), cfg_(std::move(cfg)) {
  if (cfg_.basis != "paper" && cfg_.basis != "auto") throw Error(Err::BadInput, "basis must be paper or auto");
  if (cfg_.orbit_cap == 0 || cfg_.max_word_len == 0) throw Error(Err::BadInput, "caps must be positive");
}

const OrbitGraph& Analysis::orbit() {
  if (!orbit_) orbit_ = stm::orbit(o_, cfg_.orbit_cap);
  return *orbit_;
}

const std::vector<std::string>& Analysis::veech_words() {
  if (!words_) words_ = veech_generators(orbit());
  return *words_;
}

const Homology& Analysis::homology() {
  if (!hb_) hb_ = std::make_unique<Homology>(build_homology(o_));
  return *hb_;
}

const CycleBasis& Analysis::basis() {
  if (!basis_) {
    if (cfg_.basis == "paper") basis_ = named_basis(cfg_.name, o_);
    if (!basis_) basis_ = auto_basis(homology());
  }
  return *basis_;
}

const AutGroup& Analysis::aut() {
  if (!aut_) aut_ = automorphisms(o_);
  return *aut_;
}

const AffineContext& Analysis::affine() {
  if (!affine_) affine_ = std::make_unique<AffineContext>(homology(), basis());
  return *affine_;
}

const HomRep& Analysis::rep() {
  if (!rep_) {
    HomRep r;
    const auto& coords = affine().full_coords();
    for (auto& g : aut().generators) r.gens.push_back(aut_action(homology(), coords, g));
    if (r.gens.empty()) r.gens.push_back(Mat::identity(homology().dim()));
    for (auto& g : aut().elements) r.elements.push_back(aut_action(homology(), coords, g));
    rep_ = std::move(r);
  }
  return *rep_;
}

const std::vector<AffineElement>& Analysis::monodromy() {
  if (!mono_) mono_ = monodromy_generators(affine(), veech_words());
  return *mono_;
}

Mat Analysis::omega() { return intersection_form(homology(), basis().cycles); }
Mat Analysis::omega_zero() { return intersection_form(homology(), basis().zero); }

Mat Analysis::holonomy_matrix() {
  const auto& cs = basis().cycles;
  Mat h(2, cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    auto [a, b] = holonomy(cs[k]);
    h(0, k) = a;
    h(1, k) = b;
  }
  return h;
}

const IsotypicReport& Analysis::decomposition() {
  if (!decomp_) decomp_ = isotypic_decomposition(rep(), omega(), holonomy_matrix());
  return *decomp_;
}

const GroupBound& Analysis::bound() {
  if (!bound_) bound_ = myz_upper_bound(decomposition());
  return *bound_;
}

const Verdict& Analysis::verdict() {
  if (!verdict_) {
    std::vector<Mat> gens, extra;
    for (auto& e : monodromy()) gens.push_back(e.zero_matrix());
    for (auto& p : aut().generators) extra.push_back(aut_action(homology(), affine().zero_coords(), p));
    // automorphisms act on the zero-holonomy part as elements of the affine group
    WordGroup wg(gens, extra);
    verdict_ = zariski_verdict(wg, bound(), omega_zero(), cfg_.max_word_len);
  }
  return *verdict_;
}

Json Analysis::orbit_json() {
  Json j;
  j["surface"] = cfg_.name;
  j["squares"] = o_.n();
  j["genus"] = genus(o_);
  j["singularities"] = singularity_profile(o_);
  j["sigma_h"] = one_line(o_.h);
  j["sigma_v"] = one_line(o_.v);
  j["orbit_size"] = orbit().size();
  return j;
}

Json Analysis::veech_json() {
  Json j;
  j["orbit_size"] = orbit().size();
  Json words = Json::array(), mats = Json::array();
  for (auto& w : veech_words()) {
    words.push_back(pretty_word(w));
    mats.push_back(mat2_json(word_matrix(w)));
  }
  j["words"] = words;
  j["matrices"] = mats;
  return j;
}

Json Analysis::homology_json() {
  Json j;
  const auto& b = basis();
  j["basis_kind"] = b.kind;
  j["dimension"] = homology().dim();
  j["basis"] = cycles_json(b.cycles, b.labels);
  j["zero_holonomy_basis"] = cycles_json(b.zero, b.zero_labels);
  j["omega"] = matrix_json(omega());
  j["omega_zero"] = matrix_json(omega_zero());
  return j;
}

Json Analysis::aut_json() {
  Json j;
  const auto& a = aut();
  j["order"] = a.order();
  j["abelian"] = a.abelian;
  j["exponent"] = a.exponent;
  j["structure"] = a.structure;
  j["basis"] = basis().labels;
  Json gens = Json::array();
  for (std::size_t k = 0; k < a.generators.size(); ++k)
    gens.push_back({{"cycles", cycle_string(a.generators[k])}, {"rho", matrix_json(rep().gens[k])}});
  j["generators"] = gens;
  return j;
}

Json Analysis::monodromy_json() {
  Json j;
  j["basis"] = basis().zero_labels;
  Json gens = Json::array();
  for (auto& e : monodromy())
    gens.push_back({{"word", pretty_word(e.word)}, {"derivative", mat2_json(e.derivative)},
                    {"matrix", matrix_json(e.zero_matrix())}, {"automorphism_lifts", e.lifts.size()}});
  j["generators"] = gens;
  j["note"] = "each matrix is defined up to composition with the automorphism action";
  return j;
}

Json Analysis::decompose_json() {
  Json j;
  const auto& r = decomposition();
  j["basis"] = basis().labels;
  j["complete"] = r.complete;
  j["abelian"] = r.abelian;
  j["omega_orthogonal"] = r.omega_orthogonal;
  Json comps = Json::array();
  for (auto& c : r.components) {
    Json cj;
    cj["dimension"] = c.basis.cols();
    cj["multiplicity"] = c.multiplicity;
    cj["irreducible_dimension"] = c.irreducible_dim;
    cj["centralizer_dimension"] = c.centralizer_dim;
    cj["block_commutant_dimension"] = c.commutant_dim;
    cj["division_algebra"] = division_name(c.division);
    cj["irreducible_certified"] = c.irreducible_certified;
    cj["tautological"] = c.tautological;
    cj["label"] = vec_json(c.label);
    cj["character"] = vec_json(c.character);
    cj["basis"] = columns_json(c.basis);
    Json copies = Json::array();
    for (auto& u : c.copies) copies.push_back(columns_json(u));
    cj["copies"] = copies;
    comps.push_back(cj);
  }
  j["components"] = comps;
  try {
    const auto& b = bound();
    j["bound"] = {{"dimension", b.dim}, {"group", b.name}, {"factors", b.factors}};
  } catch (const Error& e) {
    j["bound"] = {{"error", e.what()}};
  }
  return j;
}

Json Analysis::zariski_json() {
  const auto& v = verdict();
  Json j;
  j["lower"] = v.lower;
  j["upper"] = v.upper;
  j["group"] = v.group_name;
  j["certified"] = v.certified;
  j["verdict"] = v.certified ? "dimension-certified" : "not certified";
  j["summary"] = v.summary();
  j["seeds"] = v.seeds;
  j["witnesses"] = v.witnesses;
  j["max_word_len"] = cfg_.max_word_len;
  return j;
}

Json Analysis::pipeline_json() {
  Json j;
  j["surface"] = orbit_json();
  j["veech"] = veech_json();
  j["homology"] = homology_json();
  j["aut"] = aut_json();
  j["monodromy"] = monodromy_json();
  j["decomposition"] = decompose_json();
  j["zariski"] = zariski_json();
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [&](const Json& x) {
    if (!x.is_array()) return false;
    for (auto& e : x)
      if (e.is_structured() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](auto& y) { return !y.is_structured(); })))
        return false;
    return true;
  };
  auto inline_array = [&](const Json& x) {
    std::string s = "[";
    bool first = true;
    for (auto& e : x) {
      if (!first) s += e.is_array() ? "; " : ", ";
      first = false;
      if (e.is_array()) {
        bool f2 = true;
        for (auto& y : e) {
          if (!f2) s += ' ';
          f2 = false;
          s += scalar(y);
        }
      } else {
        s += scalar(e);
      }
    }
    return s + "]";
  };
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (v.is_structured() && !flat(v)) {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_array() ? inline_array(v) : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t k = 0;
    for (auto& v : j) {
      ++k;
      if (!v.is_structured())
        out << pad << "- " << scalar(v) << "\n";
      else if (flat(v))
        out << pad << "- " << inline_array(v) << "\n";
      else {
        out << pad << "- " << k << "\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const std::string& command, const Json& j) {
  std::ostringstream out;
  if (command == "pipeline") {
    const auto& s = j.at("surface");
    out << "surface: " << s.at("surface").get<std::string>() << " (" << s.at("squares") << " squares, genus "
        << s.at("genus") << ")\n";
    out << "orbit size: " << s.at("orbit_size") << "\n";
    out << "veech generators:";
    for (auto& w : j.at("veech").at("words")) out << " [" << w.get<std::string>() << "]";
    out << "\n";
    const auto& a = j.at("aut");
    out << "automorphisms: " << a.at("structure").get<std::string>() << ", order " << a.at("order") << "\n";
    out << "homology basis: " << j.at("homology").at("basis_kind").get<std::string>() << ", dimension "
        << j.at("homology").at("dimension") << "\n";
    const auto& d = j.at("decomposition");
    for (auto& c : d.at("components"))
      out << "component: dimension " << c.at("dimension") << " = " << c.at("multiplicity") << " x "
          << c.at("irreducible_dimension") << ", type " << c.at("division_algebra").get<std::string>()
          << (c.at("tautological").get<bool>() ? ", tautological" : "") << "\n";
    const auto& z = j.at("zariski");
    out << "upper bound: " << z.at("group").get<std::string>() << " (dimension " << z.at("upper") << ")\n";
    out << "lower bound: dimension " << z.at("lower") << "\n";
    out << "verdict: " << z.at("summary").get<std::string>() << "\n";
    return out.str();
  }
  render(out, j, 0);
  return out.str();
}

}  // namespace stm
