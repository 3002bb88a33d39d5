#include "stm/zariski.hpp"

#include "stm/error.hpp"
#include "stm/parallel.hpp"

#include <cctype>

namespace stm {

namespace {

Mat minus_identity(const Mat& m) {
  Mat n = m;
  for (std::size_t i = 0; i < m.rows(); ++i) n(i, i) -= 1;
  return n;
}

Q trace(const Mat& m) {
  Q t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// nilpotency index of n, or 0 if n is not nilpotent
std::size_t nilpotency(const Mat& n) {
  if (n.is_zero()) return 1;
  if (trace(n) != 0) return 0;
  Q t2 = 0;
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j)
      if (n(i, j) != 0 && n(j, i) != 0) t2 += n(i, j) * n(j, i);
  if (t2 != 0) return 0;
  Mat p = n;
  for (std::size_t k = 2; k <= n.rows(); ++k) {
    p = p * n;
    if (p.is_zero()) return k;
  }
  return 0;
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

}  // namespace

bool is_unipotent(const Mat& m) { return m.square() && nilpotency(minus_identity(m)) > 0; }

Mat unipotent_log(const Mat& m) {
  if (!m.square()) throw Error(Err::NotUnipotent, "matrix is not square");
  Mat n = minus_identity(m);
  std::size_t k = nilpotency(n);
  if (k == 0) throw Error(Err::NotUnipotent, "m - I is not nilpotent");
  Mat out(m.rows(), m.cols());
  Mat p = n;
  for (std::size_t j = 1; j < k; ++j) {
    Q c(j % 2 ? 1 : -1, static_cast<long>(j));
    out += p * c;
    p = p * n;
  }
  return out;
}

Mat nilpotent_exp(const Mat& x) {
  std::size_t k = nilpotency(x);
  if (k == 0) throw Error(Err::NotUnipotent, "matrix is not nilpotent");
  Mat out = Mat::identity(x.rows());
  Mat p = x;
  Q fact = 1;
  for (std::size_t j = 1; j < k; ++j) {
    fact *= Q(static_cast<long>(j));
    out += p * (1 / fact);
    p = p * x;
  }
  return out;
}

bool infinitesimally_symplectic(const Mat& x, const Mat& omega) {
  return (x.transpose() * omega + omega * x).is_zero();
}

WordGroup::WordGroup(std::vector<Mat> generators, std::vector<Mat> extra_conjugators)
    : gens(std::move(generators)), extra(std::move(extra_conjugators)) {
  if (gens.size() > 26) throw Error(Err::BadInput, "at most 26 generators");
  if (extra.size() > 9) throw Error(Err::BadInput, "at most 9 extra conjugators");
  for (auto& g : gens) {
    auto inv = inverse(g);
    if (!inv) throw Error(Err::BadInput, "generator is not invertible");
    inverses.push_back(*inv);
  }
  for (auto& e : extra) {
    auto inv = inverse(e);
    if (!inv) throw Error(Err::BadInput, "conjugator is not invertible");
    extra_inverses.push_back(*inv);
  }
}

std::size_t WordGroup::dim() const {
  if (!gens.empty()) return gens[0].rows();
  return extra.empty() ? 0 : extra[0].rows();
}

std::vector<char> WordGroup::letters(bool with_extra) const {
  std::vector<char> out;
  for (std::size_t k = 0; k < gens.size(); ++k) out.push_back(static_cast<char>('A' + k));
  for (std::size_t k = 0; k < gens.size(); ++k) out.push_back(static_cast<char>('a' + k));
  if (with_extra)
    for (std::size_t k = 0; k < extra.size(); ++k) out.push_back(static_cast<char>('1' + k));
  return out;
}

const Mat& WordGroup::letter(char c) const {
  if (c >= 'A' && c < 'A' + static_cast<int>(gens.size())) return gens[c - 'A'];
  if (c >= 'a' && c < 'a' + static_cast<int>(gens.size())) return inverses[c - 'a'];
  if (c >= '1' && c < '1' + static_cast<int>(extra.size())) return extra[c - '1'];
  throw Error(Err::BadInput, std::string("unknown letter ") + c);
}

namespace {

bool cancels(char a, char b) {
  return std::isalpha(static_cast<unsigned char>(a)) && std::isalpha(static_cast<unsigned char>(b)) &&
         a != b && std::toupper(static_cast<unsigned char>(a)) == std::toupper(static_cast<unsigned char>(b));
}

}  // namespace

const Mat& WordGroup::letter_inverse(char c) const {
  if (c >= 'A' && c <= 'Z') return letter(static_cast<char>(c - 'A' + 'a'));
  if (c >= 'a' && c <= 'z') return letter(static_cast<char>(c - 'a' + 'A'));
  if (c >= '1' && c < '1' + static_cast<int>(extra.size())) return extra_inverses[c - '1'];
  throw Error(Err::BadInput, std::string("unknown letter ") + c);
}

Mat WordGroup::product(const std::string& word) const {
  Mat m = Mat::identity(dim());
  for (char c : word) m = m * letter(c);
  return m;
}

std::vector<std::string> enumerate_words(const WordGroup& g, std::size_t max_len, bool with_extra) {
  auto ls = g.letters(with_extra);
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (char c : ls) {
        const std::string& w = out[i];
        if (!w.empty() && cancels(w.back(), c)) continue;
        out.push_back(w + c);
      }
    begin = end;
  }
  return out;
}

std::vector<Unipotent> find_unipotents(const WordGroup& g, std::size_t max_len, const std::vector<Mat>& cosets) {
  auto words = enumerate_words(g, max_len, false);
  std::vector<Mat> left = cosets;
  if (left.empty()) left.push_back(Mat::identity(g.dim()));
  std::vector<std::vector<Unipotent>> hits(words.size());
  parallel_for(words.size(), [&](std::size_t i) {
    Mat m = g.product(words[i]);
    for (std::size_t a = 0; a < left.size(); ++a) {
      Mat x = left[a] * m;
      if (!x.is_identity() && is_unipotent(x)) hits[i].push_back({words[i], a, std::move(x)});
    }
  });
  std::vector<Unipotent> out;
  for (auto& h : hits)
    for (auto& u : h) {
      bool dup = false;
      for (auto& v : out)
        if (v.matrix == u.matrix) dup = true;
      if (!dup) out.push_back(std::move(u));
    }
  return out;
}

LieSpan conjugation_span(const WordGroup& g, const std::vector<Mat>& seeds, const SpanOptions& opt) {
  LieSpan span;
  if (seeds.empty()) return span;
  const std::size_t n = seeds[0].rows();
  RowSpace rs(n * n);
  // prefix word applied to a base element; base is a seed or a bracket
  struct Entry {
    std::string word;
    std::string base;
  };
  std::vector<Entry> info;
  auto done = [&] { return opt.target > 0 && span.dimension() >= opt.target; };
  auto add = [&](Mat x, Entry e) {
    if (done() || x.is_zero() || !rs.insert(x.flatten())) return false;
    span.elements.push_back(std::move(x));
    span.witnesses.push_back(e.word + e.base);
    info.push_back(std::move(e));
    return true;
  };
  std::size_t bracketed = 0;  // elements below this index have all pairwise brackets taken
  auto close_brackets = [&] {
    if (!opt.brackets) return;
    while (bracketed < span.dimension() && !done()) {
      std::size_t j = bracketed++;
      for (std::size_t i = 0; i < j && !done(); ++i)
        add(bracket(span.elements[i], span.elements[j]),
            {"", "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]"});
    }
  };

  for (std::size_t k = 0; k < seeds.size(); ++k)
    add(seeds[k], {"", seeds.size() > 1 ? "@" + std::to_string(k + 1) : ""});
  close_brackets();
  std::size_t frontier_begin = 0;
  auto ls = g.letters(opt.use_extra);
  for (std::size_t len = 1; len <= opt.max_word_len && !done(); ++len) {
    std::size_t frontier_end = span.dimension();
    if (frontier_begin == frontier_end) break;  // span is invariant: no longer words help
    struct Job {
      std::size_t elem;
      char letter;
    };
    std::vector<Job> jobs;
    for (std::size_t e = frontier_begin; e < frontier_end; ++e)
      for (char c : ls) {
        const std::string& w = info[e].word;
        if (!w.empty() && cancels(c, w.front())) continue;
        jobs.push_back({e, c});
      }
    std::vector<Mat> conj(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
      const Mat& m = g.letter(jobs[i].letter);
      conj[i] = m * span.elements[jobs[i].elem] * g.letter_inverse(jobs[i].letter);
    });
    for (std::size_t i = 0; i < jobs.size() && !done(); ++i) {
      const Entry& src = info[jobs[i].elem];
      add(std::move(conj[i]), {std::string(1, jobs[i].letter) + src.word, src.base});
    }
    close_brackets();
    frontier_begin = frontier_end;
  }
  return span;
}

std::size_t listed_span_rank(const WordGroup& g, const Mat& seed, const std::vector<std::string>& words) {
  const std::size_t n = seed.rows();
  Mat rows(words.size(), n * n);
  for (std::size_t k = 0; k < words.size(); ++k) {
    Mat m = g.product(words[k]);
    Vec v = (m * seed * *inverse(m)).flatten();
    for (std::size_t j = 0; j < v.size(); ++j) rows(k, j) = v[j];
  }
  return rank(rows);
}

std::string Verdict::summary() const {
  if (upper == 0 && lower == 0) return "trivial monodromy group";
  if (certified) return group_name + ", certified";
  return group_name + " upper bound, not certified (lower " + std::to_string(lower) + ", upper " +
         std::to_string(upper) + ")";
}

Verdict zariski_verdict(const WordGroup& g, const GroupBound& bound, const Mat& omega0, std::size_t max_word_len) {
  Verdict v;
  v.upper = bound.dim;
  v.group_name = bound.name;
  if (g.dim() == 0 || bound.dim == 0) {
    v.certified = true;
    return v;
  }
  // α is only defined up to automorphisms, so the cosets are searched too
  std::vector<Mat> cosets{Mat::identity(g.dim())};
  for (auto& e : g.extra) cosets.push_back(e);
  std::vector<Unipotent> unis;
  for (std::size_t len = 1; len <= std::min<std::size_t>(max_word_len, 2) && unis.empty(); ++len)
    unis = find_unipotents(g, len, cosets);
  std::vector<Mat> seeds;
  for (auto& u : unis) {
    Mat x = unipotent_log(u.matrix);
    if (!infinitesimally_symplectic(x, omega0)) throw std::logic_error("logarithm is not in the symplectic algebra");
    seeds.push_back(std::move(x));
    v.seeds.push_back((u.coset ? std::to_string(u.coset) : std::string()) + u.word);
  }
  SpanOptions opt;
  opt.max_word_len = max_word_len;
  opt.target = bound.dim;
  auto span = conjugation_span(g, seeds, opt);
  v.lower = span.dimension();
  v.witnesses = span.witnesses;
  v.certified = v.lower == v.upper;
  return v;
}

}  // namespace stm
