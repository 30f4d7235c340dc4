#include "hecke/multipliers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace hecke {

HeckeElement radial_multiplier(const Rational& r, const HeckeElement& a) {
  if (r <= Rational(0) || r > Rational(1))
    throw std::invalid_argument("radial parameter must be in (0, 1]");
  HeckeElement out;
  Rational pw(1);
  std::map<int, Rational> powers{{0, Rational(1)}};
  for (const auto& [w, c] : a.terms()) {
    auto it = powers.find(w.size());
    if (it == powers.end()) {
      Rational v(1);
      for (int i = 0; i < w.size(); ++i) v *= r;
      it = powers.emplace(w.size(), v).first;
    }
    out.add(w, PolyScalar(it->second) * c);
  }
  return out;
}

HeckeElement wordlength_projection(int n, const HeckeElement& a) {
  if (n < 0) throw std::invalid_argument("wordlength cut requires n >= 0");
  HeckeElement out;
  for (const auto& [w, c] : a.terms())
    if (w.size() <= n) out.add(w, c);
  return out;
}

HeckeElement wordlength_component(int n, const HeckeElement& a) {
  HeckeElement out;
  for (const auto& [w, c] : a.terms())
    if (w.size() == n) out.add(w, c);
  return out;
}

bool kraus_check(double r, double q) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("kraus_check requires 0 < r < 1");
  double p = (q - 1.0) / std::sqrt(q);
  Eigen::Matrix2d A, B, C, Ts;
  A << std::sqrt(1.0 - r), 0, 0, 0;
  B << 0, std::sqrt(1.0 - r), 0, 0;
  C << std::sqrt(r), 0, 0, std::sqrt(r);
  Ts << 0, 1, 1, p;
  auto channel = [&](const Eigen::Matrix2d& x) -> Eigen::Matrix2d {
    return A.transpose() * x * A + B.transpose() * x * B + C.transpose() * x * C;
  };
  const double tol = 1e-12;
  Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  if ((channel(id) - id).cwiseAbs().maxCoeff() > tol) return false;
  if ((channel(Ts) - r * Ts).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

bool kraus_check(double r) {
  for (double q : {0.25, 0.5, 1.0, 2.0, 4.0})
    if (!kraus_check(r, q)) return false;
  return true;
}

std::int64_t xi_pairing(const SignedSetVector& a, const SignedSetVector& b) {
  Clique common = a.support & b.support;
  if (a.sign == b.sign) return std::int64_t(1) << clique_size(common);
  return common == 0 ? 1 : 0;
}

namespace {

std::uint64_t beta_key(const Word& gw, Clique lam_gx, Clique lambda, int a) {
  std::uint64_t h = WordHash{}(gw);
  h = h * 1099511628211ull ^ lam_gx;
  h = h * 1099511628211ull ^ (std::uint64_t(lambda) << 20);
  h = h * 1099511628211ull ^ (std::uint64_t(a + 64) << 40);
  return h;
}

// F_{Lambda,a}(v) = [2|v(1,Lambda)| + |v(2,Lambda)| <= a].
bool weight_indicator(const Word& v, Clique lambda, int a, const CoxeterGraph& g) {
  int v2 = clique_size(suffix_clique(v, g) & ~lambda);
  int v1 = v.size() - v2;
  return 2 * v1 + v2 <= a;
}

long long beta_plus_impl(const Word& gw, const Word& x, Clique lambda, int a,
                         const CoxeterGraph& g) {
  Clique lam = lambda_gx(gw, x, g);
  long long acc = 0;
  Clique sub = 0;
  while (true) {
    Word v = multiply(gw, clique_word(sub, g), g);
    long long sgn = (clique_size(sub) % 2 == 0) ? 1 : -1;
    if (weight_indicator(v, lambda, a, g)) acc += sgn;
    if (sub == lam) break;
    sub = (sub - lam) & lam;
  }
  return acc;
}

}  // namespace

long long beta_plus(const Word& gw, const Word& x, Clique lambda, int a, const CoxeterGraph& g,
                    BetaCache* cache) {
  if (!cache) return beta_plus_impl(gw, x, lambda, a, g);
  std::uint64_t key = beta_key(gw, lambda_gx(gw, x, g), lambda, a);
  auto it = cache->map.find(key);
  if (it != cache->map.end()) return it->second;
  long long v = beta_plus_impl(gw, x, lambda, a, g);
  cache->map.emplace(key, v);
  return v;
}

long long beta_minus(const Word& gw, const Word& x, Clique lambda, int a, const CoxeterGraph& g,
                     BetaCache* cache) {
  return beta_plus(gw, x, lambda, a, g, cache) != 0 ? 1 : 0;
}

DilationVector dilation_apply(DilationSign sign, int a, const Word& x, const CoxeterGraph& g,
                              BetaCache* cache) {
  if (a < 0) throw std::invalid_argument("dilation index must be nonnegative");
  DilationVector out;
  int sgn = sign == DilationSign::Plus ? +1 : -1;
  for (const Word& gw : prefix_set(x, g)) {
    Word rest = multiply(inverse(gw, g), x, g);
    Clique g2 = suffix_clique(gw, g);
    Clique sub = 0;
    while (true) {
      long long beta;
      if (sign == DilationSign::Plus)
        beta = beta_plus(gw, x, sub, a, g, cache);
      else
        beta = beta_minus(gw, x, sub, a, g, cache);
      if (beta != 0) {
        out.terms.push_back(DilationTerm{gw, rest, clique_word(g2 & ~sub, g),
                                         SignedSetVector{sub, sgn}, beta});
      }
      if (sub == g2) break;
      sub = (sub - g2) & g2;
    }
  }
  return out;
}

std::int64_t dilation_pairing(const DilationVector& a, const DilationVector& b) {
  std::int64_t acc = 0;
  for (const DilationTerm& s : a.terms)
    for (const DilationTerm& t : b.terms) {
      if (s.leg_g != t.leg_g || s.leg_h != t.leg_h || s.leg_d != t.leg_d) continue;
      acc += s.coeff * t.coeff * xi_pairing(s.xi, t.xi);
    }
  return acc;
}

PolyScalar sigma_entry(const OperatorTerm& term, int a, int b, const Word& x, const Word& y,
                       const CoxeterGraph& g, BetaCache* cache) {
  DilationVector up = dilation_apply(DilationSign::Plus, b, x, g, cache);
  DilationVector um = dilation_apply(DilationSign::Minus, a, y, g, cache);
  // The operator acts on the first tensor leg.
  DilationVector moved;
  for (const DilationTerm& t : up.terms) {
    if (auto img = apply_term(OperatorTerm{term.creator, term.diagonal, term.annihilator,
                                           PolyScalar(1)},
                              t.leg_g, g)) {
      DilationTerm u = t;
      u.leg_g = *img;
      moved.terms.push_back(std::move(u));
    }
  }
  return term.weight * PolyScalar(dilation_pairing(moved, um));
}

std::vector<OperatorTerm> phi_component(int i, const std::vector<OperatorTerm>& terms) {
  std::vector<OperatorTerm> out;
  for (const OperatorTerm& t : terms)
    if (t.annihilator.size() - t.creator.size() == i) out.push_back(t);
  return out;
}

std::vector<OperatorTerm> rho_component(int k, const std::vector<OperatorTerm>& terms) {
  std::vector<OperatorTerm> out;
  for (const OperatorTerm& t : terms)
    if (t.creator.size() + t.annihilator.size() == k) out.push_back(t);
  return out;
}

bool delta_identity_check(const Word& w, const CoxeterGraph& g, int N) {
  for (const Word& x : enumerate_ball(g, N)) {
    long long rhs = 0;
    if (is_prefix(w, x, g)) {
      for (const Word& v : interval_set(w, x, g)) {
        int d = v.size() - w.size();
        rhs += (d % 2 == 0) ? 1 : -1;
      }
    }
    long long lhs = (x == w) ? 1 : 0;
    if (lhs != rhs) return false;
  }
  return true;
}

bool aux_sum_check(const Word& x, const Word& u_prime, const Word& u_doubleprime, const Word& v,
                   int a, const CoxeterGraph& g) {
  // u'' must annihilate x fully, then u' create fully.
  Word ux = multiply(u_doubleprime, x, g);
  if (ux.size() != x.size() - u_doubleprime.size())
    throw std::invalid_argument("aux_sum_check: u'' does not annihilate x fully");
  Word uux = multiply(u_prime, ux, g);
  if (uux.size() != ux.size() + u_prime.size())
    throw std::invalid_argument("aux_sum_check: u' does not create fully on u''x");
  if (!is_prefix(inverse(u_doubleprime, g), v, g) || !is_prefix(v, x, g))
    throw std::invalid_argument("aux_sum_check: requires (u'')^-1 <= v <= x");

  Word w = multiply(u_prime, u_doubleprime, g);
  int shift = 2 * u_prime.size() - 2 * u_doubleprime.size();
  long long lhs = 0;
  for (const Word& gw : prefix_set(x, g)) {
    if (!is_prefix(v, gw, g)) continue;
    Word hw = multiply(w, gw, g);
    Clique sg = suffix_clique(gw, g);
    Clique sh = suffix_clique(hw, g);
    lhs += beta_plus(gw, x, sg & ~sh, a, g) * beta_minus(hw, uux, sh & ~sg, a + shift, g);
  }
  Clique sv = suffix_clique(v, g);
  Clique svw = suffix_clique(multiply(w, v, g), g);
  long long rhs = weight_indicator(v, sv & ~svw, a, g) ? 1 : 0;
  return lhs == rhs;
}

namespace {

// Left side of the cutdown identity applied to delta_x, as a map y -> value.
// Entries are graded by i = |x| - |y|; the grade fixes the dilation indices.
std::map<Word, PolyScalar> cutdown_lhs(const std::vector<OperatorTerm>& terms, int n,
                                       const Word& x, const CoxeterGraph& g, BetaCache* cache) {
  std::map<Word, PolyScalar> out;
  std::vector<std::pair<Word, Word>> prefixes;  // (g, g^-1 x)
  for (const Word& gw : prefix_set(x, g))
    prefixes.emplace_back(gw, multiply(inverse(gw, g), x, g));
  for (const OperatorTerm& term : terms) {
    for (const auto& [gw, rest] : prefixes) {
      Word mid = multiply(term.annihilator, gw, g);
      if (!is_prefix(term.diagonal, mid, g)) continue;
      Word hw = multiply(term.creator, mid, g);
      int grade = gw.size() - hw.size();
      if (grade < -n || grade > n) continue;
      Word y = multiply(hw, rest, g);
      if (!is_prefix(hw, y, g)) continue;  // h <= y with h^-1 y = g^-1 x
      Clique sg = suffix_clique(gw, g);
      Clique sh = suffix_clique(hw, g);
      long long bp = beta_plus(gw, x, sg & ~sh, n + grade, g, cache);
      if (bp == 0) continue;
      long long bm = beta_minus(hw, y, sh & ~sg, n - grade, g, cache);
      if (bm == 0) continue;
      PolyScalar c = term.weight * PolyScalar(bp * bm);
      auto it = out.find(y);
      if (it == out.end()) {
        out.emplace(y, std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

bool cutdown_identity_check(int n, const Word& w, const CoxeterGraph& g, int N) {
  BetaCache cache;
  std::vector<OperatorTerm> terms = t_expansion(w, g);
  HeckeElement tw = HeckeElement::basis(w);
  for (const Word& x : enumerate_ball(g, N)) {
    std::map<Word, PolyScalar> lhs = cutdown_lhs(terms, n, x, g, &cache);
    std::map<Word, PolyScalar> rhs;
    if (w.size() <= n) {
      HeckeElement img = hecke_multiply(tw, HeckeElement::basis(x), g);
      for (const auto& [y, c] : img.terms()) rhs.emplace(y, c);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool cutdown_identity_check(int n, const CoxeterGraph& g, int N) {
  for (const Word& w : enumerate_ball(g, 2 * n + 2))
    if (!cutdown_identity_check(n, w, g, N)) return false;
  return true;
}

TruncatedMatrix build_truncated(const std::vector<OperatorTerm>& terms, const CoxeterGraph& g,
                                int N, double q) {
  TruncatedMatrix m;
  m.cols = enumerate_ball(g, N);
  std::map<Word, int> row_index;
  auto intern_row = [&](const Word& w) {
    auto it = row_index.find(w);
    if (it != row_index.end()) return it->second;
    int id = static_cast<int>(m.rows.size());
    row_index.emplace(w, id);
    m.rows.push_back(w);
    return id;
  };
  for (const Word& w : m.cols) intern_row(w);
  std::vector<std::map<int, double>> sparse(m.cols.size());
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    for (const OperatorTerm& t : terms)
      if (auto img = apply_term(t, m.cols[c], g))
        sparse[c][intern_row(*img)] += t.weight.eval_at_q(q);
  m.entries.assign(m.rows.size(), std::vector<double>(m.cols.size(), 0.0));
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    for (const auto& [r, v] : sparse[c]) m.entries[r][c] = v;
  return m;
}

double operator_norm_lower(const std::vector<OperatorTerm>& terms, const CoxeterGraph& g, int N,
                           double q, double tol, int max_iter) {
  TruncatedMatrix tm = build_truncated(terms, g, N, q);
  int rows = static_cast<int>(tm.rows.size());
  int cols = static_cast<int>(tm.cols.size());
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = tm.entries[r][c];
  Eigen::VectorXd v = Eigen::VectorXd::Ones(cols).normalized();
  double prev = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd u = m.transpose() * (m * v);
    double rayleigh = v.dot(u);  // = ||Mv||^2, a certified lower bound for sigma_max^2
    double norm = u.norm();
    if (norm == 0.0) return 0.0;
    v = u / norm;
    double cur = std::sqrt(rayleigh);
    if (it > 0 && std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw std::runtime_error("operator_norm_lower: power iteration did not settle");
}

std::vector<double> ccap_convergence_demo(const CoxeterGraph& g, const HeckeElement& a,
                                          const std::vector<std::pair<Rational, int>>& schedule,
                                          double q) {
  (void)g;
  std::vector<double> out;
  for (const auto& [r, n] : schedule) {
    HeckeElement approx = wordlength_projection(n, radial_multiplier(r, a));
    out.push_back((approx - a).gns_norm(q));
  }
  return out;
}

}  // namespace hecke
