#include "hecke/poly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hecke {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rational parse_rational(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

PolyScalar::PolyScalar(long long constant) : PolyScalar(Rational(constant)) {}

PolyScalar::PolyScalar(const Rational& constant) {
  if (constant != Rational(0)) coeff_.push_back(constant);
}

PolyScalar PolyScalar::monomial(int degree, const Rational& c) {
  PolyScalar out;
  if (c == Rational(0)) return out;
  out.coeff_.assign(degree + 1, Rational(0));
  out.coeff_[degree] = c;
  return out;
}

PolyScalar PolyScalar::p_power(int degree) { return monomial(degree); }

Rational PolyScalar::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeff_.size())) return Rational(0);
  return coeff_[k];
}

void PolyScalar::trim() {
  while (!coeff_.empty() && coeff_.back() == Rational(0)) coeff_.pop_back();
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
  trim();
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
  trim();
  return *this;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& o) {
  if (is_zero() || o.is_zero()) {
    coeff_.clear();
    return *this;
  }
  std::vector<Rational> out(coeff_.size() + o.coeff_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == Rational(0)) continue;
    for (std::size_t j = 0; j < o.coeff_.size(); ++j) out[i + j] += coeff_[i] * o.coeff_[j];
  }
  coeff_ = std::move(out);
  trim();
  return *this;
}

PolyScalar PolyScalar::operator-() const {
  PolyScalar out = *this;
  for (auto& c : out.coeff_) c = -c;
  return out;
}

double PolyScalar::eval_at_q(double q) const {
  double p = (q - 1.0) / std::sqrt(q);
  double acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * p + to_double(coeff_[k]);
  return acc;
}

std::string PolyScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == Rational(0)) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = coeff_[k] == Rational(1) && k > 0;
    if (!unit) os << to_string(coeff_[k]);
    if (k >= 1) {
      if (!unit) os << ' ';
      os << 'p';
      if (k >= 2) os << '^' << k;
    }
  }
  return os.str();
}

PolyScalar PolyScalar::parse(const std::string& s) {
  PolyScalar out;
  std::istringstream is(s);
  std::string tok;
  // Terms are separated by "+"; each term is [rational] ["p"["^"k]].
  std::vector<std::string> term;
  auto flush = [&]() {
    if (term.empty()) return;
    Rational c(1);
    int deg = 0;
    std::size_t i = 0;
    if (term[i] != "p" && term[i].rfind("p^", 0) != 0) {
      c = parse_rational(term[i]);
      ++i;
    }
    if (i < term.size()) {
      const std::string& t = term[i];
      if (t == "p") {
        deg = 1;
      } else if (t.rfind("p^", 0) == 0) {
        deg = std::stoi(t.substr(2));
      } else {
        throw std::invalid_argument("bad polynomial token: '" + t + "'");
      }
      ++i;
    }
    if (i != term.size()) throw std::invalid_argument("bad polynomial term");
    out += monomial(deg, c);
    term.clear();
  };
  while (is >> tok) {
    if (tok == "+") {
      flush();
    } else {
      term.push_back(tok);
    }
  }
  flush();
  return out;
}

}  // namespace hecke
