#include "qaw/skew_laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qaw {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(const Rational& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int power, const Rational& coeff) {
  LaurentPoly f;
  f.add_term(power, coeff);
  return f;
}

LaurentPoly LaurentPoly::qpoch_linear(const Rational& scale, const Rational& base, int n) {
  LaurentPoly out = constant(1);
  Rational factor = scale;
  for (int k = 0; k < n; ++k) {
    LaurentPoly linear = constant(1);
    linear.add_term(1, -factor);
    out = out * linear;
    factor *= base;
  }
  return out;
}

Rational LaurentPoly::coeff(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::rescaled(const Rational& scale) const {
  LaurentPoly out;
  for (const auto& [j, c] : terms_) out.add_term(j, c * pow(scale, j));
  return out;
}

void LaurentPoly::add_term(int power, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [j, c] : rhs.terms_) add_term(j, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [j, c] : rhs.terms_) add_term(j, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
LaurentPoly operator-(LaurentPoly f) { return f *= Rational(-1); }
LaurentPoly operator*(LaurentPoly f, const Rational& s) { return f *= s; }
LaurentPoly operator*(const Rational& s, LaurentPoly f) { return f *= s; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [i, a] : lhs.terms())
    for (const auto& [j, b] : rhs.terms()) out.add_term(i + j, a * b);
  return out;
}

// -------------------------------------------------------------- SkewLaurentOp

SkewLaurentOp::SkewLaurentOp(Rational q) : q_(std::move(q)) {
  if (q_ == 0) throw std::invalid_argument("skew Laurent ring needs q != 0");
}

SkewLaurentOp SkewLaurentOp::identity(const Rational& q) { return term(q, 0, 0, 1); }

SkewLaurentOp SkewLaurentOp::scalar(const Rational& q, const Rational& c) { return term(q, 0, 0, c); }

SkewLaurentOp SkewLaurentOp::z(const Rational& q, int power) { return term(q, power, 0, 1); }

SkewLaurentOp SkewLaurentOp::shift(const Rational& q, int power) { return term(q, 0, power, 1); }

SkewLaurentOp SkewLaurentOp::term(const Rational& q, int z_power, int shift_power, const Rational& coeff) {
  SkewLaurentOp op(q);
  op.add_term(z_power, shift_power, coeff);
  return op;
}

SkewLaurentOp SkewLaurentOp::multiplication(const Rational& q, const LaurentPoly& f) {
  SkewLaurentOp op(q);
  for (const auto& [j, c] : f.terms()) op.add_term(j, 0, c);
  return op;
}

Rational SkewLaurentOp::coeff(int z_power, int shift_power) const {
  auto it = terms_.find({z_power, shift_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void SkewLaurentOp::add_term(int z_power, int shift_power, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{z_power, shift_power}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void require_same_ring(const SkewLaurentOp& lhs, const SkewLaurentOp& rhs) {
  if (lhs.q() != rhs.q())
    throw std::invalid_argument("operators over different rings (q = " + to_string(lhs.q()) + " vs " +
                                to_string(rhs.q()) + ")");
}

SkewLaurentOp& SkewLaurentOp::operator+=(const SkewLaurentOp& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
  return *this;
}

SkewLaurentOp& SkewLaurentOp::operator-=(const SkewLaurentOp& rhs) {
  require_same_ring(*this, rhs);
  for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, -c);
  return *this;
}

SkewLaurentOp& SkewLaurentOp::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

SkewLaurentOp operator+(SkewLaurentOp lhs, const SkewLaurentOp& rhs) { return lhs += rhs; }
SkewLaurentOp operator-(SkewLaurentOp lhs, const SkewLaurentOp& rhs) { return lhs -= rhs; }
SkewLaurentOp operator-(SkewLaurentOp op) { return op *= Rational(-1); }
SkewLaurentOp operator*(SkewLaurentOp op, const Rational& s) { return op *= s; }
SkewLaurentOp operator*(const Rational& s, SkewLaurentOp op) { return op *= s; }

SkewLaurentOp operator+(SkewLaurentOp op, const Rational& s) {
  op.add_term(0, 0, s);
  return op;
}

SkewLaurentOp operator-(SkewLaurentOp op, const Rational& s) {
  op.add_term(0, 0, -s);
  return op;
}

SkewLaurentOp operator*(const SkewLaurentOp& lhs, const SkewLaurentOp& rhs) {
  require_same_ring(lhs, rhs);
  SkewLaurentOp out(lhs.q());
  // (z^{j1} T^{k1})(z^{j2} T^{k2}) = q^{j2 k1} z^{j1+j2} T^{k1+k2}
  std::unordered_map<long, Rational> q_powers;
  auto q_pow = [&](long e) -> const Rational& {
    auto it = q_powers.find(e);
    if (it == q_powers.end()) it = q_powers.emplace(e, pow(lhs.q(), e)).first;
    return it->second;
  };
  for (const auto& [k1, a] : lhs.terms())
    for (const auto& [k2, b] : rhs.terms()) {
      const long e = static_cast<long>(k2.first) * k1.second;
      out.add_term(k1.first + k2.first, k1.second + k2.second, a * b * q_pow(e));
    }
  return out;
}

SkewLaurentOp power(const SkewLaurentOp& op, int n) {
  if (n < 0) throw std::invalid_argument("negative operator power");
  SkewLaurentOp out = SkewLaurentOp::identity(op.q());
  for (int i = 0; i < n; ++i) out = out * op;
  return out;
}

SkewLaurentOp q_commutator(const SkewLaurentOp& a, const SkewLaurentOp& b, const Rational& qq) {
  if (qq == 0) throw std::invalid_argument("q-commutator with zero parameter");
  return qq * (a * b) - (1 / qq) * (b * a);
}

LaurentPoly apply(const SkewLaurentOp& op, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [key, c] : op.terms()) {
    const auto [j, k] = key;
    for (const auto& [p, fc] : f.terms()) out.add_term(j + p, c * fc * pow(op.q(), static_cast<long>(p) * k));
  }
  return out;
}

std::string summarize(const SkewLaurentOp& op, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [key, c] : op.terms()) {
    if (shown == max_terms) {
      os << " ... (" << op.terms().size() << " terms)";
      break;
    }
    if (shown++) os << ", ";
    os << "{j:" << key.first << ",k:" << key.second << ",coeff:\"" << to_string(c) << "\"}";
  }
  return os.str();
}

std::string summarize(const LaurentPoly& f, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [j, c] : f.terms()) {
    if (shown == max_terms) {
      os << " ... (" << f.terms().size() << " terms)";
      break;
    }
    if (shown++) os << ", ";
    os << "{power:" << j << ",coeff:\"" << to_string(c) << "\"}";
  }
  return os.str();
}

}  // namespace qaw
