#pragma once

#include <map>
#include <string>
#include <utility>

#include "qaw/rational.hpp"

namespace qaw {

/// Finite Laurent polynomial sum_j c_j z^j. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(int power, const Rational& coeff = 1);
  /// (scale * z; base)_n expanded in powers of z.
  static LaurentPoly qpoch_linear(const Rational& scale, const Rational& base, int n);

  const Terms& terms() const { return terms_; }
  Rational coeff(int power) const;
  bool is_zero() const { return terms_.empty(); }
  /// Highest power present; throws std::logic_error on the zero polynomial.
  int degree() const;
  /// f(scale * z).
  LaurentPoly rescaled(const Rational& scale) const;

  void add_term(int power, const Rational& coeff);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& s);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly f);
LaurentPoly operator*(LaurentPoly f, const Rational& s);
LaurentPoly operator*(const Rational& s, LaurentPoly f);
LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

/// Element of the skew Laurent ring generated by z^{+-1} and the q-shift
/// T^{+-1}, (T f)(z) = f(q z). Terms are kept in the normal form
/// c * z^j T^k (z-powers left of shift-powers), keyed by (j, k); the defining
/// relation is T^k z^j = q^{jk} z^j T^k.
class SkewLaurentOp {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  /// The zero operator over the ring with shift parameter q (q != 0).
  explicit SkewLaurentOp(Rational q);

  static SkewLaurentOp identity(const Rational& q);
  static SkewLaurentOp scalar(const Rational& q, const Rational& c);
  static SkewLaurentOp z(const Rational& q, int power = 1);
  static SkewLaurentOp shift(const Rational& q, int power = 1);
  static SkewLaurentOp term(const Rational& q, int z_power, int shift_power, const Rational& coeff);
  /// Multiplication by the Laurent polynomial f.
  static SkewLaurentOp multiplication(const Rational& q, const LaurentPoly& f);

  const Rational& q() const { return q_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(int z_power, int shift_power) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(int z_power, int shift_power, const Rational& coeff);

  SkewLaurentOp& operator+=(const SkewLaurentOp& rhs);
  SkewLaurentOp& operator-=(const SkewLaurentOp& rhs);
  SkewLaurentOp& operator*=(const Rational& s);

  friend bool operator==(const SkewLaurentOp&, const SkewLaurentOp&) = default;

 private:
  Rational q_;
  Terms terms_;
};

/// Throws std::invalid_argument when the operands live over different q.
void require_same_ring(const SkewLaurentOp& lhs, const SkewLaurentOp& rhs);

SkewLaurentOp operator+(SkewLaurentOp lhs, const SkewLaurentOp& rhs);
SkewLaurentOp operator-(SkewLaurentOp lhs, const SkewLaurentOp& rhs);
SkewLaurentOp operator-(SkewLaurentOp op);
SkewLaurentOp operator*(SkewLaurentOp op, const Rational& s);
SkewLaurentOp operator*(const Rational& s, SkewLaurentOp op);
/// Composition lhs o rhs.
SkewLaurentOp operator*(const SkewLaurentOp& lhs, const SkewLaurentOp& rhs);
/// op + s * identity.
SkewLaurentOp operator+(SkewLaurentOp op, const Rational& s);
SkewLaurentOp operator-(SkewLaurentOp op, const Rational& s);

inline SkewLaurentOp op_add(const SkewLaurentOp& lhs, const SkewLaurentOp& rhs) { return lhs + rhs; }
inline SkewLaurentOp op_scale(const SkewLaurentOp& op, const Rational& s) { return op * s; }
inline SkewLaurentOp op_mul(const SkewLaurentOp& lhs, const SkewLaurentOp& rhs) { return lhs * rhs; }

/// Non-negative integer power under composition.
SkewLaurentOp power(const SkewLaurentOp& op, int n);

/// qq * A o B - qq^{-1} * B o A. Throws std::invalid_argument for qq = 0.
SkewLaurentOp q_commutator(const SkewLaurentOp& a, const SkewLaurentOp& b, const Rational& qq);

/// z acts by multiplication, T^k sends z^j to q^{jk} z^j.
LaurentPoly apply(const SkewLaurentOp& op, const LaurentPoly& f);

inline bool is_zero(const SkewLaurentOp& op) { return op.is_zero(); }
inline bool is_zero(const LaurentPoly& f) { return f.is_zero(); }

/// Human-readable head of a residual: the first max_terms terms.
std::string summarize(const SkewLaurentOp& op, std::size_t max_terms = 3);
std::string summarize(const LaurentPoly& f, std::size_t max_terms = 3);

}  // namespace qaw
