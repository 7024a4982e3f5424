#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaw/rational.hpp"

namespace qaw {

/// (a; qq)_n = prod_{k<n} (1 - a qq^k). The empty product (n = 0) is 1.
Rational qpoch(const Rational& a, const Rational& qq, int n);

/// Thrown when a formula would divide by zero at the chosen parameter point.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Profile { general, little, big, equitable };

std::string to_string(Profile profile);
Profile parse_profile(const std::string& name);

/// Scalars of the twisted primitive elements W0 and W1.
struct WScalars {
  Rational c0, cbar0, c1, cbar1;
  Rational eps0, eps1, mu0, mu1;
};

/// A full assignment of rational values to every free parameter.
///
/// q = t^2, so q^{1/2} = t is exact; q^nu is represented by u. Every
/// half-integer power of q and integer power of q^nu is therefore rational.
struct ParamPoint {
  Rational t = 2;
  Rational u = 3;
  WScalars w;
  // Equitable scalars a, b, c.
  Rational a = 1, b = 1, c = 1;
  // Polynomial parameters (fraktur a, b, c).
  Rational jacobi_a = 0, jacobi_b = 0, jacobi_c = 0;
  Profile profile = Profile::general;
  std::int64_t seed = 0;

  Rational q() const { return t * t; }
  /// q^{half/2} * (q^nu)^nu_steps.
  Rational qpow(long half, long nu_steps = 0) const { return pow(t, half) * pow(u, nu_steps); }
};

/// Canonical one-line serialization; the basis of the report digest.
std::string serialize(const ParamPoint& p);
/// 16 hex digits, FNV-1a over serialize(p).
std::string digest(const ParamPoint& p);

/// Little profile (c0 = cbar1 = mu0 = 0). Keeps t, u, cbar0, eps1 and derives
/// eps0, c1, mu1 so that the little q-Jacobi identification holds with the
/// given (a, b); kappa = q^2 b follows.
ParamPoint with_little_parameters(ParamPoint p, const Rational& ja, const Rational& jb);

/// Big profile (c0 = mu0 = 0). Keeps t, u, cbar0, eps1 and derives c1, cbar1,
/// eps0, mu1. rescaled = true matches the identification for P_n(q^2 b z)
/// (kappa = q^2 b); rescaled = false matches P_n(z) (kappa = 1).
/// Throws DegenerateError when a + c = 0 or b = 0.
ParamPoint with_big_parameters(ParamPoint p, const Rational& ja, const Rational& jb, const Rational& jc,
                               bool rescaled = true);

/// Names of every vanishing denominator (or violated invariant) at p, empty
/// when the point is usable for degrees up to n_max.
std::vector<std::string> degeneracies(const ParamPoint& p, int n_max);
bool screen_degeneracies(const ParamPoint& p, int n_max);

/// Deterministic point for (seed, profile), re-drawn from the same stream
/// until it passes the screen. Throws std::runtime_error after too many draws.
ParamPoint sample_point(std::int64_t seed, Profile profile, int n_max = 10);

}  // namespace qaw
