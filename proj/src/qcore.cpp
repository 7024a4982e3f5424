#include "qaw/qcore.hpp"

#include <array>
#include <cstdio>
#include <random>
#include <sstream>

namespace qaw {

Rational qpoch(const Rational& a, const Rational& qq, int n) {
  Rational out(1);
  Rational power(1);
  for (int k = 0; k < n; ++k) {
    out *= 1 - a * power;
    power *= qq;
  }
  return out;
}

std::string to_string(Profile profile) {
  switch (profile) {
    case Profile::general: return "general";
    case Profile::little: return "little";
    case Profile::big: return "big";
    case Profile::equitable: return "equitable";
  }
  return "general";
}

Profile parse_profile(const std::string& name) {
  if (name == "general") return Profile::general;
  if (name == "little") return Profile::little;
  if (name == "big") return Profile::big;
  if (name == "equitable") return Profile::equitable;
  throw std::invalid_argument("unknown profile: " + name);
}

std::string serialize(const ParamPoint& p) {
  std::ostringstream os;
  os << "profile=" << to_string(p.profile) << ";t=" << p.t << ";u=" << p.u << ";c0=" << p.w.c0
     << ";cbar0=" << p.w.cbar0 << ";c1=" << p.w.c1 << ";cbar1=" << p.w.cbar1 << ";eps0=" << p.w.eps0
     << ";eps1=" << p.w.eps1 << ";mu0=" << p.w.mu0 << ";mu1=" << p.w.mu1 << ";a=" << p.a << ";b=" << p.b
     << ";c=" << p.c << ";ja=" << p.jacobi_a << ";jb=" << p.jacobi_b << ";jc=" << p.jacobi_c;
  return os.str();
}

std::string digest(const ParamPoint& p) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : serialize(p)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ParamPoint with_little_parameters(ParamPoint p, const Rational& ja, const Rational& jb) {
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  p.profile = Profile::little;
  p.jacobi_a = ja;
  p.jacobi_b = jb;
  p.jacobi_c = 0;
  p.w.c0 = 0;
  p.w.cbar1 = 0;
  p.w.mu0 = 0;
  p.w.eps0 = -jb * p.w.cbar0 * p.qpow(4, 1) / d;
  p.w.c1 = -p.w.eps1 * d * p.qpow(0, -1);
  p.w.mu1 = ja * p.w.c1 * (q * q + 1) * p.qpow(0, 3) / d;
  return p;
}

ParamPoint with_big_parameters(ParamPoint p, const Rational& ja, const Rational& jb, const Rational& jc,
                               bool rescaled) {
  if (ja + jc == 0) throw DegenerateError("big parameters with a + c = 0");
  if (jb == 0) throw DegenerateError("big parameters with b = 0");
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  const Rational sum = ja + jc;
  p.profile = Profile::big;
  p.jacobi_a = ja;
  p.jacobi_b = jb;
  p.jacobi_c = jc;
  p.w.c0 = 0;
  p.w.mu0 = 0;
  p.w.mu1 = -p.w.eps1 * ja * jb * p.qpow(0, 2) * (q * q + 1) / sum;
  if (rescaled) {
    p.w.c1 = -p.w.eps1 * jb * d * p.qpow(0, -1) / sum;
    p.w.cbar1 = p.w.eps1 * ja * jc * p.qpow(0, 1) * d / (jb * sum);
    p.w.eps0 = -p.w.cbar0 * jb * p.qpow(4, 1) / d;
  } else {
    p.w.c1 = -p.w.eps1 * d * p.qpow(-4, -1) / sum;
    p.w.cbar1 = p.w.eps1 * ja * jc * p.qpow(4, 1) * d / sum;
    p.w.eps0 = -p.w.cbar0 * p.qpow(0, 1) / d;
  }
  return p;
}

namespace {

void require_nonzero(std::vector<std::string>& out, const Rational& x, const char* name) {
  if (x == 0) out.emplace_back(name);
}

// 1 - x q^{2+2k} != 0 for k = 0..n_max: the factors of (q^2 x; q^2)_{n_max+1}.
void require_qpoch_nonzero(std::vector<std::string>& out, const Rational& x, const Rational& q, int n_max,
                           const std::string& name) {
  const Rational q2 = q * q;
  Rational power = q2;
  for (int k = 0; k <= n_max; ++k) {
    if (x * power == 1) {
      out.push_back("(q^2 " + name + "; q^2)_" + std::to_string(k + 1) + " = 0");
      return;
    }
    power *= q2;
  }
}

}  // namespace

std::vector<std::string> degeneracies(const ParamPoint& p, int n_max) {
  std::vector<std::string> out;
  if (p.t == 0 || p.t == 1 || p.t == -1) {
    out.emplace_back("t in {0, 1, -1}");
    return out;
  }
  if (p.u == 0) {
    out.emplace_back("u = 0");
    return out;
  }
  const Rational q = p.q();
  const Rational u2 = p.u * p.u;
  for (int m = -2 * n_max; m <= 2 * n_max; ++m) {
    if (u2 == pow(q, m)) {
      out.push_back("u^2 = q^" + std::to_string(m));
      break;
    }
  }
  require_nonzero(out, p.a, "a = 0");
  require_nonzero(out, p.b, "b = 0");
  require_nonzero(out, p.c, "c = 0");

  const WScalars& w = p.w;
  switch (p.profile) {
    case Profile::general:
    case Profile::equitable:
      break;
    case Profile::little: {
      require_nonzero(out, w.cbar0, "cbar0 = 0");
      require_nonzero(out, w.c1, "c1 = 0 (g5 = 0)");
      require_nonzero(out, w.mu1, "mu1 = 0 (g3 = 0)");
      require_nonzero(out, w.eps0, "eps0 = 0 (kappa = 0)");
      require_nonzero(out, p.jacobi_a, "jacobi a = 0");
      require_nonzero(out, p.jacobi_b, "jacobi b = 0");
      require_qpoch_nonzero(out, p.jacobi_a, q, n_max, "a");
      require_qpoch_nonzero(out, p.jacobi_b, q, n_max, "b");
      // The tridiagonal connection to big polynomials runs at the same point
      // moved to jacobi a = q^2 (mu1 scales with a) and needs g~2 != 0 and
      // q^{-2nu-3} g~4 - q^{2nu+3} g~5 != 0 there; g~2 = cbar0 eps1 (q^2 - q^-2) q.
      require_nonzero(out, w.eps1, "eps1 = 0 (g~2 = 0)");
      const Rational d = q - 1 / q;
      const Rational mu1_constrained = p.jacobi_a == 0 ? Rational(0) : w.mu1 * q * q / p.jacobi_a;
      const Rational g4 = mu1_constrained * w.eps0 * d - w.c0 * w.cbar1 * (q + 1 / q) / (q * d);
      const Rational g5 = -w.c1 * w.cbar0 * q * (q + 1 / q) / d + w.mu0 * w.eps1 * d;
      if (p.qpow(-6, -2) * g4 == p.qpow(6, 2) * g5) out.emplace_back("q^{-2nu-3} g4 = q^{2nu+3} g5");
      break;
    }
    case Profile::big:
      require_nonzero(out, w.cbar0, "cbar0 = 0");
      require_nonzero(out, w.eps1, "eps1 = 0");
      require_nonzero(out, w.c1, "c1 = 0 (g5 = 0)");
      require_nonzero(out, w.eps0, "eps0 = 0 (kappa = 0)");
      require_nonzero(out, p.jacobi_a, "jacobi a = 0");
      require_nonzero(out, p.jacobi_b, "jacobi b = 0");
      require_nonzero(out, p.jacobi_a + p.jacobi_c, "jacobi a + c = 0");
      require_nonzero(out, p.jacobi_b + p.jacobi_c, "jacobi b + c = 0");
      require_qpoch_nonzero(out, p.jacobi_a, q, n_max, "a");
      require_qpoch_nonzero(out, p.jacobi_b, q, n_max, "b");
      require_qpoch_nonzero(out, p.jacobi_c, q, n_max, "c");
      break;
  }
  return out;
}

bool screen_degeneracies(const ParamPoint& p, int n_max) { return degeneracies(p, n_max).empty(); }

namespace {

// Raw mt19937_64 output is fixed by the standard; distributions are not, so
// values are mapped by hand to keep points identical across toolchains.
class PointRng {
 public:
  explicit PointRng(std::int64_t seed) : engine_(static_cast<std::uint64_t>(seed) ^ 0x9e3779b97f4a7c15ULL) {}

  Rational nonzero() {
    for (;;) {
      const long num = static_cast<long>(engine_() % 25) - 12;
      const long den = static_cast<long>(engine_() % 12) + 1;
      if (num != 0) return make_rational(num, den);
    }
  }

  Rational away_from_unit() {
    for (;;) {
      Rational x = nonzero();
      if (x != 1 && x != -1) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

ParamPoint sample_point(std::int64_t seed, Profile profile, int n_max) {
  constexpr int kMaxDraws = 200;
  PointRng rng(seed);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    ParamPoint p;
    p.seed = seed;
    p.profile = profile;
    p.t = rng.away_from_unit();
    p.u = rng.away_from_unit();
    WScalars& w = p.w;
    w.c0 = rng.nonzero();
    w.cbar0 = rng.nonzero();
    w.c1 = rng.nonzero();
    w.cbar1 = rng.nonzero();
    w.eps0 = rng.nonzero();
    w.eps1 = rng.nonzero();
    w.mu0 = rng.nonzero();
    w.mu1 = rng.nonzero();
    p.a = rng.nonzero();
    p.b = rng.nonzero();
    p.c = rng.nonzero();
    p.jacobi_a = rng.nonzero();
    p.jacobi_b = rng.nonzero();
    p.jacobi_c = rng.nonzero();
    try {
      if (profile == Profile::little) {
        p = with_little_parameters(p, p.jacobi_a, p.jacobi_b);
      } else if (profile == Profile::big) {
        p = with_big_parameters(p, p.jacobi_a, p.jacobi_b, p.jacobi_c, true);
      }
    } catch (const DegenerateError&) {
      continue;
    }
    p.seed = seed;
    if (screen_degeneracies(p, n_max)) return p;
  }
  throw std::runtime_error("sample_point: no admissible point after " + std::to_string(kMaxDraws) +
                           " draws for seed " + std::to_string(seed));
}

}  // namespace qaw
