#include "qaw/tridiag.hpp"

#include "qaw/qjacobi.hpp"

namespace qaw {

namespace {

Rational require_nonzero(const Rational& x, const char* what) {
  if (x == 0) throw DegenerateError(std::string("vanishing denominator: ") + what);
  return x;
}

std::string coeff_mismatch(const char* name, const Rational& got, const Rational& want) {
  auto r = residual_of(got, want);
  return r.empty() ? r : std::string(name) + ": " + r;
}

}  // namespace

TridiagCoeffs sol_a_from_b(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational den = q * q - 1 / (q * q);
  return TridiagCoeffs{
      .alpha = -q * (p.qpow(3, 1) * a * b - p.qpow(-3, -1) / c) / den,
      .beta = (p.qpow(1, 1) * a * b - p.qpow(3, -1) / c) / den,
      .gamma = b / c * p.qpow(3, 1) + a * p.qpow(1, -1),
      .gamma_prime = std::nullopt,
      .delta = (p.qpow(2, 2) * a + 1 / (p.qpow(2, 2) * a) + b * c + 1 / (b * c)) / (q + 1 / q),
  };
}

TridiagCoeffs sol_b_from_a(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational den = q * q - 1 / (q * q);
  return TridiagCoeffs{
      .alpha = -(p.qpow(3, 1) * c - p.qpow(-3, -1) / (a * b)) / (q * den),
      .beta = (p.qpow(-3, 1) * c - p.qpow(-1, -1) / (a * b)) / den,
      .gamma = p.qpow(-1, 1) / b + c / a * p.qpow(-3, -1),
      .gamma_prime = std::nullopt,
      .delta = (p.qpow(2, 2) * b + 1 / (p.qpow(2, 2) * b) + a * c + 1 / (a * c)) / (q + 1 / q),
  };
}

SkewLaurentOp tridiag_combination(const SkewLaurentOp& op, const SkewLaurentOp& x, const TridiagCoeffs& k) {
  return k.alpha * (x * op) + k.beta * (op * x) + k.gamma * x + k.delta;
}

GCoefficients big_table_from_little(const GCoefficients& tg, const Rational& beta, const Rational& gamma,
                                    const Rational& delta, const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  GCoefficients g{};
  g.g1 = -beta * q * q * d * p.qpow(-2, 1) * tg.g2;
  g.g2 = -beta * q * q * d * p.qpow(0, 1) * tg.g5 + gamma * tg.g2;
  g.g3 = beta / (q * q) * d * p.qpow(0, -1) * tg.g4 + gamma * tg.g3;
  g.g2p = 0;
  g.g3p = 0;
  g.g4 = gamma * tg.g4;
  g.g5 = gamma * tg.g5;
  g.g6 = gamma * tg.g6 + delta;
  return g;
}

TridiagCoeffs sol_big_from_little(const GCoefficients& g, const GCoefficients& tg, const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  const Rational den =
      require_nonzero(p.qpow(-6, -2) * tg.g4 - p.qpow(6, 2) * tg.g5, "q^{-2nu-3} tg4 - q^{2nu+3} tg5");
  require_nonzero(tg.g2, "tg2");
  const Rational mix = p.qpow(2, 1) * g.g2 + p.qpow(-2, -1) * g.g3;
  TridiagCoeffs k;
  k.alpha = 0;
  k.beta = mix / (d * den);
  k.gamma = p.qpow(-2, -1) * (p.qpow(4, 1) * g.g3 * tg.g5 + p.qpow(-4, -1) * tg.g4 * g.g2) / (tg.g2 * den);
  k.gamma_prime = -(p.qpow(-4, -2) * tg.g4 + p.qpow(4, 2) * tg.g5 + tg.g6) * mix / (d * den);
  k.delta = g.g6 - k.gamma * tg.g6;
  return k;
}

SkewLaurentOp big_from_little_rhs(const SkewLaurentOp& tg1, const TridiagCoeffs& k, const ParamPoint& p) {
  const auto zinv = SkewLaurentOp::z(p.q(), -1);
  return k.alpha * (zinv * tg1) + k.beta * (tg1 * zinv) + k.gamma * tg1 + k.gamma_prime.value_or(0) * zinv +
         k.delta;
}

ParamPoint constrained_little_point(const ParamPoint& p) {
  return with_little_parameters(p, p.q() * p.q(), p.jacobi_b);
}

bool satisfies_constraint(const GCoefficients& tg, const ParamPoint& p) {
  return tg.g1 == 0 && tg.g2p == 0 && tg.g3p == 0 && tg.g3 == -p.qpow(4, 2) * tg.g2;
}

VerificationReport tridiag_a_from_b(const ParamPoint& p) { return tridiag_a_from_b(p, sol_a_from_b(p)); }

VerificationReport tridiag_a_from_b(const ParamPoint& p, const TridiagCoeffs& k) {
  return run_check("tridiag.a_from_b", "A as a tridiagonalization of B", p, [&] {
    const auto abc = equitable_abc(p);
    return residual_of(abc.a - tridiag_combination(abc.b, SkewLaurentOp::z(p.q(), 1), k));
  });
}

VerificationReport tridiag_b_from_a(const ParamPoint& p) {
  return run_check("tridiag.b_from_a", "B recovered from A", p, [&] {
    const auto abc = equitable_abc(p);
    return residual_of(abc.b - tridiag_combination(abc.a, SkewLaurentOp::z(p.q(), -1), sol_b_from_a(p)));
  });
}

VerificationReport tridiag_round_trip(const ParamPoint& p) {
  return run_check("tridiag.round_trip", "composition of both tridiagonalizations", p, [&] {
    const auto abc = equitable_abc(p);
    const auto b_from_a = tridiag_combination(abc.a, SkewLaurentOp::z(p.q(), -1), sol_b_from_a(p));
    return residual_of(abc.a - tridiag_combination(b_from_a, SkewLaurentOp::z(p.q(), 1), sol_a_from_b(p)));
  });
}

VerificationReport big_from_little(const ParamPoint& p, const GCoefficients& tg) {
  return run_check("tridiag.big_from_little", "G1 as a tridiagonalization of G~1", p, [&] {
    if (!satisfies_constraint(tg, p)) return std::string("constraint tg3 = -q^{2nu+2} tg2 violated");
    const GCoefficients g = big_table_from_little(tg, p.a, p.b, p.c, p);
    const TridiagCoeffs k = sol_big_from_little(g, tg, p);
    for (auto r : {coeff_mismatch("beta", k.beta, p.a), coeff_mismatch("gamma", k.gamma, p.b),
                   coeff_mismatch("delta", k.delta, p.c)})
      if (!r.empty()) return r;
    const auto ch = chevalley(p);
    return residual_of(g_operator(g, ch) - big_from_little_rhs(g_operator(tg, ch), k, p));
  });
}

VerificationReport constraint_forces_a(const ParamPoint& p) {
  return run_check("tridiag.constraint_forces_a", "constraint implies jacobi a = q^2", p, [&] {
    const GCoefficients tg = g_coeffs(p);
    if (!satisfies_constraint(tg, p)) return std::string("constraint tg3 = -q^{2nu+2} tg2 violated");
    return residual_of(little_dictionary(p).a, p.q() * p.q());
  });
}

VerificationReport alpha_term_breaks(const ParamPoint& p, const GCoefficients& tg) {
  return run_check("tridiag.alpha_term_breaks", "alpha = 0 in the G1 tridiagonalization", p, [&] {
    const GCoefficients g = big_table_from_little(tg, p.a, p.b, p.c, p);
    TridiagCoeffs k = sol_big_from_little(g, tg, p);
    const auto ch = chevalley(p);
    const auto tg1 = g_operator(tg, ch);
    const auto big = g_operator(g, ch);
    for (const Rational& alpha : {Rational(1), Rational(-1), make_rational(1, 3)}) {
      k.alpha = alpha;
      if (is_zero(big - big_from_little_rhs(tg1, k, p)))
        return "identity still holds with alpha = " + to_string(alpha);
    }
    return std::string();
  });
}

Reports reduction_tables(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  const auto ch = chevalley(p);
  const auto o = SkewLaurentOp::z(q, 1);
  const auto ob = SkewLaurentOp::z(q, -1);
  const auto smkm = ch.s_minus * ch.k_minus;
  const auto smkp = ch.s_minus * ch.k_plus;
  const auto spkp = ch.s_plus * ch.k_plus;
  const auto spkm = ch.s_plus * ch.k_minus;
  const auto kp2 = ch.k_plus * ch.k_plus;
  const auto km2 = ch.k_minus * ch.k_minus;
  const Rational qn = p.qpow(0, 1);
  const Rational qn_inv = 1 / qn;

  Reports out;
  out.push_back(run_check("tridiag.reductions_a_from_b", "reductions with O = z", p, [&] {
    const SkewLaurentOp table[][2] = {
        {o * smkm, (-qn_inv * km2 + qn) * (1 / d)},
        {o * smkp, (qn * kp2 - qn_inv) * (1 / d)},
        {smkm * o, (-p.qpow(-4, -1) * km2 + qn) * (1 / d)},
        {smkp * o, (p.qpow(4, 1) * kp2 - qn_inv) * (1 / d)},
        {kp2 * o, -d * p.qpow(4, 1) * spkp + p.qpow(4, 2) * o},
        {km2 * o, d * p.qpow(-4, -1) * spkm + p.qpow(-4, -2) * o},
    };
    for (const auto& row : table)
      if (auto r = residual_of(row[0] - row[1]); !r.empty()) return r;
    return std::string();
  }));
  out.push_back(run_check("tridiag.reductions_b_from_a", "reductions with O = z^-1", p, [&] {
    const SkewLaurentOp table[][2] = {
        {ob * spkp, (-qn_inv * kp2 + qn) * (1 / d)},
        {ob * spkm, (qn * km2 - qn_inv) * (1 / d)},
        {spkp * ob, (-p.qpow(-4, -1) * kp2 + qn) * (1 / d)},
        {spkm * ob, (p.qpow(4, 1) * km2 - qn_inv) * (1 / d)},
        {km2 * ob, -d * p.qpow(4, 1) * smkm + p.qpow(4, 2) * ob},
        {kp2 * ob, d * p.qpow(-4, -1) * smkp + p.qpow(-4, -2) * ob},
    };
    for (const auto& row : table)
      if (auto r = residual_of(row[0] - row[1]); !r.empty()) return r;
    return std::string();
  }));
  out.push_back(run_check("tridiag.reductions_big_from_little", "reductions for G~1 composed with z^-1", p, [&] {
    const SkewLaurentOp table[][2] = {
        {ch.s_minus * ch.s_minus, -(p.qpow(2, -1) / d) * (ob * smkm) + (p.qpow(-2, 1) / d) * (ob * smkp)},
        {smkm * ob, q * q * (ob * smkm) - p.qpow(2, 1) * (ob * ob)},
        {smkp * ob, (1 / (q * q)) * (ob * smkp) - p.qpow(-2, -1) * (ob * ob)},
    };
    for (const auto& row : table)
      if (auto r = residual_of(row[0] - row[1]); !r.empty()) return r;
    return std::string();
  }));
  return out;
}

Reports verify_tridiag(const ParamPoint& equitable_point, const ParamPoint& little_point, bool perturb_sol1) {
  Reports out;
  TridiagCoeffs k1 = sol_a_from_b(equitable_point);
  if (perturb_sol1) k1.alpha += 1;
  out.push_back(tridiag_a_from_b(equitable_point, k1));
  out.push_back(tridiag_b_from_a(equitable_point));
  out.push_back(tridiag_round_trip(equitable_point));
  append(out, reduction_tables(equitable_point));

  const ParamPoint constrained = constrained_little_point(little_point);
  const GCoefficients tg = g_coeffs(constrained);
  out.push_back(big_from_little(constrained, tg));
  out.push_back(constraint_forces_a(constrained));
  out.push_back(alpha_term_breaks(constrained, tg));
  return out;
}

}  // namespace qaw
