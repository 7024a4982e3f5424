#include "qaw/uqsl2.hpp"

namespace qaw {

namespace {

Rational q_minus_inv(const Rational& q) { return q - 1 / q; }
Rational q_plus_inv(const Rational& q) { return q + 1 / q; }

}  // namespace

ChevalleySet chevalley(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const Rational& u = p.u;
  const auto T = SkewLaurentOp::shift(q, 1);
  const auto Tinv = SkewLaurentOp::shift(q, -1);
  const auto z = SkewLaurentOp::z(q, 1);
  const auto zinv = SkewLaurentOp::z(q, -1);
  return ChevalleySet{
      .s_plus = z * (u * u * Tinv - (1 / (u * u)) * T) * (1 / d),
      .s_minus = -(zinv * (Tinv - T)) * (1 / d),
      .k_plus = (1 / u) * T,
      .k_minus = u * Tinv,
  };
}

SkewLaurentOp casimir_op(const ChevalleySet& g) {
  const Rational& q = g.k_plus.q();
  const Rational d = q_minus_inv(q);
  return ((1 / q) * (g.k_plus * g.k_plus) + q * (g.k_minus * g.k_minus)) * (1 / (d * d)) + g.s_plus * g.s_minus;
}

Rational casimir_value(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const Rational u2 = p.u * p.u;
  return (q * u2 + 1 / (q * u2)) / (d * d);
}

Rational normalized_casimir(const ParamPoint& p) {
  const Rational d = q_minus_inv(p.q());
  return d * d * casimir_value(p);
}

EquitableSet equitable(const ParamPoint& p, const ChevalleySet& g) {
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const auto km2 = g.k_minus * g.k_minus;
  return EquitableSet{
      .x = km2 - (d * p.t) * (g.s_plus * g.k_minus),
      .y = g.k_plus * g.k_plus,
      .y_inv = km2,
      .z = km2 + ((1 - 1 / (q * q)) * p.t) * (g.s_minus * g.k_minus),
  };
}

WPair build_w(const ParamPoint& p, const ChevalleySet& g) {
  const WScalars& s = p.w;
  return WPair{
      .w0 = s.c0 * (g.s_plus * g.k_plus) + s.cbar0 * (g.s_minus * g.k_plus) + s.eps0 * (g.k_plus * g.k_plus) + s.mu0,
      .w1 = s.c1 * (g.s_plus * g.k_minus) + s.cbar1 * (g.s_minus * g.k_minus) +
            s.eps1 * (g.k_minus * g.k_minus) + s.mu1,
  };
}

SkewLaurentOp build_g1(const WPair& w) { return q_commutator(w.w1, w.w0, w.w0.q()); }

GCoefficients g_coeffs(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const Rational s = q_plus_inv(q);
  const Rational q2d = q * q - 1 / (q * q);
  const Rational omega = casimir_value(p);
  const WScalars& w = p.w;
  GCoefficients g;
  g.g1 = w.cbar0 * w.cbar1 * q2d;
  g.g2 = w.cbar0 * w.eps1 * q2d * q + w.mu0 * w.cbar1 * d;
  g.g3 = w.cbar1 * w.eps0 * q2d / q + w.mu1 * w.cbar0 * d;
  g.g2p = w.mu0 * w.c1 * d;
  g.g3p = w.mu1 * w.c0 * d;
  g.g4 = -w.c0 * w.cbar1 * s / (q * d) + w.mu1 * w.eps0 * d;
  g.g5 = -w.c1 * w.cbar0 * q * s / d + w.mu0 * w.eps1 * d;
  g.g6 = (w.c1 * w.cbar0 * q + w.c0 * w.cbar1 / q) * d * omega + (w.eps0 * w.eps1 + w.mu0 * w.mu1) * d;
  return g;
}

SkewLaurentOp g_operator(const GCoefficients& g, const ChevalleySet& ch) {
  return g.g1 * (ch.s_minus * ch.s_minus) + g.g2 * (ch.s_minus * ch.k_minus) + g.g3 * (ch.s_minus * ch.k_plus) +
         g.g2p * (ch.s_plus * ch.k_minus) + g.g3p * (ch.s_plus * ch.k_plus) + g.g4 * (ch.k_plus * ch.k_plus) +
         g.g5 * (ch.k_minus * ch.k_minus) + g.g6;
}

AWStructureConstants aw_constants(const ParamPoint& p) {
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const Rational s = q_plus_inv(q);
  const Rational d2 = d * d;
  const Rational s2 = s * s;
  const Rational omega_nu = casimir_value(p);
  const Rational g6 = g_coeffs(p).g6;
  const WScalars& w = p.w;
  AWStructureConstants k;
  k.rho0 = -w.c0 * w.cbar0 * s2 - w.mu0 * w.mu0 * d2;
  k.rho1 = -w.c1 * w.cbar1 * s2 - w.mu1 * w.mu1 * d2;
  k.omega = d * g6 - 3 * w.mu0 * w.mu1 * d2;
  k.gamma0 = w.mu0 * d2;
  k.gamma1 = w.mu1 * d2;
  k.eta0 = s * (w.c0 * w.cbar0 * w.eps1 * d2 * omega_nu - w.eps0 * (q * w.c1 * w.cbar0 + w.c0 * w.cbar1 / q)) -
           w.mu0 * d * g6 + w.mu1 * w.c0 * w.cbar0 * s2 + 2 * w.mu0 * w.mu0 * w.mu1 * d2;
  k.eta1 = s * (w.c1 * w.cbar1 * w.eps0 * d2 * omega_nu - w.eps1 * (q * w.c1 * w.cbar0 + w.c0 * w.cbar1 / q)) -
           w.mu1 * d * g6 + w.mu0 * w.c1 * w.cbar1 * s2 + 2 * w.mu1 * w.mu1 * w.mu0 * d2;
  return k;
}

EquitableABC equitable_abc(const ParamPoint& p) {
  if (p.a == 0 || p.b == 0 || p.c == 0) throw DegenerateError("equitable scalars must be nonzero");
  const Rational q = p.q();
  const auto e = equitable(p, chevalley(p));
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const auto one = SkewLaurentOp::identity(q);
  return EquitableABC{
      .a = a * e.x + (1 / a) * e.y + (q * b / c) * (one - e.x * e.y),
      .b = b * e.y + (1 / b) * e.z + (q * c / a) * (one - e.y * e.z),
      .c = c * e.z + (1 / c) * e.x + (q * a / b) * (one - e.z * e.x),
  };
}

EquitableABC equitable_abc_chevalley(const ParamPoint& p, const ChevalleySet& g) {
  if (p.a == 0 || p.b == 0 || p.c == 0) throw DegenerateError("equitable scalars must be nonzero");
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational lambda = normalized_casimir(p);
  const auto kp2 = g.k_plus * g.k_plus;
  const auto km2 = g.k_minus * g.k_minus;
  const auto km3 = km2 * g.k_minus;
  const auto km4 = km2 * km2;
  const Rational half = p.qpow(1);        // q^{1/2}
  const Rational three_half = p.qpow(3);  // q^{3/2}
  const Rational ab = a / b;
  return EquitableABC{
      .a = (-a * d * half) * (g.s_plus * g.k_minus) + (b / c * (q * q - 1) * half) * (g.s_plus * g.k_plus) +
           (1 / a) * kp2 + a * km2,
      .b = ((1 - 1 / (q * q)) * half / b) * (g.s_minus * g.k_minus) -
           (d * c / (a * three_half)) * (g.s_minus * g.k_plus) + b * kp2 + (1 / b) * km2,
      .c = (c + 1 / c) * km2 - (ab * q_plus_inv(q)) * km4 + (ab * lambda) * km2 +
           (1 - 1 / (q * q)) * (g.s_minus * (c * half * g.k_minus - three_half * ab * km3) -
                                g.s_plus * ((1 / c) * three_half * g.k_minus - ab * half * km3)),
  };
}

Reports verify_chevalley(const ParamPoint& p) {
  Reports out;
  const Rational q = p.q();
  const Rational d = q_minus_inv(q);
  const auto g = chevalley(p);
  const auto one = SkewLaurentOp::identity(q);
  out.push_back(run_check("uqsl2.k_inverse", "Chevalley relations (Cartan inverse)", p, [&] {
    auto r = residual_of(g.k_plus * g.k_minus - one);
    if (r.empty()) r = residual_of(g.k_minus * g.k_plus - one);
    return r;
  }));
  out.push_back(run_check("uqsl2.k_conjugation", "Chevalley relations [s3, S+-] = +-S+-", p, [&] {
    auto r = residual_of(g.k_plus * g.s_plus * g.k_minus - q * g.s_plus);
    if (r.empty()) r = residual_of(g.k_plus * g.s_minus * g.k_minus - (1 / q) * g.s_minus);
    return r;
  }));
  out.push_back(run_check("uqsl2.commutator", "Chevalley relations [S+, S-]", p, [&] {
    return residual_of(g.s_plus * g.s_minus - g.s_minus * g.s_plus -
                       (g.k_plus * g.k_plus - g.k_minus * g.k_minus) * (1 / d));
  }));
  const auto omega_op = casimir_op(g);
  out.push_back(run_check("uqsl2.casimir_scalar", "Casimir eigenvalue on V_nu", p,
                          [&] { return residual_of(omega_op - casimir_value(p)); }));
  out.push_back(run_check("uqsl2.casimir_central", "Casimir centrality", p, [&] {
    for (const auto* x : {&g.s_plus, &g.s_minus, &g.k_plus, &g.k_minus}) {
      auto r = residual_of(omega_op * *x - *x * omega_op);
      if (!r.empty()) return r;
    }
    return std::string();
  }));
  const auto e = equitable(p, g);
  out.push_back(run_check("uqsl2.equitable_relations", "equitable presentation relations", p, [&] {
    auto qc = [&](const SkewLaurentOp& x, const SkewLaurentOp& y) { return q_commutator(x, y, q) * (1 / d) - one; };
    for (const auto& r : {qc(e.x, e.y), qc(e.y, e.z), qc(e.z, e.x), e.y * e.y_inv - one, e.y_inv * e.y - one}) {
      auto s = residual_of(r);
      if (!s.empty()) return s;
    }
    return std::string();
  }));
  return out;
}

Reports verify_g_table(const ParamPoint& p) {
  Reports out;
  out.push_back(run_check("aw.g_table", "G1 expansion coefficients", p, [&] {
    const auto g = chevalley(p);
    return residual_of(build_g1(build_w(p, g)) - g_operator(g_coeffs(p), g));
  }));
  return out;
}

Reports verify_aw(const ParamPoint& p) {
  Reports out;
  const Rational q = p.q();
  const auto g = chevalley(p);
  const auto w = build_w(p, g);
  const auto& w0 = w.w0;
  const auto& w1 = w.w1;
  const auto g1 = build_g1(w);
  const auto k = aw_constants(p);
  const auto anti = w0 * w1 + w1 * w0;
  out.push_back(run_check("aw.relation_g1", "Askey-Wilson relations [W1,W0]_q = G1", p, [&] {
    return residual_of(q_commutator(w1, w0, q) - g1);
  }));
  out.push_back(run_check("aw.relation_w0", "Askey-Wilson relations [W0,G1]_q", p, [&] {
    return residual_of(q_commutator(w0, g1, q) -
                       (k.rho0 * w1 + k.omega * w0 + k.gamma0 * anti + k.gamma1 * (w0 * w0) + k.eta0));
  }));
  out.push_back(run_check("aw.relation_w1", "Askey-Wilson relations [G1,W1]_q", p, [&] {
    return residual_of(q_commutator(g1, w1, q) -
                       (k.rho1 * w0 + k.omega * w1 + k.gamma1 * anti + k.gamma0 * (w1 * w1) + k.eta1));
  }));
  if (p.profile == Profile::little || p.profile == Profile::big) {
    const std::string tag = "aw.reduced_" + to_string(p.profile);
    out.push_back(run_check(tag + "_w0", "reduced Askey-Wilson relations", p, [&] {
      return residual_of(q_commutator(w0, g1, q) - (k.omega * w0 + k.gamma1 * (w0 * w0) + k.eta0));
    }));
    out.push_back(run_check(tag + "_w1", "reduced Askey-Wilson relations", p, [&] {
      return residual_of(q_commutator(g1, w1, q) - (k.rho1 * w0 + k.omega * w1 + k.gamma1 * anti + k.eta1));
    }));
  }
  return out;
}

Reports verify_equitable_aw(const ParamPoint& p) {
  Reports out;
  const Rational q = p.q();
  const Rational q2d = q * q - 1 / (q * q);
  const Rational s = q_plus_inv(q);
  const Rational lambda = normalized_casimir(p);
  const auto abc = equitable_abc(p);
  const auto inv_sum = [](const Rational& x) -> Rational { return x + 1 / x; };
  const Rational sa = inv_sum(p.a), sb = inv_sum(p.b), sc = inv_sum(p.c);
  auto relation = [&](const SkewLaurentOp& x, const SkewLaurentOp& y, const SkewLaurentOp& zz, const Rational& sx,
                      const Rational& sy, const Rational& sz) {
    return residual_of(x + q_commutator(y, zz, q) * (1 / q2d) - (lambda * sx + sy * sz) / s);
  };
  out.push_back(run_check("equitable.relation_a", "equitable Askey-Wilson relations", p,
                          [&] { return relation(abc.a, abc.b, abc.c, sa, sb, sc); }));
  out.push_back(run_check("equitable.relation_b", "equitable Askey-Wilson relations", p,
                          [&] { return relation(abc.b, abc.c, abc.a, sb, sc, sa); }));
  out.push_back(run_check("equitable.relation_c", "equitable Askey-Wilson relations", p,
                          [&] { return relation(abc.c, abc.a, abc.b, sc, sa, sb); }));
  const auto cf = equitable_abc_chevalley(p, chevalley(p));
  out.push_back(run_check("equitable.chevalley_form_a", "Chevalley form of A", p,
                          [&] { return residual_of(abc.a - cf.a); }));
  out.push_back(run_check("equitable.chevalley_form_b", "B as little q-Jacobi operator", p,
                          [&] { return residual_of(abc.b - cf.b); }));
  out.push_back(run_check("equitable.chevalley_form_c", "Chevalley form of C", p,
                          [&] { return residual_of(abc.c - cf.c); }));
  return out;
}

}  // namespace qaw
