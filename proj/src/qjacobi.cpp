#include "qaw/qjacobi.hpp"

namespace qaw {

namespace {

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den == 0) throw DegenerateError(std::string("vanishing denominator: ") + what);
  return num / den;
}

// (q^{-2n}; q^2)_s (a b q^{2n+2}; q^2)_s q^{2s}, the numerator shared by all
// terminating expansions below.
Rational hyper_numerator(int n, int s, const Rational& ab, const Rational& q) {
  const Rational q2 = q * q;
  return qpoch(pow(q, -2 * n), q2, s) * qpoch(ab * pow(q, 2 * n + 2), q2, s) * pow(q2, s);
}

void require_profile_little(const GCoefficients& g) {
  if (g.g1 != 0 || g.g2p != 0 || g.g3p != 0)
    throw IncompatiblePoint("little q-Jacobi operator needs g1 = g2' = g3' = 0");
}

void require_profile_big(const GCoefficients& g) {
  if (g.g2p != 0 || g.g3p != 0) throw IncompatiblePoint("big q-Jacobi operator needs g2' = g3' = 0");
}

void require_kappa(const ParamPoint& p, const Rational& b) {
  if (kappa(p) != p.q() * p.q() * b)
    throw IncompatiblePoint("W0 eigenfunction scale kappa differs from q^2 b at this point");
}

}  // namespace

Rational kappa(const ParamPoint& p) {
  const Rational q = p.q();
  return checked_div(p.w.eps0, p.w.cbar0, "cbar0") * (1 - q * q) * p.qpow(-2, -1);
}

LaurentPoly eigenfunction_f(int n, const ParamPoint& p) {
  const Rational q = p.q();
  return LaurentPoly::qpoch_linear(kappa(p), q * q, n);
}

Rational w0_spectrum(int n, const ParamPoint& p) { return p.w.eps0 * p.qpow(4 * n, -2); }

Rational w0_subdiagonal(int n, const ParamPoint& p) {
  const Rational q = p.q();
  return p.w.cbar0 * p.qpow(2, -1) * (1 - pow(q, 2 * n)) / (1 - q * q);
}

LaurentPoly little_poly(int n, const LittleParams& lp, const ParamPoint& p) {
  const Rational q = p.q();
  const Rational q2 = q * q;
  LaurentPoly out;
  for (int s = 0; s <= n; ++s) {
    const Rational den = qpoch(q2 * lp.a, q2, s) * qpoch(q2, q2, s);
    out.add_term(s, checked_div(hyper_numerator(n, s, lp.a * lp.b, q), den, "(q^2 a; q^2)_s"));
  }
  return out;
}

LaurentPoly phi32_little(int n, const LittleParams& lp, const ParamPoint& p) {
  const Rational q = p.q();
  const Rational q2 = q * q;
  const Rational prefactor = pow(-q2 * lp.b, -n) * pow(q, -n * (n - 1)) *
                             checked_div(qpoch(q2 * lp.b, q2, n), qpoch(q2 * lp.a, q2, n), "(q^2 a; q^2)_n");
  LaurentPoly out;
  for (int s = 0; s <= n; ++s) {
    // The lower parameter 0 contributes (0; q^2)_s = 1.
    const Rational den = qpoch(q2 * lp.b, q2, s) * qpoch(q2, q2, s);
    const Rational coeff = checked_div(hyper_numerator(n, s, lp.a * lp.b, q), den, "(q^2 b; q^2)_s");
    out += LaurentPoly::qpoch_linear(q2 * lp.b, q2, s) * (prefactor * coeff);
  }
  return out;
}

Rational overlap_little(int n, int s, const LittleParams& lp, const ParamPoint& p) {
  const Rational q = p.q();
  const Rational q2 = q * q;
  const Rational normalization = pow(-q2 * lp.b, -n) * pow(q, -n * (n - 1)) *
                                 checked_div(qpoch(q2 * lp.b, q2, n), qpoch(q2 * lp.a, q2, n), "(q^2 a; q^2)_n");
  const Rational den = qpoch(q2 * lp.b, q2, s) * qpoch(q2, q2, s);
  return normalization * checked_div(hyper_numerator(n, s, lp.a * lp.b, q), den, "(q^2 b; q^2)_s");
}

LaurentPoly expand_little(int n, const LittleParams& lp, const ParamPoint& p) {
  require_kappa(p, lp.b);
  LaurentPoly out;
  for (int s = 0; s <= n; ++s) out += eigenfunction_f(s, p) * overlap_little(n, s, lp, p);
  return out;
}

SkewLaurentOp little_operator(const ParamPoint& p) {
  const GCoefficients g = g_coeffs(p);
  require_profile_little(g);
  return big_operator(p);
}

LittleParams little_dictionary(const ParamPoint& p) {
  const GCoefficients g = g_coeffs(p);
  require_profile_little(g);
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  if (g.g5 == 0 || g.g3 == 0) throw DegenerateError("little dictionary needs g3, g5 nonzero");
  if (g.g2 / g.g5 != d * p.qpow(0, 1))
    throw IncompatiblePoint("little dictionary: g2/g5 != (q - q^-1) q^nu at this point");
  return LittleParams{
      .a = -(g.g3 / g.g5) * p.qpow(0, -3) / d,
      .b = -(g.g4 / g.g3) * d * p.qpow(-4, -1),
  };
}

Rational jacobi_eigenvalue(int n, const Rational& ab, const ParamPoint& p) {
  const GCoefficients g = g_coeffs(p);
  const Rational q = p.q();
  return g.g5 * p.qpow(0, 2) * (pow(q, -2 * n) + ab * pow(q, 2 * n + 2)) + g.g6;
}

Bidiag bidiag_little(int n, const ParamPoint& p, const LittleParams& lp) {
  const GCoefficients g = g_coeffs(p);
  const Rational q = p.q();
  const Rational q2n = pow(q, 2 * n);
  return Bidiag{
      .diag = jacobi_eigenvalue(n, lp.a * lp.b, p),
      .sub = -g.g5 * p.qpow(0, 2) / q2n * (1 - q2n) * (1 - q2n * lp.b),
  };
}

Bidiag bidiag_big(int n, const ParamPoint& p, const BigParams& bp) {
  const GCoefficients g = g_coeffs(p);
  const Rational q = p.q();
  const Rational q2n = pow(q, 2 * n);
  return Bidiag{
      .diag = jacobi_eigenvalue(n, bp.a * bp.b, p),
      .sub = -g.g5 * p.qpow(0, 2) / q2n * (1 - q2n) * (1 - q2n * bp.a) * (1 - q2n * bp.c),
  };
}

SkewLaurentOp big_operator(const ParamPoint& p) {
  const GCoefficients g = g_coeffs(p);
  require_profile_big(g);
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  const Rational d2 = d * d;
  const Rational qnu = p.qpow(0, 1);
  LaurentPoly up, down, mid;
  up.add_term(-2, g.g1 / (q * d2));
  up.add_term(-1, g.g3 / (qnu * d));
  up.add_term(0, g.g4 / (qnu * qnu));
  down.add_term(-2, g.g1 * q / d2);
  down.add_term(-1, -g.g2 * qnu / d);
  down.add_term(0, g.g5 * qnu * qnu);
  mid.add_term(-2, -g.g1 * (q + 1 / q) / d2);
  mid.add_term(-1, -(g.g3 / qnu - g.g2 * qnu) / d);
  mid.add_term(0, g.g6);
  return SkewLaurentOp::multiplication(q, up) * SkewLaurentOp::shift(q, 2) +
         SkewLaurentOp::multiplication(q, down) * SkewLaurentOp::shift(q, -2) +
         SkewLaurentOp::multiplication(q, mid);
}

namespace {

struct QuadraticRoots {
  Rational lo, hi;
};

// Rational roots of x^2 - sum x + product, smaller first.
QuadraticRoots rational_roots(const Rational& sum, const Rational& product) {
  const Rational disc = sum * sum - 4 * product;
  const auto root = rational_sqrt(disc);
  if (!root) throw DegenerateError("big dictionary: quadratic has no rational roots at this point");
  return QuadraticRoots{(sum - *root) / 2, (sum + *root) / 2};
}

}  // namespace

BigParams big_dictionary(const ParamPoint& p, bool rescaled) {
  const GCoefficients g = g_coeffs(p);
  require_profile_big(g);
  if (g.g5 == 0) throw DegenerateError("big dictionary needs g5 != 0");
  const Rational q = p.q();
  const Rational d = q - 1 / q;
  const Rational ab = (g.g4 / g.g5) * p.qpow(-4, -4);
  if (!rescaled) {
    const Rational sum = (g.g2 / g.g5) * p.qpow(-4, -1) / d;           // a + c
    const Rational product = (g.g1 / g.g5) * p.qpow(-6, -2) / (d * d);  // a c
    const Rational mixed = -(g.g3 / g.g5) * p.qpow(-4, -3) / d;         // a (b + c)
    const auto roots = rational_roots(sum, product);
    // a(b + c) = ab + ac whichever root is a, so only the tie rule decides.
    const Rational a = roots.lo != 0 ? roots.lo : roots.hi;
    if (a == 0) throw DegenerateError("big dictionary: a = c = 0");
    BigParams bp{a, ab / a, sum - a};
    if (bp.a * (bp.b + bp.c) != mixed) throw IncompatiblePoint("big dictionary: a(b + c) relation violated");
    return bp;
  }
  const Rational sum = (g.g2 / g.g5) * p.qpow(0, -1) / d;            // (a + c)/b
  const Rational product = (g.g1 / g.g5) * p.qpow(2, -2) / (d * d);  // a c / b^2
  const Rational mixed = -(g.g3 / g.g5) * p.qpow(0, -3) / d;         // a (b + c)/b
  const auto roots = rational_roots(sum, product);
  for (const auto& [alpha, gamma] : {std::pair{roots.lo, roots.hi}, std::pair{roots.hi, roots.lo}}) {
    const Rational den = alpha * (1 + gamma);
    if (den == 0) continue;
    const Rational b = mixed / den;
    if (b != 0 && alpha * b * b == ab) return BigParams{alpha * b, b, gamma * b};
  }
  throw IncompatiblePoint("big dictionary: no root assignment satisfies a b = (g4/g5) q^{-4nu-2}");
}

Rational overlap_big(int n, int s, const BigParams& bp, const ParamPoint& p) {
  const Rational q = p.q();
  const Rational q2 = q * q;
  const Rational den = qpoch(q2 * bp.a, q2, s) * qpoch(q2 * bp.c, q2, s) * qpoch(q2, q2, s);
  return checked_div(hyper_numerator(n, s, bp.a * bp.b, q), den, "(q^2 a; q^2)_s (q^2 c; q^2)_s");
}

LaurentPoly big_poly(int n, const BigParams& bp, const Rational& scale, const ParamPoint& p) {
  const Rational q2 = p.q() * p.q();
  LaurentPoly out;
  for (int s = 0; s <= n; ++s) out += LaurentPoly::qpoch_linear(scale, q2, s) * overlap_big(n, s, bp, p);
  return out;
}

LaurentPoly big_poly_rescaled(int n, const BigParams& bp, const ParamPoint& p) {
  require_kappa(p, bp.b);
  LaurentPoly out;
  for (int s = 0; s <= n; ++s) out += eigenfunction_f(s, p) * overlap_big(n, s, bp, p);
  return out;
}

SkewLaurentOp qdiff_operator(const Rational& q, const LaurentPoly& b_up, const LaurentPoly& b_down) {
  return SkewLaurentOp::multiplication(q, b_up) * SkewLaurentOp::shift(q, 2) +
         SkewLaurentOp::multiplication(q, b_down) * SkewLaurentOp::shift(q, -2) -
         SkewLaurentOp::multiplication(q, b_up + b_down);
}

SkewLaurentOp qdiff_little(const LittleParams& lp, const Rational& q) {
  LaurentPoly up, down;
  up.add_term(-1, -lp.a);
  up.add_term(0, lp.a * lp.b * q * q);
  down.add_term(-1, -1);
  down.add_term(0, 1);
  return qdiff_operator(q, up, down);
}

SkewLaurentOp qdiff_big(const BigParams& bp, const Rational& scale, const Rational& q) {
  const Rational q2 = q * q;
  const Rational inv = 1 / scale;
  LaurentPoly up, down;
  up.add_term(-2, bp.a * bp.c * q2 * inv * inv);
  up.add_term(-1, -bp.a * (bp.b + bp.c) * q2 * inv);
  up.add_term(0, bp.a * bp.b * q2);
  down.add_term(-2, bp.a * bp.c * q2 * q2 * inv * inv);
  down.add_term(-1, -(bp.a + bp.c) * q2 * inv);
  down.add_term(0, 1);
  return qdiff_operator(q, up, down);
}

Rational qdiff_eigenvalue(int n, const Rational& ab, const Rational& q) {
  const Rational q2n = pow(q, 2 * n);
  return (1 - q2n) * (1 - ab * q2n * q * q) / q2n;
}

namespace {

std::string degree_tag(const std::string& base, int n) {
  const std::string digits = std::to_string(n);
  return base + "[n=" + std::string(digits.size() < 2 ? 2 - digits.size() : 0, '0') + digits + "]";
}

std::string eigen_residual(const SkewLaurentOp& op, const LaurentPoly& f, const Rational& eigenvalue) {
  return residual_of(apply(op, f) - f * eigenvalue);
}

}  // namespace

Reports qdiff_check_little(int n, const LittleParams& lp, const ParamPoint& p) {
  Reports out;
  out.push_back(run_check(degree_tag("little.qdiff_oracle", n), "little q-Jacobi difference equation", p, [&] {
    const Rational q = p.q();
    return eigen_residual(qdiff_little(lp, q), little_poly(n, lp, p), qdiff_eigenvalue(n, lp.a * lp.b, q));
  }));
  return out;
}

Reports qdiff_check_big(int n, const BigParams& bp, const ParamPoint& p) {
  Reports out;
  const Rational q = p.q();
  out.push_back(run_check(degree_tag("big.qdiff_oracle", n), "big q-Jacobi difference equation", p, [&] {
    return eigen_residual(qdiff_big(bp, 1, q), big_poly(n, bp, 1, p), qdiff_eigenvalue(n, bp.a * bp.b, q));
  }));
  out.push_back(
      run_check(degree_tag("big.qdiff_oracle_rescaled", n), "big q-Jacobi difference equation, z -> q^2 b z", p, [&] {
        const Rational scale = q * q * bp.b;
        return eigen_residual(qdiff_big(bp, scale, q), big_poly_rescaled(n, bp, p),
                              qdiff_eigenvalue(n, bp.a * bp.b, q));
      }));
  return out;
}

Reports little_from_big(int n, const LittleParams& lp, const ParamPoint& p) {
  Reports out;
  out.push_back(run_check(degree_tag("big.little_from_big", n), "little as specialized big q-Jacobi", p, [&] {
    const Rational q = p.q();
    const Rational q2 = q * q;
    const Rational prefactor = pow(-q2 * lp.b, -n) * pow(q, -n * (n - 1)) *
                               checked_div(qpoch(q2 * lp.b, q2, n), qpoch(q2 * lp.a, q2, n), "(q^2 a; q^2)_n");
    const BigParams swapped{lp.b, lp.a, 0};
    return residual_of(little_poly(n, lp, p) - big_poly(n, swapped, q2 * lp.b, p) * prefactor);
  }));
  return out;
}

Reports verify_little(const ParamPoint& p, int n_max) {
  Reports out;
  const LittleParams lp{p.jacobi_a, p.jacobi_b};
  const Rational q = p.q();
  const auto ch = chevalley(p);
  const auto w = build_w(p, ch);
  const auto g1 = build_g1(w);

  out.push_back(run_check("little.operator_route", "reduced operator as a q-difference operator", p,
                          [&] { return residual_of(little_operator(p) - g1); }));
  out.push_back(run_check("little.dictionary", "little q-Jacobi parameter identification", p, [&] {
    const LittleParams found = little_dictionary(p);
    if (!(found == lp)) return "dictionary gave a=" + to_string(found.a) + ", b=" + to_string(found.b);
    return residual_of(kappa(p), q * q * lp.b);
  }));
  out.push_back(run_check("little.w0_monomial_action", "W0 bidiagonal on monomials", p, [&] {
    for (int n = 0; n <= n_max; ++n) {
      LaurentPoly expected = LaurentPoly::monomial(n, w0_spectrum(n, p));
      expected.add_term(n - 1, w0_subdiagonal(n, p));
      auto r = residual_of(apply(w.w0, LaurentPoly::monomial(n)) - expected);
      if (!r.empty()) return "n=" + std::to_string(n) + ": " + r;
    }
    return std::string();
  }));

  for (int n = 0; n <= n_max; ++n) {
    const LaurentPoly pn = little_poly(n, lp, p);
    const LaurentPoly fn = eigenfunction_f(n, p);
    out.push_back(run_check(degree_tag("little.eigen_g1", n), "little q-Jacobi polynomials diagonalize G~1", p,
                            [&] { return eigen_residual(g1, pn, jacobi_eigenvalue(n, lp.a * lp.b, p)); }));
    append(out, qdiff_check_little(n, lp, p));
    out.push_back(run_check(degree_tag("little.route_phi32", n), "3phi2 form of p_n", p,
                            [&] { return residual_of(pn - phi32_little(n, lp, p)); }));
    out.push_back(run_check(degree_tag("little.route_expansion", n), "expansion of p_n over W0 eigenfunctions", p,
                            [&] { return residual_of(pn - expand_little(n, lp, p)); }));
    out.push_back(run_check(degree_tag("little.w0_eigen", n), "W0 eigenfunctions", p, [&] {
      if (fn.degree() != n) return std::string("f_n has the wrong degree");
      return eigen_residual(w.w0, fn, w0_spectrum(n, p));
    }));
    out.push_back(run_check(degree_tag("little.bidiagonal", n), "G~1 bidiagonal on W0 eigenfunctions", p, [&] {
      const Bidiag bd = bidiag_little(n, p, lp);
      LaurentPoly expected = fn * bd.diag;
      if (n > 0) expected += eigenfunction_f(n - 1, p) * bd.sub;
      return residual_of(apply(g1, fn) - expected);
    }));
  }
  return out;
}

Reports verify_big(const ParamPoint& p, int n_max) {
  Reports out;
  const BigParams bp{p.jacobi_a, p.jacobi_b, p.jacobi_c};
  const Rational q = p.q();
  const auto ch = chevalley(p);
  const auto w = build_w(p, ch);
  const auto g1 = build_g1(w);

  out.push_back(run_check("big.operator_route", "G1 as a q-difference operator", p,
                          [&] { return residual_of(big_operator(p) - g1); }));
  out.push_back(run_check("big.dictionary_rescaled", "big q-Jacobi identification for P_n(q^2 b z)", p, [&] {
    const BigParams found = big_dictionary(p, true);
    if (!(found == bp))
      return "dictionary gave a=" + to_string(found.a) + ", b=" + to_string(found.b) + ", c=" + to_string(found.c);
    return residual_of(kappa(p), q * q * bp.b);
  }));
  out.push_back(run_check("big.dictionary_unscaled", "big q-Jacobi identification for P_n(z)", p, [&] {
    const ParamPoint plain = with_big_parameters(p, bp.a, bp.b, bp.c, false);
    const BigParams found = big_dictionary(plain, false);
    const BigParams swapped{bp.c, bp.a * bp.b / bp.c, bp.a};
    if (!(found == bp) && !(found == swapped))
      return "dictionary gave a=" + to_string(found.a) + ", b=" + to_string(found.b) + ", c=" + to_string(found.c);
    return residual_of(kappa(plain), Rational(1));
  }));

  const ParamPoint plain = with_big_parameters(p, bp.a, bp.b, bp.c, false);
  const auto g1_plain = build_g1(build_w(plain, chevalley(plain)));
  for (int n = 0; n <= n_max; ++n) {
    const LaurentPoly image = big_poly_rescaled(n, bp, p);
    const LaurentPoly fn = eigenfunction_f(n, p);
    const Rational eigenvalue = jacobi_eigenvalue(n, bp.a * bp.b, p);
    out.push_back(run_check(degree_tag("big.eigen_g1", n), "big q-Jacobi polynomials diagonalize G1", p,
                            [&] { return eigen_residual(g1, image, eigenvalue); }));
    out.push_back(run_check(degree_tag("big.eigen_g1_unscaled", n), "big q-Jacobi polynomials diagonalize G1", p, [&] {
      return eigen_residual(g1_plain, big_poly(n, bp, 1, plain), jacobi_eigenvalue(n, bp.a * bp.b, plain));
    }));
    append(out, qdiff_check_big(n, bp, p));
    out.push_back(run_check(degree_tag("big.w0_eigen", n), "W0 eigenfunctions", p,
                            [&] { return eigen_residual(w.w0, fn, w0_spectrum(n, p)); }));
    out.push_back(run_check(degree_tag("big.bidiagonal", n), "G1 bidiagonal on W0 eigenfunctions", p, [&] {
      const Bidiag bd = bidiag_big(n, p, bp);
      LaurentPoly expected = fn * bd.diag;
      if (n > 0) expected += eigenfunction_f(n - 1, p) * bd.sub;
      return residual_of(apply(g1, fn) - expected);
    }));
    append(out, little_from_big(n, LittleParams{bp.a, bp.b}, p));
  }
  return out;
}

}  // namespace qaw
