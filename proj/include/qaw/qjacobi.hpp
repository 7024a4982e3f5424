#pragma once

#include "qaw/qcore.hpp"
#include "qaw/report.hpp"
#include "qaw/skew_laurent.hpp"
#include "qaw/uqsl2.hpp"

namespace qaw {

/// Parameters of p_n(z; a, b; q^2).
struct LittleParams {
  Rational a, b;
  friend bool operator==(const LittleParams&, const LittleParams&) = default;
};

/// Parameters of P_n(z; a, b, c; q^2).
struct BigParams {
  Rational a, b, c;
  friend bool operator==(const BigParams&, const BigParams&) = default;
};

/// Thrown when a point does not satisfy the relations a dictionary inverts.
class IncompatiblePoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ----------------------------------------------------- W0 eigenfunctions

/// Pochhammer scale of the W0 eigenfunctions, (eps0/cbar0)(1 - q^2) q^{-nu-1}.
Rational kappa(const ParamPoint& p);
/// f_n(z) = (kappa z; q^2)_n.
LaurentPoly eigenfunction_f(int n, const ParamPoint& p);
/// lambda_n = eps0 q^{2(n - nu)}.
Rational w0_spectrum(int n, const ParamPoint& p);
/// Sub-diagonal of W0 on monomials: W0 z^n = lambda_n z^n + nu_n z^{n-1}.
Rational w0_subdiagonal(int n, const ParamPoint& p);

// ----------------------------------------------------------- little family

/// Terminating 2phi1(q^{-2n}, q^{2n+2} a b; q^2 a; q^2; q^2 z).
LaurentPoly little_poly(int n, const LittleParams& lp, const ParamPoint& p);
/// The same polynomial from the terminating 3phi2 with third numerator q^2 b z.
LaurentPoly phi32_little(int n, const LittleParams& lp, const ParamPoint& p);
/// gamma_{n,s}, the coefficient of f_s in p_n.
Rational overlap_little(int n, int s, const LittleParams& lp, const ParamPoint& p);
/// sum_s gamma_{n,s} f_s(z); requires kappa(p) = q^2 b.
LaurentPoly expand_little(int n, const LittleParams& lp, const ParamPoint& p);

/// G~1 written as A~0(z) T^2 + B~0(z) T^{-2} + C~0(z) from the g-table.
/// Requires g1 = g2' = g3' = 0.
SkewLaurentOp little_operator(const ParamPoint& p);
/// (a, b) from the g-table. Throws IncompatiblePoint unless g2/g5 = (q - q^{-1}) q^nu.
LittleParams little_dictionary(const ParamPoint& p);

/// g5 q^{2nu} (q^{-2n} + a b q^{2n+2}) + g6, shared by both families.
Rational jacobi_eigenvalue(int n, const Rational& ab, const ParamPoint& p);

/// G f_n = diag f_n + sub f_{n-1}.
struct Bidiag {
  Rational diag, sub;
};

Bidiag bidiag_little(int n, const ParamPoint& p, const LittleParams& lp);
Bidiag bidiag_big(int n, const ParamPoint& p, const BigParams& bp);

// -------------------------------------------------------------- big family

/// G1 written as A0(z) T^2 + B0(z) T^{-2} + C0(z). Requires g2' = g3' = 0.
SkewLaurentOp big_operator(const ParamPoint& p);
/// Inverts the identification between the g-table and (a, b, c).
/// rescaled = false targets P_n(z), rescaled = true targets P_n(q^2 b z).
BigParams big_dictionary(const ParamPoint& p, bool rescaled);

/// gamma'_{n,s}.
Rational overlap_big(int n, int s, const BigParams& bp, const ParamPoint& p);
/// P_n(scale * z) = sum_s gamma'_{n,s} (scale z; q^2)_s.
LaurentPoly big_poly(int n, const BigParams& bp, const Rational& scale, const ParamPoint& p);
/// P_n(q^2 b z) = sum_s gamma'_{n,s} f_s(z); requires kappa(p) = q^2 b.
LaurentPoly big_poly_rescaled(int n, const BigParams& bp, const ParamPoint& p);

// ------------------------------------------ second-order difference equation

/// Bup(z) y(q^2 z) + Bdown(z) y(q^{-2} z) - (Bup + Bdown)(z) y(z).
SkewLaurentOp qdiff_operator(const Rational& q, const LaurentPoly& b_up, const LaurentPoly& b_down);
/// Difference operator of p_n(z; a, b; q^2).
SkewLaurentOp qdiff_little(const LittleParams& lp, const Rational& q);
/// Difference operator of P_n(x; a, b, c; q^2) after x = scale * z.
SkewLaurentOp qdiff_big(const BigParams& bp, const Rational& scale, const Rational& q);
/// q^{-2n} (1 - q^{2n}) (1 - a b q^{2n+2}).
Rational qdiff_eigenvalue(int n, const Rational& ab, const Rational& q);

Reports qdiff_check_little(int n, const LittleParams& lp, const ParamPoint& p);
/// Checks both P_n(z) and P_n(q^2 b z) against the difference equation.
Reports qdiff_check_big(int n, const BigParams& bp, const ParamPoint& p);
/// p_n(z; a, b) against the rescaled big polynomial with (b, a, 0).
Reports little_from_big(int n, const LittleParams& lp, const ParamPoint& p);

/// Every little-family identity for degrees 0..n_max at a little-profile point.
Reports verify_little(const ParamPoint& p, int n_max);
/// Every big-family identity for degrees 0..n_max at a big-profile point.
Reports verify_big(const ParamPoint& p, int n_max);

}  // namespace qaw
