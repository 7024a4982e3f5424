#pragma once

#include "qaw/qcore.hpp"
#include "qaw/report.hpp"
#include "qaw/skew_laurent.hpp"

namespace qaw {

/// Images of S+, S-, q^{s3}, q^{-s3} as q-difference operators on V_nu.
struct ChevalleySet {
  SkewLaurentOp s_plus;
  SkewLaurentOp s_minus;
  SkewLaurentOp k_plus;
  SkewLaurentOp k_minus;
};

/// Holomorphic realization: K+ = u^{-1} T, K- = u T^{-1},
/// S+ = z (u^2 T^{-1} - u^{-2} T)/(q - q^{-1}), S- = -z^{-1} (T^{-1} - T)/(q - q^{-1}).
ChevalleySet chevalley(const ParamPoint& p);

SkewLaurentOp casimir_op(const ChevalleySet& g);
/// omega_nu = (q u^2 + q^{-1} u^{-2})/(q - q^{-1})^2, the value of the Casimir on V_nu.
Rational casimir_value(const ParamPoint& p);

struct EquitableSet {
  SkewLaurentOp x;
  SkewLaurentOp y;
  SkewLaurentOp y_inv;
  SkewLaurentOp z;
};

EquitableSet equitable(const ParamPoint& p, const ChevalleySet& g);

struct WPair {
  SkewLaurentOp w0;
  SkewLaurentOp w1;
};

/// W0 = c0 S+K+ + cbar0 S-K+ + eps0 K+^2 + mu0, W1 likewise with index 1 and K-.
WPair build_w(const ParamPoint& p, const ChevalleySet& g);

/// G1 = q W1 W0 - q^{-1} W0 W1.
SkewLaurentOp build_g1(const WPair& w);

struct GCoefficients {
  Rational g1, g2, g3, g2p, g3p, g4, g5, g6;
};

/// Closed-form coefficients of G1 in the Chevalley basis, Casimir -> omega_nu.
GCoefficients g_coeffs(const ParamPoint& p);

/// g1 S-^2 + g2 S-K- + g3 S-K+ + g2' S+K- + g3' S+K+ + g4 K+^2 + g5 K-^2 + g6.
SkewLaurentOp g_operator(const GCoefficients& g, const ChevalleySet& ch);

struct AWStructureConstants {
  Rational rho0, rho1, omega, gamma0, gamma1, eta0, eta1;
};

AWStructureConstants aw_constants(const ParamPoint& p);

struct EquitableABC {
  SkewLaurentOp a;
  SkewLaurentOp b;
  SkewLaurentOp c;
};

/// A, B, C built from the equitable generators X, Y, Z and the scalars a, b, c.
/// Throws DegenerateError if any of a, b, c is zero.
EquitableABC equitable_abc(const ParamPoint& p);

/// The same three operators written directly in the Chevalley generators.
EquitableABC equitable_abc_chevalley(const ParamPoint& p, const ChevalleySet& g);

/// Lambda = (q - q^{-1})^2 omega_nu.
Rational normalized_casimir(const ParamPoint& p);

Reports verify_chevalley(const ParamPoint& p);
Reports verify_g_table(const ParamPoint& p);
/// Askey-Wilson relations; for little and big profiles also the reduced relations.
Reports verify_aw(const ParamPoint& p);
Reports verify_equitable_aw(const ParamPoint& p);

}  // namespace qaw
