#pragma once

// Generator catalog for levels 1-3 and their q-expansions at infinity.
//
// Every expansion function takes `prec`, the number of justified
// coefficients counted from the valuation: delta(3) = q - 24q^2 + 252q^3,
// j_invariant(3) = q^-1 + 744 + 196884q.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qgap/qseries.hpp"

namespace qgap::forms {

enum class GeneratorKind {
  G,        // G(h): level-one Eisenstein series, h even >= 0 (G(0) = 1, G(2) quasi-modular)
  Delta,
  J,
  Egamma2,
  E04,
  Einf4,
  EN,       // E(N,inf,k)
  Delta2,
  J2,
  PhiSmall, // phi(N) = Delta(Nz)/Delta(z)
  PhiBig,   // Phi(N) = phi(N)^(1/(N-1))
  S,        // S(n,d)
  T,        // T(h), level one
  T2,       // T2(h), level two
};

struct Generator {
  GeneratorKind kind = GeneratorKind::Delta;
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;

  static Generator G(std::int64_t h) { return {GeneratorKind::G, h, 0}; }
  static Generator Delta() { return {GeneratorKind::Delta, 0, 0}; }
  static Generator J() { return {GeneratorKind::J, 0, 0}; }
  static Generator Egamma2() { return {GeneratorKind::Egamma2, 0, 0}; }
  static Generator E04() { return {GeneratorKind::E04, 0, 0}; }
  static Generator Einf4() { return {GeneratorKind::Einf4, 0, 0}; }
  static Generator EN(std::int64_t N, std::int64_t k) { return {GeneratorKind::EN, N, k}; }
  static Generator Delta2() { return {GeneratorKind::Delta2, 0, 0}; }
  static Generator J2() { return {GeneratorKind::J2, 0, 0}; }
  static Generator phi(std::int64_t N) { return {GeneratorKind::PhiSmall, N, 0}; }
  static Generator Phi(std::int64_t N) { return {GeneratorKind::PhiBig, N, 0}; }
  static Generator S(std::int64_t n, std::int64_t d) { return {GeneratorKind::S, n, d}; }
  static Generator T(std::int64_t h) { return {GeneratorKind::T, h, 0}; }
  static Generator T2(std::int64_t h) { return {GeneratorKind::T2, h, 0}; }

  /// Throws DomainError when the parameters are outside the catalog.
  void validate() const;

  std::int64_t weight() const;
  /// Exponent of the leading (monic) term.
  std::int64_t valuation() const;
  /// 1, 2 or 3.
  std::int64_t conductor() const;
  /// False only for the quasi-modular G(2).
  bool is_modular() const;
  /// Canonical text in the expression grammar, e.g. "E(3,inf,6)".
  std::string name() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// r(N, h): dim M(N, h) for N in {1, 2}, h even >= 0.
std::int64_t dim_M(std::int64_t N, std::int64_t h);

QSeries eisenstein_G(std::int64_t h, std::int64_t prec);
QSeries delta(std::int64_t prec);
QSeries j_invariant(std::int64_t prec);

struct Level2Eisenstein {
  QSeries egamma2;
  QSeries e04;
  QSeries einf4;
};
Level2Eisenstein level2_eisenstein(std::int64_t prec);
QSeries egamma2(std::int64_t prec);
QSeries e04(std::int64_t prec);
QSeries einf4(std::int64_t prec);
QSeries eisenstein_EN_inf(std::int64_t N, std::int64_t k, std::int64_t prec);

QSeries delta2(std::int64_t prec);
QSeries j2(std::int64_t prec);
/// m2 = j2 - 64.
QSeries m2(std::int64_t prec);
QSeries phi(std::int64_t N, std::int64_t prec);
QSeries Phi(std::int64_t N, std::int64_t prec);
QSeries S(std::int64_t n, std::int64_t d, std::int64_t prec);

struct DerivedForms {
  QSeries delta2;
  QSeries j2;
  QSeries m2;
  QSeries phi2;
  QSeries phi3;
  QSeries Phi2;
  QSeries Phi3;
};
DerivedForms derived_forms(std::int64_t prec);

/// Weight of T_h; G-index 12r - h + 2 (0 when h = 2 mod 12).
std::int64_t t_series_eisenstein_index(std::int64_t h);
/// T_h (level 1, even h > 2) or T_{2,h} (level 2, even h >= 2); weight 2 - h.
QSeries t_series(std::int64_t level, std::int64_t h, std::int64_t prec);
/// Pole order of T_h resp. T_{2,h}.
std::int64_t t_series_pole_order(std::int64_t level, std::int64_t h);

/// {G4^a G6^b : 4a + 6b = h}, ordered by increasing a.
std::vector<QSeries> basis_M1(std::int64_t h, std::int64_t prec);
/// {j2^d E_inf4^(r-1)} (h = 0 mod 4) or {j2^d E_gamma2 E_inf4^(r-1)} (h = 2 mod 4), d = 0..r-1.
std::vector<QSeries> basis_M2(std::int64_t h, std::int64_t prec);

QSeries expand(const Generator& g, std::int64_t prec);

}  // namespace qgap::forms
