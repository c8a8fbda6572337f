#include "qgap/forms.hpp"

#include <algorithm>

#include "qgap/error.hpp"

namespace qgap::forms {

namespace {

void require_prec(std::int64_t prec) {
  if (prec <= 0) throw DomainError("precision must be positive, got " + std::to_string(prec));
}

void require_even(std::int64_t h, std::int64_t min, const char* what) {
  if (h % 2 != 0 || h < min)
    throw DomainError(std::string(what) + ": weight must be even and >= " + std::to_string(min) + ", got " +
                      std::to_string(h));
}

void require_level23(std::int64_t N, const char* what) {
  if (N != 2 && N != 3) throw DomainError(std::string(what) + ": N must be 2 or 3, got " + std::to_string(N));
}

// c0 + scale * sum_{n>=1} a(n) q^n, exponents 0..prec-1.
template <typename Coeff>
QSeries divisor_series(const Rational& c0, const Rational& scale, std::int64_t prec, Coeff&& a) {
  require_prec(prec);
  std::vector<Rational> cs(static_cast<std::size_t>(prec));
  cs[0] = c0;
  for (std::int64_t n = 1; n < prec; ++n) cs[static_cast<std::size_t>(n)] = scale * Rational(a(n));
  return QSeries(0, std::move(cs));
}

}  // namespace

void Generator::validate() const {
  switch (kind) {
    case GeneratorKind::G:
      require_even(p1, 0, "G(h)");
      break;
    case GeneratorKind::EN:
      require_level23(p1, "E(N,inf,k)");
      require_even(p2, 4, "E(N,inf,k)");
      break;
    case GeneratorKind::PhiSmall:
      require_level23(p1, "phi(N)");
      break;
    case GeneratorKind::PhiBig:
      require_level23(p1, "Phi(N)");
      break;
    case GeneratorKind::S:
      if (p2 < 1 || p2 > 4 || p1 < 1 || p1 > p2)
        throw DomainError("S(n,d): need 1 <= d <= 4 and 1 <= n <= d, got S(" + std::to_string(p1) + "," +
                          std::to_string(p2) + ")");
      break;
    case GeneratorKind::T:
      require_even(p1, 4, "T(h)");
      break;
    case GeneratorKind::T2:
      require_even(p1, 2, "T2(h)");
      break;
    default:
      break;
  }
}

std::int64_t Generator::weight() const {
  switch (kind) {
    case GeneratorKind::G: return p1;
    case GeneratorKind::Delta: return 12;
    case GeneratorKind::J: return 0;
    case GeneratorKind::Egamma2: return 2;
    case GeneratorKind::E04: return 4;
    case GeneratorKind::Einf4: return 4;
    case GeneratorKind::EN: return p2;
    case GeneratorKind::Delta2: return 8;
    case GeneratorKind::J2: return 0;
    case GeneratorKind::PhiSmall: return 0;
    case GeneratorKind::PhiBig: return 0;
    case GeneratorKind::S: return 24;
    case GeneratorKind::T: return 2 - p1;
    case GeneratorKind::T2: return 2 - p1;
  }
  return 0;
}

std::int64_t Generator::valuation() const {
  switch (kind) {
    case GeneratorKind::G: return 0;
    case GeneratorKind::Delta: return 1;
    case GeneratorKind::J: return -1;
    case GeneratorKind::Egamma2: return 0;
    case GeneratorKind::E04: return 0;
    case GeneratorKind::Einf4: return 1;
    case GeneratorKind::EN: return 1;
    case GeneratorKind::Delta2: return 1;
    case GeneratorKind::J2: return -1;
    case GeneratorKind::PhiSmall: return p1 - 1;
    case GeneratorKind::PhiBig: return 1;
    case GeneratorKind::S: return 1;
    case GeneratorKind::T: return -t_series_pole_order(1, p1);
    case GeneratorKind::T2: return -t_series_pole_order(2, p1);
  }
  return 0;
}

std::int64_t Generator::conductor() const {
  switch (kind) {
    case GeneratorKind::G:
    case GeneratorKind::Delta:
    case GeneratorKind::J:
    case GeneratorKind::S:
    case GeneratorKind::T:
      return 1;
    case GeneratorKind::EN:
    case GeneratorKind::PhiSmall:
    case GeneratorKind::PhiBig:
      return p1;
    default:
      return 2;
  }
}

bool Generator::is_modular() const { return !(kind == GeneratorKind::G && p1 == 2); }

std::string Generator::name() const {
  const auto s = [](std::int64_t x) { return std::to_string(x); };
  switch (kind) {
    case GeneratorKind::G: return "G(" + s(p1) + ")";
    case GeneratorKind::Delta: return "Delta";
    case GeneratorKind::J: return "j";
    case GeneratorKind::Egamma2: return "Egamma2";
    case GeneratorKind::E04: return "E04";
    case GeneratorKind::Einf4: return "Einf4";
    case GeneratorKind::EN: return "E(" + s(p1) + ",inf," + s(p2) + ")";
    case GeneratorKind::Delta2: return "Delta2";
    case GeneratorKind::J2: return "j2";
    case GeneratorKind::PhiSmall: return "phi(" + s(p1) + ")";
    case GeneratorKind::PhiBig: return "Phi(" + s(p1) + ")";
    case GeneratorKind::S: return "S(" + s(p1) + "," + s(p2) + ")";
    case GeneratorKind::T: return "T(" + s(p1) + ")";
    case GeneratorKind::T2: return "T2(" + s(p1) + ")";
  }
  return "?";
}

std::int64_t dim_M(std::int64_t N, std::int64_t h) {
  if (h < 0 || h % 2 != 0) throw DomainError("dim_M: weight must be even and nonnegative, got " + std::to_string(h));
  if (N == 1) return floor_mod(h, 12) == 2 ? h / 12 : h / 12 + 1;
  if (N == 2) return h / 4 + 1;
  throw DomainError("dim_M: only levels 1 and 2 are supported, got " + std::to_string(N));
}

QSeries eisenstein_G(std::int64_t h, std::int64_t prec) {
  require_even(h, 0, "eisenstein_G");
  require_prec(prec);
  if (h == 0) return QSeries::one(prec);
  const unsigned k = static_cast<unsigned>(h - 1);
  return divisor_series(1, alpha_coeff(h), prec, [k](std::int64_t n) { return sigma(n, k); });
}

QSeries delta(std::int64_t prec) {
  require_prec(prec);
  const QSeries p = product_expand([](std::int64_t) { return 24; }, prec);
  return QSeries(1, std::vector<Rational>(p.coefficients().begin(), p.coefficients().end()));
}

QSeries j_invariant(std::int64_t prec) {
  require_prec(prec);
  return pow_int(eisenstein_G(4, prec), 3) * invert(delta(prec));
}

QSeries egamma2(std::int64_t prec) {
  return divisor_series(1, 24, prec, [](std::int64_t n) { return sigma_odd(n); });
}

QSeries e04(std::int64_t prec) {
  return divisor_series(1, 16, prec, [](std::int64_t n) { return sigma_alt(n, 3); });
}

QSeries einf4(std::int64_t prec) { return eisenstein_EN_inf(2, 4, prec); }

Level2Eisenstein level2_eisenstein(std::int64_t prec) { return {egamma2(prec), e04(prec), einf4(prec)}; }

QSeries eisenstein_EN_inf(std::int64_t N, std::int64_t k, std::int64_t prec) {
  require_level23(N, "eisenstein_EN_inf");
  require_even(k, 4, "eisenstein_EN_inf");
  require_prec(prec);
  std::vector<Rational> cs(static_cast<std::size_t>(prec));
  for (std::int64_t n = 1; n <= prec; ++n)
    cs[static_cast<std::size_t>(n - 1)] = sigma_star(n, N, static_cast<unsigned>(k - 1));
  return QSeries(1, std::move(cs));
}

QSeries delta2(std::int64_t prec) { return e04(prec) * einf4(prec); }

QSeries j2(std::int64_t prec) { return pow_int(egamma2(prec), 2) * invert(einf4(prec)); }

QSeries m2(std::int64_t prec) {
  const QSeries j = j2(prec);
  return j - QSeries::monomial(64, 0, std::max<std::int64_t>(j.reach(), 1));
}

QSeries phi(std::int64_t N, std::int64_t prec) {
  require_level23(N, "phi");
  const QSeries d = delta(prec);
  return rescale(d, N) * invert(d);
}

QSeries Phi(std::int64_t N, std::int64_t prec) {
  require_level23(N, "Phi");
  return root(phi(N, prec), N - 1);
}

QSeries S(std::int64_t n, std::int64_t d, std::int64_t prec) {
  Generator::S(n, d).validate();
  const Rational ratio = make_rational(n, d);
  const QSeries mix = pow_int(eisenstein_G(4, prec), 3) * ratio + pow_int(eisenstein_G(6, prec), 2) * (1 - ratio);
  return delta(prec) * mix;
}

DerivedForms derived_forms(std::int64_t prec) {
  DerivedForms f;
  f.delta2 = delta2(prec);
  f.j2 = j2(prec);
  f.m2 = m2(prec);
  f.phi2 = phi(2, prec);
  f.phi3 = phi(3, prec);
  f.Phi2 = f.phi2;
  f.Phi3 = root(f.phi3, 2);
  return f;
}

std::int64_t t_series_eisenstein_index(std::int64_t h) {
  require_even(h, 4, "T(h)");
  const std::int64_t r = dim_M(1, h);
  return 12 * r - h + 2;
}

std::int64_t t_series_pole_order(std::int64_t level, std::int64_t h) {
  if (level == 1) {
    require_even(h, 4, "T(h)");
    return dim_M(1, h);
  }
  if (level == 2) {
    require_even(h, 2, "T2(h)");
    const std::int64_t r = dim_M(2, h);
    return h % 4 == 0 ? r : r + 1;
  }
  throw DomainError("t_series: level must be 1 or 2");
}

QSeries t_series(std::int64_t level, std::int64_t h, std::int64_t prec) {
  require_prec(prec);
  const std::int64_t pole = t_series_pole_order(level, h);
  if (level == 1) {
    return eisenstein_G(t_series_eisenstein_index(h), prec) * pow_int(delta(prec), -pole);
  }
  const QSeries eg = egamma2(prec);
  const QSeries head = h % 4 == 0 ? eg * e04(prec) : pow_int(eg, 2) * e04(prec);
  return head * pow_int(einf4(prec), -pole);
}

std::vector<QSeries> basis_M1(std::int64_t h, std::int64_t prec) {
  require_even(h, 0, "basis_M1");
  require_prec(prec);
  std::vector<QSeries> out;
  const QSeries g4 = eisenstein_G(4, prec);
  const QSeries g6 = eisenstein_G(6, prec);
  for (std::int64_t a = 0; 4 * a <= h; ++a) {
    if ((h - 4 * a) % 6 != 0) continue;
    out.push_back(pow_int(g4, a) * pow_int(g6, (h - 4 * a) / 6));
  }
  return out;
}

std::vector<QSeries> basis_M2(std::int64_t h, std::int64_t prec) {
  require_even(h, 2, "basis_M2");
  require_prec(prec);
  const std::int64_t r = dim_M(2, h);
  const QSeries j = j2(prec + r);
  QSeries tail = pow_int(einf4(prec + r), r - 1);
  if (h % 4 == 2) tail = tail * egamma2(prec + r);
  std::vector<QSeries> out;
  QSeries jd = QSeries::one(prec + r);
  for (std::int64_t d = 0; d < r; ++d) {
    out.push_back((jd * tail).truncated(prec));
    jd = jd * j;
  }
  return out;
}

QSeries expand(const Generator& g, std::int64_t prec) {
  g.validate();
  switch (g.kind) {
    case GeneratorKind::G: return eisenstein_G(g.p1, prec);
    case GeneratorKind::Delta: return delta(prec);
    case GeneratorKind::J: return j_invariant(prec);
    case GeneratorKind::Egamma2: return egamma2(prec);
    case GeneratorKind::E04: return e04(prec);
    case GeneratorKind::Einf4: return einf4(prec);
    case GeneratorKind::EN: return eisenstein_EN_inf(g.p1, g.p2, prec);
    case GeneratorKind::Delta2: return delta2(prec);
    case GeneratorKind::J2: return j2(prec);
    case GeneratorKind::PhiSmall: return phi(g.p1, prec);
    case GeneratorKind::PhiBig: return Phi(g.p1, prec);
    case GeneratorKind::S: return S(g.p1, g.p2, prec);
    case GeneratorKind::T: return t_series(1, g.p1, prec);
    case GeneratorKind::T2: return t_series(2, g.p1, prec);
  }
  throw DomainError("unknown generator");
}

}  // namespace qgap::forms
