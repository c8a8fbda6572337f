#include "qgap/quadratic.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qgap/error.hpp"

namespace qgap::quadratic {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const Matrix& m) {
  RationalMatrix r(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m[i][j];
  return r;
}

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2: diagonal in d[i], mu in
// the strict upper triangle.
struct Decomposition {
  std::vector<Rational> d;
  RationalMatrix mu;
};

Decomposition decompose(const Matrix& m) {
  const std::size_t v = m.size();
  RationalMatrix a = to_rational(m);
  Decomposition dec{std::vector<Rational>(v), RationalMatrix(v, std::vector<Rational>(v))};
  for (std::size_t i = 0; i < v; ++i) {
    dec.d[i] = a[i][i];
    for (std::size_t j = i + 1; j < v; ++j) dec.mu[i][j] = a[i][j] / a[i][i];
    for (std::size_t k = i + 1; k < v; ++k)
      for (std::size_t j = i + 1; j < v; ++j) a[k][j] -= dec.mu[i][k] * a[i][j];
  }
  return dec;
}

std::string minor_label(std::size_t k) { return "leading minor of order " + std::to_string(k); }

}  // namespace

GramMatrix GramMatrix::validate(Matrix entries) {
  const std::size_t v = entries.size();
  if (v == 0) throw DomainError("Gram matrix is empty");
  for (std::size_t i = 0; i < v; ++i)
    if (entries[i].size() != v)
      throw DomainError("Gram matrix is not square: row " + std::to_string(i + 1) + " has " +
                        std::to_string(entries[i].size()) + " entries, expected " + std::to_string(v));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (entries[i][j] != entries[j][i])
        throw DomainError("Gram matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ")");
  for (std::size_t i = 0; i < v; ++i)
    if (entries[i][i] % 2 != 0)
      throw DomainError("Gram matrix has odd diagonal entry " + std::to_string(entries[i][i]) + " at row " +
                        std::to_string(i + 1));
  // Leading minors via the pivots of symmetric elimination: all positive
  // iff every pivot is positive.
  RationalMatrix a = to_rational(entries);
  Rational minor = 1;
  for (std::size_t k = 0; k < v; ++k) {
    minor *= a[k][k];
    if (a[k][k] <= 0)
      throw DomainError("Gram matrix is not positive definite: " + minor_label(k + 1) + " is " + to_string(minor));
    for (std::size_t i = k + 1; i < v; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < v; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return GramMatrix(std::move(entries));
}

Integer GramMatrix::determinant() const {
  Rational det = 1;
  for (const auto& d : decompose(entries_).d) det *= d;
  return det.get_num();
}

std::vector<std::vector<Rational>> GramMatrix::inverse() const {
  const std::size_t v = entries_.size();
  RationalMatrix a = to_rational(entries_);
  RationalMatrix inv(v, std::vector<Rational>(v));
  for (std::size_t i = 0; i < v; ++i) inv[i][i] = 1;
  // Pivots are the positive leading-minor ratios, so no row swaps are needed.
  for (std::size_t k = 0; k < v; ++k) {
    const Rational p = a[k][k];
    for (std::size_t j = 0; j < v; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < v; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < v; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

std::int64_t GramMatrix::level() const {
  const auto inv = inverse();
  Integer n = 1;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    for (std::size_t j = i; j < inv.size(); ++j) {
      const Rational x = i == j ? Rational(inv[i][i] / 2) : inv[i][j];
      mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    }
  }
  if (!n.fits_slong_p()) throw DomainError("level does not fit in 64 bits");
  return n.get_si();
}

Integer GramMatrix::evaluate(const std::vector<std::int64_t>& x) const {
  if (x.size() != entries_.size()) throw DomainError("vector length does not match the rank");
  Integer q = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) q += Integer(entries_[i][j]) * x[i] * x[j];
  return q;
}

ThetaSeries theta(const GramMatrix& A, std::int64_t n_max) {
  if (n_max < 0) throw DomainError("theta: n_max must be nonnegative");
  const auto dec = decompose(A.entries());
  const Matrix& a = A.entries();
  const std::size_t v = dec.d.size();
  std::vector<long double> d(v);
  std::vector<std::vector<long double>> mu(v, std::vector<long double>(v));
  for (std::size_t i = 0; i < v; ++i) {
    d[i] = dec.d[i].get_d();
    for (std::size_t j = i + 1; j < v; ++j) mu[i][j] = dec.mu[i][j].get_d();
  }
  ThetaSeries counts(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<std::int64_t> tally(counts.size(), 0);
  std::vector<std::int64_t> x(v, 0);
  const std::int64_t bound = 2 * n_max;
  // Pruning runs in floating point with slack, so it may only let extra
  // candidates through; every leaf is then accepted on its exact value.
  const long double slack = 1e-9L * static_cast<long double>(bound + 1);

  // Fix coordinates from the last one down. `budget` is what is left of
  // the bound after the coordinates above i; `q` is Q of those coordinates.
  auto descend = [&](auto&& self, std::size_t i, long double budget, std::int64_t q) -> void {
    long double center = 0;
    std::int64_t cross = 0;
    for (std::size_t j = i + 1; j < v; ++j) {
      center -= mu[i][j] * static_cast<long double>(x[j]);
      cross += a[i][j] * x[j];
    }
    const long double radius = std::sqrt(std::max(0.0L, (budget + slack) / d[i]));
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius));
    for (std::int64_t xi = lo; xi <= hi; ++xi) {
      x[i] = xi;
      const std::int64_t qi = q + a[i][i] * xi * xi + 2 * xi * cross;
      const long double t = static_cast<long double>(xi) - center;
      const long double rest = budget - d[i] * t * t;
      if (i == 0) {
        // qi is even by the evenness of A.
        if (qi <= bound) ++tally[static_cast<std::size_t>(qi / 2)];
      } else if (rest + slack >= 0) {
        self(self, i - 1, rest, qi);
      }
    }
    x[i] = 0;
  };
  descend(descend, v - 1, static_cast<long double>(bound), 0);
  for (std::size_t n = 0; n < counts.size(); ++n) counts[n] = Integer(static_cast<long>(tally[n]));
  return counts;
}

std::int64_t min_represented(const GramMatrix& A) {
  // Q(e_i) = A_ii, so the minimum is at most the smallest diagonal entry.
  std::int64_t diag = A.entry(0, 0);
  for (std::size_t i = 1; i < static_cast<std::size_t>(A.rank()); ++i) diag = std::min(diag, A.entry(i, i));
  const auto t = theta(A, diag / 2);
  for (std::size_t n = 1; n < t.size(); ++n)
    if (t[n] != 0) return static_cast<std::int64_t>(2 * n);
  throw Error("min_represented: no vector found below the diagonal bound");
}

MinimumBoundResult verify_minimum_bound(const GramMatrix& A) {
  MinimumBoundResult r;
  r.rank = A.rank();
  r.level = A.level();
  if (r.level > 2) throw DomainError("minimum bound needs level <= 2, got level " + std::to_string(r.level));
  if (r.rank % 4 != 0) throw DomainError("minimum bound needs 4 | v, got v = " + std::to_string(r.rank));
  r.bound = r.rank % 8 == 0 ? 2 + r.rank / 4 : 2 + r.rank / 2;
  r.minimum = min_represented(A);
  r.verdict = r.minimum <= r.bound ? congruence::Verdict::Pass : congruence::Verdict::Fail;
  // 2n <= 3 + v/4, cleared of denominators.
  if (r.rank % 8 == 4 && r.level == 2) r.within_sharper_bound = 4 * r.minimum <= 12 + r.rank;
  return r;
}

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.entries().size(), m = b.entries().size();
  Matrix e(n + m, std::vector<std::int64_t>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = a.entry(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) e[n + i][n + j] = b.entry(i, j);
  return GramMatrix::validate(std::move(e));
}

GramMatrix scaled(const GramMatrix& a, std::int64_t factor) {
  if (factor <= 0) throw DomainError("scale factor must be positive");
  Matrix e = a.entries();
  for (auto& row : e)
    for (auto& x : row) x *= factor;
  return GramMatrix::validate(std::move(e));
}

GramMatrix d4() {
  return GramMatrix::validate({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}

GramMatrix e8() {
  // Cartan matrix of E8 (Bourbaki labelling).
  return GramMatrix::validate({{2, 0, -1, 0, 0, 0, 0, 0},
                               {0, 2, 0, -1, 0, 0, 0, 0},
                               {-1, 0, 2, -1, 0, 0, 0, 0},
                               {0, -1, -1, 2, -1, 0, 0, 0},
                               {0, 0, 0, -1, 2, -1, 0, 0},
                               {0, 0, 0, 0, -1, 2, -1, 0},
                               {0, 0, 0, 0, 0, -1, 2, -1},
                               {0, 0, 0, 0, 0, 0, -1, 2}});
}

GramMatrix parse_gram(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(no, line);
  }
  if (lines.empty()) throw ParseError("gram file: missing rank line", 0);
  auto read_ints = [](const std::pair<std::size_t, std::string>& l) {
    std::istringstream s(l.second);
    std::vector<std::int64_t> out;
    std::string tok;
    while (s >> tok) {
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw ParseError("gram file line " + std::to_string(l.first) + ": not an integer: '" + tok + "'", l.first);
      out.push_back(x);
    }
    return out;
  };
  const auto head = read_ints(lines[0]);
  if (head.size() != 1 || head[0] <= 0)
    throw ParseError("gram file line " + std::to_string(lines[0].first) + ": expected the rank v >= 1", lines[0].first);
  const auto v = static_cast<std::size_t>(head[0]);
  if (lines.size() != v + 1)
    throw ParseError("gram file: expected " + std::to_string(v) + " matrix rows, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().first);
  Matrix m;
  for (std::size_t i = 1; i <= v; ++i) {
    auto row = read_ints(lines[i]);
    if (row.size() != v)
      throw ParseError("gram file line " + std::to_string(lines[i].first) + ": expected " + std::to_string(v) +
                           " entries, found " + std::to_string(row.size()),
                       lines[i].first);
    m.push_back(std::move(row));
  }
  try {
    return GramMatrix::validate(std::move(m));
  } catch (const DomainError& e) {
    throw DomainError(std::string("gram file: ") + e.what());
  }
}

GramMatrix load_gram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gram file '" + path + "'");
  try {
    return parse_gram(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

}  // namespace qgap::quadratic
