#pragma once

// Run sizes for the verification suites. Desk scale keeps every suite in
// CI time; full scale restores the ranges of the original experiments.
//
//   quantity                          desk     full
//   survey exponents (Delta^-a etc.)  <= 64    original ranges (to 140)
//   j, 1/Delta comparison n_max       512      2470
//   1/j, Delta comparison n_max       512      4096
//   Lehner congruences, arguments     512      4096
//   Satz / gap weight bound, level 2  40       40
//   Satz weight bound, level 1        36       36
//   random gap combinations / weight  20       20
//   Einf4^-s, s = 2^x up to           64       1024
//   Delta^-s, s = 2^x D up to         80       640
//   T-series congruence weights up to 200      600
//   theta series terms                50       50
//   Gram matrix rank cap              16       16

#include <cstdint>

namespace qgap::defaults {

struct Scale {
  bool full = false;
  std::int64_t delta_compare_n_max = 512;
  std::int64_t reciprocal_n_max = 512;
  std::int64_t lehner_n_max = 512;
  std::int64_t satz_level2_h_max = 40;
  std::int64_t satz_level1_h_max = 36;
  int gap_random_per_weight = 20;
  std::uint64_t gap_seed = 20240607;
  std::int64_t einf4_s_max = 64;
  std::int64_t delta_s_max = 80;
  std::int64_t t_h_max = 200;
  std::int64_t theta_terms = 50;
  std::int64_t rank_cap = 16;
};

inline Scale desk() { return {}; }

inline Scale full() {
  Scale s;
  s.full = true;
  s.delta_compare_n_max = 2470;
  s.reciprocal_n_max = 4096;
  s.lehner_n_max = 4096;
  s.einf4_s_max = 1024;
  s.delta_s_max = 640;
  s.t_h_max = 600;
  return s;
}

inline Scale scale(bool full_ranges) { return full_ranges ? full() : desk(); }

}  // namespace qgap::defaults
