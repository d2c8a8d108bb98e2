#pragma once

namespace pyrenic {

// Work limits for the exponential routes. Exceeding one raises cap-exceeded
// instead of silently truncating a result.
struct RunCaps {
  long long brute_matchings = 250;      // matchings a brute forcing run may visit
  long long antiforcing_matchings = 40; // matchings a brute anti-forcing run may visit
  int antiforcing_width = 25;           // |E \ M| admitted to the subset fallback
  int oracle_max_n = 6;                 // chain length for per-matching oracle sweeps
  int arith_max_n = 40;                 // chain length for recurrence / closed-form routes
};

}  // namespace pyrenic
