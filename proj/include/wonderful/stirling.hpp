#pragma once

#include <gmpxx.h>

#include <vector>

#include "errors.hpp"

namespace wonderful {

/// Number of partitions of an m-set into j blocks, each of size at least 2.
inline mpz_class stirling2_assoc(int m, int j) {
  if (m < 0 || j < 0) throw domain_error("stirling2_assoc needs nonnegative arguments");
  if (2 * j > m) return 0;
  std::vector<std::vector<mpz_class>> s(m + 1, std::vector<mpz_class>(j + 1, 0));
  s[0][0] = 1;
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= j; ++b) {
      s[a][b] = b * s[a - 1][b];
      if (a >= 2) s[a][b] += (a - 1) * s[a - 2][b - 1];
    }
  return s[m][j];
}

}  // namespace wonderful
