#pragma once

#include <vector>

#include <gmpxx.h>

namespace rephom {

// Smith normal form of a dense integer matrix; verification oracle for the
// sparse rank path. Returns the nonzero elementary divisors d_1 | d_2 | ...
std::vector<mpz_class> snf_oracle(std::vector<std::vector<mpz_class>> a);

} // namespace rephom
