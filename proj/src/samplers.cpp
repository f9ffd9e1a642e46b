#include "rephom/samplers.hpp"

#include <functional>

namespace rephom {

std::vector<std::vector<int>> diagonal_root_exponents(int p, int n, bool det_one) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // nondecreasing exponent tuples = diagonal matrices up to permutation
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == n) {
            if (det_one) {
                int sum = 0;
                for (int e : cur) sum += e;
                if (sum % p != 0) return;
            }
            out.push_back(cur);
            return;
        }
        for (int e = lo; e < p; ++e) {
            cur[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, e);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace rephom
