#include "argmat/parity.hpp"

#include <algorithm>

namespace argmat {

namespace {

// Accumulates the boolean sum of M^k for odd k in [min_odd, max_odd] and
// even k in [2, max_even] in one pass of iterated products.
struct PowerSums {
    BoolMatrix odd;
    BoolMatrix even;
};

PowerSums accumulate_powers(const BoolMatrix& m, int min_odd, int max_odd, int max_even) {
    const int n = m.size();
    PowerSums sums{BoolMatrix(n), BoolMatrix(n)};
    const int last = std::max(max_odd, max_even);
    if (n == 0 || last < 1) {
        return sums;
    }
    BoolMatrix walk = m;  // M^k for the current k
    for (int k = 1; k <= last; ++k) {
        if (k > 1) {
            walk = bool_product(walk, m);
        }
        if (k % 2 == 1) {
            if (k >= min_odd && k <= max_odd) {
                sums.odd.accumulate(walk);
            }
        } else if (k <= max_even) {
            sums.even.accumulate(walk);
        }
    }
    return sums;
}

}  // namespace

BoolMatrix odd_reach_matrix(const Framework& f, OddMinLength min_length) {
    const int n = f.size();
    return accumulate_powers(attack_matrix(f), static_cast<int>(min_length), 2 * n + 1, 0).odd;
}

BoolMatrix even_reach_matrix(const Framework& f) {
    const int n = f.size();
    return accumulate_powers(attack_matrix(f), 3, 0, 2 * n).even;
}

BoolMatrix paper_odd_reach_matrix(const Framework& f) {
    const int n = f.size();
    const int max_odd = n % 2 == 1 ? n : n - 1;  // greatest odd <= n (may be < 3)
    return accumulate_powers(attack_matrix(f), 3, max_odd, 0).odd;
}

BoolMatrix paper_even_reach_matrix(const Framework& f) {
    const int n = f.size();
    const int max_even = n % 2 == 0 ? n : n - 1;
    return accumulate_powers(attack_matrix(f), 3, 0, max_even).even;
}

BoolMatrix odd_reach_for_mode(const Framework& f, DecisionMode mode) {
    return mode == DecisionMode::corrected ? odd_reach_matrix(f, OddMinLength::three)
                                           : paper_odd_reach_matrix(f);
}

}  // namespace argmat
