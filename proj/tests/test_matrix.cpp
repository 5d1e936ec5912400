#include <doctest.h>

#include <random>

#include "argmat/bool_matrix.hpp"
#include "argmat/errors.hpp"
#include "argmat/parity.hpp"
#include "support/fixtures.hpp"
#include "support/walk_oracle.hpp"

using namespace argmat;
using namespace argmat::testing;

TEST_CASE("attack matrix of the 3-cycle") {
    CHECK(attack_matrix(cycle3()).to_text() == "010\n001\n100\n");
}

TEST_CASE("attack matrix of mutual4") {
    CHECK(attack_matrix(mutual4()).to_text() == "0110\n1010\n0001\n0000\n");
}

TEST_CASE("attack matrix of defense6") {
    CHECK(attack_matrix(defense6()).to_text() ==
          "000000\n100000\n100000\n001000\n010100\n001000\n");
}

TEST_CASE("attack matrix with no attacks is zero") {
    const BoolMatrix m = attack_matrix(numbered(3, {}));
    CHECK_FALSE(m.any());
    CHECK(m.size() == 3);
}

TEST_CASE("bool_product finds two-step walks") {
    const BoolMatrix m = attack_matrix(defense6());
    const BoolMatrix m2 = bool_product(m, m);
    CHECK(m2.test(5, 1));  // 5 -> 2 -> 1
    CHECK(m2.test(5, 3));  // 5 -> 4 -> 3
    CHECK(m2.test(4, 1));  // 4 -> 3 -> 1

    const BoolMatrix zero(6);
    CHECK_FALSE(bool_product(zero, m).any());
    CHECK_THROWS_AS(bool_product(zero, BoolMatrix(3)), DimensionMismatchError);
}

TEST_CASE("bool_product on the 3-cycle, checked against the walk enumerator") {
    const Framework f = cycle3();
    const WalkOracle walks(f);
    const BoolMatrix m2 = bool_product(attack_matrix(f), attack_matrix(f));
    // Frozen from the enumerator: the only length-2 walks are 1->3, 2->1, 3->2.
    CHECK(walks.exact(1, 3, 2));
    CHECK_FALSE(walks.exact(1, 2, 2));
    CHECK(m2.test(1, 3));
    CHECK_FALSE(m2.test(1, 2));
    for (ArgId i = 1; i <= 3; ++i) {
        for (ArgId j = 1; j <= 3; ++j) {
            CHECK(m2.test(i, j) == walks.exact(i, j, 2));
        }
    }
}

TEST_CASE("bool_power walks of exact length") {
    const BoolMatrix m = attack_matrix(defense6());
    CHECK(bool_power(m, 3).test(5, 1));  // 5 -> 4 -> 3 -> 1
    CHECK(bool_power(m, 1) == m);
    CHECK_THROWS_AS(bool_power(m, 0), IndexOutOfRangeError);

    const BoolMatrix cyc3 = bool_power(attack_matrix(cycle3()), 3);
    for (ArgId i = 1; i <= 3; ++i) {
        CHECK(cyc3.test(i, i));  // the cycle returns to its start in 3 steps
    }
}

TEST_CASE("bool_power agrees with the walk enumerator exhaustively (n <= 4)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const Framework f = random_framework(n, 0.4, rng);
        const WalkOracle walks(f);
        const BoolMatrix m = attack_matrix(f);
        for (int k = 1; k <= 2 * n; ++k) {
            const BoolMatrix mk = bool_power(m, k);
            for (ArgId i = 1; i <= n; ++i) {
                for (ArgId j = 1; j <= n; ++j) {
                    CAPTURE(n, k, i, j);
                    CHECK(mk.test(i, j) == walks.exact(i, j, k));
                }
            }
        }
    }
}

TEST_CASE("count_length2_walks counts middles exactly") {
    const CountMatrix diam = count_length2_walks(attack_matrix(diamond4()));
    CHECK(diam.at(1, 4) == 2);
    CHECK(diam.at(1, 2) == 0);

    CHECK(count_length2_walks(BoolMatrix(4)).at(1, 1) == 0);

    const Framework f = defense6();
    const WalkOracle walks(f);
    const CountMatrix counts = count_length2_walks(attack_matrix(f));
    CHECK(counts.at(5, 1) == 1);
    CHECK(counts.at(5, 3) == 1);
    for (ArgId i = 1; i <= 6; ++i) {
        for (ArgId j = 1; j <= 6; ++j) {
            CHECK(counts.at(i, j) == walks.count_len2(i, j));
        }
    }
}

TEST_CASE("counts are positive exactly where the boolean square is set") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Framework f = random_framework(2 + static_cast<int>(rng() % 7), 0.3, rng);
        const BoolMatrix m = attack_matrix(f);
        const BoolMatrix m2 = bool_product(m, m);
        const CountMatrix counts = count_length2_walks(m);
        for (ArgId i = 1; i <= f.size(); ++i) {
            for (ArgId j = 1; j <= f.size(); ++j) {
                CHECK((counts.at(i, j) > 0) == m2.test(i, j));
            }
        }
    }
}

TEST_CASE("odd reach on defense6") {
    const BoolMatrix odd = odd_reach_matrix(defense6(), OddMinLength::three);
    CHECK(odd.test(5, 1));  // 5 -> 4 -> 3 -> 1
    CHECK_FALSE(odd_reach_matrix(numbered(4, {}), OddMinLength::one).any());
}

TEST_CASE("even reach on defense6 and the 3-cycle") {
    CHECK(even_reach_matrix(defense6()).test(5, 1));  // 5 -> 2 -> 1
    CHECK_FALSE(even_reach_matrix(numbered(1, {})).any());

    // Cycles make even reach dense: 1 -> 2 -> 3 -> 1 -> 2 has length 4.
    const BoolMatrix even = even_reach_matrix(cycle3());
    CHECK(even.test(1, 2));
    for (ArgId i = 1; i <= 3; ++i) {
        for (ArgId j = 1; j <= 3; ++j) {
            CHECK(even.test(i, j));
        }
    }
}

TEST_CASE("tail5: the odd walk 1 -> 5 appears only past the truncated sum") {
    const Framework f = tail5();
    const WalkOracle walks(f);
    // Frozen from the enumerator: no odd walk up to length 5, one at 7.
    CHECK_FALSE(walks.odd_up_to(1, 5, 3, 5));
    CHECK(walks.exact(1, 5, 7));

    CHECK(odd_reach_matrix(f, OddMinLength::three).test(1, 5));
    CHECK(odd_reach_matrix(f, OddMinLength::one).test(1, 5));
    CHECK_FALSE(paper_odd_reach_matrix(f).test(1, 5));
}

TEST_CASE("3-cycle: minimum-length-3 odd reach needs walks past 2n-1") {
    // Odd walks 1 -> 2 have lengths 1, 7, 13, ...; the shortest of length
    // >= 3 is 7 = 2n+1, so a sum stopping at 2n-1 would miss it.
    const Framework f = cycle3();
    const WalkOracle walks(f);
    CHECK_FALSE(walks.odd_up_to(1, 2, 3, 5));
    CHECK(walks.exact(1, 2, 7));
    CHECK(odd_reach_matrix(f, OddMinLength::three).test(1, 2));
}

TEST_CASE("paper truncations keep only short parity witnesses") {
    const Framework f = defense6();
    const BoolMatrix odd = paper_odd_reach_matrix(f);   // odd k in {3, 5}
    const BoolMatrix even = paper_even_reach_matrix(f); // even k in {2, 4, 6}
    CHECK(odd.test(5, 1));
    CHECK(even.test(5, 1));

    // For n = 2 there is no odd power in [3, n], so the sum is empty.
    const Framework two = numbered(2, {{1, 2}, {2, 1}});
    CHECK_FALSE(paper_odd_reach_matrix(two).any());
    CHECK(paper_even_reach_matrix(two).test(1, 1));
}

TEST_CASE("corrected parity sums match the walk enumerator") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Framework f = random_framework(n, 0.35, rng);
        const WalkOracle walks(f);
        const BoolMatrix odd1 = odd_reach_matrix(f, OddMinLength::one);
        const BoolMatrix odd3 = odd_reach_matrix(f, OddMinLength::three);
        const BoolMatrix even = even_reach_matrix(f);
        const int cap = 2 * n + 3;  // beyond every minimal witness
        for (ArgId i = 1; i <= n; ++i) {
            for (ArgId j = 1; j <= n; ++j) {
                CAPTURE(trial, i, j);
                CHECK(odd1.test(i, j) == walks.odd_up_to(i, j, 1, cap));
                CHECK(odd3.test(i, j) == walks.odd_up_to(i, j, 3, cap));
                CHECK(even.test(i, j) == walks.even_up_to(i, j, 2, cap));
            }
        }
    }
}
