#include <haarcalc/partitions.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace haarcalc;

namespace {

std::vector<std::vector<int>> permutations_of(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Partition cycle_type_of(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size());
    std::vector<int> parts;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        if (len > 0) {
            parts.push_back(len);
        }
    }
    return Partition::from_parts(parts);
}

int fixed_points(const std::vector<int>& perm)
{
    int f = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        f += perm[i] == static_cast<int>(i);
    }
    return f;
}

int permutation_sign(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            inv += perm[a] > perm[b];
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

TEST(Partitions, EnumerateSmall)
{
    const auto p0 = enumerate_partitions(0);
    ASSERT_EQ(p0.size(), 1u);
    EXPECT_TRUE(p0[0].empty());

    const auto p4 = enumerate_partitions(4);
    ASSERT_EQ(p4.size(), 5u);
    const std::vector<std::string> expected{"1^4", "1^2 2^1", "2^2", "1^1 3^1", "4^1"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(to_string(p4[i]), expected[i]);
    }
    EXPECT_EQ(enumerate_partitions(10).size(), 42u);
    EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);
}

TEST(Partitions, EachPartitionOnceAndSorted)
{
    for (int n = 1; n <= 9; ++n) {
        const auto ps = enumerate_partitions(n);
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
        EXPECT_EQ(std::adjacent_find(ps.begin(), ps.end()), ps.end());
        for (const auto& p : ps) {
            EXPECT_EQ(p.weight(), n);
        }
    }
}

TEST(Partitions, TextRoundTrip)
{
    for (int n = 0; n <= 7; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            EXPECT_EQ(parse_partition(to_string(p)), p);
        }
    }
    EXPECT_EQ(parse_partition("2 1 1"), parse_partition("1^2 2^1"));
    EXPECT_THROW(parse_partition("a^2"), std::invalid_argument);
    EXPECT_THROW(parse_partition("0^1"), std::invalid_argument);
}

TEST(Partitions, Arithmetic)
{
    const Partition a = parse_partition("1^2 3^1");
    EXPECT_EQ(a.weight(), 5);
    EXPECT_EQ(a.cycles(), 3);
    EXPECT_EQ(a.without_part(3), Partition::identity(2));
    EXPECT_EQ(a + parse_partition("2^1"), parse_partition("1^2 2^1 3^1"));
    EXPECT_THROW(a.without_part(2), std::invalid_argument);
}

TEST(ClassSize, Examples)
{
    EXPECT_EQ(class_size(Partition::identity(5)), 1);
    EXPECT_EQ(class_size(parse_partition("3^1")), 2);
    for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const auto& a : enumerate_partitions(n)) {
            total += class_size(a);
        }
        EXPECT_EQ(total, factorial(static_cast<unsigned long>(n)));
    }
}

TEST(ClassSize, MatchesBruteForceCount)
{
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, int> counts;
        for (const auto& perm : permutations_of(n)) {
            ++counts[cycle_type_of(perm)];
        }
        for (const auto& a : enumerate_partitions(n)) {
            EXPECT_EQ(class_size(a), counts[a]) << to_string(a);
        }
    }
}

TEST(Character, Examples)
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : enumerate_partitions(n)) {
            EXPECT_EQ(character(YoungDiagram({n}), a), 1);
        }
    }
    EXPECT_EQ(character(YoungDiagram({1, 1, 1}), parse_partition("3^1")), 1);
    EXPECT_EQ(character(YoungDiagram({2, 1}), Partition::identity(3)), 2);
    EXPECT_THROW(character(YoungDiagram({2, 1}), Partition::identity(4)), std::invalid_argument);
}

// Standard representation [n-1, 1]: its character is (fixed points - 1), read off
// the permutation matrices. The sign representation [1^n] is the permutation sign.
TEST(Character, BruteForceStandardAndSign)
{
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> std_rows{n - 1, 1};
        const YoungDiagram standard(std_rows);
        const YoungDiagram sign_rep(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& perm : permutations_of(n)) {
            const Partition a = cycle_type_of(perm);
            EXPECT_EQ(character(standard, a), fixed_points(perm) - 1);
            EXPECT_EQ(character(sign_rep, a), permutation_sign(perm));
        }
    }
}

TEST(Character, Orthogonality)
{
    for (int n = 1; n <= 6; ++n) {
        const auto diagrams = enumerate_diagrams(n);
        const auto classes = enumerate_partitions(n);
        for (const auto& l : diagrams) {
            for (const auto& m : diagrams) {
                BigInt sum = 0;
                for (const auto& a : classes) {
                    sum += class_size(a) * character(l, a) * character(m, a);
                }
                EXPECT_EQ(sum, l == m ? factorial(static_cast<unsigned long>(n)) : BigInt(0));
            }
        }
    }
}

TEST(Character, DimensionConsistency)
{
    for (int n = 1; n <= 6; ++n) {
        BigInt squares = 0;
        for (const auto& l : enumerate_diagrams(n)) {
            const BigInt d = character(l, Partition::identity(n));
            EXPECT_EQ(d, hook_dimension(l));
            squares += d * d;
        }
        EXPECT_EQ(squares, factorial(static_cast<unsigned long>(n)));
    }
}

TEST(DimGL, Examples)
{
    EXPECT_EQ(dim_gl(YoungDiagram({1})), PolyN::variable());
    EXPECT_EQ(dim_gl(YoungDiagram({2})),
              PolyN::variable() * PolyN::linear(BigRational(1)) * BigRational(1, 2));
}

// s_[1^k](I_N) counts strictly decreasing fillings of one column from {1..N},
// i.e. k-subsets; count them by enumeration.
TEST(DimGL, ColumnMatchesSubsetCount)
{
    for (int k = 1; k <= 4; ++k) {
        const PolyN d = dim_gl(YoungDiagram(std::vector<int>(static_cast<std::size_t>(k), 1)));
        for (int n = 0; n <= 7; ++n) {
            int count = 0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                count += __builtin_popcount(mask) == k;
            }
            EXPECT_EQ(d(BigRational(n)), count) << "k=" << k << " N=" << n;
        }
    }
}

TEST(DimGL, NonnegativeAndVanishesOnlyForTooManyRows)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& l : enumerate_diagrams(n)) {
            const PolyN d = dim_gl(l);
            for (int N = 1; N <= 3; ++N) {
                const BigRational v = d(BigRational(N));
                EXPECT_EQ(v.get_den(), 1);
                EXPECT_GE(v, 0);
                EXPECT_EQ(v == 0, l.row_count() > N);
            }
        }
    }
}

TEST(Catalan, Values)
{
    EXPECT_EQ(catalan(0), 1);
    EXPECT_EQ(catalan(3), 5);
    EXPECT_EQ(catalan(4), 14);
}

TEST(Catalan, Recurrence)
{
    for (unsigned long m = 0; m <= 12; ++m) {
        BigInt s = 0;
        for (unsigned long i = 0; i <= m; ++i) {
            s += catalan(i) * catalan(m - i);
        }
        EXPECT_EQ(catalan(m + 1), s);
    }
}
