#include "wrhermite/construct.hpp"
#include "wrhermite/roots.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace wrhermite;

namespace {

std::vector<double> real_parts(const RootReport& r)
{
    std::vector<double> v;
    for (auto z : r.roots)
        v.push_back(z.real());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST(AllRoots, ImaginaryPair)
{
    const RootReport r = classify(all_roots(ExactPoly({1, 0, 1})), 2, 1e-7);
    ASSERT_EQ(r.roots.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_NEAR(std::abs(r.roots[i].imag()), 1.0, 1e-14);
        EXPECT_NEAR(r.roots[i].real(), 0.0, 1e-14);
        EXPECT_EQ(r.tags[i].kind, RootKind::imaginary);
        EXPECT_TRUE(r.tags[i].ray == 1 || r.tags[i].ray == 3);
    }
}

TEST(AllRoots, ZeroRootsAreExact)
{
    const RootReport r = all_roots(ExactPoly::monomial(3));
    ASSERT_EQ(r.roots.size(), 3u);
    for (auto z : r.roots)
        EXPECT_EQ(z, std::complex<double>(0, 0));
    const RootReport m = all_roots(ExactPoly({0, 0, -1, 0, 1}));
    EXPECT_EQ(std::count(m.roots.begin(), m.roots.end(), std::complex<double>(0, 0)), 2);
}

TEST(AllRoots, HermiteFour)
{
    const RootReport r = classify(all_roots(hermite_prob(4)), 2, 1e-7);
    const double a = std::sqrt(3 - std::sqrt(6.0)), b = std::sqrt(3 + std::sqrt(6.0));
    const std::vector<double> expect{-b, -a, a, b};
    const auto got = real_parts(r);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(got[i], expect[i], 1e-13);
    for (const auto& t : r.tags)
        EXPECT_EQ(t.kind, RootKind::real);
}

TEST(AllRoots, RejectsConstants)
{
    EXPECT_THROW(all_roots(ExactPoly::constant(3)), std::invalid_argument);
}

TEST(AllRoots, HermiteRootsRealSimpleSymmetric)
{
    for (int n = 1; n <= 25; ++n) {
        const RootReport r = classify(all_roots(hermite_prob(n)), 2, 1e-7);
        ASSERT_EQ(r.roots.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < r.roots.size(); ++i) {
            EXPECT_EQ(r.tags[i].kind, RootKind::real) << n;
            EXPECT_LE(r.residuals[i], 1e-8);
        }
        const auto x = real_parts(r);
        for (std::size_t i = 0; i < x.size(); ++i) {
            EXPECT_NEAR(x[i], -x[x.size() - 1 - i], 1e-8);
            if (i > 0) {
                EXPECT_GT(x[i] - x[i - 1], 1e-8);
            }
        }
        EXPECT_NEAR(x.back(), hermite_largest_root(n), 1e-8);
    }
}

TEST(AllRoots, HermiteRootsInterlace)
{
    auto prev = real_parts(all_roots(hermite_prob(1)));
    for (int n = 2; n <= 25; ++n) {
        const auto cur = real_parts(all_roots(hermite_prob(n)));
        for (std::size_t i = 0; i < prev.size(); ++i) {
            EXPECT_LT(cur[i], prev[i]) << n;
            EXPECT_LT(prev[i], cur[i + 1]) << n;
        }
        prev = cur;
    }
}

TEST(AllRoots, LargeDegreeWronskianHermite)
{
    const Partition l{6, 5, 4, 3, 2, 2, 1, 1};
    const RootReport r = all_roots(he_lambda_wronskian(l));
    EXPECT_EQ(r.roots.size(), static_cast<std::size_t>(l.weight()));
    for (double res : r.residuals)
        EXPECT_LE(res, 1e-9);
}

TEST(AllRoots, QPolyPositiveRoots)
{
    for (int q : {3, 4})
        for (int n = 1; n <= 15; ++n) {
            const RootReport r = classify(all_roots(q_poly(n, q)), q, 1e-7);
            std::vector<double> pos;
            for (std::size_t i = 0; i < r.roots.size(); ++i)
                if (r.tags[i].kind == RootKind::real && r.roots[i].real() > 1e-7)
                    pos.push_back(r.roots[i].real());
            std::sort(pos.begin(), pos.end());
            EXPECT_EQ(static_cast<int>(pos.size()), n / q) << "n=" << n << " q=" << q;
            for (std::size_t i = 1; i < pos.size(); ++i)
                EXPECT_GT(pos[i] - pos[i - 1], 1e-8);
        }
}

TEST(LargestRoot, Examples)
{
    EXPECT_NEAR(hermite_largest_root(1), 0.0, 1e-15);
    EXPECT_NEAR(hermite_largest_root(2), 1.0, 1e-14);
    EXPECT_NEAR(hermite_largest_root(3), std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(hermite_largest_root(4), std::sqrt(3 + std::sqrt(6.0)), 1e-14);
    EXPECT_THROW(hermite_largest_root(0), std::invalid_argument);
}

TEST(LargestRoot, EigenvalueMatchesNewton)
{
    for (int n = 1; n <= 50; ++n)
        EXPECT_NEAR(hermite_largest_root(n), hermite_largest_root_newton(n), 1e-10) << n;
}

TEST(Classify, CubeRootsOfMinusOne)
{
    const RootReport r = classify(all_roots(q_lambda_wronskian(Partition{2, 1}, 3)), 3, 1e-7);
    ASSERT_EQ(r.roots.size(), 3u);
    int reals = 0;
    std::vector<int> rays;
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(std::abs(r.roots[i]), 1.0, 1e-12);
        reals += r.tags[i].kind == RootKind::real;
        rays.push_back(r.tags[i].ray);
    }
    std::sort(rays.begin(), rays.end());
    EXPECT_EQ(reals, 1);
    EXPECT_EQ(rays, (std::vector<int>{1, 3, 5}));
}

TEST(Classify, GenericRootsStayGeneric)
{
    // Roots of x^2 - 2x + 2 lie at angle pi/4; the 4-star for q=2 has rays at multiples of pi/2.
    const RootReport r = classify(all_roots(ExactPoly({2, -2, 1})), 2, 1e-7);
    for (const auto& t : r.tags) {
        EXPECT_EQ(t.kind, RootKind::generic);
        EXPECT_EQ(t.ray, -1);
    }
    const RootReport s = classify(all_roots(ExactPoly({2, -2, 1})), 4, 1e-7);
    for (const auto& t : s.tags) {
        EXPECT_EQ(t.kind, RootKind::star_ray);
        EXPECT_TRUE(t.ray == 1 || t.ray == 7);
    }
}
