#include "doctest.h"

#include "strcat/strings.hpp"

using namespace strc;

namespace {

// Independent oracle for orbit concatenation: try every pair of lifts in a
// window and project the first non-zero interval product back to an orbit.
Str cyclic_concat_by_lifts(const Str& s, const Str& t)
{
    if (s.is_zero()) return t;
    if (t.is_zero()) return s;
    const int n = s.modulus();
    for (int i = -2 * n; i <= 2 * n; ++i)
        for (int j = -2 * n; j <= 2 * n; ++j) {
            const int sa = s.start() + i * n;
            const int ta = t.start() + j * n;
            Str prod = concat(Str::interval(sa, sa + s.length() - 1),
                              Str::interval(ta, ta + t.length() - 1));
            if (!prod.is_zero()) return Str::orbit(n, prod.a(), prod.length());
        }
    return Str::zero();
}

}  // namespace

TEST_CASE("interval concatenation")
{
    const Str s0 = Str::simple(0), s1 = Str::simple(1);

    CHECK(concat(Str::zero(), Str::interval(2, 5)) == Str::interval(2, 5));
    CHECK(concat(Str::interval(2, 5), Str::zero()) == Str::interval(2, 5));
    CHECK(concat(Str::interval(0, 2), Str::interval(3, 5)) == Str::interval(0, 5));
    CHECK(concat(Str::interval(0, 2), Str::interval(4, 5)).is_zero());

    // The printed non-associativity witness.
    CHECK(concat(concat(s0, s1), s0).is_zero());
    CHECK(concat(s0, concat(s1, s0)) == s0);
}

TEST_CASE("length additivity")
{
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = c; d < 4; ++d) {
                    const Str s = Str::interval(a, b), t = Str::interval(c, d);
                    const Str st = concat(s, t);
                    if (!st.is_zero())
                        CHECK(st.length() == s.length() + t.length());
                }
}

TEST_CASE("orbit concatenation against the lift oracle")
{
    SUBCASE("frozen examples over modulus 2")
    {
        CHECK(cyclic_concat(Str::orbit(2, 0, 1), Str::orbit(2, 1, 1)) == Str::orbit(2, 0, 2));
        CHECK(cyclic_concat(Str::orbit(2, 0, 1), Str::orbit(2, 0, 1)).is_zero());
        CHECK(cyclic_concat(Str::orbit(2, 0, 2), Str::orbit(2, 0, 2)) == Str::orbit(2, 0, 4));
    }

    SUBCASE("agreement with the oracle, winding included")
    {
        for (int n = 1; n <= 3; ++n)
            for (int a = 0; a < n; ++a)
                for (int la = 1; la <= 2 * n; ++la)
                    for (int b = 0; b < n; ++b)
                        for (int lb = 1; lb <= 2 * n; ++lb) {
                            const Str s = Str::orbit(n, a, la), t = Str::orbit(n, b, lb);
                            CHECK(cyclic_concat(s, t) == cyclic_concat_by_lifts(s, t));
                        }
    }

    SUBCASE("modulus mismatch is an error")
    {
        CHECK_THROWS_AS(cyclic_concat(Str::orbit(2, 0, 1), Str::orbit(3, 0, 1)),
                        std::invalid_argument);
    }

    SUBCASE("length additivity")
    {
        const int n = 3;
        for (int a = 0; a < n; ++a)
            for (int la = 1; la <= 2 * n; ++la)
                for (int b = 0; b < n; ++b)
                    for (int lb = 1; lb <= 2 * n; ++lb) {
                        const Str s = Str::orbit(n, a, la), t = Str::orbit(n, b, lb);
                        const Str st = cyclic_concat(s, t);
                        if (!st.is_zero()) CHECK(st.length() == la + lb);
                    }
    }
}

TEST_CASE("composition factors")
{
    CHECK(composition_factors(Str::interval(1, 3)) ==
          std::vector<Str>{Str::simple(1), Str::simple(2), Str::simple(3)});
    CHECK(composition_factors(Str::zero()).empty());
    CHECK(composition_factors(Str::orbit(2, 1, 3)) ==
          std::vector<Str>{Str::cyclic_simple(2, 1), Str::cyclic_simple(2, 0),
                           Str::cyclic_simple(2, 1)});
}

TEST_CASE("element enumeration")
{
    SUBCASE("linear object")
    {
        auto es = elements(Connected::linear(2));
        CHECK(es.size() == 4);  // zero plus 3 = n(n+1)/2 intervals
        CHECK(es.front().is_zero());
        CHECK(std::is_sorted(es.begin(), es.end()));
    }

    SUBCASE("cyclic object needs an explicit bound")
    {
        auto es = elements(Connected::cyclic(2), 2);
        CHECK(es.size() == 5);  // zero plus 4 orbits
        CHECK_THROWS_AS(elements(Connected::cyclic(2)), std::invalid_argument);
    }

    SUBCASE("empty object")
    {
        auto es = elements(Connected::linear(0));
        CHECK(es.size() == 1);
        CHECK(es[0].is_zero());
    }

    SUBCASE("cyclic of size zero collapses")
    {
        CHECK(Connected::cyclic(0) == Connected::linear(0));
    }
}
