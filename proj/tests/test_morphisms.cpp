#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "strcat/morphisms.hpp"

using namespace strc;

namespace {

Str fold(const Connected& domc, const std::vector<Str>& images, const Str& x)
{
    Str acc = Str::zero();
    if (x.is_zero()) return acc;
    if (domc.is_linear())
        for (int j = x.a(); j <= x.b(); ++j) acc = mul(acc, images[j]);
    else
        for (int k = 0; k < x.length(); ++k)
            acc = mul(acc, images[(x.start() + k) % domc.n]);
    return acc;
}

// Brute-force check of the defining morphism condition for an image table:
// on every composable pair, the images multiply, and a non-zero product
// collapses to zero only when both factors do.  Exhaustive over the element
// set for linear domains; over a double-winding window for cyclic ones.
bool satisfies_morphism_condition(const Connected& domc, const Connected& codc,
                                  const std::vector<Str>& images)
{
    const int bound = domc.is_cyclic() ? 2 * domc.n : -1;
    const auto elems = elements(domc, bound);
    (void)codc;
    for (const Str& s : elems)
        for (const Str& t : elems) {
            const Str st = mul(s, t);
            if (st.is_zero()) continue;
            const Str lhs = fold(domc, images, st);
            const Str rhs = mul(fold(domc, images, s), fold(domc, images, t));
            if (lhs != rhs) return false;
            if (lhs.is_zero() &&
                !(fold(domc, images, s).is_zero() && fold(domc, images, t).is_zero()))
                return false;
        }
    return true;
}

bool validates(const Connected& dom, const Connected& cod, const std::vector<Str>& images)
{
    try {
        Morphism::connected(dom, cod, images);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

std::vector<std::vector<Str>> all_tables(const Connected& dom, const Connected& cod,
                                         int image_len_bound)
{
    const auto choices = elements(cod, image_len_bound);
    std::vector<std::vector<Str>> out;
    std::vector<Str> cur(dom.simples(), Str::zero());
    std::function<void(int)> dfs = [&](int idx) {
        if (idx == dom.simples()) {
            out.push_back(cur);
            return;
        }
        for (const Str& c : choices) {
            cur[idx] = c;
            dfs(idx + 1);
        }
    };
    dfs(0);
    return out;
}

Morphism mor(const Connected& dom, const Connected& cod, const std::vector<Str>& images)
{
    return Morphism::connected(dom, cod, images);
}

}  // namespace

TEST_CASE("validation matches the brute-force morphism condition (linear)")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            const Connected dom = Connected::linear(m), cod = Connected::linear(n);
            for (const auto& table : all_tables(dom, cod, -1))
                CHECK(validates(dom, cod, table) ==
                      satisfies_morphism_condition(dom, cod, table));
        }
}

TEST_CASE("validation examples")
{
    // Collapsing a non-zero product with a non-zero factor is rejected.
    CHECK_FALSE(validates(Connected::linear(2), Connected::linear(1),
                          {Str::simple(0), Str::simple(0)}));
    CHECK(validates(Connected::linear(2), Connected::linear(2),
                    {Str::zero(), Str::interval(0, 1)}));
    // A cyclic self-map must wind exactly once.
    CHECK_FALSE(validates(Connected::cyclic(1), Connected::cyclic(1), {Str::orbit(1, 0, 2)}));
    CHECK(validates(Connected::cyclic(1), Connected::cyclic(1), {Str::orbit(1, 0, 1)}));
}

TEST_CASE("winding anomalies satisfy the raw condition but are rejected")
{
    // Doubling self-map of the cyclic object of size one.
    const Connected c1 = Connected::cyclic(1);
    CHECK(satisfies_morphism_condition(c1, c1, {Str::orbit(1, 0, 2)}));
    CHECK_FALSE(validates(c1, c1, {Str::orbit(1, 0, 2)}));

    // A linear object wound around the cycle more than once.
    const Connected l1 = Connected::linear(1), c2 = Connected::cyclic(2);
    CHECK(satisfies_morphism_condition(l1, c2, {Str::orbit(2, 0, 5)}));
    CHECK_FALSE(validates(l1, c2, {Str::orbit(2, 0, 5)}));
}

TEST_CASE("full single winds of a linear object are composites of generators")
{
    // delta after sigma after eps maps the simple to a full-cycle orbit, so
    // single winds must validate for the category to be closed.
    using K = Connected::Kind;
    const Morphism comp =
        compose(std_delta(2, 1, K::Cyclic), compose(std_sigma(2, 1, K::Cyclic), std_eps(2, 1)));
    CHECK(evaluate(comp, Str::simple(0)) == Str::orbit(2, 0, 2));
    CHECK(validates(Connected::linear(1), Connected::cyclic(2), {Str::orbit(2, 0, 2)}));
}

TEST_CASE("validation agrees with the condition plus winding rules (cyclic pairs)")
{
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) {
            const Connected dom = Connected::cyclic(m), cod = Connected::cyclic(n);
            for (const auto& table : all_tables(dom, cod, 2 * n)) {
                int total = 0;
                bool nonzero = false;
                for (const Str& img : table)
                    if (!img.is_zero()) {
                        nonzero = true;
                        total += img.length();
                    }
                const bool winds_once = !nonzero || total == n;
                CHECK(validates(dom, cod, table) ==
                      (satisfies_morphism_condition(dom, cod, table) && winds_once));
            }
        }
}

TEST_CASE("cyclic to linear morphisms are zero")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            auto homs = hom_enumerate(StringsObject::connected(Connected::cyclic(m)),
                                      StringsObject::connected(Connected::linear(n)));
            REQUIRE(homs.size() == 1);
            CHECK_FALSE(homs[0].comps()[0].target.has_value());
        }
}

TEST_CASE("evaluation")
{
    SUBCASE("degeneracy on an interval")
    {
        const Morphism s31 = std_sigma(3, 1);
        CHECK(evaluate(s31, Str::interval(0, 2)) == Str::interval(0, 1));
    }
    SUBCASE("face on an interval")
    {
        const Morphism d41 = std_delta(4, 1);
        CHECK(evaluate(d41, Str::interval(0, 2)) == Str::interval(0, 3));
    }
    SUBCASE("base point is preserved by every enumerated morphism")
    {
        const auto homs = hom_enumerate(StringsObject::connected(Connected::linear(2)),
                                        StringsObject::connected(Connected::linear(2)));
        for (const Morphism& phi : homs)
            CHECK(evaluate(phi, Str::zero()).is_zero());
    }
}

TEST_CASE("standard morphisms")
{
    SUBCASE("the two smallest faces coincide") { CHECK(std_delta(1, 0) == std_delta(1, 1)); }

    SUBCASE("unique injective chain avoiding one cyclic simple")
    {
        const Morphism e31 = std_eps(3, 1);
        CHECK(e31.comps()[0].images ==
              std::vector<Str>{Str::cyclic_simple(3, 2), Str::cyclic_simple(3, 0)});
        // Brute force: it is the only injective all-simple chain missing s_1.
        int found = 0;
        for (const auto& table : all_tables(Connected::linear(2), Connected::cyclic(3), 1)) {
            bool all_nonzero = true;
            for (const Str& img : table) all_nonzero &= !img.is_zero();
            if (!all_nonzero || !validates(Connected::linear(2), Connected::cyclic(3), table))
                continue;
            bool avoids = true;
            for (const Str& img : table)
                if (img == Str::cyclic_simple(3, 1)) avoids = false;
            if (avoids) ++found;
        }
        CHECK(found == 1);
    }

    SUBCASE("rotation action")
    {
        CHECK(evaluate(std_tau(3, 1), Str::orbit(3, 0, 2)) == Str::orbit(3, 1, 2));
    }
}

TEST_CASE("composition")
{
    SUBCASE("identity on the empty object")
    {
        const Morphism c = compose(std_sigma(1, 0), std_delta(1, 1));
        CHECK(c == Morphism::identity(StringsObject::connected(Connected::linear(0))));
    }
    SUBCASE("face after degeneracy")
    {
        const Morphism c = compose(std_delta(2, 1), std_sigma(2, 0));
        CHECK(c == mor(Connected::linear(2), Connected::linear(2),
                       {Str::zero(), Str::interval(0, 1)}));
    }
    SUBCASE("rotations compose as a cyclic group")
    {
        CHECK(compose(std_tau(3, 1), std_tau(3, 2)) ==
              Morphism::identity(StringsObject::connected(Connected::cyclic(3))));
    }
    SUBCASE("associative and unital on small hom-sets")
    {
        const std::vector<StringsObject> objs = {
            StringsObject::connected(Connected::linear(1)),
            StringsObject::connected(Connected::linear(2)),
            StringsObject::connected(Connected::cyclic(2)),
            StringsObject{{Connected::linear(1), Connected::cyclic(1)}},
        };
        for (const auto& A : objs)
            for (const auto& B : objs)
                for (const auto& C : objs)
                    for (const auto& D : objs) {
                        const auto fs = hom_enumerate(A, B);
                        const auto gs = hom_enumerate(B, C);
                        const auto hs = hom_enumerate(C, D);
                        for (const auto& f : fs) {
                            CHECK(compose(f, Morphism::identity(A)) == f);
                            CHECK(compose(Morphism::identity(B), f) == f);
                            for (const auto& g : gs)
                                for (const auto& h : hs)
                                    CHECK(compose(h, compose(g, f)) ==
                                          compose(compose(h, g), f));
                        }
                    }
    }
}

TEST_CASE("epi-mono factorisation")
{
    SUBCASE("frozen example")
    {
        const Morphism phi =
            mor(Connected::linear(2), Connected::linear(2), {Str::zero(), Str::interval(0, 1)});
        auto [epi, mono] = epi_mono_factor(phi);
        CHECK(epi == std_sigma(2, 0));
        CHECK(mono == std_delta(2, 1));
        CHECK(compose(mono, epi) == phi);
    }
    SUBCASE("a mono factors as identity then itself")
    {
        const Morphism d = std_delta(3, 1);
        auto [epi, mono] = epi_mono_factor(d);
        CHECK(epi == Morphism::identity(d.dom()));
        CHECK(mono == d);
    }
    SUBCASE("recomposition across connected hom-sets, zero maps included")
    {
        const std::vector<Connected> cs = {Connected::linear(0), Connected::linear(2),
                                           Connected::linear(3), Connected::cyclic(2),
                                           Connected::cyclic(3)};
        for (const Connected& d : cs)
            for (const Connected& c : cs) {
                const auto homs = hom_enumerate(StringsObject::connected(d),
                                                StringsObject::connected(c));
                for (const Morphism& phi : homs) {
                    auto [epi, mono] = epi_mono_factor(phi);
                    CHECK(compose(mono, epi) == phi);
                    CHECK(is_epi(epi));
                    for (const Str& img : mono.comps()[0].images)
                        CHECK_FALSE(img.is_zero());
                }
            }
    }
}

TEST_CASE("canonical decomposition, linear")
{
    const Connected l2 = Connected::linear(2);

    SUBCASE("frozen words")
    {
        const Morphism phi = mor(l2, l2, {Str::zero(), Str::interval(0, 1)});
        const CanonicalWord w = canonical_decomposition(phi);
        CHECK(w.degeneracies == std::vector<int>{0});
        CHECK(w.faces == std::vector<int>{1});
        CHECK(evaluate_word(w) == phi);

        const CanonicalWord id_word =
            canonical_decomposition(Morphism::identity(StringsObject::connected(l2)));
        CHECK(id_word.degeneracies.empty());
        CHECK(id_word.faces.empty());

        const CanonicalWord zero_word = canonical_decomposition(
            Morphism::zero(StringsObject::connected(l2), StringsObject::connected(l2)));
        CHECK(zero_word.degeneracies == std::vector<int>{0, 1});
        CHECK(zero_word.faces == std::vector<int>{1, 2});
    }

    SUBCASE("uniqueness: every well-formed word is its own decomposition")
    {
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
                const Connected dom = Connected::linear(m), cod = Connected::linear(n);
                std::set<Morphism> seen;
                for (const CanonicalWord& w : enumerate_words(dom, cod)) {
                    const Morphism phi = evaluate_word(w);
                    CHECK(canonical_decomposition(phi) == w);
                    seen.insert(phi);
                }
                const auto homs = hom_enumerate(StringsObject::connected(dom),
                                                StringsObject::connected(cod));
                CHECK(seen.size() == homs.size());
            }
    }
}

TEST_CASE("canonical decomposition, cyclic")
{
    SUBCASE("round trip and canonical-word bijection")
    {
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                const Connected dom = Connected::cyclic(m), cod = Connected::cyclic(n);
                const auto homs = hom_enumerate(StringsObject::connected(dom),
                                                StringsObject::connected(cod));
                std::set<CanonicalWord> canonical;
                for (const Morphism& phi : homs) {
                    const CanonicalWord w = canonical_decomposition(phi);
                    CHECK(evaluate_word(w) == phi);
                    canonical.insert(w);
                }
                CHECK(canonical.size() == homs.size());
                // Fixed points of decompose-after-evaluate are exactly the
                // canonical words.
                int fixed = 0;
                for (const CanonicalWord& w : enumerate_words(dom, cod))
                    if (canonical_decomposition(evaluate_word(w)) == w) ++fixed;
                CHECK(fixed == static_cast<int>(homs.size()));
            }
    }

    SUBCASE("rotation is unique when nothing is killed")
    {
        for (int k = 0; k < 3; ++k) {
            const CanonicalWord w = canonical_decomposition(std_tau(3, k));
            CHECK(w.rotation == k);
            CHECK(w.degeneracies.empty());
            CHECK(w.faces.empty());
        }
    }
}

TEST_CASE("mono and epi recognition")
{
    SUBCASE("faces are mono, not epi; degeneracies are epi, not mono")
    {
        for (int n = 1; n <= 4; ++n)
            for (int i = 0; i <= n; ++i) {
                CHECK(is_mono(std_delta(n, i)));
                if (n >= 1) CHECK_FALSE(is_epi(std_delta(n, i)));
                if (i < n) {
                    CHECK(is_epi(std_sigma(n, i)));
                    if (n >= 1) CHECK_FALSE(is_mono(std_sigma(n, i)));
                }
            }
    }

    SUBCASE("overlapping coproduct components are not mono")
    {
        const StringsObject dom{{Connected::linear(1), Connected::linear(1)}};
        const StringsObject cod = StringsObject::connected(Connected::linear(2));
        MorComponent c0{0, {Str::interval(0, 1)}}, c1{0, {Str::interval(0, 1)}};
        const Morphism phi = Morphism::validate(dom, cod, {c0, c1});
        CHECK_FALSE(is_mono(phi));
    }

    SUBCASE("disjoint components are mono")
    {
        const StringsObject dom{{Connected::linear(1), Connected::linear(1)}};
        const StringsObject cod = StringsObject::connected(Connected::linear(3));
        MorComponent c0{0, {Str::simple(0)}}, c1{0, {Str::simple(2)}};
        CHECK(is_mono(Morphism::validate(dom, cod, {c0, c1})));
    }

    SUBCASE("rotations and epsilon embeddings")
    {
        CHECK(is_mono(std_tau(3, 1)));
        CHECK(is_epi(std_tau(3, 1)));
        CHECK(is_mono(std_eps(3, 0)));
        CHECK_FALSE(is_epi(std_eps(3, 0)));
    }
}

TEST_CASE("hom-set enumeration")
{
    auto count = [](const Connected& d, const Connected& c) {
        return hom_enumerate(StringsObject::connected(d), StringsObject::connected(c)).size();
    };

    SUBCASE("frozen counts")
    {
        CHECK(count(Connected::linear(1), Connected::linear(1)) == 2);
        CHECK(count(Connected::linear(2), Connected::linear(2)) == 8);
        CHECK(count(Connected::cyclic(1), Connected::cyclic(1)) == 2);
        CHECK(count(Connected::linear(1), Connected::linear(2)) == 4);
    }

    SUBCASE("agreement with brute-force table filtering")
    {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const Connected dom = Connected::linear(m), cod = Connected::linear(n);
                size_t brute = 0;
                for (const auto& table : all_tables(dom, cod, -1))
                    if (validates(dom, cod, table)) ++brute;
                CHECK(count(dom, cod) == brute);
            }
    }

    SUBCASE("pointed coproduct factorisation of hom-sets")
    {
        const StringsObject dom{{Connected::linear(1), Connected::cyclic(2)}};
        const StringsObject cod{{Connected::linear(2), Connected::cyclic(2)}};
        const auto full = hom_enumerate(dom, cod);
        size_t per_component = 1;
        for (const Connected& d : dom.comps) {
            size_t options = 1;  // base point
            for (const Connected& c : cod.comps) {
                const auto homs = hom_enumerate(StringsObject::connected(d),
                                                StringsObject::connected(c));
                options += homs.size() - 1;  // zero morphism is the shared base point
            }
            per_component *= options;
        }
        CHECK(full.size() == per_component);
        CHECK(std::is_sorted(full.begin(), full.end()));
        CHECK(std::adjacent_find(full.begin(), full.end()) == full.end());
    }
}

TEST_CASE("every linear-to-cyclic morphism factors through an embedding or a full wind")
{
    for (int m = 0; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            const StringsObject dom = StringsObject::connected(Connected::linear(m));
            const StringsObject cod = StringsObject::connected(Connected::cyclic(n));
            // The full wind L(n) -> C(n) is itself a composite of generators.
            const Morphism wind =
                compose(std_sigma(n + 1, n, Connected::Kind::Cyclic), std_eps(n + 1, n));
            for (const Morphism& phi : hom_enumerate(dom, cod)) {
                int total = 0;
                for (const Str& img : phi.comps()[0].images) total += img.length();

                bool via_eps = false;
                for (int i = 0; i < n && !via_eps; ++i) {
                    const Morphism eps = std_eps(n, i);
                    for (const Morphism& rho :
                         hom_enumerate(dom, StringsObject::connected(Connected::linear(n - 1))))
                        if (compose(eps, rho) == phi) {
                            via_eps = true;
                            break;
                        }
                }
                if (total <= n - 1) {
                    CHECK(via_eps);
                } else {
                    // Image winds the whole cycle once: factors through the
                    // wind after a linear morphism, never through an embedding.
                    CHECK_FALSE(via_eps);
                    bool via_wind = false;
                    for (int r = 0; r < n && !via_wind; ++r)
                        for (const Morphism& rho : hom_enumerate(
                                 dom, StringsObject::connected(Connected::linear(n))))
                            if (compose(std_tau(n, r), compose(wind, rho)) == phi) {
                                via_wind = true;
                                break;
                            }
                    CHECK(via_wind);
                }
            }
        }
}

TEST_CASE("cones through zero defeat the pullback property of the degeneracy square")
{
    // The cone (delta_2^0, delta_2^2) from L(1) commutes with the square on
    // L(3) since both legs compose to zero, but no morphism into L(3) lifts
    // it.  The square does satisfy the dual universal property.
    const Morphism f = std_delta(2, 0), g = std_delta(2, 2);
    CHECK(compose(std_sigma(2, 1), f) == compose(std_sigma(2, 0), g));
    bool lifted = false;
    for (const Morphism& h : hom_enumerate(StringsObject::connected(Connected::linear(1)),
                                           StringsObject::connected(Connected::linear(3))))
        if (compose(std_sigma(3, 0), h) == f && compose(std_sigma(3, 2), h) == g)
            lifted = true;
    CHECK_FALSE(lifted);

    CHECK_FALSE(check_pullback(3, 4));
    CHECK_FALSE(check_pullback_negative(3, 4));
    CHECK(check_pushout(3, 4));
    CHECK(check_pushout(4, 4));
}
