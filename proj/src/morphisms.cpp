#include "strcat/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "strcat/lattice.hpp"

namespace strc {

namespace {

Str fold_images(const Connected& domc, const std::vector<Str>& images, const Str& x)
{
    Str acc = Str::zero();
    if (x.is_zero()) return acc;
    if (domc.is_linear()) {
        for (int j = x.a(); j <= x.b(); ++j) acc = mul(acc, images[j]);
    } else {
        const int m = domc.n;
        for (int k = 0; k < x.length(); ++k) acc = mul(acc, images[(x.start() + k) % m]);
    }
    return acc;
}

void validate_component(const Connected& domc, const Connected& codc,
                        const std::vector<Str>& images, int alpha)
{
    const int n = codc.n;
    for (int j = 0; j < static_cast<int>(images.size()); ++j) {
        const Str& img = images[j];
        if (img.is_zero()) continue;
        if (codc.is_linear()) {
            if (!img.is_interval() || img.a() < 0 || img.b() >= n)
                throw ValidationError("image outside the codomain component", alpha, j);
        } else {
            if (!img.is_orbit() || img.modulus() != n)
                throw ValidationError("image outside the codomain component", alpha, j);
        }
    }

    if (domc.is_linear() && codc.is_linear()) {
        int next = -1;
        for (int j = 0; j < static_cast<int>(images.size()); ++j) {
            if (images[j].is_zero()) continue;
            if (next >= 0 && images[j].a() != next)
                throw ValidationError("non-composable chain of images", alpha, j);
            next = images[j].b() + 1;
        }
    } else if (domc.is_linear() && codc.is_cyclic()) {
        int next = -1, total = 0;
        for (int j = 0; j < static_cast<int>(images.size()); ++j) {
            if (images[j].is_zero()) continue;
            if (next >= 0 && images[j].start() != next)
                throw ValidationError("non-composable chain of images", alpha, j);
            next = (images[j].start() + images[j].length()) % n;
            total += images[j].length();
        }
        if (total > n)
            throw ValidationError("images of a linear component wind the cycle", alpha, -1);
    } else if (domc.is_cyclic() && codc.is_cyclic()) {
        std::vector<int> support;
        int total = 0;
        for (int j = 0; j < static_cast<int>(images.size()); ++j)
            if (!images[j].is_zero()) {
                support.push_back(j);
                total += images[j].length();
            }
        if (support.empty()) return;
        for (size_t t = 0; t < support.size(); ++t) {
            const Str& cur = images[support[t]];
            const Str& nxt = images[support[(t + 1) % support.size()]];
            if ((cur.start() + cur.length()) % n != nxt.start())
                throw ValidationError("non-composable cyclic chain of images", alpha,
                                      support[(t + 1) % support.size()]);
        }
        if (total != n)
            throw ValidationError("cyclic images must wind the codomain exactly once",
                                  alpha, -1);
    } else {  // cyclic -> linear
        for (int j = 0; j < static_cast<int>(images.size()); ++j)
            if (!images[j].is_zero())
                throw ValidationError("a cyclic component maps to a linear one only by zero",
                                      alpha, j);
    }
}

}  // namespace

Morphism Morphism::validate(StringsObject dom, StringsObject cod,
                            std::vector<MorComponent> comps)
{
    if (comps.size() != dom.comps.size())
        throw ValidationError("one component table per domain component", -1, -1);
    for (int alpha = 0; alpha < static_cast<int>(comps.size()); ++alpha) {
        MorComponent& mc = comps[alpha];
        const int m = dom.comps[alpha].simples();
        if (!mc.target) {
            for (const Str& img : mc.images)
                if (!img.is_zero())
                    throw ValidationError("zero-target component with non-zero image", alpha, -1);
            mc.images.assign(m, Str::zero());
            continue;
        }
        if (*mc.target < 0 || *mc.target >= static_cast<int>(cod.comps.size()))
            throw ValidationError("target component out of range", alpha, -1);
        if (static_cast<int>(mc.images.size()) != m)
            throw ValidationError("one image per simple string", alpha, -1);
        validate_component(dom.comps[alpha], cod.comps[*mc.target], mc.images, alpha);
        bool all_zero = true;
        for (const Str& img : mc.images)
            if (!img.is_zero()) { all_zero = false; break; }
        if (all_zero) {  // normalize to the base point of the pointed coproduct
            mc.target.reset();
            mc.images.assign(m, Str::zero());
        } else {
            for (Str& img : mc.images)
                if (img.is_zero()) img = Str::zero();
        }
    }
    Morphism phi;
    phi.dom_ = std::move(dom);
    phi.cod_ = std::move(cod);
    phi.comps_ = std::move(comps);
    return phi;
}

Morphism Morphism::identity(const StringsObject& obj)
{
    std::vector<MorComponent> comps;
    for (int alpha = 0; alpha < static_cast<int>(obj.comps.size()); ++alpha) {
        MorComponent mc;
        mc.target = alpha;
        for (int j = 0; j < obj.comps[alpha].simples(); ++j)
            mc.images.push_back(obj.comps[alpha].simple(j));
        comps.push_back(std::move(mc));
    }
    return validate(obj, obj, std::move(comps));
}

Morphism Morphism::zero(const StringsObject& dom, const StringsObject& cod)
{
    std::vector<MorComponent> comps(dom.comps.size());
    return validate(dom, cod, std::move(comps));
}

Morphism Morphism::connected(Connected dom, Connected cod, std::vector<Str> images)
{
    MorComponent mc;
    mc.target = 0;
    mc.images = std::move(images);
    return validate(StringsObject::connected(dom), StringsObject::connected(cod), {mc});
}

Element evaluate(const Morphism& phi, const Element& x)
{
    if (x.is_base()) return Element::base();
    const MorComponent& mc = phi.comps().at(x.comp);
    if (!mc.target) return Element::base();
    Str y = fold_images(phi.dom().comps[x.comp], mc.images, x.value);
    return Element::in(*mc.target, y);
}

Str evaluate(const Morphism& phi, const Str& x)
{
    if (!phi.is_connected_pair())
        throw std::invalid_argument("string-level evaluation needs connected objects");
    Element y = evaluate(phi, Element::in(0, x));
    return y.is_base() ? Str::zero() : y.value;
}

Morphism compose(const Morphism& psi, const Morphism& phi)
{
    if (phi.cod() != psi.dom()) throw std::invalid_argument("composition mismatch");
    std::vector<MorComponent> comps;
    for (int alpha = 0; alpha < static_cast<int>(phi.comps().size()); ++alpha) {
        const MorComponent& inner = phi.comps()[alpha];
        MorComponent mc;
        if (inner.target) {
            const MorComponent& outer = psi.comps()[*inner.target];
            if (outer.target) {
                mc.target = *outer.target;
                for (const Str& img : inner.images)
                    mc.images.push_back(
                        fold_images(phi.cod().comps[*inner.target], outer.images, img));
            }
        }
        comps.push_back(std::move(mc));
    }
    return Morphism::validate(phi.dom(), psi.cod(), std::move(comps));
}

Morphism std_delta(int n, int i, Connected::Kind kind)
{
    if (n < 1) throw std::out_of_range("face maps need n >= 1");
    if (kind == Connected::Kind::Linear) {
        if (i < 0 || i > n) throw std::out_of_range("linear face index needs 0 <= i <= n");
        std::vector<Str> images;
        for (int j = 0; j < n - 1; ++j) {
            if (j < i - 1) images.push_back(Str::simple(j));
            else if (j == i - 1) images.push_back(Str::interval(i - 1, i));
            else images.push_back(Str::simple(j + 1));
        }
        return Morphism::connected(Connected::linear(n - 1), Connected::linear(n), images);
    }
    if (i < 0 || i >= n) throw std::out_of_range("cyclic face index needs 0 <= i < n");
    if (n == 1)
        return Morphism::zero(StringsObject::connected(Connected::linear(0)),
                              StringsObject::connected(Connected::cyclic(1)));
    const int m = n - 1;
    const int jj = (i == 0) ? m - 1 : i - 1;  // domain simple carrying the doubled image
    std::vector<Str> images;
    for (int j = 0; j < m; ++j) {
        if (j == jj) images.push_back(Str::orbit(n, ((i - 1) % n + n) % n, 2));
        else if (j < i - 1) images.push_back(Str::cyclic_simple(n, j));
        else images.push_back(Str::cyclic_simple(n, j + 1));
    }
    return Morphism::connected(Connected::cyclic(m), Connected::cyclic(n), images);
}

Morphism std_sigma(int n, int i, Connected::Kind kind)
{
    if (n < 1 || i < 0 || i >= n) throw std::out_of_range("degeneracy index needs 0 <= i < n");
    const bool linear = kind == Connected::Kind::Linear;
    Connected dom = linear ? Connected::linear(n) : Connected::cyclic(n);
    Connected cod = linear ? Connected::linear(n - 1) : Connected::cyclic(n - 1);
    std::vector<Str> images;
    for (int j = 0; j < n; ++j) {
        if (j == i) images.push_back(Str::zero());
        else {
            const int t = j < i ? j : j - 1;
            images.push_back(linear ? Str::simple(t) : Str::cyclic_simple(n - 1, t));
        }
    }
    return Morphism::connected(dom, cod, images);
}

Morphism std_tau(int n, int i)
{
    if (n < 1 || i < 0 || i >= n) throw std::out_of_range("rotation index needs 0 <= i < n");
    std::vector<Str> images;
    for (int j = 0; j < n; ++j) images.push_back(Str::cyclic_simple(n, (j + i) % n));
    return Morphism::connected(Connected::cyclic(n), Connected::cyclic(n), images);
}

Morphism std_eps(int n, int i)
{
    if (n < 1 || i < 0 || i >= n) throw std::out_of_range("embedding index needs 0 <= i < n");
    std::vector<Str> images;
    for (int j = 0; j < n - 1; ++j) images.push_back(Str::cyclic_simple(n, (i + 1 + j) % n));
    return Morphism::connected(Connected::linear(n - 1), Connected::cyclic(n), images);
}

std::pair<Morphism, Morphism> epi_mono_factor(const Morphism& phi)
{
    if (phi.dom().comps.size() != 1)
        throw std::invalid_argument("epi-mono factorisation needs a connected domain");
    const Connected domc = phi.dom().comps[0];
    const MorComponent& mc = phi.comps()[0];
    const int m = domc.simples();

    std::vector<int> zeros;
    for (int j = 0; j < m; ++j)
        if (mc.images[j].is_zero()) zeros.push_back(j);

    Morphism epi = Morphism::identity(StringsObject::connected(domc));
    int size = m;
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
        epi = compose(std_sigma(size, *it, domc.kind), epi);
        --size;
    }

    const Connected midc = epi.cod().comps[0];
    MorComponent mono_comp;
    mono_comp.target = mc.target;
    for (int j = 0; j < m; ++j)
        if (!mc.images[j].is_zero()) mono_comp.images.push_back(mc.images[j]);
    Morphism mono =
        Morphism::validate(StringsObject::connected(midc), phi.cod(), {mono_comp});
    return {epi, mono};
}

namespace {

std::vector<int> through_zero_faces(const Connected& cod)
{
    std::vector<int> faces;
    if (cod.is_linear())
        for (int i = 1; i <= cod.n; ++i) faces.push_back(i);
    else
        for (int i = 0; i < cod.n; ++i) faces.push_back(i);
    return faces;
}

}  // namespace

Morphism evaluate_word(const CanonicalWord& word)
{
    const int m = word.dom.simples();
    Morphism acc = Morphism::identity(StringsObject::connected(word.dom));
    if (word.dom.is_cyclic() && word.rotation > 0)
        acc = compose(std_tau(m, word.rotation), acc);
    int size = m;
    std::vector<int> degens = word.degeneracies;
    std::sort(degens.rbegin(), degens.rend());  // largest index first
    for (int j : degens) {
        acc = compose(std_sigma(size, j, word.dom.kind), acc);
        --size;
    }
    std::vector<int> faces = word.faces;
    std::sort(faces.begin(), faces.end());
    for (int i : faces) {
        acc = compose(std_delta(size + 1, i, word.cod.kind), acc);
        ++size;
    }
    if (acc.cod() != StringsObject::connected(word.cod))
        throw std::invalid_argument("word does not reach its codomain");
    return acc;
}

CanonicalWord canonical_decomposition(const Morphism& phi)
{
    if (!phi.is_connected_pair())
        throw std::invalid_argument("canonical decomposition needs connected objects");
    const Connected domc = phi.dom().comps[0];
    const Connected codc = phi.cod().comps[0];
    const MorComponent& mc = phi.comps()[0];
    const int m = domc.simples(), n = codc.simples();

    CanonicalWord word;
    word.dom = domc;
    word.cod = codc;

    if (!mc.target) {  // the zero morphism factors through the zero object
        for (int j = 0; j < m; ++j) word.degeneracies.push_back(j);
        word.faces = through_zero_faces(codc);
        return word;
    }

    if (domc.is_linear() && codc.is_linear()) {
        std::set<int> boundaries;
        for (int j = 0; j < m; ++j) {
            const Str& img = mc.images[j];
            if (img.is_zero()) word.degeneracies.push_back(j);
            else {
                boundaries.insert(img.a());
                boundaries.insert(img.b() + 1);
            }
        }
        for (int i = 0; i <= n; ++i)
            if (!boundaries.count(i)) word.faces.push_back(i);
        return word;
    }

    if (domc.is_cyclic() && codc.is_cyclic()) {
        // Rebuild a candidate word for each rotation; the smallest rotation
        // whose word re-evaluates to phi is canonical.
        for (int k = 0; k < m; ++k) {
            CanonicalWord w;
            w.dom = domc;
            w.cod = codc;
            w.rotation = k;
            std::set<int> boundaries;
            for (int j = 0; j < m; ++j) {
                const Str& img = mc.images[((j - k) % m + m) % m];
                if (img.is_zero()) w.degeneracies.push_back(j);
                else {
                    boundaries.insert(img.start());
                    boundaries.insert((img.start() + img.length()) % n);
                }
            }
            for (int i = 0; i < n; ++i)
                if (!boundaries.count(i)) w.faces.push_back(i);
            if (static_cast<int>(w.faces.size()) !=
                n - (m - static_cast<int>(w.degeneracies.size())))
                continue;
            if (evaluate_word(w) == phi) return w;
        }
        throw std::logic_error("validated morphism admits no canonical word");
    }

    throw std::invalid_argument("mixed-kind morphisms decompose through the embedding maps");
}

std::vector<CanonicalWord> enumerate_words(const Connected& dom, const Connected& cod)
{
    const int m = dom.simples(), n = cod.simples();
    std::vector<CanonicalWord> out;
    const int rotations = dom.is_cyclic() ? m : 1;
    const bool mixed = dom.kind != cod.kind;

    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> degens;
        for (int j = 0; j < m; ++j)
            if (mask & (1 << j)) degens.push_back(j);
        const int p = m - static_cast<int>(degens.size());
        const int u = n - p;
        if (u < 0) continue;
        if (mixed && p != 0) continue;  // words switch kind only through the zero object

        std::vector<std::vector<int>> face_sets;
        if (p == 0) {
            face_sets.push_back(through_zero_faces(cod));
        } else {
            const int hi = cod.is_linear() ? n : n - 1;  // faces in [0,n] or [0,n)
            std::vector<int> pick;
            std::function<void(int)> choose = [&](int from) {
                if (static_cast<int>(pick.size()) == u) {
                    face_sets.push_back(pick);
                    return;
                }
                for (int i = from; i <= hi; ++i) {
                    pick.push_back(i);
                    choose(i + 1);
                    pick.pop_back();
                }
            };
            choose(0);
        }
        for (int k = 0; k < rotations; ++k)
            for (const auto& faces : face_sets) {
                CanonicalWord w;
                w.dom = dom;
                w.cod = cod;
                w.rotation = k;
                w.degeneracies = degens;
                w.faces = faces;
                out.push_back(std::move(w));
            }
    }
    return out;
}

namespace {

// Surjectivity of one component's restriction: its canonical word has an
// empty face set.
bool component_surjective(const Connected& domc, const Connected& codc,
                          const std::vector<Str>& images)
{
    if (domc.kind != codc.kind) return false;
    const int n = codc.simples();
    if (n == 0) return true;
    std::set<int> boundaries;
    for (const Str& img : images) {
        if (img.is_zero()) continue;
        if (codc.is_linear()) {
            boundaries.insert(img.a());
            boundaries.insert(img.b() + 1);
        } else {
            boundaries.insert(img.start());
            boundaries.insert((img.start() + img.length()) % n);
        }
    }
    const int full = codc.is_linear() ? n + 1 : n;
    return static_cast<int>(boundaries.size()) == full;
}

}  // namespace

bool is_mono(const Morphism& phi)
{
    const auto& dom = phi.dom().comps;
    const auto& cod = phi.cod().comps;
    for (int alpha = 0; alpha < static_cast<int>(dom.size()); ++alpha) {
        const MorComponent& mc = phi.comps()[alpha];
        if (!mc.target) {
            if (dom[alpha].simples() > 0) return false;
            continue;
        }
        for (const Str& img : mc.images)
            if (img.is_zero()) return false;
    }
    // Images of distinct components into one codomain component may meet
    // only in the base point: the meet of their generator sets is bottom.
    for (int alpha = 0; alpha < static_cast<int>(dom.size()); ++alpha) {
        const MorComponent& a = phi.comps()[alpha];
        if (!a.target) continue;
        for (int beta = alpha + 1; beta < static_cast<int>(dom.size()); ++beta) {
            const MorComponent& b = phi.comps()[beta];
            if (!b.target || *a.target != *b.target) continue;
            const Connected& codc = cod[*a.target];
            const NcKind kind = codc.is_linear() ? NcKind::A : NcKind::B;
            NcSet Sa = NcSet::make(kind, codc.n, a.images);
            NcSet Sb = NcSet::make(kind, codc.n, b.images);
            if (!nc_meet(Sa, Sb).empty()) return false;
        }
    }
    return true;
}

bool is_epi(const Morphism& phi)
{
    const auto& cod = phi.cod().comps;
    for (int beta = 0; beta < static_cast<int>(cod.size()); ++beta) {
        if (cod[beta].simples() == 0) continue;  // only the base point to cover
        bool covered = false;
        for (int alpha = 0; alpha < static_cast<int>(phi.comps().size()) && !covered; ++alpha) {
            const MorComponent& mc = phi.comps()[alpha];
            if (mc.target && *mc.target == beta &&
                component_surjective(phi.dom().comps[alpha], cod[beta], mc.images))
                covered = true;
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

// All image tables for one connected pair, the all-zero table included.
std::vector<std::vector<Str>> component_tables(const Connected& domc, const Connected& codc)
{
    const int m = domc.simples(), n = codc.simples();
    std::vector<std::vector<Str>> out;
    std::vector<Str> cur(m, Str::zero());

    if (domc.is_linear() && codc.is_linear()) {
        std::function<void(int, int)> dfs = [&](int idx, int next) {
            if (idx == m) {
                out.push_back(cur);
                return;
            }
            cur[idx] = Str::zero();
            dfs(idx + 1, next);
            if (next < 0) {
                for (int a = 0; a < n; ++a)
                    for (int b = a; b < n; ++b) {
                        cur[idx] = Str::interval(a, b);
                        dfs(idx + 1, b + 1);
                    }
            } else {
                for (int b = next; b < n; ++b) {
                    cur[idx] = Str::interval(next, b);
                    dfs(idx + 1, b + 1);
                }
            }
            cur[idx] = Str::zero();
        };
        dfs(0, -1);
    } else if (domc.is_linear() && codc.is_cyclic()) {
        std::function<void(int, int, int)> dfs = [&](int idx, int next, int total) {
            if (idx == m) {
                out.push_back(cur);
                return;
            }
            cur[idx] = Str::zero();
            dfs(idx + 1, next, total);
            const int room = n - total;
            if (next < 0) {
                for (int a = 0; a < n; ++a)
                    for (int len = 1; len <= room; ++len) {
                        cur[idx] = Str::orbit(n, a, len);
                        dfs(idx + 1, (a + len) % n, total + len);
                    }
            } else {
                for (int len = 1; len <= room; ++len) {
                    cur[idx] = Str::orbit(n, next, len);
                    dfs(idx + 1, (next + len) % n, total + len);
                }
            }
            cur[idx] = Str::zero();
        };
        dfs(0, -1, 0);
    } else if (domc.is_cyclic() && codc.is_cyclic()) {
        // Non-zero tables wind the codomain exactly once; the wrap condition
        // holds automatically once the total reaches n.
        std::function<void(int, int, int, int)> dfs = [&](int idx, int first, int next,
                                                          int total) {
            if (idx == m) {
                if (first < 0 || total == n) out.push_back(cur);
                return;
            }
            cur[idx] = Str::zero();
            dfs(idx + 1, first, next, total);
            if (first < 0) {
                for (int a = 0; a < n; ++a)
                    for (int len = 1; len + total <= n; ++len) {
                        cur[idx] = Str::orbit(n, a, len);
                        dfs(idx + 1, a, (a + len) % n, total + len);
                    }
            } else {
                for (int len = 1; len + total <= n; ++len) {
                    cur[idx] = Str::orbit(n, next, len);
                    dfs(idx + 1, first, (next + len) % n, total + len);
                }
            }
            cur[idx] = Str::zero();
        };
        dfs(0, -1, 0, 0);
    } else {  // cyclic -> linear: only the zero table
        out.push_back(cur);
    }
    return out;
}

}  // namespace

std::vector<Morphism> hom_enumerate(const StringsObject& dom, const StringsObject& cod)
{
    // Hom out of a coproduct is the product over domain components of the
    // pointed coproducts over codomain components.
    std::vector<std::vector<MorComponent>> options(dom.comps.size());
    for (int alpha = 0; alpha < static_cast<int>(dom.comps.size()); ++alpha) {
        MorComponent zero_comp;
        zero_comp.images.assign(dom.comps[alpha].simples(), Str::zero());
        options[alpha].push_back(zero_comp);
        for (int beta = 0; beta < static_cast<int>(cod.comps.size()); ++beta)
            for (auto& table : component_tables(dom.comps[alpha], cod.comps[beta])) {
                bool nonzero = false;
                for (const Str& img : table)
                    if (!img.is_zero()) { nonzero = true; break; }
                if (!nonzero) continue;
                MorComponent mc;
                mc.target = beta;
                mc.images = std::move(table);
                options[alpha].push_back(std::move(mc));
            }
    }

    std::vector<Morphism> out;
    std::vector<MorComponent> pick(dom.comps.size());
    std::function<void(int)> dfs = [&](int alpha) {
        if (alpha == static_cast<int>(dom.comps.size())) {
            out.push_back(Morphism::validate(dom, cod, pick));
            return;
        }
        for (const MorComponent& mc : options[alpha]) {
            pick[alpha] = mc;
            dfs(alpha + 1);
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool pullback_universal(const Morphism& top, const Morphism& left, const Morphism& right,
                        const Morphism& bottom, int test_size)
{
    if (compose(right, top) != compose(bottom, left)) return false;
    std::vector<Connected> tests;
    for (int k = 0; k <= test_size; ++k) tests.push_back(Connected::linear(k));
    for (int k = 1; k <= test_size; ++k) tests.push_back(Connected::cyclic(k));

    for (const Connected& tc : tests) {
        const StringsObject T = StringsObject::connected(tc);
        const auto homsP = hom_enumerate(T, top.dom());
        const auto homsB1 = hom_enumerate(T, top.cod());
        const auto homsB2 = hom_enumerate(T, left.cod());

        std::map<std::pair<Morphism, Morphism>, int> realized;
        for (const Morphism& h : homsP)
            ++realized[{compose(top, h), compose(left, h)}];

        for (const Morphism& f : homsB1)
            for (const Morphism& g : homsB2) {
                if (compose(right, f) != compose(bottom, g)) continue;
                auto it = realized.find({f, g});
                if (it == realized.end() || it->second != 1) return false;
            }
        // Distinct lifts with equal legs would also break the bijection.
        for (const auto& [pair, count] : realized)
            if (count != 1) return false;
    }
    return true;
}

}  // namespace

bool check_pullback(int n, int test_size)
{
    if (n < 3) throw std::invalid_argument("the degeneracy square needs n >= 3");
    return pullback_universal(std_sigma(n, 0), std_sigma(n, n - 1), std_sigma(n - 1, n - 2),
                              std_sigma(n - 1, 0), test_size);
}

bool check_pullback_negative(int n, int test_size)
{
    if (n < 3) throw std::invalid_argument("the degeneracy square needs n >= 3");
    // Swapped legs: right and bottom exchanged.
    return pullback_universal(std_sigma(n, 0), std_sigma(n, n - 1), std_sigma(n - 1, 0),
                              std_sigma(n - 1, n - 2), test_size);
}

namespace {

bool pushout_universal(const Morphism& top, const Morphism& left, const Morphism& right,
                       const Morphism& bottom, int test_size)
{
    if (compose(right, top) != compose(bottom, left)) return false;
    std::vector<Connected> tests;
    for (int k = 0; k <= test_size; ++k) tests.push_back(Connected::linear(k));
    for (int k = 1; k <= test_size; ++k) tests.push_back(Connected::cyclic(k));

    for (const Connected& tc : tests) {
        const StringsObject T = StringsObject::connected(tc);
        const auto from_mid = hom_enumerate(top.cod(), T);
        const auto from_corner = hom_enumerate(right.cod(), T);
        for (const Morphism& u : from_mid)
            for (const Morphism& v : from_mid) {
                if (compose(u, top) != compose(v, left)) continue;
                int lifts = 0;
                for (const Morphism& w : from_corner)
                    if (compose(w, right) == u && compose(w, bottom) == v) ++lifts;
                if (lifts != 1) return false;
            }
    }
    return true;
}

}  // namespace

bool check_pushout(int n, int test_size)
{
    if (n < 3) throw std::invalid_argument("the degeneracy square needs n >= 3");
    return pushout_universal(std_sigma(n, 0), std_sigma(n, n - 1), std_sigma(n - 1, n - 2),
                             std_sigma(n - 1, 0), test_size);
}

}  // namespace strc
