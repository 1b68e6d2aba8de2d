#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strcat/strings.hpp"

namespace strc {

struct ValidationError : std::invalid_argument {
    int component;
    int image_index;  // -1 when the whole component is at fault
    ValidationError(std::string msg, int comp, int idx)
        : std::invalid_argument(std::move(msg)), component(comp), image_index(idx) {}
};

/// One component of a morphism: the codomain component the domain component
/// maps into (or none for the zero component) and the images of its simple
/// strings.  Images are all zero exactly when target is none.
struct MorComponent {
    std::optional<int> target;
    std::vector<Str> images;

    friend bool operator==(const MorComponent&, const MorComponent&) = default;
    friend std::strong_ordering operator<=>(const MorComponent&, const MorComponent&) = default;
};

/// A morphism of string objects in validated normal form.  Per component
/// the non-zero simple images, read in (cyclic) order, form a composable
/// chain; evaluation then satisfies both clauses of the morphism condition
/// on composable pairs.
class Morphism {
public:
    Morphism() = default;

    /// Validates and normalizes.  Throws ValidationError, reporting the
    /// offending component and image index.
    static Morphism validate(StringsObject dom, StringsObject cod,
                             std::vector<MorComponent> comps);

    static Morphism identity(const StringsObject& obj);
    static Morphism zero(const StringsObject& dom, const StringsObject& cod);

    /// Convenience for connected objects: one component onto target 0.
    static Morphism connected(Connected dom, Connected cod, std::vector<Str> images);

    const StringsObject& dom() const { return dom_; }
    const StringsObject& cod() const { return cod_; }
    const std::vector<MorComponent>& comps() const { return comps_; }
    bool is_connected_pair() const { return dom_.is_connected() && cod_.is_connected(); }

    friend bool operator==(const Morphism&, const Morphism&) = default;
    friend std::strong_ordering operator<=>(const Morphism&, const Morphism&) = default;

private:
    StringsObject dom_, cod_;
    std::vector<MorComponent> comps_;
};

/// Image of x under the morphism: the concatenation of the images of its
/// composition factors; the base point maps to the base point.
Element evaluate(const Morphism& phi, const Element& x);
/// Connected shorthand: string in component 0 to string in component 0.
Str evaluate(const Morphism& phi, const Str& x);

Morphism compose(const Morphism& psi, const Morphism& phi);

/// Standard generators.  Linear faces delta(n,i): L(n-1) -> L(n) for
/// 0 <= i <= n; cyclic faces 0 <= i < n land in C(n).  Degeneracies
/// sigma(n,i) for 0 <= i < n.  tau(n,i) rotates C(n).  eps(n,i) embeds
/// L(n-1) into C(n) avoiding the simple at residue i.
Morphism std_delta(int n, int i, Connected::Kind kind = Connected::Kind::Linear);
Morphism std_sigma(int n, int i, Connected::Kind kind = Connected::Kind::Linear);
Morphism std_tau(int n, int i);
Morphism std_eps(int n, int i);

/// Epi-mono factorisation of a connected-domain morphism: the epi is the
/// composite of degeneracies at the zero positions (largest index first),
/// the mono keeps every simple image non-zero.
std::pair<Morphism, Morphism> epi_mono_factor(const Morphism& phi);

/// Canonical word: faces after degeneracies after an optional rotation.
/// Degeneracies are applied largest index first, faces in ascending order.
/// Words through the zero object use faces {1,...,n} for a linear codomain
/// and {0,...,n-1} for a cyclic one.
struct CanonicalWord {
    Connected dom, cod;
    int rotation = 0;                // cyclic domains only
    std::vector<int> degeneracies;   // subset of [0, m), ascending
    std::vector<int> faces;          // ascending; in [0,n] linear, [0,n) cyclic

    friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
    friend std::strong_ordering operator<=>(const CanonicalWord&, const CanonicalWord&) = default;
};

/// Unique canonical word of a connected morphism (linear-linear,
/// cyclic-cyclic, or the zero morphism cyclic-linear).  For cyclic domains
/// the rotation is the smallest k whose rebuilt word re-evaluates to phi.
CanonicalWord canonical_decomposition(const Morphism& phi);
Morphism evaluate_word(const CanonicalWord& word);
/// Every well-formed word between the two objects (not only canonical ones).
std::vector<CanonicalWord> enumerate_words(const Connected& dom, const Connected& cod);

bool is_mono(const Morphism& phi);
bool is_epi(const Morphism& phi);

/// Exhaustive, duplicate-free, canonically ordered Hom-set.
std::vector<Morphism> hom_enumerate(const StringsObject& dom, const StringsObject& cod);

/// Tests the pullback universal property of the degeneracy square on L(n)
/// against all connected test objects of size <= test_size (both kinds).
/// The square is not a pullback: cones built from outer faces compose to
/// zero on both legs yet admit no lift, so this reports false.
bool check_pullback(int n, int test_size);
/// Negative control: the square with swapped legs must fail.
bool check_pullback_negative(int n, int test_size);
/// The same square does satisfy the pushout universal property.
bool check_pushout(int n, int test_size);

}  // namespace strc
