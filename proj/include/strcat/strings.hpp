#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace strc {

/// A string value.  Either the zero string `*`, an interval (a,b) of
/// integers with a <= b, or a shift orbit C{n}(start,len): the class of the
/// interval (start, start+len-1) under translation by the modulus n.
/// Orbits may be longer than their modulus (winding strings).
class Str {
public:
    enum class Kind { Zero, Interval, Orbit };

    Str() = default;  // zero string

    static Str zero() { return Str{}; }

    static Str interval(int a, int b)
    {
        if (a > b) throw std::invalid_argument("interval requires a <= b");
        Str s;
        s.kind_ = Kind::Interval;
        s.a_ = a;
        s.b_ = b;
        return s;
    }

    static Str simple(int i) { return interval(i, i); }

    static Str orbit(int modulus, int start, int len)
    {
        if (modulus < 1) throw std::invalid_argument("orbit modulus must be positive");
        if (len < 1) throw std::invalid_argument("orbit length must be positive");
        Str s;
        s.kind_ = Kind::Orbit;
        s.mod_ = modulus;
        s.start_ = ((start % modulus) + modulus) % modulus;
        s.len_ = len;
        return s;
    }

    /// Simple orbit (length one) at the given residue.
    static Str cyclic_simple(int modulus, int i) { return orbit(modulus, i, 1); }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_interval() const { return kind_ == Kind::Interval; }
    bool is_orbit() const { return kind_ == Kind::Orbit; }

    int a() const { require(Kind::Interval); return a_; }
    int b() const { require(Kind::Interval); return b_; }

    int modulus() const { require(Kind::Orbit); return mod_; }
    int start() const { require(Kind::Orbit); return start_; }

    int length() const
    {
        switch (kind_) {
        case Kind::Zero: return 0;
        case Kind::Interval: return b_ - a_ + 1;
        case Kind::Orbit: return len_;
        }
        return 0;
    }

    friend bool operator==(const Str&, const Str&) = default;

    /// Canonical order: zero first, then by (length, start).  Total on any
    /// one element set; intervals and orbits never mix there.
    friend std::strong_ordering operator<=>(const Str& x, const Str& y)
    {
        if (auto c = static_cast<int>(x.kind_) <=> static_cast<int>(y.kind_); c != 0) return c;
        switch (x.kind_) {
        case Kind::Zero: return std::strong_ordering::equal;
        case Kind::Interval:
            if (auto c = x.length() <=> y.length(); c != 0) return c;
            return x.a_ <=> y.a_;
        case Kind::Orbit:
            if (auto c = x.mod_ <=> y.mod_; c != 0) return c;
            if (auto c = x.len_ <=> y.len_; c != 0) return c;
            return x.start_ <=> y.start_;
        }
        return std::strong_ordering::equal;
    }

private:
    void require(Kind k) const
    {
        if (kind_ != k) throw std::logic_error("string value accessed with wrong kind");
    }

    Kind kind_ = Kind::Zero;
    int a_ = 0, b_ = 0;
    int mod_ = 0, start_ = 0, len_ = 0;
};

/// Interval concatenation: (s',t'') when s''+1 = t'; the zero string is the
/// unit; everything else multiplies to zero.  Not associative.
Str concat(const Str& s, const Str& t);

/// Orbit concatenation over one modulus: defined on representatives and
/// independent of their choice.  Zero is the unit.
Str cyclic_concat(const Str& s, const Str& t);

/// Dispatches to concat or cyclic_concat on the operand kinds.
Str mul(const Str& s, const Str& t);

/// Simple strings of s in order, with multiplicity for orbits.
std::vector<Str> composition_factors(const Str& s);

/// A connected object: the linear string of length n or the cyclic string of
/// length n.  Cyclic of length zero collapses to Linear(0).
struct Connected {
    enum class Kind { Linear, Cyclic };
    Kind kind = Kind::Linear;
    int n = 0;

    static Connected linear(int n)
    {
        if (n < 0) throw std::invalid_argument("size must be non-negative");
        return Connected{Kind::Linear, n};
    }

    static Connected cyclic(int n)
    {
        if (n < 0) throw std::invalid_argument("size must be non-negative");
        if (n == 0) return linear(0);
        return Connected{Kind::Cyclic, n};
    }

    bool is_linear() const { return kind == Kind::Linear; }
    bool is_cyclic() const { return kind == Kind::Cyclic; }

    /// Number of simple strings.
    int simples() const { return n; }

    Str simple(int i) const;

    friend bool operator==(const Connected&, const Connected&) = default;
    friend std::strong_ordering operator<=>(const Connected&, const Connected&) = default;
};

/// A finite coproduct of connected objects.  Its element set is the pointed
/// coproduct: at most one coordinate differs from the base point.
struct StringsObject {
    std::vector<Connected> comps;

    StringsObject() = default;
    explicit StringsObject(std::vector<Connected> cs) : comps(std::move(cs)) {}
    static StringsObject connected(Connected c) { return StringsObject{{c}}; }

    bool is_connected() const { return comps.size() == 1; }

    friend bool operator==(const StringsObject&, const StringsObject&) = default;
    friend std::strong_ordering operator<=>(const StringsObject&, const StringsObject&) = default;
};

/// An element of a StringsObject: the base point, or a non-zero string in
/// one component.
struct Element {
    int comp = -1;   // -1: base point
    Str value;       // zero iff comp == -1

    static Element base() { return Element{}; }
    static Element in(int comp, const Str& v)
    {
        if (v.is_zero()) return base();
        return Element{comp, v};
    }

    bool is_base() const { return comp < 0; }
    friend bool operator==(const Element&, const Element&) = default;
    friend std::strong_ordering operator<=>(const Element&, const Element&) = default;
};

/// All strings of a connected object with length <= length_bound, sorted in
/// canonical order with zero first.  Linear objects ignore the bound when it
/// is negative; cyclic objects require one (their element set is infinite).
std::vector<Str> elements(const Connected& c, int length_bound = -1);

/// All elements of an object, base point first.
std::vector<Element> object_elements(const StringsObject& obj, int length_bound = -1);

}  // namespace strc
