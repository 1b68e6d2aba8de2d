#include "strcat/strings.hpp"

#include <algorithm>

namespace strc {

Str concat(const Str& s, const Str& t)
{
    if (s.is_zero()) return t;
    if (t.is_zero()) return s;
    if (!s.is_interval() || !t.is_interval())
        throw std::invalid_argument("concat expects interval strings");
    if (s.b() + 1 == t.a()) return Str::interval(s.a(), t.b());
    return Str::zero();
}

Str cyclic_concat(const Str& s, const Str& t)
{
    if (s.is_zero()) return t;
    if (t.is_zero()) return s;
    if (!s.is_orbit() || !t.is_orbit())
        throw std::invalid_argument("cyclic_concat expects orbit strings");
    if (s.modulus() != t.modulus())
        throw std::invalid_argument("cyclic_concat: modulus mismatch");
    const int n = s.modulus();
    // Composable iff some lifts are adjacent: t' - (s' + len(s)) = 0 mod n.
    if (((t.start() - (s.start() + s.length())) % n + n) % n == 0)
        return Str::orbit(n, s.start(), s.length() + t.length());
    return Str::zero();
}

Str mul(const Str& s, const Str& t)
{
    if (s.is_orbit() || t.is_orbit()) return cyclic_concat(s, t);
    return concat(s, t);
}

std::vector<Str> composition_factors(const Str& s)
{
    std::vector<Str> out;
    switch (s.kind()) {
    case Str::Kind::Zero:
        break;
    case Str::Kind::Interval:
        for (int i = s.a(); i <= s.b(); ++i) out.push_back(Str::simple(i));
        break;
    case Str::Kind::Orbit:
        for (int k = 0; k < s.length(); ++k)
            out.push_back(Str::cyclic_simple(s.modulus(), s.start() + k));
        break;
    }
    return out;
}

Str Connected::simple(int i) const
{
    if (i < 0 || i >= n) throw std::out_of_range("simple index out of range");
    return is_linear() ? Str::simple(i) : Str::cyclic_simple(n, i);
}

std::vector<Str> elements(const Connected& c, int length_bound)
{
    std::vector<Str> out;
    out.push_back(Str::zero());
    if (c.is_linear()) {
        for (int a = 0; a < c.n; ++a)
            for (int b = a; b < c.n; ++b)
                if (length_bound < 0 || b - a + 1 <= length_bound)
                    out.push_back(Str::interval(a, b));
    } else {
        if (length_bound < 0)
            throw std::invalid_argument("elements of a cyclic object need a length bound");
        for (int len = 1; len <= length_bound; ++len)
            for (int a = 0; a < c.n; ++a)
                out.push_back(Str::orbit(c.n, a, len));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> object_elements(const StringsObject& obj, int length_bound)
{
    std::vector<Element> out;
    out.push_back(Element::base());
    for (int i = 0; i < static_cast<int>(obj.comps.size()); ++i)
        for (const Str& s : elements(obj.comps[i], length_bound))
            if (!s.is_zero()) out.push_back(Element::in(i, s));
    return out;
}

}  // namespace strc
