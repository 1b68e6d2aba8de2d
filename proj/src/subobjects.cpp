#include "strcat/subobjects.hpp"

#include <algorithm>
#include <stdexcept>

namespace strc {

std::pair<StringsObject, Morphism> subobject_from_ncset(const NcSet& S)
{
    const int n = S.n();
    const Connected target =
        S.kind() == NcKind::A ? Connected::linear(n) : Connected::cyclic(n);
    const StringsObject cod = StringsObject::connected(target);

    if (S.empty()) {
        const StringsObject dom = StringsObject::connected(Connected::linear(0));
        return {dom, Morphism::zero(dom, cod)};
    }

    const auto& gens = S.gens();
    const int g = static_cast<int>(gens.size());
    // Successor of a generator: the unique generator it concatenates with.
    std::vector<int> succ(g, -1), pred(g, -1);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (mul(gens[i], gens[j]).is_zero()) continue;
            if (succ[i] != -1 || pred[j] != -1)
                throw std::logic_error("non-crossing generators chain uniquely");
            succ[i] = j;
            pred[j] = i;
        }

    std::vector<std::vector<int>> groups;
    std::vector<bool> used(g, false);
    for (int i = 0; i < g; ++i) {  // open chains start at generators without predecessor
        if (pred[i] != -1 || used[i]) continue;
        std::vector<int> chain;
        for (int k = i; k != -1; k = succ[k]) {
            chain.push_back(k);
            used[k] = true;
        }
        groups.push_back(std::move(chain));
    }
    for (int i = 0; i < g; ++i) {  // what remains are cycles: wrapping groups
        if (used[i]) continue;
        int start = i;
        for (int k = succ[i]; k != i; k = succ[k])
            if (gens[k] < gens[start]) start = k;
        std::vector<int> cycle;
        int k = start;
        do {
            cycle.push_back(k);
            used[k] = true;
            k = succ[k];
        } while (k != start);
        groups.push_back(std::move(cycle));
    }
    std::sort(groups.begin(), groups.end(),
              [&](const auto& x, const auto& y) { return gens[x[0]] < gens[y[0]]; });

    std::vector<Connected> comps;
    std::vector<MorComponent> tables;
    for (const auto& group : groups) {
        const bool wraps = pred[group.front()] != -1;  // cycles only; chains start predecessor-free
        MorComponent mc;
        mc.target = 0;
        for (int k : group) mc.images.push_back(gens[k]);
        comps.push_back(wraps ? Connected::cyclic(static_cast<int>(group.size()))
                              : Connected::linear(static_cast<int>(group.size())));
        tables.push_back(std::move(mc));
    }
    StringsObject dom{comps};
    Morphism phi = Morphism::validate(dom, cod, std::move(tables));
    if (!is_mono(phi)) throw std::logic_error("classified morphism must be mono");
    return {dom, phi};
}

NcSet ncset_of_mono(const Morphism& phi)
{
    if (!phi.cod().is_connected())
        throw std::invalid_argument("generator sets classify monos into a connected object");
    if (!is_mono(phi)) throw std::invalid_argument("not a monomorphism");
    const Connected codc = phi.cod().comps[0];
    std::vector<Str> gens;
    for (const MorComponent& mc : phi.comps())
        for (const Str& img : mc.images)
            if (!img.is_zero()) gens.push_back(img);
    return NcSet::make(codc.is_linear() ? NcKind::A : NcKind::B, codc.n, std::move(gens));
}

bool mono_factors_through(const Morphism& phi, const Morphism& psi)
{
    if (phi.cod() != psi.cod()) throw std::invalid_argument("codomain mismatch");
    for (const Morphism& rho : hom_enumerate(phi.dom(), psi.dom()))
        if (compose(psi, rho) == phi) return true;
    return false;
}

}  // namespace strc
