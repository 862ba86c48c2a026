#include "catlevy/finset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace catlevy {

namespace {

std::string fresh_symbol(std::size_t i) { return "s" + std::to_string(i); }

FinSet::Obj fresh_set(std::size_t n) {
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < n; ++i) syms.push_back(fresh_symbol(i));
    return FinSet::Obj::leaf(FinSet::make_set(syms));
}

}  // namespace

SymbolSet FinSet::make_set(std::vector<std::string> symbols) {
    std::sort(symbols.begin(), symbols.end());
    if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end())
        throw std::invalid_argument("finite set with a repeated symbol");
    return {std::move(symbols)};
}

std::size_t FinSet::size(const Obj& a) const {
    std::size_t n = 0;
    for (const auto& s : a.leaves()) n += s.symbols.size();
    return n;
}

FinSet::Data FinSet::identity_data(const Obj& a) const {
    Data d(size(a));
    std::iota(d.begin(), d.end(), 0u);
    return d;
}

FinSet::Data FinSet::compose_data(const Mor& g, const Mor& f) const {
    Data d;
    d.reserve(f.data.size());
    for (auto x : f.data) d.push_back(g.data.at(x));
    return d;
}

FinSet::Data FinSet::tensor_data(const Mor& f, const Mor& g) const {
    Data d = f.data;
    const auto shift = static_cast<std::uint32_t>(size(f.target));
    for (auto x : g.data) d.push_back(x + shift);
    return d;
}

FinSet::Data FinSet::structural_data(const Obj& from, const Obj& to) const {
    if (from.leaves() != to.leaves())
        throw std::invalid_argument("structural map between different leaf sequences");
    return identity_data(from);
}

bool FinSet::is_valid(const Mor& f) const {
    if (f.data.size() != size(f.source)) return false;
    const auto n = size(f.target);
    std::set<std::uint32_t> seen;
    for (auto x : f.data)
        if (x >= n || !seen.insert(x).second) return false;
    return true;
}

// The copair out of the disjoint union; it is a morphism iff the images are disjoint.
std::optional<FinSet::Mor> FinSet::independence_candidate(const std::vector<Mor>& fs) const {
    std::vector<Obj> sources;
    Data d;
    for (const auto& f : fs) {
        sources.push_back(f.source);
        d.insert(d.end(), f.data.begin(), f.data.end());
    }
    Obj src = sources[0];
    for (std::size_t i = 1; i < sources.size(); ++i) src = tensor_obj(src, sources[i]);
    return Mor{src, fs[0].target, d};
}

std::vector<FinSet::Mor> FinSet::all_morphisms(const Obj& source, const Obj& target) const {
    const std::size_t k = size(source), n = size(target);
    std::vector<Mor> out;
    Data cur;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == k) {
            out.push_back({source, target, cur});
            return;
        }
        for (std::uint32_t x = 0; x < n; ++x) {
            if (used[x]) continue;
            used[x] = true;
            cur.push_back(x);
            self(self);
            cur.pop_back();
            used[x] = false;
        }
    };
    rec(rec);
    return out;
}

FinSet::Obj FinSet::random_object(Rng& rng) const {
    static const char* pool[] = {"a", "b", "c", "d", "e", "f"};
    auto atom = [&] {
        std::vector<std::string> syms;
        for (auto* p : pool)
            if (rand_below(rng, 3) == 0) syms.push_back(p);
        return leaf(make_set(syms));
    };
    Obj o = atom();
    if (rand_below(rng, 4) == 0) o = tensor_obj(o, atom());
    return o;
}

FinSet::Mor FinSet::random_morphism_into(const Obj& target, Rng& rng) const {
    const std::size_t n = size(target);
    const std::size_t k = rand_below(rng, n + 1);
    Data img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rand_below(rng, i)]);
    img.resize(k);
    return {fresh_set(k), target, img};
}

FinSet::Mor FinSet::random_morphism_from(const Obj& source, Rng& rng) const {
    const std::size_t k = size(source);
    const std::size_t n = k + rand_below(rng, 3);
    Data img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rand_below(rng, i)]);
    img.resize(k);
    return {source, fresh_set(n), img};
}

std::string FinSet::describe(const Obj& a) const {
    return a.str([](const SymbolSet& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.symbols.size(); ++i) out += (i ? "," : "") + s.symbols[i];
        return out + "}";
    });
}

std::string FinSet::describe(const Mor& f) const {
    std::string m = "[";
    for (std::size_t i = 0; i < f.data.size(); ++i) m += (i ? " " : "") + std::to_string(f.data[i]);
    return describe(f.source) + " -> " + describe(f.target) + " " + m + "]";
}

}  // namespace catlevy
