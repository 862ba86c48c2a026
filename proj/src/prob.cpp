#include "catlevy/prob.hpp"

#include <algorithm>
#include <numeric>

namespace catlevy {

FiniteSpace Prob::make_space(std::vector<Rational> weights) {
    if (weights.empty()) throw std::invalid_argument("probability space needs at least one point");
    Rational total = 0;
    for (auto& w : weights) {
        w.canonicalize();
        if (w < 0) throw std::invalid_argument("negative probability weight");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("probability weights sum to " + to_string(total));
    return {std::move(weights)};
}

std::size_t Prob::points(const Obj& a) const {
    std::size_t n = 1;
    for (const auto& s : a.leaves()) n *= s.weights.size();
    return n;
}

std::vector<Rational> Prob::measure(const Obj& a) const {
    std::vector<Rational> m{Rational(1)};
    for (const auto& s : a.leaves()) {
        std::vector<Rational> next;
        next.reserve(m.size() * s.weights.size());
        for (const auto& x : m)
            for (const auto& w : s.weights) next.push_back(x * w);
        m = std::move(next);
    }
    return m;
}

std::vector<Rational> Prob::pushforward(const Mor& f) const {
    std::vector<Rational> out(points(f.source));
    const auto m = measure(f.target);
    for (std::size_t b = 0; b < f.data.size(); ++b) out.at(f.data[b]) += m[b];
    return out;
}

Prob::Data Prob::identity_data(const Obj& a) const {
    Data d(points(a));
    std::iota(d.begin(), d.end(), 0u);
    return d;
}

// (g o f) is stored as f* o g*: read the composite backwards on sample spaces.
Prob::Data Prob::compose_data(const Mor& g, const Mor& f) const {
    Data d;
    d.reserve(g.data.size());
    for (auto c : g.data) d.push_back(f.data.at(c));
    return d;
}

Prob::Data Prob::tensor_data(const Mor& f, const Mor& g) const {
    const auto nc = static_cast<std::uint32_t>(points(g.source));
    Data d;
    d.reserve(f.data.size() * g.data.size());
    for (auto b : f.data)
        for (auto e : g.data) d.push_back(b * nc + e);
    return d;
}

Prob::Data Prob::structural_data(const Obj& from, const Obj& to) const {
    if (from.leaves() != to.leaves())
        throw std::invalid_argument("structural map between different leaf sequences");
    return identity_data(from);
}

bool Prob::is_valid(const Mor& f) const {
    if (f.data.size() != points(f.target)) return false;
    const auto ns = points(f.source);
    for (auto x : f.data)
        if (x >= ns) return false;
    return pushforward(f) == measure(f.source);
}

std::optional<Prob::Mor> Prob::independence_candidate(const std::vector<Mor>& fs) const {
    Obj src = fs[0].source;
    for (std::size_t i = 1; i < fs.size(); ++i) src = tensor_obj(src, fs[i].source);
    const std::size_t n = points(fs[0].target);
    Data d(n, 0);
    for (const auto& f : fs) {
        const auto radix = static_cast<std::uint32_t>(points(f.source));
        for (std::size_t w = 0; w < n; ++w) d[w] = d[w] * radix + f.data.at(w);
    }
    return Mor{src, fs[0].target, d};
}

namespace {

std::vector<Rational> random_weights(Rng& rng, std::size_t n) {
    std::vector<int> raw(n);
    int total = 0;
    for (auto& r : raw) total += (r = rand_int(rng, 1, 4));
    std::vector<Rational> w;
    for (int r : raw) w.push_back(Rational(r, total));
    for (auto& x : w) x.canonicalize();
    return w;
}

}  // namespace

Prob::Obj Prob::random_object(Rng& rng) const {
    Obj o = space(random_weights(rng, 1 + rand_below(rng, 3)));
    if (rand_below(rng, 4) == 0) o = tensor_obj(o, space(random_weights(rng, 1 + rand_below(rng, 2))));
    return o;
}

// A random variable on the target: a random surjection onto a quotient space.
Prob::Mor Prob::random_morphism_into(const Obj& target, Rng& rng) const {
    const std::size_t n = points(target);
    const std::size_t k = 1 + rand_below(rng, n);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rand_below(rng, i)]);
    Data d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[order[i]] = static_cast<std::uint32_t>(i < k ? i : rand_below(rng, k));
    const auto m = measure(target);
    std::vector<Rational> w(k);
    for (std::size_t b = 0; b < n; ++b) w[d[b]] += m[b];
    return {space(w), target, d};
}

// A refinement of the source: each point splits into one or two pieces.
Prob::Mor Prob::random_morphism_from(const Obj& source, Rng& rng) const {
    const auto m = measure(source);
    std::vector<std::pair<Rational, std::uint32_t>> pieces;
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] != 0 && rand_bool(rng)) {
            Rational part = m[a] * Rational(rand_int(rng, 1, 3), 4);
            part.canonicalize();
            pieces.push_back({part, static_cast<std::uint32_t>(a)});
            pieces.push_back({m[a] - part, static_cast<std::uint32_t>(a)});
        } else {
            pieces.push_back({m[a], static_cast<std::uint32_t>(a)});
        }
    }
    for (std::size_t i = pieces.size(); i > 1; --i) std::swap(pieces[i - 1], pieces[rand_below(rng, i)]);
    std::vector<Rational> w;
    Data d;
    for (const auto& [p, a] : pieces) {
        w.push_back(p);
        d.push_back(a);
    }
    return {source, space(w), d};
}

std::string Prob::describe(const Obj& a) const {
    return a.str([](const FiniteSpace& s) {
        std::string out = "P(";
        for (std::size_t i = 0; i < s.weights.size(); ++i) out += (i ? "," : "") + to_string(s.weights[i]);
        return out + ")";
    });
}

std::string Prob::describe(const Mor& f) const {
    std::string m = "[";
    for (std::size_t i = 0; i < f.data.size(); ++i) m += (i ? " " : "") + std::to_string(f.data[i]);
    return describe(f.source) + " -> " + describe(f.target) + " " + m + "]";
}

}  // namespace catlevy
