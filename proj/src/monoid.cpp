#include "catlevy/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace catlevy {

Monoid Monoid::nat_add(int horizon) {
    Monoid m;
    m.kind_ = MonoidKind::NatAdd;
    m.horizon_ = horizon;
    return m;
}

Monoid Monoid::dyadic_grid(int level, int max_time) {
    if (level < 0 || level > 8 || max_time < 0)
        throw std::invalid_argument("dyadic grid needs 0 <= level <= 8 and max_time >= 0");
    Monoid m;
    m.kind_ = MonoidKind::DyadicGrid;
    m.level_ = level;
    m.grid_max_ = (1 << level) * max_time;
    m.horizon_ = m.grid_max_;
    return m;
}

Monoid Monoid::free_words(std::vector<std::string> alphabet, int horizon) {
    if (alphabet.empty()) throw std::invalid_argument("free monoid needs a nonempty alphabet");
    Monoid m;
    m.kind_ = MonoidKind::FreeWords;
    m.alphabet_ = std::move(alphabet);
    m.horizon_ = horizon;
    return m;
}

Monoid Monoid::nat_pair_add(int horizon) {
    Monoid m;
    m.kind_ = MonoidKind::NatPairAdd;
    m.horizon_ = horizon;
    return m;
}

std::string Monoid::name() const {
    switch (kind_) {
    case MonoidKind::NatAdd: return "NatAdd";
    case MonoidKind::DyadicGrid: return "DyadicGrid(" + std::to_string(level_) + ")";
    case MonoidKind::NatPairAdd: return "NatPairAdd";
    case MonoidKind::FreeWords: {
        std::string s = "FreeWords{";
        for (std::size_t i = 0; i < alphabet_.size(); ++i) s += (i ? "," : "") + alphabet_[i];
        return s + "}";
    }
    }
    return "?";
}

MonoidValue Monoid::unit() const {
    switch (kind_) {
    case MonoidKind::NatAdd:
    case MonoidKind::DyadicGrid: return {0};
    case MonoidKind::NatPairAdd: return {0, 0};
    case MonoidKind::FreeWords: return {};
    }
    return {};
}

bool Monoid::contains(const MonoidValue& a) const {
    switch (kind_) {
    case MonoidKind::NatAdd: return a.size() == 1 && a[0] >= 0;
    case MonoidKind::DyadicGrid: return a.size() == 1 && a[0] >= 0 && a[0] <= grid_max_;
    case MonoidKind::NatPairAdd: return a.size() == 2 && a[0] >= 0 && a[1] >= 0;
    case MonoidKind::FreeWords:
        return std::all_of(a.begin(), a.end(), [&](int x) {
            return x >= 0 && static_cast<std::size_t>(x) < alphabet_.size();
        });
    }
    return false;
}

MonoidValue Monoid::op(const MonoidValue& a, const MonoidValue& b) const {
    if (!contains(a) || !contains(b)) throw std::domain_error("operand outside " + name());
    switch (kind_) {
    case MonoidKind::NatAdd: return {a[0] + b[0]};
    case MonoidKind::DyadicGrid:
        if (a[0] + b[0] > grid_max_)
            throw std::domain_error("product " + format(MonoidValue{a[0] + b[0]}) +
                                    " leaves the dyadic grid");
        return {a[0] + b[0]};
    case MonoidKind::NatPairAdd: return {a[0] + b[0], a[1] + b[1]};
    case MonoidKind::FreeWords: {
        MonoidValue w = a;
        w.insert(w.end(), b.begin(), b.end());
        return w;
    }
    }
    return {};
}

MonoidValue Monoid::product(const Factorization& parts) const {
    MonoidValue acc = unit();
    for (const auto& p : parts) acc = op(acc, p);
    return acc;
}

int Monoid::size(const MonoidValue& a) const {
    switch (kind_) {
    case MonoidKind::NatAdd:
    case MonoidKind::DyadicGrid: return a[0];
    case MonoidKind::NatPairAdd: return a[0] + a[1];
    case MonoidKind::FreeWords: return static_cast<int>(a.size());
    }
    return 0;
}

std::vector<MonoidValue> Monoid::elements_up_to(int max_size) const {
    std::vector<MonoidValue> out;
    switch (kind_) {
    case MonoidKind::NatAdd:
        for (int n = 0; n <= max_size; ++n) out.push_back({n});
        break;
    case MonoidKind::DyadicGrid:
        for (int n = 0; n <= std::min(max_size, grid_max_); ++n) out.push_back({n});
        break;
    case MonoidKind::NatPairAdd:
        for (int s = 0; s <= max_size; ++s)
            for (int a = s; a >= 0; --a) out.push_back({a, s - a});
        break;
    case MonoidKind::FreeWords: {
        std::vector<MonoidValue> layer{{}};
        out.push_back({});
        const int k = static_cast<int>(alphabet_.size());
        for (int len = 1; len <= max_size; ++len) {
            std::vector<MonoidValue> next;
            for (const auto& w : layer)
                for (int x = 0; x < k; ++x) {
                    MonoidValue v = w;
                    v.push_back(x);
                    next.push_back(v);
                }
            out.insert(out.end(), next.begin(), next.end());
            layer = std::move(next);
        }
        break;
    }
    }
    return out;
}

std::vector<MonoidValue> Monoid::left_divisors(const MonoidValue& t) const {
    std::vector<MonoidValue> out;
    switch (kind_) {
    case MonoidKind::NatAdd:
    case MonoidKind::DyadicGrid:
        for (int n = 0; n <= t[0]; ++n) out.push_back({n});
        break;
    case MonoidKind::NatPairAdd:
        for (int a = 0; a <= t[0]; ++a)
            for (int b = 0; b <= t[1]; ++b) out.push_back({a, b});
        break;
    case MonoidKind::FreeWords:
        for (std::size_t len = 0; len <= t.size(); ++len)
            out.emplace_back(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(len));
        break;
    }
    return out;
}

bool Monoid::less_equal(const MonoidValue& s, const MonoidValue& r) const {
    return divides(s, r, *this).has_value();
}

std::string Monoid::format(const MonoidValue& a) const {
    switch (kind_) {
    case MonoidKind::NatAdd: return std::to_string(a[0]);
    case MonoidKind::DyadicGrid: {
        int num = a[0];
        int den = 1 << level_;
        int g = std::gcd(num, den);
        if (g == 0) g = 1;
        num /= g;
        den /= g;
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    case MonoidKind::NatPairAdd:
        return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
    case MonoidKind::FreeWords: {
        if (a.empty()) return "e";
        bool single = std::all_of(alphabet_.begin(), alphabet_.end(),
                                  [](const std::string& s) { return s.size() == 1; });
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!single && i) s += ".";
            s += alphabet_[static_cast<std::size_t>(a[i])];
        }
        return s;
    }
    }
    return "?";
}

std::string Monoid::format(const Factorization& f) const {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + format(f[i]);
    return s + ")";
}

MonoidValue Monoid::parse(const std::string& text) const {
    auto fail = [&]() -> MonoidValue {
        throw std::invalid_argument("cannot read '" + text + "' as an element of " + name());
    };
    try {
        switch (kind_) {
        case MonoidKind::NatAdd: {
            std::size_t used = 0;
            int n = std::stoi(text, &used);
            if (used != text.size() || n < 0) return fail();
            return {n};
        }
        case MonoidKind::DyadicGrid: {
            auto slash = text.find('/');
            std::size_t used = 0;
            int num = std::stoi(text.substr(0, slash), &used);
            if (used != text.substr(0, slash).size() || num < 0) return fail();
            int den = 1;
            if (slash != std::string::npos) {
                std::string d = text.substr(slash + 1);
                den = std::stoi(d, &used);
                if (used != d.size() || den <= 0) return fail();
            }
            int scale = 1 << level_;
            if ((static_cast<long long>(num) * scale) % den != 0) return fail();
            MonoidValue v{static_cast<int>(static_cast<long long>(num) * scale / den)};
            if (!contains(v)) return fail();
            return v;
        }
        case MonoidKind::NatPairAdd: {
            if (text.size() < 5 || text.front() != '(' || text.back() != ')') return fail();
            auto comma = text.find(',');
            if (comma == std::string::npos) return fail();
            int a = std::stoi(text.substr(1, comma - 1));
            int b = std::stoi(text.substr(comma + 1, text.size() - comma - 2));
            if (a < 0 || b < 0) return fail();
            return {a, b};
        }
        case MonoidKind::FreeWords: {
            if (text.empty() || text == "e") return {};
            MonoidValue w;
            std::size_t pos = 0;
            while (pos < text.size()) {
                if (text[pos] == '.') {
                    ++pos;
                    continue;
                }
                bool matched = false;
                for (std::size_t i = 0; i < alphabet_.size(); ++i) {
                    const auto& sym = alphabet_[i];
                    if (text.compare(pos, sym.size(), sym) == 0) {
                        w.push_back(static_cast<int>(i));
                        pos += sym.size();
                        matched = true;
                        break;
                    }
                }
                if (!matched) return fail();
            }
            return w;
        }
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        return fail();
    }
    return fail();
}

MonoidValue Monoid::from_int(int n) const {
    switch (kind_) {
    case MonoidKind::NatAdd: return {n};
    case MonoidKind::DyadicGrid: return {n * (1 << level_)};
    default: throw std::domain_error("from_int needs an additive scalar monoid");
    }
}

std::optional<MonoidValue> divides(const MonoidValue& s, const MonoidValue& r, const Monoid& m) {
    if (!m.contains(s) || !m.contains(r)) return std::nullopt;
    switch (m.kind()) {
    case MonoidKind::NatAdd:
    case MonoidKind::DyadicGrid:
        if (s[0] > r[0]) return std::nullopt;
        return MonoidValue{r[0] - s[0]};
    case MonoidKind::NatPairAdd:
        if (s[0] > r[0] || s[1] > r[1]) return std::nullopt;
        return MonoidValue{r[0] - s[0], r[1] - s[1]};
    case MonoidKind::FreeWords:
        if (s.size() > r.size() || !std::equal(s.begin(), s.end(), r.begin())) return std::nullopt;
        return MonoidValue(r.begin() + static_cast<std::ptrdiff_t>(s.size()), r.end());
    }
    return std::nullopt;
}

namespace {

void factor_dfs(const MonoidValue& rest, const Monoid& m, std::size_t parts_left,
                Factorization& prefix, std::vector<Factorization>& out) {
    for (const auto& s : m.left_divisors(rest)) {
        if (m.is_unit(s)) continue;
        auto p = divides(s, rest, m);
        prefix.push_back(s);
        if (m.is_unit(*p))
            out.push_back(prefix);
        else if (parts_left > 1)
            factor_dfs(*p, m, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

void block_dfs(const Factorization& sigma, std::size_t pos, const Factorization& tau,
               std::size_t k, const Monoid& m, RefinementBlocks& acc,
               std::vector<RefinementBlocks>& out) {
    if (k == tau.size()) {
        if (pos == sigma.size()) out.push_back(acc);
        return;
    }
    MonoidValue run = m.unit();
    Factorization block;
    for (std::size_t j = pos; j < sigma.size(); ++j) {
        try {
            run = m.op(run, sigma[j]);
        } catch (const std::domain_error&) {
            return;
        }
        block.push_back(sigma[j]);
        if (run == tau[k]) {
            acc.push_back(block);
            block_dfs(sigma, j + 1, tau, k + 1, m, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(const MonoidValue& t, const Monoid& m,
                                                    std::size_t max_parts) {
    if (max_parts == 0) throw std::domain_error("max_parts must be positive");
    if (!m.contains(t)) throw std::domain_error("element outside " + m.name());
    if (m.is_unit(t)) return {Factorization{}};
    std::vector<Factorization> out;
    Factorization prefix;
    factor_dfs(t, m, max_parts, prefix, out);
    return out;
}

std::vector<RefinementBlocks> block_decompositions(const Factorization& sigma,
                                                   const Factorization& tau, const Monoid& m) {
    if (m.product(sigma) != m.product(tau))
        throw std::domain_error("factorizations " + m.format(sigma) + " and " + m.format(tau) +
                                " factor different elements");
    std::vector<RefinementBlocks> out;
    RefinementBlocks acc;
    block_dfs(sigma, 0, tau, 0, m, acc, out);
    return out;
}

std::optional<RefinementBlocks> refines(const Factorization& sigma, const Factorization& tau,
                                        const Monoid& m) {
    auto all = block_decompositions(sigma, tau, m);
    if (all.empty()) return std::nullopt;
    return all.front();
}

Factorization common_refinement(const Factorization& sigma, const Factorization& tau,
                                const Monoid& m) {
    if (!m.totally_ordered())
        throw std::domain_error(m.name() + " is not declared totally ordered");
    const MonoidValue t = m.product(sigma);
    if (t != m.product(tau))
        throw std::domain_error("factorizations " + m.format(sigma) + " and " + m.format(tau) +
                                " factor different elements");
    std::set<int> cuts;
    for (const auto* f : {&sigma, &tau}) {
        int acc = 0;
        for (std::size_t i = 0; i + 1 < f->size(); ++i) {
            acc += (*f)[i][0];
            cuts.insert(acc);
        }
    }
    Factorization out;
    int prev = 0;
    for (int c : cuts) {
        out.push_back({c - prev});
        prev = c;
    }
    if (t[0] > 0) out.push_back({t[0] - prev});
    return out;
}

std::optional<Factorization> search_common_refinement(const Factorization& sigma,
                                                      const Factorization& tau, const Monoid& m,
                                                      std::size_t max_parts) {
    const MonoidValue t = m.product(sigma);
    for (const auto& rho : enumerate_factorizations(t, m, max_parts))
        if (refines(rho, sigma, m) && refines(rho, tau, m)) return rho;
    return std::nullopt;
}

std::optional<MonoidValue> ore_bound(const MonoidValue& s, const MonoidValue& t, const Monoid& m) {
    int horizon = std::max(m.horizon(), m.size(s) + m.size(t));
    if (m.kind() == MonoidKind::DyadicGrid) horizon = m.horizon();
    for (const auto& r : m.elements_up_to(horizon))
        if (m.less_equal(s, r) && m.less_equal(t, r)) return r;
    return std::nullopt;
}

namespace {

template <class F>
MonoidCheck for_pairs(const std::vector<MonoidValue>& xs, F&& f) {
    for (const auto& a : xs)
        for (const auto& b : xs) {
            auto r = f(a, b);
            if (!r.holds) return r;
        }
    return {};
}

std::optional<MonoidValue> try_op(const Monoid& m, const MonoidValue& a, const MonoidValue& b) {
    try {
        return m.op(a, b);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

}  // namespace

MonoidCheck check_associative(const Monoid& m, int max_size) {
    auto xs = m.elements_up_to(max_size);
    for (const auto& a : xs)
        for (const auto& b : xs)
            for (const auto& c : xs) {
                auto ab = try_op(m, a, b);
                auto bc = try_op(m, b, c);
                if (!ab || !bc) continue;
                auto l = try_op(m, *ab, c);
                auto r = try_op(m, a, *bc);
                if (l.has_value() != r.has_value() || (l && *l != *r))
                    return {false, m.format(a) + "," + m.format(b) + "," + m.format(c)};
            }
    return {};
}

MonoidCheck check_unit(const Monoid& m, int max_size) {
    for (const auto& a : m.elements_up_to(max_size))
        if (m.op(m.unit(), a) != a || m.op(a, m.unit()) != a) return {false, m.format(a)};
    return {};
}

MonoidCheck check_cancellative(const Monoid& m, int max_size) {
    auto xs = m.elements_up_to(max_size);
    for (const auto& a : xs)
        for (const auto& b : xs)
            for (const auto& c : xs) {
                if (b == c) continue;
                auto ab = try_op(m, a, b), ac = try_op(m, a, c);
                if (ab && ac && *ab == *ac)
                    return {false, "left: " + m.format(a) + "," + m.format(b) + "," + m.format(c)};
                auto ba = try_op(m, b, a), ca = try_op(m, c, a);
                if (ba && ca && *ba == *ca)
                    return {false, "right: " + m.format(a) + "," + m.format(b) + "," + m.format(c)};
            }
    return {};
}

MonoidCheck check_conical(const Monoid& m, int max_size) {
    return for_pairs(m.elements_up_to(max_size), [&](const MonoidValue& a, const MonoidValue& b) {
        auto ab = try_op(m, a, b);
        if (ab && m.is_unit(*ab) && !m.is_unit(a))
            return MonoidCheck{false, m.format(a) + " is invertible"};
        return MonoidCheck{};
    });
}

MonoidCheck check_unique_factorization(const Monoid& m, int max_size) {
    for (const auto& t : m.elements_up_to(max_size)) {
        const auto parts = static_cast<std::size_t>(std::max(1, m.size(t)));
        auto fs = enumerate_factorizations(t, m, parts);
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j)
                if (!search_common_refinement(fs[i], fs[j], m, parts))
                    return {false, m.format(t) + ": " + m.format(fs[i]) + " vs " + m.format(fs[j])};
    }
    return {};
}

MonoidCheck check_ore(const Monoid& m, int max_size) {
    return for_pairs(m.elements_up_to(max_size), [&](const MonoidValue& a, const MonoidValue& b) {
        if (!ore_bound(a, b, m)) return MonoidCheck{false, "(" + m.format(a) + "," + m.format(b) + ")"};
        return MonoidCheck{};
    });
}

MonoidCheck check_total_order(const Monoid& m, int max_size) {
    return for_pairs(m.elements_up_to(max_size), [&](const MonoidValue& a, const MonoidValue& b) {
        if (!m.less_equal(a, b) && !m.less_equal(b, a))
            return MonoidCheck{false, "(" + m.format(a) + "," + m.format(b) + ")"};
        return MonoidCheck{};
    });
}

}  // namespace catlevy
