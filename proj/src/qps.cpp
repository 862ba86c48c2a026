#include "catlevy/qps.hpp"

#include <algorithm>
#include <numeric>

namespace catlevy {

namespace {

std::vector<std::string> fresh_alphabet(std::size_t k) {
    std::vector<std::string> a;
    for (std::size_t i = 0; i < k; ++i) a.push_back("x" + std::to_string(i));
    return a;
}

Rational rand_moment(Rng& rng) { return rand_rational(rng, 2, 3); }

MomentFunctional random_functional(Rng& rng, std::size_t k, int d) {
    return MomentFunctional::from_function(fresh_alphabet(k), d, [&](const ColoredWord&) { return rand_moment(rng); });
}

ColoredWord on_leg(const ColoredWord& w, unsigned leg) {
    ColoredWord out;
    for (Letter l : w) out.push_back(make_letter(leg, sym_of(l)));
    return out;
}

}  // namespace

QpsEvaluator::QpsEvaluator(const Qps& cat, Qps::Obj obj) : cat_(&cat), obj_(std::move(obj)) {}

Rational QpsEvaluator::operator()(const ColoredWord& w) {
    if (!cat_->word_allowed(obj_, w))
        throw DegreeOverflow("word of length " + std::to_string(w.size()) + " is outside the degree bounds of " +
                             cat_->describe(obj_));
    return node(obj_, 0, w);
}

Rational QpsEvaluator::operator()(const Polynomial& p) {
    Rational v = 0;
    for (const auto& [w, c] : p) v += c * (*this)(w);
    return v;
}

Rational QpsEvaluator::node(const Qps::Obj& n, unsigned first_leg, const ColoredWord& w) {
    if (w.empty()) return 1;
    switch (n.kind()) {
    case Qps::Obj::Kind::Unit: throw std::logic_error("nonempty word on the unit object");
    case Qps::Obj::Kind::Leaf: return (*n.atom().phi)(w);
    case Qps::Obj::Kind::Node: break;
    }
    auto key = std::make_pair(n.id(), w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const auto l = n.left(), r = n.right();
    const unsigned split = first_leg + static_cast<unsigned>(l.leaf_count());
    Rational v = product_rule(
        cat_->kind(), w, [split](Letter x) { return leg_of(x) < split; },
        [&](const ColoredWord& u) { return node(l, first_leg, u); },
        [&](const ColoredWord& u) { return node(r, split, u); },
        [&](const ColoredWord& u) { return node(n, first_leg, u); });
    memo_.emplace(std::move(key), v);
    return v;
}

std::vector<const MomentFunctional*> Qps::legs(const Obj& a) const {
    std::vector<const MomentFunctional*> out;
    for (const auto& at : a.leaves()) out.push_back(at.phi.get());
    return out;
}

bool Qps::word_allowed(const Obj& a, const ColoredWord& w) const {
    const auto ls = legs(a);
    std::vector<int> count(ls.size(), 0);
    int max_d = 0;
    for (auto* p : ls) max_d = std::max(max_d, p->degree());
    for (Letter l : w) {
        const auto leg = leg_of(l);
        if (leg >= ls.size() || sym_of(l) >= ls[leg]->alphabet_size()) return false;
        if (++count[leg] > ls[leg]->degree()) return false;
    }
    return commuting() || static_cast<int>(w.size()) <= max_d;
}

std::vector<ColoredWord> Qps::words(const Obj& a) const {
    const auto ls = legs(a);
    if (commuting()) {
        std::vector<ColoredWord> out{ColoredWord()};
        for (unsigned i = 0; i < ls.size(); ++i) {
            std::vector<ColoredWord> next;
            const auto leg_words = ls[i]->words();
            for (const auto& u : out)
                for (const auto& v : leg_words) next.push_back(u + on_leg(v, i));
            out = std::move(next);
        }
        return out;
    }
    std::vector<Letter> letters;
    int max_d = 0;
    for (unsigned i = 0; i < ls.size(); ++i) {
        max_d = std::max(max_d, ls[i]->degree());
        for (unsigned s = 0; s < ls[i]->alphabet_size(); ++s) letters.push_back(make_letter(i, s));
    }
    std::vector<ColoredWord> out{ColoredWord()};
    std::vector<ColoredWord> layer{ColoredWord()};
    for (int len = 1; len <= max_d; ++len) {
        std::vector<ColoredWord> next;
        for (const auto& u : layer)
            for (Letter l : letters) {
                ColoredWord v = u + l;
                if (word_allowed(a, v)) next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Rational Qps::evaluate(const Obj& a, const ColoredWord& w) const { return QpsEvaluator(*this, a)(w); }
Rational Qps::evaluate(const Obj& a, const Polynomial& p) const { return QpsEvaluator(*this, a)(p); }

Polynomial Qps::apply(const Mor& j, const ColoredWord& w) const {
    Polynomial acc = poly_constant(1);
    for (Letter l : w) acc = poly_mul(acc, j.data.at(leg_of(l)).at(sym_of(l)), commuting());
    return acc;
}

Polynomial Qps::apply_table(const SubstitutionTable& t, const Polynomial& p) const {
    Polynomial out;
    for (const auto& [w, c] : p) {
        Polynomial term = poly_constant(c);
        for (Letter l : w) term = poly_mul(term, t.at(leg_of(l)).at(sym_of(l)), commuting());
        out = poly_add(out, term);
    }
    return out;
}

MomentFunctional Qps::pullback(const Mor& j) const {
    if (!j.source.is_leaf()) throw std::invalid_argument("pullback needs a one-leg source");
    const auto& phi = *j.source.atom().phi;
    QpsEvaluator ev(*this, j.target);
    return MomentFunctional::from_function(phi.alphabet(), phi.degree(),
                                           [&](const ColoredWord& w) { return ev(apply(j, w)); });
}

Qps::Data Qps::identity_data(const Obj& a) const {
    const auto ls = legs(a);
    Data t(ls.size());
    for (unsigned i = 0; i < ls.size(); ++i)
        for (unsigned s = 0; s < ls[i]->alphabet_size(); ++s) t[i].push_back(poly_letter(make_letter(i, s)));
    return t;
}

Qps::Data Qps::compose_data(const Mor& g, const Mor& f) const {
    Data t = f.data;
    for (auto& row : t)
        for (auto& p : row) p = apply_table(g.data, p);
    return t;
}

Qps::Data Qps::tensor_data(const Mor& f, const Mor& g) const {
    Data t = f.data;
    const unsigned shift = static_cast<unsigned>(f.target.leaf_count());
    for (const auto& row : g.data) {
        std::vector<Polynomial> shifted;
        for (const auto& p : row) {
            Polynomial q;
            for (const auto& [w, c] : p) {
                ColoredWord u;
                for (Letter l : w) u.push_back(make_letter(leg_of(l) + shift, sym_of(l)));
                add_term(q, u, c);
            }
            shifted.push_back(std::move(q));
        }
        t.push_back(std::move(shifted));
    }
    return t;
}

Qps::Data Qps::structural_data(const Obj& from, const Obj& to) const {
    if (from.leaves() != to.leaves())
        throw std::invalid_argument("structural map between different leaf sequences");
    return identity_data(from);
}

bool Qps::is_valid(const Mor& j) const {
    const auto src = legs(j.source), tgt = legs(j.target);
    if (j.data.size() != src.size()) return false;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (j.data[i].size() != src[i]->alphabet_size()) return false;
        for (const auto& p : j.data[i])
            for (const auto& [w, c] : p) {
                if (w.empty() && !commuting()) return false;
                if (commuting() && sort_by_leg(w) != w) return false;
                for (Letter l : w)
                    if (leg_of(l) >= tgt.size() || sym_of(l) >= tgt[leg_of(l)]->alphabet_size()) return false;
            }
    }
    if (commuting()) {
        // images of different source legs must commute in the target
        for (std::size_t i = 0; i < src.size(); ++i)
            for (std::size_t k = i + 1; k < src.size(); ++k)
                for (const auto& a : j.data[i])
                    for (const auto& b : j.data[k])
                        if (poly_mul(a, b, true) != poly_mul(b, a, true)) return false;
    }
    QpsEvaluator es(*this, j.source), et(*this, j.target);
    for (const auto& w : words(j.source))
        if (et(apply(j, w)) != es(w)) return false;
    return true;
}

std::optional<Qps::Mor> Qps::independence_candidate(const std::vector<Mor>& fs) const {
    Obj src = fs[0].source;
    Data t = fs[0].data;
    for (std::size_t i = 1; i < fs.size(); ++i) {
        src = tensor_obj(src, fs[i].source);
        t.insert(t.end(), fs[i].data.begin(), fs[i].data.end());
    }
    return Mor{src, fs[0].target, t};
}

Qps::Obj Qps::random_object(Rng& rng) const {
    auto atom = [&] { return space(random_functional(rng, 1 + rand_below(rng, 2), 1 + rand_int(rng, 0, 1))); };
    Obj o = atom();
    if (rand_below(rng, 4) == 0) o = tensor_obj(o, atom());
    return o;
}

Qps::Mor Qps::random_morphism_into(const Obj& target, Rng& rng) const {
    const auto tl = legs(target);
    const std::size_t k = 1 + rand_below(rng, 2);
    SubstitutionTable t(1);
    int ds = 2;
    if (tl.empty()) {
        for (std::size_t s = 0; s < k; ++s)
            t[0].push_back(commuting() ? poly_constant(rand_rational(rng, 2, 2)) : Polynomial{});
    } else {
        int min_d = tl[0]->degree();
        for (auto* p : tl) min_d = std::min(min_d, p->degree());
        // universal kinds stay linear so that tensors of these maps respect the total bound
        const int maxdeg = (commuting() && min_d >= 2 && rand_below(rng, 3) == 0) ? 2 : 1;
        ds = std::min(2, min_d / maxdeg);
        auto rand_letter = [&] {
            const unsigned leg = static_cast<unsigned>(rand_below(rng, tl.size()));
            return make_letter(leg, static_cast<unsigned>(rand_below(rng, tl[leg]->alphabet_size())));
        };
        for (std::size_t s = 0; s < k; ++s) {
            Polynomial p;
            if (commuting() && rand_below(rng, 3) == 0) add_term(p, ColoredWord(), rand_rational(rng, 2, 2));
            const int terms = rand_int(rng, 1, 2);
            for (int i = 0; i < terms; ++i) p = poly_add(p, poly_mul(poly_letter(rand_letter()), poly_constant(rand_rational(rng, 2, 2)), commuting()));
            if (maxdeg == 2)
                p = poly_add(p, poly_mul(poly_letter(rand_letter()), poly_letter(rand_letter()), commuting()));
            t[0].push_back(std::move(p));
        }
    }
    QpsEvaluator ev(*this, target);
    Mor probe{unit(), target, t};
    auto phi = MomentFunctional::from_function(fresh_alphabet(k), ds,
                                               [&](const ColoredWord& w) { return ev(apply(probe, w)); });
    return {space(std::move(phi)), target, t};
}

// Relabels the source generators into fresh atoms whose moments agree on the
// image words and are random elsewhere.
Qps::Mor Qps::random_morphism_from(const Obj& source, Rng& rng) const {
    const auto sl = legs(source);
    if (sl.empty()) {
        Obj tgt = random_object(rng);
        return {source, tgt, {}};
    }
    if (commuting()) {
        SubstitutionTable t(sl.size());
        std::vector<Obj> atoms;
        for (unsigned i = 0; i < sl.size(); ++i) {
            const auto& phi = *sl[i];
            const std::size_t k = phi.alphabet_size(), kt = k + rand_below(rng, 2);
            std::vector<unsigned> perm(kt);
            std::iota(perm.begin(), perm.end(), 0u);
            for (std::size_t x = kt; x > 1; --x) std::swap(perm[x - 1], perm[rand_below(rng, x)]);
            std::vector<int> inv(kt, -1);
            for (unsigned s = 0; s < k; ++s) {
                inv[perm[s]] = static_cast<int>(s);
                t[i].push_back(poly_letter(make_letter(i, perm[s])));
            }
            auto psi = MomentFunctional::from_function(fresh_alphabet(kt), phi.degree(), [&](const ColoredWord& u) {
                ColoredWord pre;
                for (Letter l : u) {
                    if (inv[sym_of(l)] < 0) return rand_moment(rng);
                    pre.push_back(make_letter(0, static_cast<unsigned>(inv[sym_of(l)])));
                }
                return phi(pre);
            });
            atoms.push_back(space(std::move(psi)));
        }
        // same bracketing as the source, atoms replaced
        std::size_t next = 0;
        auto rebuild = [&](auto&& self, const Obj& o) -> Obj {
            switch (o.kind()) {
            case Obj::Kind::Unit: return unit();
            case Obj::Kind::Leaf: return atoms[next++];
            case Obj::Kind::Node: {
                Obj l = self(self, o.left());
                return tensor_obj(l, self(self, o.right()));
            }
            }
            return unit();
        };
        return {source, rebuild(rebuild, source), t};
    }
    // universal kinds: one target atom carrying every source letter
    std::vector<Letter> letters;
    int max_d = 0;
    for (unsigned i = 0; i < sl.size(); ++i) {
        max_d = std::max(max_d, sl[i]->degree());
        for (unsigned s = 0; s < sl[i]->alphabet_size(); ++s) letters.push_back(make_letter(i, s));
    }
    const std::size_t kt = letters.size() + rand_below(rng, 2);
    std::vector<unsigned> perm(kt);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t x = kt; x > 1; --x) std::swap(perm[x - 1], perm[rand_below(rng, x)]);
    std::vector<int> inv(kt, -1);
    SubstitutionTable t(sl.size());
    for (std::size_t n = 0; n < letters.size(); ++n) {
        inv[perm[n]] = static_cast<int>(n);
        t[leg_of(letters[n])].push_back(poly_letter(make_letter(0, perm[n])));
    }
    QpsEvaluator ev(*this, source);
    auto psi = MomentFunctional::from_function(fresh_alphabet(kt), max_d, [&](const ColoredWord& u) {
        ColoredWord pre;
        for (Letter l : u) {
            if (inv[sym_of(l)] < 0) return rand_moment(rng);
            pre.push_back(letters[static_cast<std::size_t>(inv[sym_of(l)])]);
        }
        if (!word_allowed(source, pre)) return rand_moment(rng);
        return ev(pre);
    });
    return {source, space(std::move(psi)), t};
}

std::string Qps::describe(const Obj& a) const {
    return a.str([](const QpsAtom& at) {
        const auto& phi = *at.phi;
        std::string s = "<";
        for (std::size_t i = 0; i < phi.alphabet_size(); ++i) s += (i ? "," : "") + phi.alphabet()[i];
        s += ";d" + std::to_string(phi.degree());
        if (phi.values().size() > 1) s += ";" + to_string(phi.values()[1]);
        return s + ">";
    });
}

std::string Qps::describe(const Mor& f) const {
    std::string s = describe(f.source) + " -> " + describe(f.target) + " {";
    for (std::size_t i = 0; i < f.data.size(); ++i)
        for (std::size_t k = 0; k < f.data[i].size(); ++k) {
            s += " " + std::to_string(i) + "." + std::to_string(k) + "->";
            bool first = true;
            for (const auto& [w, c] : f.data[i][k]) {
                s += (first ? "" : "+") + to_string(c);
                for (Letter l : w) s += "*" + std::to_string(leg_of(l)) + "." + std::to_string(sym_of(l));
                first = false;
            }
            if (first) s += "0";
        }
    return s + " }";
}

std::string Qps::name() const { return kind_ == ProductKind::Tensor ? "qps" : "qps-" + to_string(kind_); }

}  // namespace catlevy
