#include "catlevy/words.hpp"

#include <algorithm>
#include <sstream>

namespace catlevy {

ColoredWord sort_by_leg(ColoredWord w) {
    std::stable_sort(w.begin(), w.end(), [](Letter a, Letter b) { return leg_of(a) < leg_of(b); });
    return w;
}

void add_term(Polynomial& p, const ColoredWord& w, const Rational& c) {
    if (c == 0) return;
    Rational cc = c;
    cc.canonicalize();
    auto [it, inserted] = p.emplace(w, cc);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, bool commuting_legs) {
    Polynomial out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            ColoredWord w = wa + wb;
            if (commuting_legs) w = sort_by_leg(std::move(w));
            add_term(out, w, ca * cb);
        }
    return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [w, c] : b) add_term(out, w, c);
    return out;
}

Polynomial poly_letter(Letter l) { return Polynomial{{ColoredWord(1, l), Rational(1)}}; }

Polynomial poly_constant(const Rational& c) {
    Polynomial p;
    add_term(p, ColoredWord(), c);
    return p;
}

std::size_t poly_degree(const Polynomial& p) {
    std::size_t d = 0;
    for (const auto& [w, c] : p) d = std::max(d, w.size());
    return d;
}

bool has_constant_term(const Polynomial& p) { return p.count(ColoredWord()) > 0; }

std::size_t word_count(std::size_t k, int degree) {
    std::size_t total = 0, layer = 1;
    for (int len = 0; len <= degree; ++len) {
        total += layer;
        layer *= k;
    }
    return total;
}

MomentFunctional::MomentFunctional(std::vector<std::string> alphabet, int degree,
                                   std::vector<Rational> values)
    : alphabet_(std::move(alphabet)), degree_(degree), values_(std::move(values)) {
    if (alphabet_.empty() || alphabet_.size() > 255)
        throw std::invalid_argument("moment functional needs 1..255 generators");
    if (degree_ < 0) throw std::invalid_argument("negative degree bound");
    if (values_.size() != word_count(alphabet_.size(), degree_))
        throw std::invalid_argument("moment table has the wrong number of entries");
    for (auto& v : values_) v.canonicalize();
    if (values_[0] != 1) throw std::invalid_argument("moment of the empty word must be 1");
}

MomentFunctional MomentFunctional::from_function(std::vector<std::string> alphabet, int degree,
                                                 const std::function<Rational(const ColoredWord&)>& f) {
    MomentFunctional shape(alphabet, degree,
                           [&] {
                               std::vector<Rational> v(word_count(alphabet.size(), degree));
                               v[0] = 1;
                               return v;
                           }());
    std::vector<Rational> vals;
    for (const auto& w : shape.words()) vals.push_back(w.empty() ? Rational(1) : f(w));
    return MomentFunctional(std::move(alphabet), degree, std::move(vals));
}

std::size_t MomentFunctional::index_of(const ColoredWord& w) const {
    const std::size_t k = alphabet_.size();
    if (static_cast<int>(w.size()) > degree_)
        throw DegreeOverflow("word of length " + std::to_string(w.size()) + " exceeds degree bound " +
                             std::to_string(degree_));
    std::size_t offset = word_count(k, static_cast<int>(w.size()) - 1);
    if (w.empty()) offset = 0;
    std::size_t rank = 0;
    for (Letter l : w) {
        unsigned s = sym_of(l);
        if (s >= k) throw std::out_of_range("symbol outside the alphabet");
        rank = rank * k + s;
    }
    return offset + rank;
}

Rational MomentFunctional::operator()(const ColoredWord& w) const { return values_[index_of(w)]; }

std::vector<ColoredWord> MomentFunctional::words() const {
    std::vector<ColoredWord> out{ColoredWord()};
    std::vector<ColoredWord> layer{ColoredWord()};
    for (int len = 1; len <= degree_; ++len) {
        std::vector<ColoredWord> next;
        for (const auto& w : layer)
            for (unsigned s = 0; s < alphabet_.size(); ++s) next.push_back(w + make_letter(0, s));
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::string MomentFunctional::word_text(const ColoredWord& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + alphabet_.at(sym_of(w[i]));
    return s;
}

ColoredWord MomentFunctional::parse_word(const std::string& text) const {
    std::istringstream is(text);
    std::string tok;
    ColoredWord w;
    while (is >> tok) {
        if (tok == "1") continue;
        auto it = std::find(alphabet_.begin(), alphabet_.end(), tok);
        if (it == alphabet_.end()) throw std::invalid_argument("unknown generator '" + tok + "'");
        w.push_back(make_letter(0, static_cast<unsigned>(it - alphabet_.begin())));
    }
    return w;
}

}  // namespace catlevy
