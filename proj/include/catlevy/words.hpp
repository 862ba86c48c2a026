#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "catlevy/rational.hpp"

namespace catlevy {

// A letter packs (leg, symbol) as leg << 8 | symbol; the leg is the colour.
using Letter = char16_t;
using ColoredWord = std::u16string;

inline Letter make_letter(unsigned leg, unsigned sym) {
    return static_cast<Letter>((leg << 8) | (sym & 0xffu));
}
inline unsigned leg_of(Letter l) { return static_cast<unsigned>(l) >> 8; }
inline unsigned sym_of(Letter l) { return static_cast<unsigned>(l) & 0xffu; }

struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stable sort by leg: normal form when letters of different legs commute.
ColoredWord sort_by_leg(ColoredWord w);

// Finite linear combination of words; zero coefficients are never stored.
using Polynomial = std::map<ColoredWord, Rational>;

void add_term(Polynomial& p, const ColoredWord& w, const Rational& c);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, bool commuting_legs);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_letter(Letter l);
Polynomial poly_constant(const Rational& c);
std::size_t poly_degree(const Polynomial& p);
bool has_constant_term(const Polynomial& p);

// Moments of one generator alphabet: a value for every word of length <= degree.
// The empty word always carries 1.
class MomentFunctional {
public:
    MomentFunctional() = default;
    MomentFunctional(std::vector<std::string> alphabet, int degree, std::vector<Rational> values);
    static MomentFunctional from_function(std::vector<std::string> alphabet, int degree,
                                          const std::function<Rational(const ColoredWord&)>& f);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    int degree() const { return degree_; }
    const std::vector<Rational>& values() const { return values_; }

    // Only the symbol part of each letter is read. Throws DegreeOverflow.
    Rational operator()(const ColoredWord& w) const;

    // All words of length <= degree in index order (letters on leg 0).
    std::vector<ColoredWord> words() const;
    std::size_t index_of(const ColoredWord& w) const;

    std::string word_text(const ColoredWord& w) const;
    ColoredWord parse_word(const std::string& text) const;

    bool operator==(const MomentFunctional& o) const {
        return degree_ == o.degree_ && alphabet_ == o.alphabet_ && values_ == o.values_;
    }

private:
    std::vector<std::string> alphabet_;
    int degree_ = 0;
    std::vector<Rational> values_;
};

std::size_t word_count(std::size_t alphabet_size, int degree);

}  // namespace catlevy
