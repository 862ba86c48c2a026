#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catlevy {

enum class MonoidKind { NatAdd, DyadicGrid, FreeWords, NatPairAdd };

// NatAdd {n}; DyadicGrid {k} meaning k/2^level; NatPairAdd {a, b};
// FreeWords: letter indices into the alphabet.
using MonoidValue = std::vector<int>;
using Factorization = std::vector<MonoidValue>;
// One factorization per part of the coarser tuple.
using RefinementBlocks = std::vector<Factorization>;

class Monoid {
public:
    static Monoid nat_add(int horizon = 8);
    // Grid {k/2^level : 0 <= k <= 2^level * max_time}.
    static Monoid dyadic_grid(int level, int max_time);
    static Monoid free_words(std::vector<std::string> alphabet, int horizon = 8);
    static Monoid nat_pair_add(int horizon = 8);

    MonoidKind kind() const { return kind_; }
    int level() const { return level_; }
    int horizon() const { return horizon_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::string name() const;

    MonoidValue unit() const;
    bool is_unit(const MonoidValue& a) const { return a == unit(); }
    bool contains(const MonoidValue& a) const;
    // Throws std::domain_error when the product leaves the grid.
    MonoidValue op(const MonoidValue& a, const MonoidValue& b) const;
    MonoidValue product(const Factorization& parts) const;

    // Sampling size: n, k, a+b or word length.
    int size(const MonoidValue& a) const;
    std::vector<MonoidValue> elements_up_to(int max_size) const;
    std::vector<MonoidValue> left_divisors(const MonoidValue& t) const;

    bool totally_ordered() const {
        return kind_ == MonoidKind::NatAdd || kind_ == MonoidKind::DyadicGrid;
    }
    bool less_equal(const MonoidValue& s, const MonoidValue& r) const;

    std::string format(const MonoidValue& a) const;
    std::string format(const Factorization& f) const;
    // Accepts the output of format(). Throws std::invalid_argument.
    MonoidValue parse(const std::string& text) const;

    // Ordinary integers as elements (NatAdd n, DyadicGrid n * 2^level).
    MonoidValue from_int(int n) const;

private:
    MonoidKind kind_ = MonoidKind::NatAdd;
    int level_ = 0;
    int grid_max_ = 0;
    int horizon_ = 8;
    std::vector<std::string> alphabet_;
};

std::optional<MonoidValue> divides(const MonoidValue& s, const MonoidValue& r, const Monoid& m);

std::vector<Factorization> enumerate_factorizations(const MonoidValue& t, const Monoid& m,
                                                    std::size_t max_parts);

// All block decompositions sigma = tau_1 ++ ... ++ tau_n with tau_k in F_{t_k}.
std::vector<RefinementBlocks> block_decompositions(const Factorization& sigma,
                                                   const Factorization& tau, const Monoid& m);
std::optional<RefinementBlocks> refines(const Factorization& sigma, const Factorization& tau,
                                        const Monoid& m);

Factorization common_refinement(const Factorization& sigma, const Factorization& tau,
                                 const Monoid& m);
// Exhaustive search over F_t bounded by max_parts.
std::optional<Factorization> search_common_refinement(const Factorization& sigma,
                                                      const Factorization& tau, const Monoid& m,
                                                      std::size_t max_parts);

std::optional<MonoidValue> ore_bound(const MonoidValue& s, const MonoidValue& t, const Monoid& m);

struct MonoidCheck {
    bool holds = true;
    std::string witness;
};

MonoidCheck check_associative(const Monoid& m, int max_size);
MonoidCheck check_unit(const Monoid& m, int max_size);
MonoidCheck check_cancellative(const Monoid& m, int max_size);
MonoidCheck check_conical(const Monoid& m, int max_size);
// Every pair of factorizations of every t with size(t) <= max_size has a common refinement.
MonoidCheck check_unique_factorization(const Monoid& m, int max_size);
MonoidCheck check_ore(const Monoid& m, int max_size);
MonoidCheck check_total_order(const Monoid& m, int max_size);

}  // namespace catlevy
