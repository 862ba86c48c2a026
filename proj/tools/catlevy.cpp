#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catlevy/catcore.hpp"
#include "catlevy/comonoidal.hpp"
#include "catlevy/ex33.hpp"
#include "catlevy/finset.hpp"
#include "catlevy/levy.hpp"
#include "catlevy/prob.hpp"
#include "catlevy/qps.hpp"
#include "catlevy/semigroup_spec.hpp"
#include "catlevy/uniprod.hpp"
#include "catlevy/vec.hpp"

using namespace catlevy;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

void print_report(const Report& r, const std::string& format, bool timing) {
    std::cout << (format == "json" ? format_json(r, timing) : format_text(r, timing));
}

// Columns padded to the widest cell.
void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

template <class C>
Report run_laws(const C& cat, std::size_t cases, std::uint64_t seed) {
    Report rep("laws/" + cat.name());
    rep.merge(coherence_suite(cat, cases, seed));
    rep.merge(independence_suite(cat, cases, seed));
    return rep;
}

// Two different valid independence morphisms for one pair of maps.
std::string ex33_note() {
    SumProduct cat;
    const auto a = SumProduct::space(1), b = SumProduct::space(1), target = SumProduct::space(2);
    Matrix f1(2, 1, {Rational(1), Rational(0)}), f2(2, 1, {Rational(0), Rational(1)});
    std::vector<SumProduct::Mor> fs{{a, target, f1}, {b, target, f2}};
    auto h = *cat.independence_candidate(fs);
    auto h2 = h;
    h2.data(0, 2) = 1;  // the column of the product label a (x) b
    const bool both = verify_independence(cat, fs, h) && verify_independence(cat, fs, h2) && h != h2;
    return both ? "independence morphisms are not unique: two distinct h verified for e1, e2 into Q^2"
                : "non-uniqueness witness did not verify";
}

int cmd_laws(const std::string& instance, std::size_t cases, std::uint64_t seed, const std::string& format,
             bool timing) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    if (instance == "finset") rep = run_laws(FinSet{}, cases, seed);
    else if (instance == "vec") rep = run_laws(Vec{}, cases, seed);
    else if (instance == "hilb") rep = run_laws(Hilb{}, cases, seed);
    else if (instance == "prob") rep = run_laws(Prob{}, cases, seed);
    else if (instance == "qps") rep = run_laws(Qps(ProductKind::Tensor), cases, seed);
    else if (instance == "qps-free") rep = run_laws(Qps(ProductKind::Free), cases, seed);
    else if (instance == "qps-boolean") rep = run_laws(Qps(ProductKind::Boolean), cases, seed);
    else if (instance == "qps-monotone") rep = run_laws(Qps(ProductKind::Monotone), cases, seed);
    else if (instance == "ex33") {
        rep = run_laws(SumProduct{}, cases, seed);
        rep.notes.push_back(ex33_note());
    } else {
        std::cerr << "unknown instance '" << instance
                  << "' (expected finset, vec, hilb, prob, qps, qps-free, qps-boolean, qps-monotone, ex33)\n";
        return kUsage;
    }
    rep.cases = cases;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print_report(rep, format, timing);
    return rep.ok() ? kPass : kFail;
}

template <class C, class Row>
int levy_output(const ComonoidalSystem<C>& S, const SemigroupSpec& spec, const MonoidValue& horizon,
                const std::string& emit, const std::string& format, std::vector<std::string> header, Row row) {
    const auto& m = spec.monoid;
    auto laws = check_system_laws(S);
    if (!laws.ok()) {
        std::cerr << "not a convolution semigroup: " << laws.failures[0].check << " at " << laws.failures[0].witness
                  << "\n";
        print_report(laws, format, false);
        return kFail;
    }
    const auto P = build_levy(S, horizon);
    if (emit == "verify") {
        auto rep = verify_levy(P, 4);
        print_report(rep, format, false);
        return rep.ok() ? kPass : kFail;
    }
    std::vector<std::vector<std::string>> rows;
    if (emit == "marginals") {
        header.insert(header.begin(), "t");
        rows.push_back(header);
        for (const auto& t : P.times) {
            auto cells = row(P.j(m.unit(), t));
            cells.insert(cells.begin(), m.format(t));
            rows.push_back(cells);
        }
    } else {
        header.insert(header.begin(), {"s", "t"});
        rows.push_back(header);
        for (const auto& [st, j] : P.increments) {
            auto cells = row(j);
            cells.insert(cells.begin(), {m.format(st.first), m.format(st.second)});
            rows.push_back(cells);
        }
    }
    print_table(rows);
    return kPass;
}

int cmd_levy(const std::string& path, const std::string& horizon_text, const std::string& emit,
             const std::string& format) {
    SemigroupSpec spec;
    try {
        spec = load_semigroup_spec(path);
    } catch (const SpecError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    MonoidValue horizon;
    try {
        horizon = horizon_text.empty() ? spec.window.back() : spec.monoid.parse(horizon_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad horizon: " << e.what() << "\n";
        return kUsage;
    }
    if (std::find(spec.window.begin(), spec.window.end(), horizon) == spec.window.end()) {
        std::cerr << "horizon " << horizon_text << " is outside the spec window\n";
        return kUsage;
    }
    if (spec.is_prob()) {
        Prob cat;
        std::vector<std::string> header;
        for (std::size_t x = 0; x < spec.group_order; ++x) header.push_back("P(" + std::to_string(x) + ")");
        ComonoidalSystem<Prob> S;
        try {
            S = spec_prob_system(spec, cat);
        } catch (const std::invalid_argument& e) {
            std::cerr << path << ": " << e.what() << "\n";
            return kUsage;
        }
        return levy_output(S, spec, horizon, emit, format, header, [&](const Prob::Mor& j) {
            std::vector<std::string> cells;
            for (const auto& w : cat.pushforward(j)) cells.push_back(to_string(w));
            return cells;
        });
    }
    Qps cat(spec.product());
    const auto shape = spec_functional(spec, spec.monoid.unit());
    std::vector<std::string> header;
    for (const auto& w : shape.words())
        if (!w.empty()) header.push_back(shape.word_text(w));
    auto S = spec_qps_system(spec, cat);
    return levy_output(S, spec, horizon, emit, format, header, [&](const Qps::Mor& j) {
        const auto phi = cat.pullback(j);
        std::vector<std::string> cells;
        for (const auto& w : phi.words())
            if (!w.empty()) cells.push_back(to_string(phi(w)));
        return cells;
    });
}

// Letters resolve by alphabet; a@1 / a@2 forces the leg.
ColoredWord parse_colored(const std::string& text, const MomentFunctional& p1, const MomentFunctional& p2) {
    std::istringstream is(text);
    std::string tok;
    ColoredWord w;
    auto find = [](const MomentFunctional& p, const std::string& name) -> int {
        const auto& a = p.alphabet();
        auto it = std::find(a.begin(), a.end(), name);
        return it == a.end() ? -1 : static_cast<int>(it - a.begin());
    };
    while (is >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        int leg = -1;
        auto at = tok.find('@');
        if (at != std::string::npos) {
            name = tok.substr(0, at);
            const auto suffix = tok.substr(at + 1);
            if (suffix != "1" && suffix != "2") throw std::invalid_argument("bad leg suffix in '" + tok + "'");
            leg = suffix == "1" ? 0 : 1;
        }
        const int s1 = find(p1, name), s2 = find(p2, name);
        if (leg < 0) {
            if (s1 >= 0 && s2 >= 0) throw std::invalid_argument("letter '" + name + "' is in both alphabets, add @1 or @2");
            if (s1 < 0 && s2 < 0) throw std::invalid_argument("unknown letter '" + name + "'");
            leg = s1 >= 0 ? 0 : 1;
        }
        const int sym = leg == 0 ? s1 : s2;
        if (sym < 0) throw std::invalid_argument("letter '" + name + "' is not in the alphabet of leg " + std::to_string(leg + 1));
        w.push_back(make_letter(static_cast<unsigned>(leg), static_cast<unsigned>(sym)));
    }
    return w;
}

int cmd_uniprod(const std::string& product, const std::string& f1, const std::string& f2, const std::string& words_path) {
    std::vector<ProductKind> kinds;
    try {
        if (product == "all") kinds = {ProductKind::Tensor, ProductKind::Free, ProductKind::Boolean, ProductKind::Monotone};
        else kinds = {parse_product_kind(product)};
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    MomentFunctional p1, p2;
    std::vector<std::pair<std::string, ColoredWord>> words;
    try {
        p1 = load_functional(f1);
        p2 = load_functional(f2);
        std::ifstream in(words_path);
        if (!in) throw SpecError(words_path, 0, "cannot open file");
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream is(line);
            std::string tok, text;
            while (is >> tok) text += (text.empty() ? "" : " ") + tok;
            if (text.empty()) continue;
            try {
                words.push_back({text, parse_colored(text, p1, p2)});
            } catch (const std::invalid_argument& e) {
                throw SpecError(words_path, n, e.what());
            }
        }
    } catch (const SpecError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    const int bound = std::max(p1.degree(), p2.degree());
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"word"};
    for (auto k : kinds) header.push_back(to_string(k));
    rows.push_back(header);
    for (const auto& [text, w] : words) {
        std::vector<std::string> row{text};
        try {
            if (static_cast<int>(w.size()) > bound)
                throw DegreeOverflow("length " + std::to_string(w.size()) + " exceeds degree bound " + std::to_string(bound));
            for (auto k : kinds) row.push_back(to_string(ProductFunctional(k, p1, p2)(w)));
        } catch (const DegreeOverflow& e) {
            std::cerr << "degree overflow in word '" << text << "': " << e.what() << "\n";
            return kFail;
        }
        rows.push_back(row);
    }
    print_table(rows);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for tensor categories, comonoidal systems and categorical Levy processes"};
    app.require_subcommand(1);

    auto* laws = app.add_subcommand("laws", "Coherence and independence law suites on one instance");
    std::string instance;
    std::size_t cases = 100;
    std::uint64_t seed = 1;
    std::string format = "text";
    bool timing = false;
    laws->add_option("--instance", instance, "finset, vec, hilb, prob, qps, qps-free, qps-boolean, qps-monotone, ex33")
        ->required();
    laws->add_option("--cases", cases, "random cases per suite");
    laws->add_option("--seed", seed, "random seed");
    laws->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    laws->add_flag("--timing", timing, "include wall-clock time (not reproducible)");

    auto* levy = app.add_subcommand("levy", "Build the Levy process of a convolution semigroup spec");
    std::string spec_path, horizon, emit = "marginals", levy_format = "text";
    levy->add_option("spec", spec_path, "semigroup spec file")->required();
    levy->add_option("--horizon", horizon, "horizon time (default: end of the spec window)");
    levy->add_option("--emit", emit, "marginals, increments or verify")
        ->check(CLI::IsMember({"marginals", "increments", "verify"}));
    levy->add_option("--format", levy_format, "report format for verify: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* uni = app.add_subcommand("uniprod", "Evaluate universal products of two functionals on words");
    std::string product = "all", phi1, phi2, words;
    uni->add_option("--product", product, "tensor, free, boolean, monotone or all");
    uni->add_option("phi1", phi1, "functional file for leg 1")->required();
    uni->add_option("phi2", phi2, "functional file for leg 2")->required();
    uni->add_option("words", words, "one word per line")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    try {
        if (*laws) return cmd_laws(instance, cases, seed, format, timing);
        if (*levy) return cmd_levy(spec_path, horizon, emit, levy_format);
        if (*uni) return cmd_uniprod(product, phi1, phi2, words);
    } catch (const DegreeOverflow& e) {
        std::cerr << "degree overflow: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
