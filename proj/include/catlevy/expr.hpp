#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catlevy {

// Immutable bracketed tensor expression: the unit E, a leaf, or a binary node.
template <class Atom>
class Expr {
public:
    enum class Kind { Unit, Leaf, Node };

    Expr() : n_(unit_node()) {}

    static Expr unit() { return Expr(); }
    static Expr leaf(Atom a) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Leaf;
        n->atom.emplace(std::move(a));
        n->leaves = 1;
        return Expr(std::move(n));
    }
    static Expr tensor(const Expr& l, const Expr& r) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Node;
        n->l = l.n_;
        n->r = r.n_;
        n->leaves = l.leaf_count() + r.leaf_count();
        return Expr(std::move(n));
    }

    Kind kind() const { return n_->kind; }
    bool is_unit() const { return n_->kind == Kind::Unit; }
    bool is_leaf() const { return n_->kind == Kind::Leaf; }
    bool is_node() const { return n_->kind == Kind::Node; }
    const Atom& atom() const {
        if (!is_leaf()) throw std::logic_error("atom() on a non-leaf expression");
        return *n_->atom;
    }
    Expr left() const { return Expr(n_->l); }
    Expr right() const { return Expr(n_->r); }

    // Number of leaves; unit subexpressions contribute nothing.
    std::size_t leaf_count() const { return n_->leaves; }

    void collect_leaves(std::vector<Atom>& out) const {
        switch (kind()) {
        case Kind::Unit: break;
        case Kind::Leaf: out.push_back(atom()); break;
        case Kind::Node:
            left().collect_leaves(out);
            right().collect_leaves(out);
            break;
        }
    }
    std::vector<Atom> leaves() const {
        std::vector<Atom> out;
        collect_leaves(out);
        return out;
    }

    const void* id() const { return n_.get(); }

    bool operator==(const Expr& o) const {
        if (n_ == o.n_) return true;
        if (kind() != o.kind() || leaf_count() != o.leaf_count()) return false;
        switch (kind()) {
        case Kind::Unit: return true;
        case Kind::Leaf: return atom() == o.atom();
        case Kind::Node: return left() == o.left() && right() == o.right();
        }
        return false;
    }
    bool operator!=(const Expr& o) const { return !(*this == o); }

    std::string str(const std::function<std::string(const Atom&)>& show) const {
        switch (kind()) {
        case Kind::Unit: return "E";
        case Kind::Leaf: return show(atom());
        case Kind::Node: return "(" + left().str(show) + " * " + right().str(show) + ")";
        }
        return "?";
    }

private:
    struct Node {
        Kind kind = Kind::Unit;
        std::optional<Atom> atom;
        std::shared_ptr<const Node> l, r;
        std::size_t leaves = 0;
    };
    explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static std::shared_ptr<const Node> unit_node() {
        static const auto u = std::make_shared<const Node>();
        return u;
    }

    std::shared_ptr<const Node> n_;
};

// Bracketing pattern whose leaves index into a list of objects.
using Formal = Expr<int>;

// Left-associated ((x0 * x1) * x2) ... over the given indices; unit if empty.
inline Formal left_assoc(const std::vector<int>& idx) {
    if (idx.empty()) return Formal::unit();
    Formal f = Formal::leaf(idx[0]);
    for (std::size_t i = 1; i < idx.size(); ++i) f = Formal::tensor(f, Formal::leaf(idx[i]));
    return f;
}

inline Formal left_assoc_range(int first, int count) {
    std::vector<int> idx;
    for (int i = 0; i < count; ++i) idx.push_back(first + i);
    return left_assoc(idx);
}

}  // namespace catlevy
