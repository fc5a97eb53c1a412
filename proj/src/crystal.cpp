#include "spbranch/crystal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spbranch {

Mark sp_letter_mark(Letter a, int i) {
    if (!a.is_barred()) {
        if (a.value() == i)
            return Mark::Plus;
        if (a.value() == i + 1)
            return Mark::Minus;
    } else {
        if (a.value() == i + 1)
            return Mark::Plus;
        if (a.value() == i)
            return Mark::Minus;
    }
    return Mark::Neutral;
}

namespace {

struct Signature {
    std::vector<int> unmatched_minus; // positions, left to right
    std::vector<int> unmatched_plus;
};

// One left-to-right pass; a minus cancels the nearest open plus. The
// surviving marks are independent of cancellation order.
Signature reduce_signature(const Word& w, int i) {
    Signature sig;
    std::vector<int> open_plus;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        switch (sp_letter_mark(w[pos], i)) {
        case Mark::Plus:
            open_plus.push_back(pos);
            break;
        case Mark::Minus:
            if (!open_plus.empty())
                open_plus.pop_back();
            else
                sig.unmatched_minus.push_back(pos);
            break;
        case Mark::Neutral:
            break;
        }
    }
    sig.unmatched_plus = std::move(open_plus);
    return sig;
}

void check_rank(const Word& w, int rank) {
    if (rank == UnboundedRank)
        return;
    for (Letter a : w)
        if (a.value() > rank)
            throw DomainError("letter outside the rank-" + std::to_string(rank) + " alphabet");
}

} // namespace

int epsilon_i(const Word& w, int i) {
    return static_cast<int>(reduce_signature(w, i).unmatched_minus.size());
}

int phi_i(const Word& w, int i) {
    return static_cast<int>(reduce_signature(w, i).unmatched_plus.size());
}

std::optional<Word> sp_raise(const Word& w, int i, int rank) {
    check_rank(w, rank);
    if (i < 1 || (rank != UnboundedRank && i > rank))
        throw DomainError("crystal index out of range");
    Signature sig = reduce_signature(w, i);
    if (sig.unmatched_minus.empty())
        return std::nullopt;
    Word out = w;
    Letter& a = out[sig.unmatched_minus.front()];
    if (!a.is_barred())
        a = Letter::unbarred(i); // was i+1
    else
        a = (rank != UnboundedRank && i == rank) ? Letter::unbarred(i) : Letter::barred(i + 1);
    return out;
}

std::optional<Word> sp_lower(const Word& w, int i, int rank) {
    check_rank(w, rank);
    if (i < 1 || (rank != UnboundedRank && i > rank))
        throw DomainError("crystal index out of range");
    Signature sig = reduce_signature(w, i);
    if (sig.unmatched_plus.empty())
        return std::nullopt;
    Word out = w;
    Letter& a = out[sig.unmatched_plus.back()];
    if (!a.is_barred())
        a = (rank != UnboundedRank && i == rank) ? Letter::barred(i) : Letter::unbarred(i + 1);
    else
        a = Letter::barred(i); // was (i+1)bar
    return out;
}

namespace {

std::optional<Word> gl_step(const Word& w, int i, bool raise) {
    std::vector<int> open_plus;
    std::vector<int> unmatched_minus;
    for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        if (w[pos].is_barred())
            throw DomainError("gl operators act on unbarred words");
        if (w[pos].value() == i) {
            open_plus.push_back(pos);
        } else if (w[pos].value() == i + 1) {
            if (!open_plus.empty())
                open_plus.pop_back();
            else
                unmatched_minus.push_back(pos);
        }
    }
    Word out = w;
    if (raise) {
        if (unmatched_minus.empty())
            return std::nullopt;
        out[unmatched_minus.front()] = Letter::unbarred(i);
    } else {
        if (open_plus.empty())
            return std::nullopt;
        out[open_plus.back()] = Letter::unbarred(i + 1);
    }
    return out;
}

} // namespace

std::optional<Word> gl_raise(const Word& w, int i) { return gl_step(w, i, true); }
std::optional<Word> gl_lower(const Word& w, int i) { return gl_step(w, i, false); }

Letter translate(int a, int n) {
    if (a < 1 || a > 2 * n)
        throw DomainError("translate: index outside [2n]");
    return a <= n ? Letter::unbarred(a) : Letter::barred(2 * n - a + 1);
}

int translate_back(Letter a, int n) {
    if (a.value() > n)
        throw DomainError("translate_back: letter outside the rank alphabet");
    return a.is_barred() ? 2 * n - a.value() + 1 : a.value();
}

bool is_sp_highest(const Word& w, int rank) {
    check_rank(w, rank);
    int max_value = 0;
    for (Letter a : w)
        max_value = std::max(max_value, a.value());
    // Indexes above max_value have empty minus sets, so checking value-driven
    // indexes covers every i.
    std::vector<int> plus(max_value + 2, 0), minus(max_value + 2, 0);
    for (Letter a : w) {
        int v = a.value();
        if (a.is_barred()) {
            if (plus[v] < minus[v] + 1)
                return false;
            ++minus[v];
            if (v >= 2)
                ++plus[v - 1];
        } else {
            if (v >= 2) {
                if (plus[v - 1] < minus[v - 1] + 1)
                    return false;
                ++minus[v - 1];
            }
            ++plus[v];
        }
    }
    return true;
}

bool validate_sp_structure(const Tableau& t) {
    if (!t.is_proper())
        throw DomainError("structure screen requires a proper tableau");
    SpWeight w = sp_weight(t);
    if (!w.is_partition())
        return false;
    const SkewShape& sh = t.shape();
    for (int r = 1; r <= sh.rows(); ++r) {
        for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
            Letter a = *t.at(r, c);
            if (a.is_barred()) {
                if (r <= a.value())
                    return false;
            } else {
                if (r > a.value())
                    return false;
                if (c <= w.coeff(r) && a.value() != r)
                    return false;
            }
        }
    }
    return true;
}

Tableau canonical_tableau(const Partition& lambda) {
    Tableau t{SkewShape(lambda, Partition())};
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c)
            t.set(r, c, Letter::unbarred(r));
    return t;
}

CrystalGraph crystal_graph(const Partition& lambda, int n, Algebra algebra) {
    if (n < 1)
        throw DomainError("crystal graph needs a positive rank");
    if (lambda.length() > 2 * n)
        throw DomainError("crystal graph: shape has more than 2n rows");
    CrystalGraph g;
    g.nodes = enumerate_ssyt(SkewShape(lambda, Partition()), alphabet_An(n));

    std::map<Word, int> index;
    for (int k = 0; k < static_cast<int>(g.nodes.size()); ++k)
        index[g.nodes[k].reading()] = k;

    int top_index = algebra == Algebra::Gl ? 2 * n - 1 : n;
    for (int k = 0; k < static_cast<int>(g.nodes.size()); ++k) {
        Word w = g.nodes[k].reading();
        for (int i = 1; i <= top_index; ++i) {
            std::optional<Word> next;
            if (algebra == Algebra::Gl) {
                Word v;
                v.reserve(w.size());
                for (Letter a : w)
                    v.push_back(Letter::unbarred(translate_back(a, n)));
                if (auto lowered = gl_lower(v, i)) {
                    next.emplace();
                    for (Letter a : *lowered)
                        next->push_back(translate(a.value(), n));
                }
            } else {
                next = sp_lower(w, i, n);
            }
            if (!next)
                continue;
            auto it = index.find(*next);
            if (it == index.end())
                throw InternalCheckError("lowering left the tableau crystal");
            g.edges.push_back({k, i, it->second});
        }
    }
    return g;
}

std::string CrystalGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
        out << "  n" << k << " [label=\"" << word_to_string(nodes[k].reading()) << "\"];\n";
    for (const Edge& e : edges)
        out << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.index << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string CrystalGraph::to_json() const {
    std::ostringstream out;
    out << "{\"nodes\":[";
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) {
        if (k)
            out << ',';
        out << '"' << word_to_string(nodes[k].reading()) << '"';
    }
    out << "],\"edges\":[";
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        if (k)
            out << ',';
        out << '[' << edges[k].source << ',' << edges[k].index << ',' << edges[k].target << ']';
    }
    out << "]}";
    return out.str();
}

} // namespace spbranch
