#include "spbranch/branching.hpp"

#include <algorithm>
#include <sstream>

#include "spbranch/enumerate.hpp"

namespace spbranch {

void BranchingQuery::validate() const {
    if (n == UnboundedRank)
        return;
    if (n < 1)
        throw DomainError("rank must be positive or unbounded");
    if (lambda.length() > 2 * n)
        throw DomainError("lambda has more than 2n parts");
    if (mu.length() > n)
        throw DomainError("mu has more than n parts");
}

namespace {

void highest_weight_impl(const Partition& lambda, int letter_bound,
                         const std::optional<Partition>& mu,
                         const std::function<bool(const Tableau&)>& sink) {
    SsytFilter filter;
    filter.require_sp_highest = true;
    if (mu)
        filter.sp_target = SpWeight::from_partition(*mu);
    for_each_ssyt(SkewShape(lambda, Partition()), alphabet_An(letter_bound), filter, sink);
}

} // namespace

void for_each_highest_weight(const Partition& lambda, int rank, const std::optional<Partition>& mu,
                             const std::function<bool(const Tableau&)>& sink) {
    // Unbarred entries of an sp-highest tableau sit within their own row
    // index and barred entries pair off with them, so values never exceed
    // l(lambda); that makes the unbounded-rank enumeration finite.
    int bound = rank == UnboundedRank ? lambda.length() : rank;
    highest_weight_impl(lambda, bound, mu, sink);
}

void for_each_highest_weight_widened(const Partition& lambda, int extra,
                                     const std::optional<Partition>& mu,
                                     const std::function<bool(const Tableau&)>& sink) {
    highest_weight_impl(lambda, lambda.length() + extra, mu, sink);
}

long long count_crystal(const BranchingQuery& q) {
    q.validate();
    if (!q.lambda.contains(q.mu))
        return 0;
    long long count = 0;
    for_each_highest_weight(q.lambda, q.n, q.mu, [&](const Tableau&) {
        ++count;
        return true;
    });
    return count;
}

long long count_sundaram(const BranchingQuery& q) {
    q.validate();
    if (q.n == UnboundedRank)
        throw DomainError("the symplectic count needs a finite rank; use the stable count");
    if (!q.lambda.contains(q.mu))
        return 0;
    SkewShape shape(q.lambda, q.mu);
    if (shape.num_cells() % 2 != 0)
        return 0;
    long long count = 0;
    for (const Partition& nu : even_conjugate_weights(shape.num_cells())) {
        for_each_lr(shape, nu, [&](const Tableau& t) {
            if (is_n_symplectic(t, q.n))
                ++count;
            return true;
        });
    }
    return count;
}

long long count_stable(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        return 0;
    SkewShape shape(lambda, mu);
    if (shape.num_cells() % 2 != 0)
        return 0;
    long long count = 0;
    for (const Partition& nu : even_conjugate_weights(shape.num_cells())) {
        for_each_lr(shape, nu, [&](const Tableau&) {
            ++count;
            return true;
        });
    }
    return count;
}

std::map<Partition, long long> decompose(const Partition& lambda, int n) {
    BranchingQuery probe{lambda, Partition(), n};
    probe.validate();
    std::map<Partition, long long> out;
    int max_parts = n == UnboundedRank ? lambda.length() : n;
    for (const Partition& mu : sub_partitions(lambda, max_parts)) {
        long long c = count_crystal({lambda, mu, n});
        if (c > 0)
            out[mu] = c;
    }
    return out;
}

Witnesses witnesses(const BranchingQuery& q) {
    q.validate();
    Witnesses w;
    if (!q.lambda.contains(q.mu))
        return w;

    for_each_highest_weight(q.lambda, q.n, q.mu, [&](const Tableau& t) {
        w.hw.push_back(t);
        return true;
    });
    std::map<Word, int> hw_index;
    for (int k = 0; k < static_cast<int>(w.hw.size()); ++k)
        hw_index[w.hw[k].reading()] = k;

    SkewShape shape(q.lambda, q.mu);
    if (shape.num_cells() % 2 == 0) {
        for (const Partition& nu : even_conjugate_weights(shape.num_cells())) {
            for_each_lr(shape, nu, [&](const Tableau& t) {
                if (q.n == UnboundedRank || is_n_symplectic(t, q.n))
                    w.lr.push_back(t);
                return true;
            });
        }
    }

    std::vector<bool> hit(w.hw.size(), false);
    for (int k = 0; k < static_cast<int>(w.lr.size()); ++k) {
        Tableau image = map_forward(w.lr[k]);
        auto it = hw_index.find(image.reading());
        if (it == hw_index.end() || hit[it->second])
            throw InternalCheckError("bijection image missing from the highest-weight set");
        hit[it->second] = true;
        w.pairs.emplace_back(k, it->second);
    }
    if (w.lr.size() != w.hw.size())
        throw InternalCheckError("witness sets have different sizes");
    return w;
}

bool BranchingReport::consistent() const {
    std::vector<long long> finite;
    if (crystal)
        finite.push_back(*crystal);
    if (sundaram)
        finite.push_back(*sundaram);
    if (character)
        finite.push_back(*character);
    for (long long v : finite)
        if (v != finite.front())
            return false;
    // The stable count bounds the symplectic one from above and matches the
    // crystal count at unbounded rank.
    if (stable && n == UnboundedRank && crystal && *crystal != *stable)
        return false;
    if (stable && sundaram && *sundaram > *stable)
        return false;
    return true;
}

std::string BranchingReport::to_json() const {
    std::ostringstream out;
    out << "{\"lambda\":[";
    for (std::size_t i = 0; i < lambda.parts().size(); ++i)
        out << (i ? "," : "") << lambda.parts()[i];
    out << "],\"mu\":[";
    for (std::size_t i = 0; i < mu.parts().size(); ++i)
        out << (i ? "," : "") << mu.parts()[i];
    out << "],\"n\":";
    if (n == UnboundedRank)
        out << "\"inf\"";
    else
        out << n;
    if (crystal)
        out << ",\"crystal\":" << *crystal;
    if (sundaram)
        out << ",\"sundaram\":" << *sundaram;
    if (stable)
        out << ",\"stable\":" << *stable;
    if (character)
        out << ",\"character\":" << *character;
    out << "}";
    return out.str();
}

std::string BranchingReport::to_text() const {
    std::ostringstream out;
    out << "lambda=" << lambda.to_string() << " mu=" << mu.to_string() << " n=";
    if (n == UnboundedRank)
        out << "inf";
    else
        out << n;
    if (crystal)
        out << " crystal=" << *crystal;
    if (sundaram)
        out << " sundaram=" << *sundaram;
    if (stable)
        out << " stable=" << *stable;
    if (character)
        out << " character=" << *character;
    return out.str();
}

} // namespace spbranch
