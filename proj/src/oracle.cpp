#include "spbranch/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "spbranch/enumerate.hpp"
#include "spbranch/tableau.hpp"

namespace spbranch {

RootSystemC::RootSystemC(int n) : rank(n) {
    if (n < 1)
        throw DomainError("root system rank must be positive");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            WeightVector diff(n, 0), sum(n, 0);
            diff[i] = 1;
            diff[j] = -1;
            sum[i] = 1;
            sum[j] = 1;
            positive_roots.push_back(diff);
            positive_roots.push_back(sum);
        }
        WeightVector dbl(n, 0);
        dbl[i] = 2;
        positive_roots.push_back(dbl);
    }
    rho.resize(n);
    for (int i = 0; i < n; ++i)
        rho[i] = n - i;
}

namespace {

long long dot(const WeightVector& a, const WeightVector& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

WeightVector add(const WeightVector& a, const WeightVector& b, int k = 1) {
    WeightVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += k * b[i];
    return out;
}

bool is_dominant(const WeightVector& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0)
            return false;
        if (i > 0 && w[i] > w[i - 1])
            return false;
    }
    return true;
}

// mu - nu is a nonnegative integer combination of the simple roots
// e_i - e_{i+1} and 2 e_n: all partial sums of the difference nonnegative
// and the total difference even.
bool root_below(const WeightVector& nu, const WeightVector& mu) {
    int partial = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        partial += mu[i] - nu[i];
        if (partial < 0)
            return false;
    }
    return partial % 2 == 0;
}

WeightVector to_vector(const Partition& p, int n) {
    if (p.length() > n)
        throw DomainError("weight has more parts than the rank");
    WeightVector v(n, 0);
    for (int i = 1; i <= p.length(); ++i)
        v[i - 1] = p.part(i);
    return v;
}

// Dominant weights nu <= mu in the root order, i.e. the dominant weights of
// the irreducible with highest weight mu (the weight diagram is saturated).
std::vector<WeightVector> dominant_weights_below(const WeightVector& mu, int n) {
    std::vector<WeightVector> out;
    for (int size = static_cast<int>(dot(mu, WeightVector(n, 1))); size >= 0; size -= 2)
        for (const Partition& p : partitions_of(size, mu[0], n)) {
            WeightVector v = to_vector(p, n);
            if (root_below(v, mu))
                out.push_back(v);
        }
    // Process order: any linear extension of the root order from above.
    std::sort(out.begin(), out.end(), [n](const WeightVector& a, const WeightVector& b) {
        long long sa = dot(a, WeightVector(n, 1)), sb = dot(b, WeightVector(n, 1));
        if (sa != sb)
            return sa > sb;
        return a > b;
    });
    return out;
}

} // namespace

WeightVector dominant_representative(const WeightVector& w) {
    WeightVector out = w;
    for (int& x : out)
        x = std::abs(x);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

WeightMultiset freudenthal(const Partition& mu, int n) {
    RootSystemC rs(n);
    WeightVector top = to_vector(mu, n);

    std::vector<WeightVector> dominants = dominant_weights_below(top, n);
    std::map<WeightVector, long long> mult;
    if (dominants.empty() || dominants.front() != top)
        throw InternalCheckError("highest weight missing from its own dominant cone");
    mult[top] = 1;

    WeightVector top_rho = add(top, rs.rho);
    long long top_norm = dot(top_rho, top_rho);
    int k_max = 2 * mu.size() + 2 * n + 4;

    for (std::size_t d = 1; d < dominants.size(); ++d) {
        const WeightVector& nu = dominants[d];
        long long rhs = 0;
        for (const WeightVector& alpha : rs.positive_roots) {
            for (int k = 1; k <= k_max; ++k) {
                WeightVector shifted = add(nu, alpha, k);
                auto it = mult.find(dominant_representative(shifted));
                if (it == mult.end())
                    continue;
                rhs += it->second * dot(shifted, alpha);
            }
        }
        WeightVector nu_rho = add(nu, rs.rho);
        long long denom = top_norm - dot(nu_rho, nu_rho);
        if (denom <= 0)
            throw InternalCheckError("Freudenthal denominator not positive off the top weight");
        if ((2 * rhs) % denom != 0)
            throw InternalCheckError("Freudenthal recursion produced a non-integer");
        mult[nu] = 2 * rhs / denom;
    }

    // Orbit expansion: distinct arrangements of the absolute values with all
    // sign choices on nonzero entries.
    WeightMultiset full;
    for (const auto& [nu, m] : mult) {
        WeightVector base = nu;
        std::sort(base.begin(), base.end());
        do {
            std::vector<int> nonzero;
            for (int i = 0; i < n; ++i)
                if (base[i] != 0)
                    nonzero.push_back(i);
            for (std::uint32_t signs = 0; signs < (1u << nonzero.size()); ++signs) {
                WeightVector v = base;
                for (std::size_t b = 0; b < nonzero.size(); ++b)
                    if (signs & (1u << b))
                        v[nonzero[b]] = -v[nonzero[b]];
                full[v] += m;
            }
        } while (std::next_permutation(base.begin(), base.end()));
    }
    return full;
}

long long sp_dim(const Partition& mu, int n) {
    long long total = 0;
    for (const auto& [w, m] : freudenthal(mu, n))
        total += m;
    return total;
}

WeightMultiset restrict_gl_character(const Partition& lambda, int n) {
    if (lambda.length() > 2 * n)
        throw DomainError("lambda has more than 2n parts");
    WeightMultiset out;
    for_each_ssyt(SkewShape(lambda, Partition()), alphabet_An(n), {}, [&](const Tableau& t) {
        SpWeight w = sp_weight(t);
        WeightVector v(n, 0);
        for (int i = 1; i <= w.length(); ++i)
            v[i - 1] = w.coeff(i);
        ++out[v];
        return true;
    });
    return out;
}

std::map<Partition, long long> strip_decompose(
    const Partition& lambda, int n,
    const std::function<std::size_t(const std::vector<WeightVector>&)>& pick) {
    WeightMultiset residual = restrict_gl_character(lambda, n);
    std::map<Partition, long long> result;

    while (true) {
        std::vector<WeightVector> maximal;
        for (const auto& [w, m] : residual) {
            if (m == 0 || !is_dominant(w))
                continue;
            bool below = false;
            for (const auto& [w2, m2] : residual) {
                if (m2 != 0 && is_dominant(w2) && w2 != w && root_below(w, w2)) {
                    below = true;
                    break;
                }
            }
            if (!below)
                maximal.push_back(w);
        }
        if (maximal.empty()) {
            for (const auto& [w, m] : residual)
                if (m != 0)
                    throw InternalCheckError("residual character has no dominant leading term");
            break;
        }

        std::size_t choice = 0;
        if (pick) {
            choice = pick(maximal);
        } else {
            for (std::size_t i = 1; i < maximal.size(); ++i)
                if (maximal[i] > maximal[choice])
                    choice = i;
        }
        const WeightVector nu = maximal[choice];
        long long m = residual[nu];
        if (m < 0)
            throw InternalCheckError("negative residual multiplicity");

        std::vector<int> parts(nu.begin(), nu.end());
        Partition mu{parts};
        result[mu] += m;
        for (const auto& [w, wm] : freudenthal(mu, n)) {
            residual[w] -= m * wm;
            if (residual[w] < 0)
                throw InternalCheckError("stripping drove a multiplicity negative");
        }
    }
    return result;
}

} // namespace spbranch
