#include "spbranch/partition.hpp"

#include <algorithm>
#include <numeric>

namespace spbranch {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw DomainError("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i))
            return false;
    return true;
}

Partition Partition::with_part_delta(int row, int delta) const {
    std::vector<int> parts = parts_;
    if (row > static_cast<int>(parts.size()))
        parts.resize(row, 0);
    parts[row - 1] += delta;
    return Partition(parts);
}

std::string Partition::to_string() const {
    if (parts_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    for (int j = 1; j <= p.part(1); ++j) {
        int h = 0;
        for (int i = 1; i <= p.length(); ++i)
            if (p.part(i) >= j)
                ++h;
        cols.push_back(h);
    }
    return Partition(std::move(cols));
}

namespace {

void gen_partitions(int n, int max_part, int max_parts, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_parts == 0)
        return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_parts) {
    if (n < 0)
        throw DomainError("partitions_of: negative size");
    if (max_part < 0)
        max_part = n;
    if (max_parts < 0)
        max_parts = n;
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, max_part, max_parts, acc, out);
    return out;
}

namespace {

void gen_subpartitions(const Partition& lambda, int row, int max_parts, std::vector<int>& acc,
                       std::vector<Partition>& out) {
    out.emplace_back(acc);
    if (row > lambda.length() || row > max_parts)
        return;
    int hi = std::min(lambda.part(row), acc.empty() ? lambda.part(1) : acc.back());
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        gen_subpartitions(lambda, row + 1, max_parts, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> sub_partitions(const Partition& lambda, int max_parts) {
    if (max_parts < 0)
        max_parts = lambda.length();
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_subpartitions(lambda, 1, max_parts, acc, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return b.parts() < a.parts();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> even_conjugate_weights(int size) {
    if (size < 0 || size % 2 != 0)
        throw DomainError("even_conjugate_weights: size must be even and nonnegative");
    std::vector<Partition> out;
    for (const Partition& delta : partitions_of(size / 2)) {
        std::vector<int> doubled;
        doubled.reserve(delta.length());
        for (int p : delta.parts())
            doubled.push_back(2 * p);
        out.push_back(conjugate(Partition(std::move(doubled))));
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return b.parts() < a.parts();
    });
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw DomainError("skew shape: inner partition not contained in outer");
}

} // namespace spbranch
