#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spbranch/errors.hpp"

namespace spbranch {

// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
// stripped on construction, so equal partitions compare equal.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // 1-based part access; rows past the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(const Partition& inner) const;

    // Copy with part `row` changed by `delta` (result must stay a partition).
    Partition with_part_delta(int row, int delta) const;

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const; // "3,2,1" ("0" for the empty partition)

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& p);

// All partitions of `n`, largest part at most `max_part`, at most `max_parts`
// parts; reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_parts = -1);

// Sub-partitions mu with mu_i <= lambda_i and at most `max_parts` parts.
std::vector<Partition> sub_partitions(const Partition& lambda, int max_parts = -1);

// Partitions nu of even `size` whose conjugate has all parts even,
// i.e. nu = conjugate(2*delta) for a partition delta of size/2.
// Reverse lexicographic order. Throws on odd size.
std::vector<Partition> even_conjugate_weights(int size);

// Cells of a skew diagram outer\inner: {(i,j) : inner_i < j <= outer_i},
// rows and columns 1-based, row 1 on top. The pair (outer, inner) is part of
// the identity: equal cell sets with different row bookkeeping stay distinct.
class SkewShape {
  public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int rows() const { return outer_.length(); }
    int row_begin(int r) const { return inner_.part(r) + 1; } // first column
    int row_end(int r) const { return outer_.part(r); }       // last column
    bool has_cell(int r, int c) const {
        return r >= 1 && r <= rows() && c >= row_begin(r) && c <= row_end(r);
    }
    int num_cells() const { return outer_.size() - inner_.size(); }

    auto operator<=>(const SkewShape&) const = default;

  private:
    Partition outer_;
    Partition inner_;
};

} // namespace spbranch
