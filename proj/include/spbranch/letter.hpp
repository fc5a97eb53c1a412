#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "spbranch/errors.hpp"

namespace spbranch {

// A barred or unbarred positive integer, ordered
//   1 < 2 < ... < k < ... < kbar < ... < 2bar < 1bar
// independently of any rank: every unbarred letter is below every barred one.
// Encoded as a nonzero int: +k unbarred, -k barred, matching the external
// text/JSON convention.
class Letter {
  public:
    Letter() = default;
    static Letter unbarred(int k) { return Letter(check(k)); }
    static Letter barred(int k) { return Letter(-check(k)); }
    static Letter from_code(int code) {
        if (code == 0)
            throw DomainError("letter code must be nonzero");
        return Letter(code);
    }

    int value() const { return std::abs(code_); }
    bool is_barred() const { return code_ < 0; }
    int code() const { return code_; }

    // Position in the total order; barred letters sort above all unbarred
    // ones and decrease with value.
    long order_key() const {
        return is_barred() ? (1L << 31) - value() : static_cast<long>(value());
    }

    bool operator==(const Letter& o) const { return code_ == o.code_; }
    std::strong_ordering operator<=>(const Letter& o) const {
        return order_key() <=> o.order_key();
    }

    std::string to_string() const { return std::to_string(code_); }

  private:
    explicit Letter(int code) : code_(code) {}
    static int check(int k) {
        if (k <= 0)
            throw DomainError("letter value must be positive");
        return k;
    }
    int code_ = 1;
};

using Word = std::vector<Letter>;

// The alphabet 1 < ... < n < nbar < ... < 1bar.
std::vector<Letter> alphabet_An(int n);
// The alphabet 1 < ... < n.
std::vector<Letter> alphabet_unbarred(int n);

bool word_less(const Word& a, const Word& b); // lexicographic under Letter order

std::string word_to_string(const Word& w); // codes separated by single spaces

} // namespace spbranch
