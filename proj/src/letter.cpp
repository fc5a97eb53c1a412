#include "spbranch/letter.hpp"

#include <algorithm>

namespace spbranch {

std::vector<Letter> alphabet_An(int n) {
    if (n < 0)
        throw DomainError("alphabet rank must be nonnegative");
    std::vector<Letter> a;
    a.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        a.push_back(Letter::unbarred(k));
    for (int k = n; k >= 1; --k)
        a.push_back(Letter::barred(k));
    return a;
}

std::vector<Letter> alphabet_unbarred(int n) {
    if (n < 0)
        throw DomainError("alphabet rank must be nonnegative");
    std::vector<Letter> a;
    a.reserve(n);
    for (int k = 1; k <= n; ++k)
        a.push_back(Letter::unbarred(k));
    return a;
}

bool word_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += w[i].to_string();
    }
    return s;
}

} // namespace spbranch
