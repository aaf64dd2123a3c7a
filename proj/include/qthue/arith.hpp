// Trial-division arithmetic: factorization, squarefreeness, omega, divisors.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace qthue {

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    require(n >= 1, "factorization needs n >= 1");
    std::vector<std::pair<Integer, unsigned>> out;
    for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool squarefree(const Integer& n) {
    auto f = factorize(n);
    return std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second == 1; });
}

inline int omega(const Integer& n) { return static_cast<int>(factorize(n).size()); }

inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qthue
