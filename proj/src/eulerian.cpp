#include "chainpoly/eulerian.hpp"

#include <vector>

namespace chainpoly {

Polynomial eulerian_a(int n) {
    if (n < 1) throw Error(errc::invalid_argument, "eulerian_a: n must be positive");
    // A(m,k) = (k+1) A(m-1,k) + (m-k) A(m-1,k-1)
    std::vector<Int> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> next(m, 0);
        for (int k = 0; k < m; ++k) {
            if (k < static_cast<int>(row.size())) next[k] += Int(k + 1) * row[k];
            if (k - 1 >= 0 && k - 1 < static_cast<int>(row.size())) next[k] += Int(m - k) * row[k - 1];
        }
        row = std::move(next);
    }
    std::vector<Rat> coeffs;
    for (const Int& v : row) coeffs.emplace_back(v);
    return Polynomial(std::move(coeffs));
}

Polynomial eulerian_b(int n) {
    if (n < 1) throw Error(errc::invalid_argument, "eulerian_b: n must be positive");
    // B(m,k) = (2k+1) B(m-1,k) + (2m-2k+1) B(m-1,k-1)
    std::vector<Int> row{1, 1};
    for (int m = 2; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (int k = 0; k <= m; ++k) {
            if (k < static_cast<int>(row.size())) next[k] += Int(2 * k + 1) * row[k];
            if (k - 1 >= 0 && k - 1 < static_cast<int>(row.size()))
                next[k] += Int(2 * m - 2 * k + 1) * row[k - 1];
        }
        row = std::move(next);
    }
    std::vector<Rat> coeffs;
    for (const Int& v : row) coeffs.emplace_back(v);
    return Polynomial(std::move(coeffs));
}

Polynomial eulerian_aq(int n, const Rat& q) {
    if (n < 1) throw Error(errc::invalid_argument, "eulerian_aq: n must be positive");
    if (q <= 0) throw Error(errc::invalid_argument, "eulerian_aq: q must be positive");
    // rows[k-1] = A_{m,k}(x;q) for k in [m]
    std::vector<Polynomial> rows{Polynomial::one()};
    for (int m = 1; m < n; ++m) {
        std::vector<Polynomial> next(m + 1);
        for (int k = 1; k <= m + 1; ++k) {
            Polynomial low, high;
            for (int i = 1; i < k; ++i) low += rows[i - 1];
            for (int i = k; i <= m; ++i) high += rows[i - 1];
            Polynomial combined = low + Polynomial::x() * high;
            Rat scale(1);
            for (int e = 0; e < m + 1 - k; ++e) scale *= q;
            next[k - 1] = combined * scale;
        }
        rows = std::move(next);
    }
    // A_n(x;q) = A_{n+1,n+1}(x;q) = sum_k A_{n,k}(x;q)
    Polynomial total;
    for (const auto& p : rows) total += p;
    return total;
}

}  // namespace chainpoly
