#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "catorb/partition.hpp"

namespace catorb {

using Int = boost::multiprecision::cpp_int;

// binomial(n,k) = 0 outside 0 <= k <= n; the identity sums below rely on this.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// c_l = binom(2l,l) - binom(2l,l-1), c_0 = 1.
inline Int catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
    return binomial(2 * n, n) - binomial(2 * n, n - 1);
}

// b_{l,m} = binom(2l+m,l) - binom(2l+m,l-1); b_{l,-1} = 0, b_{l,0} = c_l.
inline Int ballot(long l, long m) {
    if (l < 0) throw std::invalid_argument("ballot needs l >= 0");
    if (m < -1) throw std::invalid_argument("ballot needs m >= -1");
    return binomial(2 * l + m, l) - binomial(2 * l + m, l - 1);
}

// #P^k_sq: 1 for k = 1, binom(2k-3, k-1) otherwise.
inline Int count_square_roots(int k) {
    if (k < 1) throw std::invalid_argument("count_square_roots needs k >= 1");
    return k == 1 ? Int(1) : binomial(2 * k - 3, k - 1);
}

struct IdentityInstance {
    std::vector<long> params;
    Int lhs, rhs;
    bool ok() const { return lhs == rhs; }
};

struct IdentityReport {
    std::string name;
    std::vector<IdentityInstance> instances;
    bool all_ok() const {
        for (const auto& inst : instances)
            if (!inst.ok()) return false;
        return true;
    }
};

// l*c_{l+1} = sum_{i=1..l} (l-i+2) c_i c_{l-i+1}, checked exactly for l <= lmax.
inline IdentityReport verify_catalan_convolution(int lmax) {
    if (lmax < 1) throw std::invalid_argument("verify_catalan_convolution needs lmax >= 1");
    IdentityReport rep{"catalan_convolution", {}};
    for (long l = 1; l <= lmax; ++l) {
        Int lhs = l * catalan(l + 1);
        Int rhs = 0;
        for (long i = 1; i <= l; ++i) rhs += Int(l - i + 2) * catalan(i) * catalan(l - i + 1);
        rep.instances.push_back({{l}, lhs, rhs});
    }
    return rep;
}

// sum_{j>=0} (-1)^j binom(l-j,j) b_{l-j,m} = binom(m+l,l) for l <= lmax, m <= mmax.
inline IdentityReport verify_alternating_identity(int lmax, int mmax) {
    if (lmax < 0 || mmax < 0) throw std::invalid_argument("verify_alternating_identity needs lmax, mmax >= 0");
    IdentityReport rep{"alternating_ballot", {}};
    for (long l = 0; l <= lmax; ++l)
        for (long m = 0; m <= mmax; ++m) {
            Int lhs = 0;
            for (long j = 0; j <= l; ++j) {
                Int term = binomial(l - j, j) * ballot(l - j, m);
                lhs += (j % 2 == 0) ? term : -term;
            }
            rep.instances.push_back({{l, m}, lhs, binomial(m + l, l)});
        }
    return rep;
}

// e[l][r] = #{mu in the level-l orbit set : mu_l >= r}, driven by the
// recurrence e_{l,r} = e_{l-1,r-1} + e_{l,r+1} (r-1 clamped to 1), swept in
// descending r per level. Each entry is validated against its closed form at
// construction, so a returned table is already theorem-checked.
struct ETable {
    bool omega = false;
    // square context
    Partition root{std::vector<int>{1}};
    int k = 1;
    bool tau_fixed = true;
    // omega context
    int m = 0;

    int lmin = 1, lmax = 1;
    std::vector<std::vector<Int>> rows;  // rows[l - lmin][r - 1]

    int bound(int l) const { return omega ? l + m - 1 : l - k + 1; }
    Int at(int l, int r) const {
        if (l < lmin || l > lmax || r < 1) throw std::out_of_range("ETable::at");
        const auto& row = rows[static_cast<std::size_t>(l - lmin)];
        if (r > static_cast<int>(row.size())) return 0;  // beyond the zero boundary
        return row[static_cast<std::size_t>(r - 1)];
    }
};

inline Int e_square_closed_form(int k, bool tau_fixed, int l, int r) {
    if (l - k - r + 1 < 0) return 0;  // r beyond the least-part bound: no elements
    Int b = ballot(l - k - r + 1, r);
    return tau_fixed ? b : 2 * b;
}

inline ETable e_table_square(const Partition& lam, int k, int lmax) {
    if (!is_square(lam, k)) throw std::invalid_argument("e_table_square needs a square root");
    if (lmax < k) throw std::invalid_argument("e_table_square needs lmax >= k");
    ETable t;
    t.omega = false;
    t.root = lam;
    t.k = k;
    t.tau_fixed = is_tau_fixed(lam, k);
    t.lmin = k;
    t.lmax = lmax;
    Int npk = t.tau_fixed ? 1 : 2;
    for (int l = k; l <= lmax; ++l) {
        int b = t.bound(l);
        std::vector<Int> row(static_cast<std::size_t>(b));
        if (l == k) {
            row[0] = npk;
        } else {
            const auto& prev = t.rows.back();
            for (int r = b; r >= 1; --r) {
                Int above = (r == b) ? Int(0) : row[static_cast<std::size_t>(r)];
                int rp = r - 1 < 1 ? 1 : r - 1;
                Int left = rp <= static_cast<int>(prev.size()) ? prev[static_cast<std::size_t>(rp - 1)] : Int(0);
                row[static_cast<std::size_t>(r - 1)] = left + above;
            }
        }
        for (int r = 1; r <= b; ++r)
            if (row[static_cast<std::size_t>(r - 1)] != e_square_closed_form(k, t.tau_fixed, l, r))
                throw std::logic_error("e_table_square: recurrence disagrees with closed form at l=" +
                                       std::to_string(l) + " r=" + std::to_string(r));
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline Int e_omega_closed_form(int m, int l, int s) {
    if (s > l + m - 1) return 0;
    if (s >= l) return binomial(m + 2 * l - s - 1, l);
    Int acc = 0;
    for (long j = 0; j <= s; ++j) {
        Int term = binomial(s - j, j) * ballot(l - j, m - 1);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

inline ETable e_table_omega(int m, int lmax) {
    if (m < 1) throw std::invalid_argument("e_table_omega needs m >= 1");
    if (lmax < 1) throw std::invalid_argument("e_table_omega needs lmax >= 1");
    ETable t;
    t.omega = true;
    t.m = m;
    t.lmin = 1;
    t.lmax = lmax;
    for (int l = 1; l <= lmax; ++l) {
        int b = t.bound(l);
        std::vector<Int> row(static_cast<std::size_t>(b));
        if (l == 1) {
            for (int s = 1; s <= b; ++s) row[static_cast<std::size_t>(s - 1)] = m - s + 1;
        } else {
            const auto& prev = t.rows.back();
            for (int s = b; s >= 1; --s) {
                Int above = (s == b) ? Int(0) : row[static_cast<std::size_t>(s)];
                int sp = s - 1 < 1 ? 1 : s - 1;
                Int left = sp <= static_cast<int>(prev.size()) ? prev[static_cast<std::size_t>(sp - 1)] : Int(0);
                row[static_cast<std::size_t>(s - 1)] = left + above;
            }
        }
        for (int s = 1; s <= b; ++s)
            if (row[static_cast<std::size_t>(s - 1)] != e_omega_closed_form(m, l, s))
                throw std::logic_error("e_table_omega: recurrence disagrees with closed form at l=" +
                                       std::to_string(l) + " s=" + std::to_string(s));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// "l,r,e" header, one line per nonzero entry, sorted by (l, r).
inline std::string to_csv(const ETable& t) {
    std::string out = "l,r,e\n";
    for (int l = t.lmin; l <= t.lmax; ++l)
        for (int r = 1; r <= t.bound(l); ++r) {
            Int e = t.at(l, r);
            if (e != 0)
                out += std::to_string(l) + "," + std::to_string(r) + "," + e.str() + "\n";
        }
    return out;
}

}  // namespace catorb
