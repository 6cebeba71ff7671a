#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catorb/counting.hpp"

namespace catorb {

using Rat = boost::multiprecision::cpp_rational;

// Exponent vector over a fixed variable count; index i is x_{i+1}.
using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded order, ties broken so that lexicographically larger exponent
// vectors come first within a degree.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return b < a;
    }
};

class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("Poly: negative variable count");
    }

    int nvars() const { return nvars_; }
    const std::map<Monomial, Rat, MonoOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rat& c) {
        if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("Poly: monomial arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly operator*(const Poly& o) const {
        check_arity(o);
        Poly out(nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(nvars_);
                for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend bool operator==(const Poly&, const Poly&) = default;

    static Poly one(int nvars) {
        Poly p(nvars);
        p.add_term(Monomial(nvars, 0), 1);
        return p;
    }

    static Poly variable(int nvars, int index) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("Poly: variable index out of range");
        Poly p(nvars);
        Monomial m(nvars, 0);
        m[index] = 1;
        p.add_term(m, 1);
        return p;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            }
            if (mono.empty()) {
                out += c.str();
            } else if (c == 1) {
                out += mono;
            } else {
                out += c.str() + "*" + mono;
            }
        }
        return out;
    }

private:
    void check_arity(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    }

    int nvars_ = 0;
    std::map<Monomial, Rat, MonoOrder> terms_;
};

// m_shape over nvars variables: the sum of all distinct monomials whose
// exponent multiset equals shape (shape given weakly decreasing).
inline Poly monomial_symmetric(const std::vector<int>& shape, int nvars) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] <= 0) throw std::invalid_argument("monomial_symmetric: parts must be positive");
        if (i && shape[i] > shape[i - 1]) throw std::invalid_argument("monomial_symmetric: shape must be decreasing");
    }
    if (static_cast<int>(shape.size()) > nvars)
        throw std::invalid_argument("monomial_symmetric: more parts than variables");
    Monomial m(static_cast<std::size_t>(nvars), 0);
    std::copy(shape.begin(), shape.end(), m.begin());
    std::sort(m.begin(), m.end(), std::greater<int>());
    Poly p(nvars);
    do {
        p.add_term(m, 1);
    } while (std::prev_permutation(m.begin(), m.end()));
    return p;
}

// All partitions of d with at most max_parts parts, descending lexicographic.
inline std::vector<std::vector<int>> partitions_of(int d, int max_parts) {
    std::vector<std::vector<int>> out;
    if (d < 0 || max_parts < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (d == 0) out.push_back({});
    else rec(rec, d, d);
    return out;
}

inline Int count_partitions_of(int d, int max_parts) {
    if (d < 0 || max_parts < 0) throw std::invalid_argument("count_partitions_of: negative argument");
    // table[j] = partitions of j into parts counted so far, capped at max_parts rows
    std::vector<std::vector<Int>> table(static_cast<std::size_t>(max_parts) + 1,
                                        std::vector<Int>(static_cast<std::size_t>(d) + 1, 0));
    for (auto& row : table) row[0] = 1;
    for (int parts = 1; parts <= max_parts; ++parts)
        for (int j = 1; j <= d; ++j) {
            table[parts][j] = table[parts - 1][j];
            if (j - parts >= 0) table[parts][j] += table[parts][j - parts];
        }
    return table[max_parts][d];
}

}  // namespace catorb
