#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "catorb/counting.hpp"
#include "catorb/linalg.hpp"
#include "catorb/orbits.hpp"
#include "catorb/partition.hpp"
#include "catorb/poly.hpp"

namespace catorb {

// P_m(a,b) = sum_{j=0}^{m-1} a^{m-j-1} b^j, with P_0 = 1.
inline Poly pm_poly(int m, int a_index, int b_index, int r) {
    if (m < 0) throw std::invalid_argument("pm_poly: m must be >= 0");
    if (a_index == b_index) throw std::invalid_argument("pm_poly: variable indices must differ");
    if (a_index < 0 || a_index >= r || b_index < 0 || b_index >= r)
        throw std::invalid_argument("pm_poly: variable index out of range");
    if (m == 0) return Poly::one(r);
    Poly p(r);
    for (int j = 0; j < m; ++j) {
        Monomial mono(static_cast<std::size_t>(r), 0);
        mono[static_cast<std::size_t>(a_index)] += m - j - 1;
        mono[static_cast<std::size_t>(b_index)] += j;
        p.add_term(mono, 1);
    }
    return p;
}

// All distinct rearrangements of mu's parts, descending-lex.
inline std::vector<std::vector<int>> compositions_of(const Partition& mu, int slots) {
    if (static_cast<int>(mu.size()) != slots)
        throw std::invalid_argument("compositions_of: partition must have exactly " + std::to_string(slots) +
                                    " parts");
    std::vector<int> cur = mu.parts();
    std::vector<std::vector<int>> out;
    do {
        out.push_back(cur);
    } while (std::prev_permutation(cur.begin(), cur.end()));
    return out;
}

// P(mu) = sum over comp(mu) of P_{mu'_1}(x1,x2) ... P_{mu'_l}(x_{2l-1},x_{2l}),
// an element of C[x_1..x_r] with r = 2l+m.
inline Poly p_of_mu(const Partition& mu, int l, int m) {
    if (l < 1 || m < 1) throw std::invalid_argument("p_of_mu: need l >= 1 and m >= 1");
    if (static_cast<int>(mu.size()) != l)
        throw std::invalid_argument("p_of_mu: partition must have exactly " + std::to_string(l) + " parts");
    int r = 2 * l + m;
    Poly total(r);
    for (const auto& comp : compositions_of(mu, l)) {
        Poly prod = Poly::one(r);
        for (int i = 0; i < l; ++i) prod = prod * pm_poly(comp[static_cast<std::size_t>(i)], 2 * i, 2 * i + 1, r);
        total += prod;
    }
    return total;
}

struct DegreeRecord {
    int D = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    Int predicted = 0;  // sum over basis mu of p(D - d_mu, <= r parts)
};

struct WitnessTerm {
    Partition nu;            // basis element
    std::vector<int> shape;  // monomial-symmetric multiplier shape
    Rat coeff;
};

struct SpanningRecord {
    Partition mu{std::vector<int>{1}};
    bool solvable = false;
    std::size_t rank_a = 0;
    std::size_t rank_ab = 0;
    std::vector<WitnessTerm> witness;  // empty when unsolvable
};

enum class SpanConvention { Literal, Bounded };

inline const char* convention_name(SpanConvention c) {
    return c == SpanConvention::Literal ? "literal" : "bounded";
}

struct GradedReport {
    int ell = 0;
    int m = 0;
    int r = 0;
    int dmax = 0;
    SpanConvention convention = SpanConvention::Bounded;
    std::vector<Partition> basis;
    std::vector<DegreeRecord> degrees;
    bool independence = false;
    std::vector<SpanningRecord> spanning;
    Int expected_basis = 0;  // ballot(ell, m-1)
    bool rank_count_match = false;

    bool spanning_ok() const {
        for (const auto& s : spanning)
            if (!s.solvable) return false;
        return true;
    }
    bool hilbert_match() const {
        for (const auto& d : degrees)
            if (Int(d.cols) != d.predicted) return false;
        return true;
    }
};

namespace detail {

inline constexpr std::uint64_t kRankPrime = 2147483647ULL;  // 2^31 - 1

// Pack homogeneous columns into an integer matrix over the union of their
// support monomials (graded descending-lex row order), clearing denominators
// per column.
inline la::IntMatrix columns_to_matrix(const std::vector<Poly>& cols) {
    std::map<Monomial, std::size_t, MonoOrder> row_of;
    for (const Poly& p : cols)
        for (const auto& [mono, c] : p.terms()) row_of.emplace(mono, 0);
    std::size_t idx = 0;
    for (auto& [mono, i] : row_of) i = idx++;
    la::IntMatrix mat(row_of.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Int lcm_den = 1;
        for (const auto& [mono, c] : cols[j].terms())
            lcm_den = boost::multiprecision::lcm(lcm_den, Int(boost::multiprecision::denominator(c)));
        for (const auto& [mono, c] : cols[j].terms())
            mat.at(row_of.at(mono), j) =
                Int(boost::multiprecision::numerator(c)) * (lcm_den / Int(boost::multiprecision::denominator(c)));
    }
    return mat;
}

// Exact rank with a dual route: Bareiss cross-checked against rational
// elimination whenever the matrix is small, and a full-column-rank
// certificate mod p for large matrices (falling back to Bareiss when the
// certificate does not close the question).
inline std::size_t exact_rank(const la::IntMatrix& m) {
    if (m.rows() <= 200 && m.cols() <= 200) {
        std::size_t rb = la::rank_bareiss(m);
        std::size_t rq = la::rank_rational(la::to_rational(m));
        if (rb != rq) throw std::logic_error("exact_rank: elimination routes disagree");
        return rb;
    }
    std::size_t rp = la::rank_modp(m, kRankPrime);
    if (rp == m.cols()) return rp;
    return la::rank_bareiss(m);
}

inline std::vector<Partition> basis_candidates(int l, int m) {
    OrbitLevel lv = build_omega_orbit(m, l);
    std::vector<Partition> out;
    out.reserve(lv.elements.size());
    for (const auto& e : lv.elements) out.push_back(e.mu);
    return out;
}

}  // namespace detail

inline int default_dmax(int l, int m) {
    int r = 2 * l + m;
    int max_deg = 0;
    for (const Partition& mu : detail::basis_candidates(l, m))
        max_deg = std::max(max_deg, static_cast<int>(mu.sum()) - l);
    return max_deg + r;
}

// Degree-by-degree full-column-rank test for {m_shape * P(mu)} over the basis
// candidates P^l(Omega_m).
inline GradedReport independence_check(int l, int m, int dmax) {
    if (l < 1 || m < 1) throw std::invalid_argument("independence_check: need l >= 1 and m >= 1");
    GradedReport rep;
    rep.ell = l;
    rep.m = m;
    rep.r = 2 * l + m;
    rep.dmax = dmax;
    rep.basis = detail::basis_candidates(l, m);
    rep.expected_basis = ballot(l, m - 1);
    rep.rank_count_match = Int(rep.basis.size()) == rep.expected_basis;

    std::vector<Poly> basis_polys;
    std::vector<int> basis_deg;
    int max_deg = 0;
    for (const Partition& mu : rep.basis) {
        basis_polys.push_back(p_of_mu(mu, l, m));
        basis_deg.push_back(mu.sum() - l);
        max_deg = std::max(max_deg, basis_deg.back());
    }
    if (dmax < max_deg) throw std::invalid_argument("independence_check: dmax below max basis degree");

    rep.independence = true;
    for (int D = 0; D <= dmax; ++D) {
        DegreeRecord rec;
        rec.D = D;
        std::vector<Poly> cols;
        for (std::size_t b = 0; b < rep.basis.size(); ++b) {
            int sd = D - basis_deg[b];
            if (sd < 0) continue;
            rec.predicted += count_partitions_of(sd, rep.r);
            for (const auto& shape : partitions_of(sd, rep.r))
                cols.push_back(monomial_symmetric(shape, rep.r) * basis_polys[b]);
        }
        rec.cols = cols.size();
        if (!cols.empty()) {
            la::IntMatrix mat = detail::columns_to_matrix(cols);
            rec.rows = mat.rows();
            rec.rank = detail::exact_rank(mat);
        }
        if (rec.rank != rec.cols) rep.independence = false;
        rep.degrees.push_back(std::move(rec));
    }
    return rep;
}

// For every mu in the chosen spanning set but outside the basis (and with
// |mu| - l <= dmax), solve P(mu) = sum_nu f_nu P(nu) in the degree-(|mu|-l)
// graded piece, f_nu running over monomial-symmetric multipliers.
inline GradedReport spanning_check(int l, int m, SpanConvention convention, int dmax) {
    if (l < 1 || m < 1) throw std::invalid_argument("spanning_check: need l >= 1 and m >= 1");
    GradedReport rep;
    rep.ell = l;
    rep.m = m;
    rep.r = 2 * l + m;
    rep.dmax = dmax;
    rep.convention = convention;
    rep.basis = detail::basis_candidates(l, m);
    rep.expected_basis = ballot(l, m - 1);
    rep.rank_count_match = Int(rep.basis.size()) == rep.expected_basis;

    std::vector<Poly> basis_polys;
    std::vector<int> basis_deg;
    for (const Partition& mu : rep.basis) {
        basis_polys.push_back(p_of_mu(mu, l, m));
        basis_deg.push_back(mu.sum() - l);
    }

    int bound = convention == SpanConvention::Literal ? l : l + m - 1;
    rep.independence = true;  // not evaluated here; conjecture_report overwrites
    for (const Partition& mu : enumerate_box(l, bound)) {
        if (std::find(rep.basis.begin(), rep.basis.end(), mu) != rep.basis.end()) continue;
        int target_deg = mu.sum() - l;
        if (target_deg > dmax) continue;

        std::vector<Poly> cols;
        std::vector<WitnessTerm> col_meta;
        for (std::size_t b = 0; b < rep.basis.size(); ++b) {
            int sd = target_deg - basis_deg[b];
            if (sd < 0) continue;
            for (const auto& shape : partitions_of(sd, rep.r)) {
                cols.push_back(monomial_symmetric(shape, rep.r) * basis_polys[b]);
                col_meta.push_back({rep.basis[b], shape, Rat(0)});
            }
        }
        Poly target = p_of_mu(mu, l, m);

        // assemble [A | b] over the union of supports
        std::vector<Poly> all = cols;
        all.push_back(target);
        la::IntMatrix joint = detail::columns_to_matrix(all);
        la::IntMatrix a(joint.rows(), cols.size());
        std::vector<la::Int> b_vec(joint.rows());
        for (std::size_t i = 0; i < joint.rows(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) a.at(i, j) = joint.at(i, j);
            b_vec[i] = joint.at(i, cols.size());
        }
        la::SolveResult sol = la::solve_rational(a, b_vec);

        SpanningRecord srec;
        srec.mu = mu;
        srec.solvable = sol.solvable;
        srec.rank_a = sol.rank_a;
        srec.rank_ab = sol.rank_ab;
        if (sol.solvable)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (sol.witness[j] != 0) {
                    WitnessTerm t = col_meta[j];
                    t.coeff = sol.witness[j];
                    srec.witness.push_back(std::move(t));
                }
        rep.spanning.push_back(std::move(srec));
    }
    return rep;
}

// Independence + spanning + basis-count comparison, verdicts kept separate.
inline GradedReport conjecture_report(int l, int m, int dmax, SpanConvention convention) {
    GradedReport rep = independence_check(l, m, dmax);
    GradedReport span = spanning_check(l, m, convention, dmax);
    rep.convention = convention;
    rep.spanning = std::move(span.spanning);
    return rep;
}

}  // namespace catorb
