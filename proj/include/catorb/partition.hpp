#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catorb {

struct PartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyPartition : PartitionError {
    EmptyPartition() : PartitionError("partition must have at least one part") {}
};
struct NonPositivePart : PartitionError {
    std::size_t index;
    explicit NonPositivePart(std::size_t i)
        : PartitionError("part at index " + std::to_string(i) + " is not positive"), index(i) {}
};
struct NonIncreasingViolation : PartitionError {
    std::size_t index;
    explicit NonIncreasingViolation(std::size_t i)
        : PartitionError("parts increase at index " + std::to_string(i)), index(i) {}
};
struct BoundViolation : PartitionError {
    BoundViolation(int part, int k)
        : PartitionError("part " + std::to_string(part) + " exceeds box bound " + std::to_string(k)) {}
};
struct AppendTooLarge : PartitionError {
    AppendTooLarge(int j, int last)
        : PartitionError("cannot append " + std::to_string(j) + " after last part " + std::to_string(last)) {}
};
struct TooShort : PartitionError {
    TooShort() : PartitionError("dropping the last part would leave an empty partition") {}
};

// Non-increasing sequence of positive integers, largest part first.
// Construction validates; there is no silent canonicalization.
class Partition {
  public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw EmptyPartition{};
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw NonPositivePart{i};
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) throw NonIncreasingViolation{i};
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int first() const { return parts_.front(); }
    int last() const { return parts_.back(); }
    long sum() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // Text form "a,b,c", descending; shared by CLI flags and JSON arrays.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Plain lexicographic compare; sort with DescLex for the descending order
    // used everywhere in output.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

inline Partition make_partition(std::vector<int> raw) { return Partition(std::move(raw)); }

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        try {
            parts.push_back(std::stoi(text.substr(pos, next - pos)));
        } catch (const std::exception&) {
            throw PartitionError("cannot parse partition text \"" + text + "\"");
        }
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

// tau_k: complement in an n x (k+1) box, an involution on P^{n,k}.
inline Partition tau_complement(const Partition& lam, int k) {
    if (lam.first() > k) throw BoundViolation{lam.first(), k};
    std::vector<int> out(lam.parts().rbegin(), lam.parts().rend());
    for (int& p : out) p = k + 1 - p;
    return Partition(std::move(out));
}

inline Partition append_part(const Partition& lam, int j) {
    if (j < 1 || j > lam.last()) throw AppendTooLarge{j, lam.last()};
    std::vector<int> out = lam.parts();
    out.push_back(j);
    return Partition(std::move(out));
}

inline Partition drop_last(const Partition& lam) {
    if (lam.size() < 2) throw TooShort{};
    std::vector<int> out = lam.parts();
    out.pop_back();
    return Partition(std::move(out));
}

// Membership in P^k_sq: exactly k parts, first part k, last part 1.
inline bool is_square(const Partition& lam, int k) {
    return lam.size() == k && lam.first() == k && lam.last() == 1;
}

inline bool is_tau_fixed(const Partition& lam, int k) { return tau_complement(lam, k) == lam; }

// All partitions with exactly n parts in [1,k], descending lexicographic.
inline std::vector<Partition> enumerate_box(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_box needs n >= 1 and k >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int hi) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - 1, v);
            cur.pop_back();
        }
    };
    rec(rec, n, k);
    return out;
}

}  // namespace catorb
