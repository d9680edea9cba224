#pragma once

// Partition model of nilpotent orbits for the classical families: validity,
// transpose, dominance order, parity collapse, and sl2 h-elements.

#include "liecomb/root_systems.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecomb {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Builds from an arbitrary list of nonnegative entries: zeros dropped,
    // the rest sorted decreasing.
    static Partition from_unsorted(std::vector<int> entries) {
        std::vector<int> kept;
        for (int e : entries) {
            if (e < 0) throw std::invalid_argument("Partition: negative entry");
            if (e > 0) kept.push_back(e);
        }
        std::sort(kept.begin(), kept.end(), std::greater<int>());
        return Partition(std::move(kept));
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
    bool empty() const { return parts_.empty(); }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

inline Partition transpose(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> cols(static_cast<size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<size_t>(j)];
    return Partition(std::move(cols));
}

inline void check_orbit_size(const LieType& t, const Partition& p, const char* who) {
    if (p.size() != t.defining_dim())
        throw std::invalid_argument(std::string(who) + ": partition " + p.str() + " has size " +
                                    std::to_string(p.size()) + ", expected " +
                                    std::to_string(t.defining_dim()) + " for " + t.str());
}

// A: every partition; C: odd parts with even multiplicity; B and D: even
// parts with even multiplicity. Throws on a size mismatch.
inline bool is_valid_orbit(const LieType& t, const Partition& p) {
    check_orbit_size(t, p, "is_valid_orbit");
    if (t.family == Family::A) return true;
    const bool bad_parity = (t.family == Family::C) ? 1 : 0;
    std::vector<int> ps = p.parts();
    for (size_t i = 0; i < ps.size();) {
        size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        if (ps[i] % 2 == bad_parity && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

inline bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("dominance_leq: sizes differ (" + p.str() + " vs " + q.str() + ")");
    int sp = 0, sq = 0;
    const int len = std::max(p.length(), q.length());
    for (int i = 0; i < len; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp > sq) return false;
    }
    return true;
}

// Dominance-greatest valid orbit partition below p. Recipe: decrement the
// last copy of the largest parity-violating part, re-add the box at the
// earliest later slot keeping the sequence weakly decreasing, repeat.
inline Partition collapse(const LieType& t, const Partition& p) {
    check_orbit_size(t, p, "collapse");
    if (t.family == Family::A) return p;
    const bool bad_parity = (t.family == Family::C) ? 1 : 0;
    std::vector<int> ps = p.parts();
    while (true) {
        // Largest part value occurring with odd multiplicity and bad parity.
        int bad = -1, bad_last = -1;
        for (size_t i = 0; i < ps.size();) {
            size_t j = i;
            while (j < ps.size() && ps[j] == ps[i]) ++j;
            if (ps[i] % 2 == static_cast<int>(bad_parity) && (j - i) % 2 != 0) {
                bad = ps[i];
                bad_last = static_cast<int>(j) - 1;
                break;
            }
            i = j;
        }
        if (bad < 0) break;
        --ps[static_cast<size_t>(bad_last)];
        bool placed = false;
        for (size_t j = static_cast<size_t>(bad_last) + 1; j < ps.size(); ++j) {
            if (ps[j] + 1 <= ps[j - 1]) {
                ++ps[j];
                placed = true;
                break;
            }
        }
        if (!placed) ps.push_back(1);
        while (!ps.empty() && ps.back() == 0) ps.pop_back();
        std::sort(ps.begin(), ps.end(), std::greater<int>());
    }
    Partition out(std::move(ps));
    if (!is_valid_orbit(t, out)) throw std::logic_error("collapse: failed to reach a valid partition");
    return out;
}

// Coordinates of the sl2 h-element with Jordan type p on the defining
// representation: the nonnegative half of the exponent multiset
// { m-1, m-3, ..., 1-m } over the parts m. For B one zero is discarded to
// fit rank n; for A all n+1 exponents are kept. Dominant (sorted) form.
inline Weight h_weight(const LieType& t, const Partition& p) {
    check_orbit_size(t, p, "h_weight");
    if (!is_valid_orbit(t, p))
        throw std::invalid_argument("h_weight: " + p.str() + " is not a valid orbit for " + t.str());
    std::vector<int> exps;
    for (int m : p.parts())
        for (int e = m - 1; e >= 1 - m; e -= 2) exps.push_back(e);
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    std::vector<int> kept;
    if (t.family == Family::A) {
        kept = exps;
    } else {
        for (int e : exps)
            if (e > 0) kept.push_back(e);
        size_t zeros = 0;
        for (int e : exps)
            if (e == 0) ++zeros;
        if (t.family == Family::B) --zeros;  // 2n+1 exponents, rank n
        zeros /= 2;
        kept.insert(kept.end(), zeros, 0);
    }
    if (static_cast<int>(kept.size()) != t.coord_dim())
        throw std::logic_error("h_weight: exponent count mismatch for " + p.str());
    Weight w(t.coord_dim());
    for (Index i = 0; i < w.size(); ++i) w(i) = Rational(kept[static_cast<size_t>(i)]);
    return w;
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> valid_orbit_partitions(const LieType& t) {
    std::vector<Partition> out;
    for (Partition& p : all_partitions(t.defining_dim()))
        if (is_valid_orbit(t, p)) out.push_back(std::move(p));
    return out;
}

}  // namespace liecomb
