#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace finitop {

using Mask = std::uint32_t;

/// Largest carrier supported by the bit-vector representation. Target sizes
/// are n <= 7; the headroom exists for topological sums of small spaces.
inline constexpr int kMaxPoints = 12;

/// A subset of the points 0..n-1 of some ambient finite space, stored as a
/// bit vector. The ambient size is carried by the space, not the set.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(Mask bits) : bits_(bits) {}

    static PointSet of(std::initializer_list<int> points) {
        Mask m = 0;
        for (int p : points) m |= Mask{1} << p;
        return PointSet(m);
    }
    static constexpr PointSet single(int p) { return PointSet(Mask{1} << p); }
    static constexpr PointSet empty_set() { return PointSet(0); }
    static constexpr PointSet universe(int n) {
        return PointSet(n == 0 ? 0 : (Mask{1} << n) - 1);
    }

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int p) const { return (bits_ >> p) & 1; }

    constexpr PointSet with(int p) const { return PointSet(bits_ | (Mask{1} << p)); }
    constexpr PointSet without(int p) const { return PointSet(bits_ & ~(Mask{1} << p)); }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet minus(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    constexpr PointSet complement_in(int n) const {
        return PointSet(universe(n).bits_ & ~bits_);
    }

    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr auto operator<=>(const PointSet&) const = default;

    /// Member indices in ascending order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    /// Renders as "{0,2,5}"; the empty set renders as "{}".
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (Mask m = bits_; m != 0; m &= m - 1) {
            if (!first) s += ",";
            s += std::to_string(std::countr_zero(m));
            first = false;
        }
        return s + "}";
    }

private:
    Mask bits_ = 0;
};

/// A finite family of point sets kept sorted and duplicate-free. Used both
/// for validated topologies and for raw candidate families that may fail
/// the topology axioms.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::vector<PointSet> sets) : sets_(std::move(sets)) { canonicalize(); }

    static SetFamily of(std::initializer_list<PointSet> sets) {
        return SetFamily(std::vector<PointSet>(sets));
    }

    void add(PointSet s) {
        auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
        if (it == sets_.end() || *it != s) sets_.insert(it, s);
    }

    bool contains(PointSet s) const {
        return std::binary_search(sets_.begin(), sets_.end(), s);
    }

    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    const PointSet& operator[](std::size_t i) const { return sets_[i]; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    bool operator==(const SetFamily&) const = default;

    /// True when every member of this family is a member of `o`.
    bool subfamily_of(const SetFamily& o) const {
        return std::includes(o.sets_.begin(), o.sets_.end(), sets_.begin(), sets_.end());
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if (i) s += " ";
            s += sets_[i].to_string();
        }
        return s + "]";
    }

private:
    void canonicalize() {
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    }

    std::vector<PointSet> sets_;
};

}  // namespace finitop
