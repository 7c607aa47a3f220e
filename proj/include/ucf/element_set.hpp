#ifndef UCF_ELEMENT_SET_HPP
#define UCF_ELEMENT_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ucf {

using Mask = std::uint64_t;

/// Largest element label a set may carry. Element e lives in bit e-1, and
/// bit 63 is never used.
inline constexpr int max_element = 63;

/// Largest universe for operations that materialize layers of the subset
/// lattice or index it densely.
inline constexpr int max_dense_universe = 24;

/**
 * A finite subset of {1,...,63} stored as a bitmask.
 *
 * All set algebra is plain bit arithmetic. Ordering is by numeric mask
 * value, which is the order families keep their members in.
 */
class ElementSet {
public:
    constexpr ElementSet() = default;

    /// Throws InputError if bit 63 is set.
    static ElementSet from_bits(Mask bits);

    /// Throws InputError for labels outside 1..63.
    static ElementSet of(std::initializer_list<int> elements);
    static ElementSet of(const std::vector<int>& elements);

    /// {1,...,n}; throws InputError unless 0 <= n <= 63.
    static ElementSet range(int n);

    constexpr Mask bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }

    constexpr bool contains(int element) const noexcept
    {
        return element >= 1 && element <= max_element && ((bits_ >> (element - 1)) & 1u) != 0;
    }

    constexpr bool subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(ElementSet other) const noexcept
    {
        return bits_ != other.bits_ && subset_of(other);
    }
    constexpr bool disjoint(ElementSet other) const noexcept { return (bits_ & other.bits_) == 0; }

    constexpr ElementSet operator|(ElementSet o) const noexcept { return ElementSet{bits_ | o.bits_}; }
    constexpr ElementSet operator&(ElementSet o) const noexcept { return ElementSet{bits_ & o.bits_}; }
    /// Set difference.
    constexpr ElementSet operator-(ElementSet o) const noexcept { return ElementSet{bits_ & ~o.bits_}; }

    ElementSet& operator|=(ElementSet o) noexcept
    {
        bits_ |= o.bits_;
        return *this;
    }

    /// Ascending element labels.
    std::vector<int> elements() const;

    /// .ucf line syntax: "1 2 5", or "-" for the empty set.
    std::string to_string() const;

    constexpr auto operator<=>(const ElementSet&) const = default;

private:
    constexpr explicit ElementSet(Mask bits) : bits_(bits) {}

    Mask bits_ = 0;
};

}  // namespace ucf

#endif  // UCF_ELEMENT_SET_HPP
