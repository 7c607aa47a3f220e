#ifndef UCF_SRC_DENSE_LATTICE_HPP
#define UCF_SRC_DENSE_LATTICE_HPP

#include "ucf/element_set.hpp"

#include <cstdint>
#include <vector>

namespace ucf::detail {

// Maps subsets of a universe of at most 24 elements onto contiguous indices
// 0 .. 2^u - 1 so the whole subset lattice can be stored in flat arrays.
class DenseLattice {
public:
    explicit DenseLattice(ElementSet universe)
    {
        for (Mask rest = universe.bits(); rest != 0; rest &= rest - 1)
            bits_.push_back(rest & (~rest + 1));
    }

    int rank() const noexcept { return static_cast<int>(bits_.size()); }
    std::uint32_t cells() const noexcept { return std::uint32_t{1} << bits_.size(); }

    std::uint32_t compress(ElementSet set) const noexcept
    {
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (set.bits() & bits_[i]) out |= std::uint32_t{1} << i;
        return out;
    }

    ElementSet expand(std::uint32_t index) const
    {
        Mask out = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (index & (std::uint32_t{1} << i)) out |= bits_[i];
        return ElementSet::from_bits(out);
    }

private:
    std::vector<Mask> bits_;
};

}  // namespace ucf::detail

#endif  // UCF_SRC_DENSE_LATTICE_HPP
