#ifndef QCADD_BITVEC_HPP
#define QCADD_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcadd {

/// Fixed-length bit vector packed into 64-bit words, bit i of the vector is
/// bit (i % 64) of word (i / 64).
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s01);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    std::size_t popcount() const noexcept {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool is_zero() const noexcept {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    /// Index of the lowest set bit; size() when zero.
    std::size_t lowest_set() const noexcept;

    bool operator==(const BitVec&) const = default;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const noexcept { return w_; }
    std::span<std::uint64_t> words() noexcept { return w_; }

    BitVec slice(std::size_t begin, std::size_t len) const;
    static BitVec concat(const BitVec& a, const BitVec& b);

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Parity of the AND of two equal-length vectors (GF(2) dot product).
inline bool dot_parity(const BitVec& a, const BitVec& b) {
    std::uint64_t acc = 0;
    auto aw = a.words(), bw = b.words();
    for (std::size_t k = 0; k < aw.size(); ++k) acc ^= aw[k] & bw[k];
    return std::popcount(acc) & 1u;
}

}  // namespace qcadd

#endif
