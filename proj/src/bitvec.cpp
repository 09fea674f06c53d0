#include "qcadd/bitvec.hpp"

#include "qcadd/errors.hpp"

namespace qcadd {

BitVec BitVec::from_string(std::string_view s01) {
    BitVec v(s01.size());
    for (std::size_t i = 0; i < s01.size(); ++i) {
        const char c = s01[i];
        if (c == '1')
            v.set(i, true);
        else if (c != '0')
            fail("invalid-input", "bit string may contain only 0/1, got '" + std::string(1, c) + "'");
    }
    return v;
}

std::size_t BitVec::lowest_set() const noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return n_;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
    BitVec out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, get(begin + i));
    return out;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
    for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
    return out;
}

}  // namespace qcadd
