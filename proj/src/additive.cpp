#include "qcadd/additive.hpp"

#include <algorithm>

#include "qcadd/errors.hpp"

namespace qcadd {

char gf4_to_char(std::uint8_t symbol) {
    switch (symbol & 3) {
        case 0: return '0';
        case 1: return '1';
        case 2: return 'w';
        default: return 'W';
    }
}

std::uint8_t gf4_from_char(char c) {
    switch (c) {
        case '0': return 0;
        case '1': return 1;
        case 'w': return 2;
        case 'W': return 3;
        default: fail("invalid-input", std::string("bad GF(4) symbol '") + c + "'");
    }
}

std::uint8_t gf4_mul_w(std::uint8_t symbol) {
    // w * (x + w y) = y + w (x + y)
    const std::uint8_t x = symbol & 1, y = (symbol >> 1) & 1;
    return std::uint8_t(y | ((x ^ y) << 1));
}

AdditiveCode make_additive(BinaryCode preimage) {
    if (preimage.length % 2 != 0) fail("invalid-form", "additive preimage needs even length");
    AdditiveCode c;
    c.n = int(preimage.length / 2);
    c.preimage = std::move(preimage);
    c.preimage.symplectic_view = true;
    return c;
}

std::string dim_string(std::size_t k2) {
    std::string s = std::to_string(k2 / 2);
    if (k2 % 2) s += ".5";
    return s;
}

std::string params_string(int n, std::size_t k2, std::uint64_t d) {
    return "(" + std::to_string(n) + "," + dim_string(k2) + "," + std::to_string(d) + ")";
}

Gf4Word phi_map(const BitVec& v) {
    if (v.size() % 2 != 0) fail("invalid-form", "phi needs even length");
    const std::size_t n = v.size() / 2;
    Gf4Word u(n);
    for (std::size_t i = 0; i < n; ++i)
        u[i] = std::uint8_t((v.get(i) ? 1 : 0) | (v.get(n + i) ? 2 : 0));
    return u;
}

BitVec phi_inverse(const Gf4Word& u) {
    BitVec v(u.size() * 2);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] & 1) v.set(i, true);
        if (u[i] & 2) v.set(u.size() + i, true);
    }
    return v;
}

Gf4Word parse_gf4_word(std::string_view s) {
    Gf4Word u;
    u.reserve(s.size());
    for (char c : s) {
        if (c == ' ' || c == '\t') continue;
        u.push_back(gf4_from_char(c));
    }
    return u;
}

std::string gf4_word_string(const Gf4Word& u) {
    std::string s;
    s.reserve(u.size());
    for (auto sym : u) s += gf4_to_char(sym);
    return s;
}

std::vector<std::string> gf4_generator_strings(const AdditiveCode& c) {
    std::vector<std::string> out;
    for (const auto& row : c.preimage.generators.rows) out.push_back(gf4_word_string(phi_map(row)));
    return out;
}

AdditiveCode span_subcode(const BinaryMatrix& rows, int n) {
    if (rows.cols != std::size_t(n) * 2) fail("invalid-input", "rows must have length 2n");
    return make_additive(make_code(std::size_t(n) * 2, rows, true));
}

AdditiveCode span_gf4_rows(std::span<const Gf4Word> rows, bool linear_closure) {
    if (rows.empty()) fail("invalid-input", "need at least one row");
    const std::size_t n = rows.front().size();
    BinaryMatrix m(2 * n);
    for (const auto& r : rows) {
        if (r.size() != n) fail("shape-error", "GF(4) rows of unequal length");
        m.rows.push_back(phi_inverse(r));
        if (linear_closure) {
            Gf4Word wr(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) wr[i] = gf4_mul_w(r[i]);
            m.rows.push_back(phi_inverse(wr));
        }
    }
    return span_subcode(m, int(n));
}

AdditiveCode extend(const AdditiveCode& c, ExtendMode mode, int count) {
    if (count < 1) fail("invalid-input", "extension count must be positive");
    AdditiveCode cur = c;
    for (int step = 0; step < count; ++step) {
        const std::size_t n = std::size_t(cur.n);
        BinaryMatrix m(2 * (n + 1));
        for (const auto& row : cur.preimage.generators.rows) {
            BitVec v(2 * (n + 1));
            bool px = false, py = false;
            for (std::size_t i = 0; i < n; ++i) {
                const bool x = row.get(i), y = row.get(n + i);
                v.set(i, x);
                v.set(n + 1 + i, y);
                px ^= x;
                py ^= y;
            }
            if (mode == ExtendMode::even_like) {
                v.set(n, px);
                v.set(2 * n + 1, py);
            }
            m.rows.push_back(std::move(v));
        }
        cur = span_subcode(m, int(n) + 1);
    }
    return cur;
}

AdditiveCode puncture(const AdditiveCode& c, std::span<const int> positions) {
    std::vector<bool> drop(std::size_t(c.n), false);
    for (int p : positions) {
        if (p < 0 || p >= c.n) fail("invalid-input", "puncture position out of range");
        drop[std::size_t(p)] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < std::size_t(c.n); ++i)
        if (!drop[i]) keep.push_back(i);
    BinaryMatrix m(2 * keep.size());
    const std::size_t n = std::size_t(c.n);
    for (const auto& row : c.preimage.generators.rows) {
        BitVec v(2 * keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) {
            v.set(j, row.get(keep[j]));
            v.set(keep.size() + j, row.get(n + keep[j]));
        }
        m.rows.push_back(std::move(v));
    }
    return span_subcode(m, int(keep.size()));
}

AdditiveCode shorten(const AdditiveCode& c, std::span<const int> positions) {
    std::vector<int> pos(positions.begin(), positions.end());
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    const std::size_t n = std::size_t(c.n);
    const std::size_t k = c.k2();
    // combinations of generators vanishing on both halves of every position
    BinaryMatrix constraints(k);
    for (int p : pos) {
        if (p < 0 || p >= c.n) fail("invalid-input", "shorten position out of range");
        BitVec cx(k), cy(k);
        for (std::size_t r = 0; r < k; ++r) {
            cx.set(r, c.preimage.generators.rows[r].get(std::size_t(p)));
            cy.set(r, c.preimage.generators.rows[r].get(n + std::size_t(p)));
        }
        constraints.rows.push_back(std::move(cx));
        constraints.rows.push_back(std::move(cy));
    }
    BinaryMatrix sub(2 * n);
    if (pos.empty()) {
        sub = c.preimage.generators;
    } else {
        const auto rr = row_reduce(constraints);
        for (const auto& combo : rr.nullbasis.rows) {
            BitVec v(2 * n);
            for (std::size_t r = 0; r < k; ++r)
                if (combo.get(r)) v.xor_with(c.preimage.generators.rows[r]);
            sub.rows.push_back(std::move(v));
        }
    }
    // when only the zero word survives the restriction this yields the zero
    // code of the shortened length
    AdditiveCode restricted = span_subcode(sub, c.n);
    return puncture(restricted, pos);
}

AdditiveCode augment(const AdditiveCode& c, AugmentMode mode) {
    // the adjoined scalar words must be independent of the code, otherwise
    // the dimension cannot grow; this is weaker than forbidding every
    // full-weight codeword and matches how the derivations are applied
    const std::size_t n = std::size_t(c.n);
    BitVec ones(2 * n), ws(2 * n), wsq(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        ones.set(i, true);
        ws.set(n + i, true);
        wsq.set(i, true);
        wsq.set(n + i, true);
    }
    if (code_contains(c.preimage, ones))
        fail("augment-forbidden", "code already contains the all-one word");
    if (mode == AugmentMode::full &&
        (code_contains(c.preimage, ws) || code_contains(c.preimage, wsq)))
        fail("augment-forbidden", "code already contains a scalar multiple of the all-one word");
    BinaryMatrix m = c.preimage.generators;
    m.rows.push_back(ones);
    if (mode == AugmentMode::full) m.rows.push_back(ws);
    return span_subcode(m, c.n);
}

// Rows of c1 that extend the row space of c2, in RREF order.
static BinaryMatrix completion_rows(const AdditiveCode& c1, const AdditiveCode& c2) {
    if (c1.n != c2.n) fail("shape-error", "codes must share the same length");
    BinaryMatrix stacked = c2.preimage.generators;
    for (const auto& row : c1.preimage.generators.rows) stacked.rows.push_back(row);
    if (rank_of(stacked) != c1.k2()) fail("not-a-subcode", "second code is not inside the first");
    BinaryMatrix acc = c2.preimage.generators;
    BinaryMatrix completion(c1.preimage.length);
    std::size_t rank = acc.rows.size();
    for (const auto& row : c1.preimage.generators.rows) {
        acc.rows.push_back(row);
        const std::size_t r = rank_of(acc);
        if (r > rank) {
            rank = r;
            completion.rows.push_back(row);
        } else {
            acc.rows.pop_back();
        }
    }
    return completion;
}

AdditiveCode construction_x(const AdditiveCode& c1, const AdditiveCode& c2,
                            const AdditiveCode& aux) {
    BinaryMatrix comp = completion_rows(c1, c2);
    if (comp.rows.size() != aux.k2())
        fail("shape-error", "auxiliary dimension must equal k2(c1) - k2(c2), have " +
                                std::to_string(aux.k2()) + " vs " +
                                std::to_string(comp.rows.size()));
    const std::size_t n = std::size_t(c1.n), l = std::size_t(aux.n);
    BinaryMatrix m(2 * (n + l));
    auto emit = [&](const BitVec& base, const BitVec* attach) {
        BitVec v(2 * (n + l));
        for (std::size_t i = 0; i < n; ++i) {
            v.set(i, base.get(i));
            v.set(n + l + i, base.get(n + i));
        }
        if (attach) {
            for (std::size_t i = 0; i < l; ++i) {
                v.set(n + i, attach->get(i));
                v.set(n + l + n + i, attach->get(l + i));
            }
        }
        m.rows.push_back(std::move(v));
    };
    for (std::size_t r = 0; r < comp.rows.size(); ++r)
        emit(comp.rows[r], &aux.preimage.generators.rows[r]);
    for (const auto& row : c2.preimage.generators.rows) emit(row, nullptr);
    return span_subcode(m, int(n + l));
}

AdditiveCode juxtapose(const AdditiveCode& c1, const AdditiveCode& c2) {
    if (c1.k2() == 0) return c2;
    if (c2.k2() == 0 && c2.n == 0) return c1;
    if (c1.k2() != c2.k2())
        fail("shape-error", "juxtaposition needs matching dimensions, " +
                                std::to_string(c1.k2()) + " vs " + std::to_string(c2.k2()));
    const std::size_t n1 = std::size_t(c1.n), n2 = std::size_t(c2.n);
    BinaryMatrix m(2 * (n1 + n2));
    for (std::size_t r = 0; r < c1.k2(); ++r) {
        const auto& a = c1.preimage.generators.rows[r];
        const auto& b = c2.preimage.generators.rows[r];
        BitVec v(2 * (n1 + n2));
        for (std::size_t i = 0; i < n1; ++i) {
            v.set(i, a.get(i));
            v.set(n1 + n2 + i, a.get(n1 + i));
        }
        for (std::size_t i = 0; i < n2; ++i) {
            v.set(n1 + i, b.get(i));
            v.set(n1 + n2 + n1 + i, b.get(n2 + i));
        }
        m.rows.push_back(std::move(v));
    }
    return span_subcode(m, int(n1 + n2));
}

DistanceReport additive_distance(const AdditiveCode& c, const DistanceOptions& opts) {
    return min_distance(c.preimage, WeightMode::symplectic, opts);
}

}  // namespace qcadd
