#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wh/errors.hpp"

namespace wh {

class Rng;

// Fixed-length binary genome. Bit i lives in word i/64 at position i%64
// (variable 0 is the least significant bit of word 0). Bits past the
// length are kept zero so word-wise equality and Hamming distance hold.
class BitString {
public:
    static constexpr std::size_t kMaxBits = 256;
    static constexpr std::size_t kWordCount = kMaxBits / 64;

    BitString() = default;

    explicit BitString(std::size_t n) : n_(check_len(n)) {}

    // n <= 64; bit j of mask becomes variable j.
    static BitString from_mask(std::size_t n, std::uint64_t mask) {
        if (n > 64) throw CapacityError("from_mask supports n <= 64");
        BitString x(n);
        x.w_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
        return x;
    }

    // Character c of s is variable c; symbols are '0' or '1'.
    static BitString from_string(std::string_view s) {
        BitString x(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                x.set(i, true);
            else if (s[i] != '0')
                throw ParseError("bit string symbol must be 0 or 1");
        }
        return x;
    }

    static BitString zeros(std::size_t n) { return BitString(n); }

    static BitString ones(std::size_t n) {
        BitString x(n);
        for (std::size_t w = 0; w * 64 < n; ++w) {
            std::size_t bits = std::min<std::size_t>(64, n - w * 64);
            x.w_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
        }
        return x;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t ones_count() const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_used(); ++w) c += std::popcount(w_[w]);
        return c;
    }

    // Popcount over the half-open index range [lo, hi).
    std::size_t ones_in_range(std::size_t lo, std::size_t hi) const {
        std::size_t c = 0;
        std::size_t w0 = lo >> 6, w1 = (hi - 1) >> 6;
        if (lo >= hi) return 0;
        for (std::size_t w = w0; w <= w1; ++w) {
            std::uint64_t word = w_[w];
            if (w == w0 && (lo & 63)) word &= ~std::uint64_t{0} << (lo & 63);
            if (w == w1 && (hi & 63)) word &= (std::uint64_t{1} << (hi & 63)) - 1;
            c += std::popcount(word);
        }
        return c;
    }

    std::size_t hamming(const BitString& o) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_used(); ++w) c += std::popcount(w_[w] ^ o.w_[w]);
        return c;
    }

    // Packs the bits at the given indices into an integer key, index t
    // contributing bit t.
    std::uint64_t extract(const std::vector<int>& idx) const {
        std::uint64_t key = 0;
        for (std::size_t t = 0; t < idx.size(); ++t)
            key |= static_cast<std::uint64_t>(get(static_cast<std::size_t>(idx[t]))) << t;
        return key;
    }

    std::size_t words_used() const { return (n_ + 63) / 64; }
    std::uint64_t word(std::size_t w) const { return w_[w]; }

    void set_word(std::size_t w, std::uint64_t v) {
        w_[w] = v;
        mask_tail();
    }

    void fill_random(Rng& rng);

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitString&) const = default;

private:
    static std::uint16_t check_len(std::size_t n) {
        if (n == 0) throw ArgumentError("bit string length must be positive");
        if (n > kMaxBits) throw CapacityError("bit string length exceeds 256");
        return static_cast<std::uint16_t>(n);
    }

    void mask_tail() {
        if (n_ & 63) w_[(n_ - 1) >> 6] &= (std::uint64_t{1} << (n_ & 63)) - 1;
        for (std::size_t w = words_used(); w < kWordCount; ++w) w_[w] = 0;
    }

    std::uint16_t n_ = 0;
    std::array<std::uint64_t, kWordCount> w_{};
};

}  // namespace wh

template <>
struct std::hash<wh::BitString> {
    std::size_t operator()(const wh::BitString& x) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ x.size();
        for (std::size_t w = 0; w < x.words_used(); ++w) {
            h ^= x.word(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};
