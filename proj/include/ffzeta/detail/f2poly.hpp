#pragma once

#include <cstdint>
#include <vector>

namespace ffzeta::detail {

// Dense polynomial over F_2, one coefficient per bit, used by the power-sum
// inner loops. Degree is recomputed on demand; vectors never shrink so the
// buffers can be recycled across elements.
struct F2Poly {
  std::vector<uint64_t> w;

  void clear() { w.clear(); }

  bool is_zero() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }

  int degree() const {
    for (size_t k = w.size(); k-- > 0;)
      if (w[k]) return int(k * 64 + 63 - __builtin_clzll(w[k]));
    return -1;
  }

  bool bit(size_t i) const {
    size_t k = i >> 6;
    return k < w.size() && ((w[k] >> (i & 63)) & 1);
  }

  void set_bit(size_t i) {
    size_t k = i >> 6;
    if (k >= w.size()) w.resize(k + 1, 0);
    w[k] ^= uint64_t(1) << (i & 63);
  }

  void add_assign(const F2Poly& o) {
    if (o.w.size() > w.size()) w.resize(o.w.size(), 0);
    for (size_t k = 0; k < o.w.size(); ++k) w[k] ^= o.w[k];
  }

  // this ^= src << shift
  void xor_shifted(const F2Poly& src, size_t shift) {
    int sd = src.degree();
    if (sd < 0) return;
    size_t need = (size_t(sd) + shift) / 64 + 1;
    if (w.size() < need) w.resize(need, 0);
    size_t word = shift >> 6, off = shift & 63;
    size_t n = size_t(sd) / 64 + 1;
    if (off == 0) {
      for (size_t k = 0; k < n; ++k) w[word + k] ^= src.w[k];
    } else {
      uint64_t carry = 0;
      for (size_t k = 0; k < n; ++k) {
        uint64_t x = src.w[k];
        w[word + k] ^= (x << off) | carry;
        carry = x >> (64 - off);
      }
      if (carry) w[word + n] ^= carry;
    }
  }

  int popcount() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }

  // dst ^= a * b (comb over the sparser operand)
  static void mul_acc(F2Poly& dst, const F2Poly& a, const F2Poly& b) {
    const F2Poly* comb = &a;
    const F2Poly* dense = &b;
    if (a.popcount() > b.popcount()) std::swap(comb, dense);
    for (size_t k = 0; k < comb->w.size(); ++k) {
      uint64_t x = comb->w[k];
      while (x) {
        int bit = __builtin_ctzll(x);
        x &= x - 1;
        dst.xor_shifted(*dense, k * 64 + size_t(bit));
      }
    }
  }

  static F2Poly mul(const F2Poly& a, const F2Poly& b) {
    F2Poly r;
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return r;
    r.w.assign(size_t(da + db) / 64 + 1, 0);
    mul_acc(r, a, b);
    return r;
  }

  // square: interleave each word's bits with zeros
  F2Poly square() const {
    F2Poly r;
    int d = degree();
    if (d < 0) return r;
    r.w.assign(size_t(2 * d) / 64 + 1, 0);
    for (size_t k = 0; k < w.size(); ++k) {
      uint64_t x = w[k];
      if (!x) continue;
      r.w[2 * k] ^= spread32(uint32_t(x));
      if (2 * k + 1 < r.w.size()) r.w[2 * k + 1] ^= spread32(uint32_t(x >> 32));
    }
    return r;
  }

  friend bool operator==(const F2Poly& a, const F2Poly& b) {
    size_t n = std::max(a.w.size(), b.w.size());
    for (size_t k = 0; k < n; ++k) {
      uint64_t x = k < a.w.size() ? a.w[k] : 0;
      uint64_t y = k < b.w.size() ? b.w[k] : 0;
      if (x != y) return false;
    }
    return true;
  }

private:
  static uint64_t spread32(uint32_t v) {
    uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
  }
};

} // namespace ffzeta::detail
