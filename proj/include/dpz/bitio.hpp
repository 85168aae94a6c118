#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace dpz {

// Bit-packed I/O. Bits fill each byte LSB-first; multi-bit fields and the
// fixed-width integer helpers are little-endian. Encoder and decoder must
// agree on this layout bit for bit.
class BitWriter {
public:
  void put_bit(int b) {
    if (nbits_ % 8 == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= static_cast<std::uint8_t>(1u << (nbits_ % 8));
    ++nbits_;
  }
  void put_bits(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) put_bit(static_cast<int>((v >> i) & 1u));
  }
  void put_u8(std::uint8_t v) { put_bits(v, 8); }
  void put_u16(std::uint16_t v) { put_bits(v, 16); }
  void put_u32(std::uint32_t v) { put_bits(v, 32); }
  void put_u64(std::uint64_t v) { put_bits(v, 64); }
  void put_f32(float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(bits);
  }
  void put_f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(bits);
  }
  void append(const std::vector<std::uint8_t>& raw, std::size_t bit_count) {
    for (std::size_t i = 0; i < bit_count; ++i)
      put_bit((raw[i / 8] >> (i % 8)) & 1);
  }
  void align_byte() {
    while (nbits_ % 8 != 0) put_bit(0);
  }

  std::size_t bit_count() const { return nbits_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

class BitReader {
public:
  BitReader(const std::uint8_t* data, std::size_t bit_count)
      : data_(data), nbits_(bit_count) {}
  explicit BitReader(const std::vector<std::uint8_t>& bytes)
      : data_(bytes.data()), nbits_(bytes.size() * 8) {}

  bool exhausted() const { return pos_ >= nbits_; }
  std::size_t bits_left() const { return nbits_ - pos_; }
  std::size_t position() const { return pos_; }

  int get_bit() {
    if (pos_ >= nbits_) throw std::runtime_error("bitstream: read past end");
    const int b = (data_[pos_ / 8] >> (pos_ % 8)) & 1;
    ++pos_;
    return b;
  }
  std::uint64_t get_bits(int n) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i)
      v |= static_cast<std::uint64_t>(get_bit()) << i;
    return v;
  }
  std::uint8_t get_u8() { return static_cast<std::uint8_t>(get_bits(8)); }
  std::uint16_t get_u16() { return static_cast<std::uint16_t>(get_bits(16)); }
  std::uint32_t get_u32() { return static_cast<std::uint32_t>(get_bits(32)); }
  std::uint64_t get_u64() { return get_bits(64); }
  float get_f32() {
    const std::uint32_t bits = get_u32();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  double get_f64() {
    const std::uint64_t bits = get_u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  void align_byte() {
    while (pos_ % 8 != 0) get_bit();
  }

private:
  const std::uint8_t* data_;
  std::size_t nbits_;
  std::size_t pos_ = 0;
};

}  // namespace dpz
