#include "pursuit/vertex_set.hpp"

#include "pursuit/errors.hpp"

namespace pursuit {

VertexSet::VertexSet(std::size_t universe, bool full)
    : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  trim();
}

void VertexSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::from_mask64(std::size_t universe, std::uint64_t mask) {
  VertexSet out(universe);
  if (!out.words_.empty()) out.words_[0] = mask;
  out.trim();
  return out;
}

std::string VertexSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (universe_ + 7) / 8;
  std::string out;
  out.reserve(bytes * 2);
  for (std::size_t i = 0; i < bytes; ++i) {
    const auto byte = static_cast<unsigned>((words_[i / 8] >> ((i % 8) * 8)) & 0xffu);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xf]);
  }
  return out;
}

VertexSet VertexSet::from_hex(std::string_view hex, std::size_t universe) {
  const std::size_t bytes = (universe + 7) / 8;
  if (hex.size() != bytes * 2) {
    throw ArgumentError("hex bitset has " + std::to_string(hex.size()) + " digits, expected " +
                        std::to_string(bytes * 2));
  }
  auto nibble = [](char c) -> std::uint64_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint64_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint64_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint64_t>(c - 'A' + 10);
    throw ArgumentError(std::string("invalid hex digit '") + c + "'");
  };
  VertexSet out(universe);
  for (std::size_t i = 0; i < bytes; ++i) {
    const std::uint64_t byte = (nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]);
    out.words_[i / 8] |= byte << ((i % 8) * 8);
  }
  const auto before = out.words_;
  out.trim();
  if (before != out.words_) throw ArgumentError("hex bitset sets bits beyond the universe");
  return out;
}

}  // namespace pursuit
