#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jcxy {

/// Largest supported number of spin sites (matrix dimension 2^15).
inline constexpr int kMaxSites = 14;

/// Exact half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  /// "3", "-7/2", ...
  std::string to_string() const;
  /// Accepts "3", "-7/2", "3.5".
  static HalfInt parse(const std::string& text);

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

enum class Spin : std::uint8_t { Down = 0, Up = 1 };

/// Configuration of the photon pseudo-spin (bit 0) and N spin sites (bits 1..N).
/// Bit 0 set means one photon; bit i set means site i is up.
class BasisState {
 public:
  BasisState(std::uint32_t code, int n_sites);

  std::uint32_t code() const { return code_; }
  int n_sites() const { return n_sites_; }
  int photon() const { return static_cast<int>(code_ & 1u); }
  Spin spin(int site) const;

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::uint32_t code_;
  int n_sites_;
};

struct QuantumNumbers {
  HalfInt m_z;       ///< spin-only magnetization
  HalfInt total_mz;  ///< magnetization of the mapped (N+1)-site chain
  int n_ph = 0;
  HalfInt inv;       ///< n_ph + m_z
};

/// Throws std::invalid_argument unless 1 <= n_sites <= kMaxSites.
void validate_n_sites(int n_sites);

inline std::uint32_t basis_dimension(int n_sites) { return 1u << (n_sites + 1); }

BasisState encode(int photon_occ, std::span<const Spin> spins);

struct DecodedState {
  int photon_occ;
  std::vector<Spin> spins;
};
DecodedState decode(const BasisState& state);

QuantumNumbers quantum_numbers(const BasisState& state);

/// 2·total_mz straight from a code; the hot-path form of quantum_numbers().
inline int twice_total_mz(std::uint32_t code, int n_sites) {
  return 2 * __builtin_popcount(code) - (n_sites + 1);
}

}  // namespace jcxy
