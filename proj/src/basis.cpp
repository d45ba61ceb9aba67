#include "jcxy/basis.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace jcxy {

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("not a half-integer: '" + text + "'"); };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    if (text.substr(slash + 1) != "2") fail();
    int num = 0;
    const char* first = text.data();
    const char* last = text.data() + slash;
    auto [ptr, ec] = std::from_chars(first, last, num);
    if (ec != std::errc{} || ptr != last || num % 2 == 0) fail();
    return from_twice(num);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) fail();
  const double twice = 2.0 * v;
  if (std::nearbyint(twice) != twice || std::abs(twice) > 1e6) fail();
  return from_twice(static_cast<int>(twice));
}

void validate_n_sites(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw std::invalid_argument("number of sites must be in [1, " + std::to_string(kMaxSites) +
                                "], got " + std::to_string(n_sites));
  }
}

BasisState::BasisState(std::uint32_t code, int n_sites) : code_(code), n_sites_(n_sites) {
  validate_n_sites(n_sites);
  if (code >= basis_dimension(n_sites)) {
    throw std::invalid_argument("basis code " + std::to_string(code) + " out of range for N=" +
                                std::to_string(n_sites));
  }
}

Spin BasisState::spin(int site) const {
  if (site < 1 || site > n_sites_) throw std::out_of_range("spin site out of range");
  return (code_ >> site) & 1u ? Spin::Up : Spin::Down;
}

BasisState encode(int photon_occ, std::span<const Spin> spins) {
  if (photon_occ != 0 && photon_occ != 1) {
    throw std::invalid_argument("photon occupation must be 0 or 1");
  }
  const int n = static_cast<int>(spins.size());
  validate_n_sites(n);
  std::uint32_t code = static_cast<std::uint32_t>(photon_occ);
  for (int i = 0; i < n; ++i) {
    if (spins[i] == Spin::Up) code |= 1u << (i + 1);
  }
  return BasisState(code, n);
}

DecodedState decode(const BasisState& state) {
  DecodedState out{state.photon(), {}};
  out.spins.reserve(state.n_sites());
  for (int i = 1; i <= state.n_sites(); ++i) out.spins.push_back(state.spin(i));
  return out;
}

QuantumNumbers quantum_numbers(const BasisState& state) {
  const int n = state.n_sites();
  const std::uint32_t spin_bits = state.code() >> 1;
  const int ups = __builtin_popcount(spin_bits);
  QuantumNumbers q;
  q.n_ph = state.photon();
  q.m_z = HalfInt::from_twice(2 * ups - n);
  q.total_mz = HalfInt::from_twice(twice_total_mz(state.code(), n));
  q.inv = HalfInt::from_int(q.n_ph) + q.m_z;
  return q;
}

}  // namespace jcxy
