// Grading groups for morphism degrees: Z, or Z/2m for even-periodic setups.
// Only even periods keep the Koszul sign rule well defined, because signs
// depend on degrees mod 2.
#pragma once

#include <stdexcept>
#include <string>

namespace nchodge {

struct Grading {
  bool cyclic = false;
  int period = 0; // 2m when cyclic

  static Grading integers() { return {false, 0}; }
  static Grading mod(int period) {
    if (period <= 0 || period % 2 != 0)
      throw std::invalid_argument("cyclic grading period must be positive and even");
    return {true, period};
  }

  int normalize(int d) const {
    if (!cyclic) return d;
    int r = d % period;
    if (r < 0) r += period;
    return r;
  }

  bool equal(int a, int b) const { return normalize(a) == normalize(b); }

  // Degree parity is well defined for Z and for Z/2m.
  int parity(int d) const {
    int r = d % 2;
    return r < 0 ? r + 2 : r;
  }

  std::string str() const {
    return cyclic ? "Z/" + std::to_string(period) : "Z";
  }

  bool operator==(const Grading&) const = default;
};

// Reduced parity: the parity of deg(a) - 1, the degree of a in the
// bar-shifted sense. Sign rules below are phrased in terms of it.
inline int reduced_parity(const Grading& g, int deg) { return g.parity(deg + 1); }

} // namespace nchodge
