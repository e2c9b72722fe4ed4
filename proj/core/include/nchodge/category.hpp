// Finite-dimensional graded A-infinity categories with exact structure
// constants. Conventions used throughout:
//
//   * words (a_1,...,a_s) compose left to right: dst(a_i) = src(a_{i+1});
//     mu^s lands in hom(src(a_1), dst(a_s));
//   * each mu^s is homogeneous of reduced degree +1, i.e.
//     deg mu(a_1..a_s) = deg a_1 + ... + deg a_s + 2 - s;
//   * the sign rules are phrased via reduced parities rp(a) = parity(deg a + 1),
//     with eps_j = rp(a_1) + ... + rp(a_j) for a prefix of a word.
//
// The quadratic relations are checked through the Gerstenhaber square
// (mu o mu)(a_1..a_n) = sum_{j<k} (-1)^{eps_j} mu(a_1..a_j, mu(a_{j+1}..a_k), a_{k+1}..a_n).
#pragma once

#include "nchodge/grading.hpp"
#include "nchodge/linalg.hpp"
#include "nchodge/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nchodge {

using Word = std::vector<int>; // basis ids

// Deterministic word order: by length, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct MorBasis {
  std::string name;
  int src = 0;
  int dst = 0;
  int deg = 0;
};

// A strict unit written as a multiple of a single basis letter. Keeping the
// unit on one letter makes "unit in a bracket slot" a basis property, which
// the normalized cyclic complex needs.
struct StrictUnit {
  int id = -1;
  Scalar coeff;
  // Units created by unitalize() are "adjoined": the bare length-zero unit
  // word is degenerate for them, while a native strict unit keeps it (the
  // classical normalized complex, where e_X represents the Chern class).
  bool adjoined = false;
};

struct AInfCategory {
  std::string name;
  Grading grading = Grading::integers();
  FieldTag field = field_q();
  std::vector<std::string> objects;
  std::vector<MorBasis> basis;
  std::map<std::string, int> basis_index;
  std::map<std::pair<int, int>, std::vector<int>> hom_basis; // (src,dst) -> ids
  int s_max = 0;
  // mu[s] maps an s-letter composable word to its value; absent entries are 0.
  std::vector<std::map<Word, SpVec, WordLess>> mu;
  // Cohomological units (arbitrary combinations), for Chern characters.
  std::map<int, SpVec> unit;
  // Designated strict units, for the normalized cyclic machinery.
  std::map<int, StrictUnit> strict_unit;
  bool family = false; // structure constants live in Q(t)
  std::optional<int> cy_dim;

  int add_object(const std::string& label);
  int add_basis(const std::string& name, int src, int dst, int deg);
  // Accumulates coeff * out into mu^{|inputs|}(inputs).
  void add_mu(const Word& inputs, int out, const Scalar& coeff);
  void add_mu_by_name(const std::vector<std::string>& inputs, const std::string& out,
                      const Scalar& coeff);

  int deg(int id) const { return basis[id].deg; }
  int rp(int id) const { return reduced_parity(grading, basis[id].deg); }
  int src(int id) const { return basis[id].src; }
  int dst(int id) const { return basis[id].dst; }
  int id_of(const std::string& name) const;
  const std::vector<int>& hom(int src, int dst) const;

  const SpVec* mu_entry(const Word& inputs) const;
  bool word_composable(const Word& w) const;   // linear composability
  bool cyclic_composable(const Word& w) const; // last letter feeds the first
  // Total degree of a linear word under mu-composition bookkeeping is not
  // needed; chains use their own grading (see hochschild.hpp).

  bool has_strict_units() const;
  const StrictUnit& strict_unit_for(int object) const;
  bool is_unit_letter(int id) const;
};

// A slot of a multilinear evaluation: either a basis letter or a vector.
struct Slot {
  int id = -1;
  const SpVec* vec = nullptr;
  Slot(int i) : id(i) {}
  Slot(const SpVec* v) : vec(v) {}
};

// Evaluates mu on a pure word (table lookup; 0 when absent or arity unknown).
SpVec eval_mu(const AInfCategory& cat, const Word& w);
// Multilinear evaluation with vector-valued slots expanded distributively.
SpVec eval_mu_mixed(const AInfCategory& cat, const std::vector<Slot>& slots);

// Lists all composable linear words of the given length, in lexicographic
// order; with cyclic=true restricts to cyclically composable ones.
std::vector<Word> composable_words(const AInfCategory& cat, int length, bool cyclic);

struct AinfCheck {
  enum class Kind { Ok, BadEntry, BadDegree, BadRelation, BadUnit };
  Kind kind = Kind::Ok;
  bool ok = true;
  Word witness;        // offending table entry or relation word
  SpVec defect;        // nonzero value of the Gerstenhaber square, if any
  std::string message; // human-readable summary

  static AinfCheck pass() { return {}; }
  static AinfCheck fail(Kind k, Word w, SpVec d, std::string msg);
};

// Validates table well-formedness (composability, degree homogeneity) and
// the quadratic relations on all composable words of length <= cap.
AinfCheck check_ainf(const AInfCategory& cat, int cap);

// Checks the designated strict units: mu^1(e)=0, mu^2(e,a)=a,
// mu^2(a,e)=(-1)^{|a|}a, and no other table entry involves a unit letter.
AinfCheck check_strict_units(const AInfCategory& cat);

// A dg category presented by generators: a differential and a binary
// product in diagrammatic order (inputs (f,g) with dst f = src g).
struct DgCategory {
  std::string name;
  Grading grading = Grading::integers();
  FieldTag field = field_q();
  std::vector<std::string> objects;
  std::vector<MorBasis> basis;
  std::map<int, SpVec> d;                        // differential, degree +1
  std::map<std::pair<int, int>, SpVec> product;  // (f,g) -> f then g
  std::map<int, SpVec> unit;                     // object -> identity combination

  int add_object(const std::string& label);
  int add_basis(const std::string& name, int src, int dst, int deg);
  void set_d(const std::string& from, const std::string& to, const Scalar& coeff);
  void set_product(const std::string& f, const std::string& g, const std::string& out,
                   const Scalar& coeff);
};

// Imports a dg category: mu^1 = d, mu^2(f,g) = (-1)^{|f|} f g, mu^{>=3} = 0.
// Validates d^2 = 0, the graded Leibniz rule, associativity, and units.
AInfCategory from_dg(const DgCategory& dg);

// The opposite category: src/dst swapped, tensor inputs reversed, with the
// sign (-1)^{sum_{i<j} rp(a_i) rp(a_j)}. A strict unit e of C designates
// -e as the strict unit of op(C).
AInfCategory opposite(const AInfCategory& cat);

// Adjoins strict units e+ (one per object): mu^2(e+,a) = a,
// mu^2(a,e+) = (-1)^{|a|}a, every other tensor involving e+ vanishes.
AInfCategory unitalize(const AInfCategory& cat);

} // namespace nchodge
