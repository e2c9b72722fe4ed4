// Exact sparse linear algebra over the scalar fields: echelon forms, ranks,
// kernels, homology of two composable maps, and supertraces of graded
// endomorphisms. Pivoting always picks the first nonzero entry in label
// order, which keeps results deterministic across platforms.
#pragma once

#include "nchodge/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nchodge {

// Sparse vector: index -> coefficient. Invariant: no explicit zeros.
using SpVec = std::map<int, Scalar>;

void axpy(SpVec& y, const Scalar& a, const SpVec& x); // y += a*x
SpVec spvec_scaled(const SpVec& x, const Scalar& a);

// Incremental echelon basis of a span. Each stored vector is normalized to
// pivot coefficient 1; pivots (minimal nonzero index) are pairwise distinct.
class Echelon {
public:
  int rank() const { return static_cast<int>(rows_.size()); }

  // Eliminates all pivot positions of the basis from v; if combo is given,
  // the same column operations are applied to it. Returns true when v
  // vanishes, i.e. the input lay in the span.
  bool reduce(SpVec& v, SpVec* combo = nullptr) const;

  // Reduces and, when the residue is nonzero, inserts it. Returns the new
  // pivot index, or -1 when the vector was already in the span.
  int insert(SpVec v, SpVec combo = SpVec{});

  const std::map<int, SpVec>& rows() const { return rows_; }
  const SpVec& combo_for(int pivot) const { return combos_.at(pivot); }

private:
  std::map<int, SpVec> rows_;
  std::map<int, SpVec> combos_;
};

struct SparseMatrix {
  FieldTag tag;
  int nrows = 0;
  std::vector<SpVec> cols;

  int ncols() const { return static_cast<int>(cols.size()); }
  SpVec apply(const SpVec& x) const; // matrix * coordinate vector
};

int sparse_rank(const SparseMatrix& m);
// Kernel vectors in column coordinates, echelonized over column indices.
std::vector<SpVec> sparse_kernel(const SparseMatrix& m);

struct HomologySummary {
  int dim = 0;
  std::vector<SpVec> reps; // representatives in the middle space's coordinates
};

// Homology at the middle of  into : U -> V,  outof : V -> W. Verifies
// outof(into(e)) = 0 for every generator unless told not to.
HomologySummary homology_core(const SparseMatrix& into, const SparseMatrix& outof,
                              bool check_composite = true);

// dim ker(outof) - rank(into), computed from ranks alone (no kernel basis,
// so no quadratic combo growth on large windows).
int homology_dim_ranks(const SparseMatrix& into, const SparseMatrix& outof);

// Rank of the map induced on homology by a chain map f : V -> V', where
// outof is the differential leaving V and into_prime the one entering V'.
// Uses dim f(Z) + B' = rank [[f, into'], [outof, 0]] - rank outof, hence
//   rank H(f) = rank [[f, into'], [outof, 0]] - rank outof - rank into'.
int induced_homology_rank(const SparseMatrix& f, const SparseMatrix& outof,
                          const SparseMatrix& into_prime);

// A finite graded vector space with string labels. Labels must be unique.
struct GradedSpace {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::map<std::string, int> index;

  int add(const std::string& label, int degree);
  int dim() const { return static_cast<int>(labels.size()); }
  int find(const std::string& label) const; // -1 when absent
};

// A degree-homogeneous linear map between graded spaces.
struct SparseMap {
  FieldTag tag;
  GradedSpace dom;
  GradedSpace cod;
  int degree = 0;
  std::map<std::pair<int, int>, Scalar> entries; // (cod index, dom index)

  void add_entry(const std::string& to, const std::string& from, const Scalar& coeff);
  SparseMatrix matrix() const;
  SpVec apply(const SpVec& x) const;
  // Throws when some entry violates deg(cod) = deg(dom) + degree.
  void check_degrees() const;
};

int rank(const SparseMap& f);
std::vector<SpVec> kernel_basis(const SparseMap& f);
// Homology of ... -> dom(into) -> V -> cod(outof) -> ... at V; checks that
// the composite vanishes and that the middle spaces agree.
HomologySummary homology_at(const SparseMap& into, const SparseMap& outof);
// Sum of (-1)^{deg} diagonal entries; requires equal dom/cod and shift 0.
Scalar supertrace(const SparseMap& endo);

} // namespace nchodge
