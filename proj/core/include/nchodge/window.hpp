#pragma once

// Finite windows of the Hochschild complex. The boundary b never increases
// the bracket length, so the words with at most L bracket letters form an
// honest subcomplex and each window homology is an exact computation.
// Stability of a degree is witnessed by comparing against the L+1 window:
// equal dimensions and a full-rank inclusion-induced map.

#include "nchodge/category.hpp"
#include "nchodge/hochschild.hpp"

#include <vector>

namespace nchodge {

struct WindowBasis {
    std::vector<Word> words;
    std::map<Word, int, WordLess> index;
    int dim() const { return (int)words.size(); }
};

// All (normalized, when the category has strict units) cyclic words with
// bracket length <= L and total degree d.
WindowBasis window_basis(const AInfCategory& C, int L, int d);

// The boundary matrix from one window basis into another (degree d -> d+1).
SparseMatrix window_b_matrix(const AInfCategory& C, const WindowBasis& from,
                             const WindowBasis& to);

struct HHRow {
    int degree = 0;
    int dim = 0;       // dim H_d at window L
    int dim_next = 0;  // dim H_d at window L+1
    int incl_rank = 0; // rank of H_d(L) -> H_d(L+1)
    bool stable = false;
};

struct HHWindowReport {
    int L = 0;
    std::vector<HHRow> rows;
};

// Window homology with representatives, for reuse by the cyclic side.
struct HHAtDegree {
    WindowBasis basis;
    int dim = 0;
    std::vector<SpVec> reps;
};
HHAtDegree hh_at_degree(const AInfCategory& C, int d, int L);

HHWindowReport hh_window(const AInfCategory& C, int dmin, int dmax, int L);

int hh_window_dim(const AInfCategory& C, int d, int L);

// Materializes a coordinate vector over a window basis as a chain.
Chain combo_to_chain(const WindowBasis& wb, const SpVec& combo, FieldTag tag);

} // namespace nchodge
