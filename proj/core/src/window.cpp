#include "nchodge/window.hpp"

#include <stdexcept>

namespace nchodge {

WindowBasis window_basis(const AInfCategory& C, int L, int d) {
    WindowBasis wb;
    bool nu = C.has_strict_units();
    int dn = C.grading.normalize(d);
    for (int s = 0; s <= L; ++s) {
        for (const Word& w : composable_words(C, s + 1, true)) {
            if (nu && word_degenerate(C, w)) continue;
            if (word_degree(C, w) != dn) continue;
            wb.index.emplace(w, (int)wb.words.size());
            wb.words.push_back(w);
        }
    }
    return wb;
}

SparseMatrix window_b_matrix(const AInfCategory& C, const WindowBasis& from,
                             const WindowBasis& to) {
    bool nu = C.has_strict_units();
    SparseMatrix m;
    m.tag = C.field;
    m.nrows = to.dim();
    m.cols.resize(from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        Chain x = Chain::zero(C.field);
        x.add(from.words[j], Scalar::one(C.field));
        Chain bx = nu ? b_nu(C, x) : hochschild_b(C, x);
        for (const auto& [w, c] : bx.terms) {
            auto it = to.index.find(w);
            if (it == to.index.end())
                throw std::runtime_error("window_b_matrix: boundary left the window");
            m.cols[j].emplace(it->second, c);
        }
    }
    return m;
}

HHAtDegree hh_at_degree(const AInfCategory& C, int d, int L) {
    WindowBasis below = window_basis(C, L, d - 1);
    WindowBasis here = window_basis(C, L, d);
    WindowBasis above = window_basis(C, L, d + 1);
    SparseMatrix into = window_b_matrix(C, below, here);
    SparseMatrix outof = window_b_matrix(C, here, above);
    HomologySummary h = homology_core(into, outof);
    HHAtDegree r;
    r.basis = std::move(here);
    r.dim = h.dim;
    r.reps = std::move(h.reps);
    return r;
}

namespace {

// Coordinate matrix of the word-basis inclusion between nested windows.
SparseMatrix inclusion_matrix(const AInfCategory& C, const WindowBasis& small,
                              const WindowBasis& big) {
    SparseMatrix m;
    m.tag = C.field;
    m.nrows = big.dim();
    m.cols.resize(small.dim());
    for (int j = 0; j < small.dim(); ++j) {
        auto it = big.index.find(small.words[j]);
        if (it == big.index.end())
            throw std::runtime_error("inclusion_matrix: window bases not nested");
        m.cols[j].emplace(it->second, Scalar::one(C.field));
    }
    return m;
}

} // namespace

HHWindowReport hh_window(const AInfCategory& C, int dmin, int dmax, int L) {
    HHWindowReport rep;
    rep.L = L;
    for (int d = dmin; d <= dmax; ++d) {
        WindowBasis below = window_basis(C, L, d - 1);
        WindowBasis here = window_basis(C, L, d);
        WindowBasis above = window_basis(C, L, d + 1);
        SparseMatrix into = window_b_matrix(C, below, here);
        SparseMatrix outof = window_b_matrix(C, here, above);

        WindowBasis below1 = window_basis(C, L + 1, d - 1);
        WindowBasis here1 = window_basis(C, L + 1, d);
        WindowBasis above1 = window_basis(C, L + 1, d + 1);
        SparseMatrix into1 = window_b_matrix(C, below1, here1);
        SparseMatrix outof1 = window_b_matrix(C, here1, above1);

        HHRow row;
        row.degree = d;
        row.dim = homology_dim_ranks(into, outof);
        row.dim_next = homology_dim_ranks(into1, outof1);
        SparseMatrix incl = inclusion_matrix(C, here, here1);
        row.incl_rank = induced_homology_rank(incl, outof, into1);
        row.stable = (row.dim == row.dim_next) && (row.incl_rank == row.dim);
        rep.rows.push_back(row);
    }
    return rep;
}

int hh_window_dim(const AInfCategory& C, int d, int L) {
    WindowBasis below = window_basis(C, L, d - 1);
    WindowBasis here = window_basis(C, L, d);
    WindowBasis above = window_basis(C, L, d + 1);
    return homology_dim_ranks(window_b_matrix(C, below, here),
                              window_b_matrix(C, here, above));
}

Chain combo_to_chain(const WindowBasis& wb, const SpVec& combo, FieldTag tag) {
    Chain out = Chain::zero(tag);
    for (const auto& [idx, c] : combo) {
        if (idx < 0 || idx >= (int)wb.words.size())
            throw std::runtime_error("combo_to_chain: index out of range");
        out.add(wb.words[idx], c);
    }
    return out;
}

} // namespace nchodge
