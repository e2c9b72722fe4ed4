#include "nchodge/cyclic.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nchodge {

NegCyclicChain NegCyclicChain::zero(FieldTag tag, int order) {
    NegCyclicChain x;
    x.tag = tag;
    x.order = order;
    x.part.assign(order + 1, Chain::zero(tag));
    return x;
}

void NegCyclicChain::add(int k, const Word& w, const Scalar& c) {
    if (k < 0 || k > order) throw std::runtime_error("NegCyclicChain::add: u-power out of range");
    part[k].add(w, c);
}

NegCyclicChain NegCyclicChain::operator+(const NegCyclicChain& o) const {
    if (order != o.order) throw std::runtime_error("NegCyclicChain: order mismatch");
    NegCyclicChain r = *this;
    for (int k = 0; k <= order; ++k) r.part[k] = r.part[k] + o.part[k];
    return r;
}

NegCyclicChain NegCyclicChain::operator-(const NegCyclicChain& o) const {
    return *this + o.scaled(Scalar::integer(tag, -1));
}

NegCyclicChain NegCyclicChain::scaled(const Scalar& c) const {
    NegCyclicChain r = *this;
    for (int k = 0; k <= order; ++k) r.part[k] = r.part[k].scaled(c);
    return r;
}

NegCyclicChain NegCyclicChain::shifted(int k) const {
    NegCyclicChain r = NegCyclicChain::zero(tag, order);
    for (int j = 0; j + k <= order; ++j) r.part[j + k] = part[j];
    return r;
}

bool NegCyclicChain::is_zero() const {
    for (const auto& p : part)
        if (!p.is_zero()) return false;
    return true;
}

bool NegCyclicChain::operator==(const NegCyclicChain& o) const {
    return (*this - o).is_zero();
}

std::string NegCyclicChain::str(const AInfCategory& C) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order; ++k) {
        if (part[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k > 0) os << "u^" << k << "*";
        os << "(" << part[k].str(C) << ")";
    }
    if (first) os << "0";
    return os.str();
}

ChainInfo check_cyclic_chain(const AInfCategory& C, const NegCyclicChain& xi) {
    ChainInfo info;
    bool have = false;
    for (int k = 0; k <= xi.order; ++k) {
        for (const auto& [w, c] : xi.part[k].terms) {
            (void)c;
            if (!C.cyclic_composable(w))
                throw std::runtime_error("check_cyclic_chain: word not cyclically composable");
            int d = C.grading.normalize(word_degree(C, w) + 2 * k);
            if (!have) {
                info.degree = d;
                have = true;
            } else if (d != info.degree) {
                info.homogeneous = false;
            }
        }
    }
    return info;
}

Chain connes_B(const AInfCategory& C, const Chain& a) {
    Chain out = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            const StrictUnit& su = C.strict_unit_for(C.src(wr[0]));
            Word nw;
            nw.reserve(w.size() + 1);
            nw.push_back(su.id);
            nw.insert(nw.end(), wr.begin(), wr.end());
            if (word_degenerate(C, nw)) continue;
            out.add(nw, tpar ? lam * minus1 * su.coeff : lam * su.coeff);
        }
    }
    return out;
}

namespace {

void expand_parts(Chain& out, const Scalar& coeff,
                  const std::vector<SpVec>& parts, size_t idx, Word& acc) {
    if (idx == parts.size()) {
        out.add(acc, coeff);
        return;
    }
    for (const auto& [id, c] : parts[idx]) {
        acc.push_back(id);
        expand_parts(out, coeff * c, parts, idx + 1, acc);
        acc.pop_back();
    }
}

} // namespace

Chain brace_B(const AInfCategory& C, const std::vector<const Cochain*>& phis,
              const Chain& a) {
    if (phis.empty()) return connes_B(C, a);
    int p = (int)phis.size();
    Chain raw = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            auto eps = eps_prefix(C, wr);
            const StrictUnit& su = C.strict_unit_for(C.src(wr[0]));
            std::vector<std::pair<int, int>> blocks(p);
            std::vector<SpVec> vals(p);
            std::function<void(int, int)> go = [&](int l, int lo) {
                if (l == p) {
                    int spar = tpar;
                    for (int q = 0; q < p; ++q)
                        spar ^= (phis[q]->parity() & eps[blocks[q].first + 1]);
                    Scalar base = spar ? lam * minus1 * su.coeff : lam * su.coeff;
                    // bracket slots: unit head, then all letters with the
                    // phi-blocks replaced by their values
                    std::vector<SpVec> parts;
                    parts.push_back(SpVec{{su.id, Scalar::one(a.tag)}});
                    int pos = 0;
                    for (int q = 0; q < p; ++q) {
                        for (int t = pos; t <= blocks[q].first; ++t)
                            parts.push_back(SpVec{{wr[t], Scalar::one(a.tag)}});
                        parts.push_back(vals[q]);
                        pos = blocks[q].second + 1;
                    }
                    for (int t = pos; t <= s; ++t)
                        parts.push_back(SpVec{{wr[t], Scalar::one(a.tag)}});
                    Word acc;
                    expand_parts(raw, base, parts, 0, acc);
                    return;
                }
                for (int j = lo; j <= i - 1; ++j) {
                    for (int k = j; k <= i - 1; ++k) {
                        Word blk(wr.begin() + j + 1, wr.begin() + k + 1);
                        SpVec v;
                        if (blk.empty()) {
                            v = phis[l]->eval0(C.src(wr[j + 1]));
                        } else {
                            v = phis[l]->eval(blk);
                        }
                        if (v.empty()) continue;
                        blocks[l] = {j, k};
                        vals[l] = std::move(v);
                        go(l + 1, k);
                    }
                }
            };
            go(0, -1);
        }
    }
    return normalize_nu(C, raw);
}

NegCyclicChain cyclic_d(const AInfCategory& C, const NegCyclicChain& xi) {
    NegCyclicChain out = NegCyclicChain::zero(xi.tag, xi.order);
    for (int k = 0; k <= xi.order; ++k) {
        out.part[k] = b_nu(C, xi.part[k]);
        if (k >= 1) out.part[k] = out.part[k] + connes_B(C, xi.part[k - 1]);
    }
    return out;
}

NegCyclicChain random_neg_cyclic_chain(const AInfCategory& C, Rng& rng,
                                       int terms, int s_max, int order) {
    NegCyclicChain xi = NegCyclicChain::zero(C.field, order);
    for (int k = 0; k <= order; ++k) xi.part[k] = random_chain(C, rng, terms, s_max, true);
    return xi;
}

NegCyclicChain cyclic_chern(const AInfCategory& C, int object, int order) {
    SpVec e;
    auto it = C.unit.find(object);
    if (it != C.unit.end()) {
        e = it->second;
    } else {
        auto su = C.strict_unit.find(object);
        if (su == C.strict_unit.end())
            throw std::runtime_error("cyclic_chern: object has no designated unit");
        if (su->second.adjoined)
            throw std::runtime_error("cyclic_chern: adjoined unit represents zero; "
                                     "use the native strict-unit model");
        e.emplace(su->second.id, su->second.coeff);
    }
    NegCyclicChain ch = NegCyclicChain::zero(C.field, order);
    for (const auto& [id, c] : e) ch.add(0, Word{id}, c);
    ch.part[0] = normalize_nu(C, ch.part[0]);
    if (ch.is_zero())
        throw std::runtime_error("cyclic_chern: unit died under normalization");
    NegCyclicChain d = cyclic_d(C, ch);
    if (!d.is_zero())
        throw std::runtime_error("cyclic_chern: designated unit is not a cyclic cycle "
                                 "in this model");
    return ch;
}

NegCyclicChain pushforward_cyclic(const AInfCategory& C, const AInfCategory& D,
                                  const AInfFunctor& Fn, const NegCyclicChain& xi) {
    if (!functor_unit_strict(C, D, Fn))
        throw std::runtime_error("pushforward_cyclic: functor is not unit-strict");
    NegCyclicChain out = NegCyclicChain::zero(xi.tag, xi.order);
    for (int k = 0; k <= xi.order; ++k)
        out.part[k] = normalize_nu(D, pushforward(C, D, Fn, xi.part[k]));
    return out;
}

// ---- windows ----

CycWindowBasis cyc_window_basis(const AInfCategory& C, int L, int N, int d) {
    if (!C.has_strict_units())
        throw std::runtime_error("cyclic window: category has no designated strict units");
    CycWindowBasis wb;
    for (int k = 0; k <= N; ++k) {
        int dn = C.grading.normalize(d - 2 * k);
        for (int s = 0; s <= L + k; ++s) {
            for (const Word& w : composable_words(C, s + 1, true)) {
                if (word_degenerate(C, w)) continue;
                if (word_degree(C, w) != dn) continue;
                wb.index.emplace(std::make_pair(k, w), (int)wb.elems.size());
                wb.elems.emplace_back(k, w);
            }
        }
    }
    return wb;
}

SparseMatrix cyc_window_d_matrix(const AInfCategory& C, int N,
                                 const CycWindowBasis& from, const CycWindowBasis& to) {
    SparseMatrix m;
    m.tag = C.field;
    m.nrows = to.dim();
    m.cols.resize(from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        const auto& [k, w] = from.elems[j];
        Chain x = Chain::zero(C.field);
        x.add(w, Scalar::one(C.field));
        Chain bx = b_nu(C, x);
        for (const auto& [v, c] : bx.terms) {
            auto it = to.index.find(std::make_pair(k, v));
            if (it == to.index.end())
                throw std::runtime_error("cyc_window_d_matrix: b left the window");
            auto jt = m.cols[j].find(it->second);
            if (jt == m.cols[j].end()) m.cols[j].emplace(it->second, c);
            else jt->second += c;
        }
        if (k + 1 <= N) {
            Chain Bx = connes_B(C, x);
            for (const auto& [v, c] : Bx.terms) {
                auto it = to.index.find(std::make_pair(k + 1, v));
                if (it == to.index.end())
                    throw std::runtime_error("cyc_window_d_matrix: B left the window");
                auto jt = m.cols[j].find(it->second);
                if (jt == m.cols[j].end()) m.cols[j].emplace(it->second, c);
                else jt->second += c;
            }
        }
    }
    return m;
}

std::vector<int> e1_page(const AInfCategory& C, int d, int L, int N) {
    std::vector<int> cols;
    for (int p = 0; p <= N; ++p) cols.push_back(hh_window_dim(C, d - 2 * p, L + p));
    return cols;
}

HCAtDegree hc_at_degree(const AInfCategory& C, int d, int L, int N) {
    HCAtDegree out;
    CycWindowBasis below = cyc_window_basis(C, L, N, d - 1);
    out.basis = cyc_window_basis(C, L, N, d);
    CycWindowBasis above = cyc_window_basis(C, L, N, d + 1);
    SparseMatrix into = cyc_window_d_matrix(C, N, below, out.basis);
    SparseMatrix outof = cyc_window_d_matrix(C, N, out.basis, above);
    HomologySummary h = homology_core(into, outof);
    out.dim = h.dim;
    out.reps = std::move(h.reps);
    return out;
}

NegCyclicChain combo_to_cyclic(const AInfCategory& C, const CycWindowBasis& wb,
                               const SpVec& combo, int order) {
    NegCyclicChain out = NegCyclicChain::zero(C.field, order);
    for (const auto& [idx, c] : combo) {
        if (idx < 0 || idx >= (int)wb.elems.size())
            throw std::runtime_error("combo_to_cyclic: index out of range");
        const auto& [k, w] = wb.elems[idx];
        out.add(k, w, c);
    }
    return out;
}

namespace {

// Caches window bases and differentials for one (L,N) window.
struct CycEngine {
    const AInfCategory& C;
    int L, N;
    std::map<int, CycWindowBasis> bases;
    std::map<int, SparseMatrix> mats; // D out of degree d

    CycEngine(const AInfCategory& c, int l, int n) : C(c), L(l), N(n) {}

    const CycWindowBasis& basis(int d) {
        auto it = bases.find(d);
        if (it == bases.end())
            it = bases.emplace(d, cyc_window_basis(C, L, N, d)).first;
        return it->second;
    }
    const SparseMatrix& mat(int d) {
        auto it = mats.find(d);
        if (it == mats.end()) {
            const CycWindowBasis& from = basis(d);
            const CycWindowBasis& to = basis(d + 1);
            it = mats.emplace(d, cyc_window_d_matrix(C, N, from, to)).first;
        }
        return it->second;
    }
    int dim(int d) { return homology_dim_ranks(mat(d - 1), mat(d)); }
};

// Coordinate matrix of a strata map (k,w) -> (k+shift, w) between windows.
SparseMatrix strata_map(const AInfCategory& C, const CycWindowBasis& from,
                        const CycWindowBasis& to, int shift, int max_k) {
    SparseMatrix m;
    m.tag = C.field;
    m.nrows = to.dim();
    m.cols.resize(from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        const auto& [k, w] = from.elems[j];
        if (k + shift > max_k) continue;
        auto it = to.index.find(std::make_pair(k + shift, w));
        if (it == to.index.end()) continue; // fell out of the target window
        m.cols[j].emplace(it->second, Scalar::one(C.field));
    }
    return m;
}

HCWindowReport window_report(const AInfCategory& C, int dmin, int dmax,
                             int L, int N, bool verdicts) {
    HCWindowReport rep;
    rep.L = L;
    rep.N = N;
    CycEngine eng(C, L, N);
    CycEngine incl(C, L + 1, N);
    CycEngine trunc(C, L, N + 1);
    for (int d = dmin; d <= dmax; ++d) {
        HCRow row;
        row.degree = d;
        row.dim_hc = eng.dim(d);
        row.dim_incl = incl.dim(d);
        row.dim_trunc = trunc.dim(d);

        // inclusion W(L,N) -> W(L+1,N) and truncation W(L,N+1) -> W(L,N)
        SparseMatrix fi = strata_map(C, eng.basis(d), incl.basis(d), 0, N);
        row.incl_rank = induced_homology_rank(fi, eng.mat(d), incl.mat(d - 1));
        SparseMatrix ft = strata_map(C, trunc.basis(d), eng.basis(d), 0, N);
        row.trunc_rank = induced_homology_rank(ft, trunc.mat(d), eng.mat(d - 1));

        row.stable = (row.dim_hc == row.dim_incl) && (row.incl_rank == row.dim_hc) &&
                     (row.dim_hc == row.dim_trunc) && (row.trunc_rank == row.dim_hc);

        row.dim_hh = hh_window_dim(C, d, L);
        if (verdicts) {
            row.e1_cols = e1_page(C, d, L, N);
            row.e1_sum = 0;
            for (int x : row.e1_cols) row.e1_sum += x;

            // u-action on window homology
            SparseMatrix fu = strata_map(C, eng.basis(d), eng.basis(d + 2), 1, N);
            int urank = induced_homology_rank(fu, eng.mat(d), eng.mat(d + 1));
            row.u_kernel = row.dim_hc - urank;
            SparseMatrix fun = strata_map(C, eng.basis(d - 2 * N), eng.basis(d), N, N);
            row.u_top = induced_homology_rank(fun, eng.mat(d - 2 * N), eng.mat(d - 1));

            bool torsion_free = (row.u_kernel == row.u_top);
            bool sums_match = (row.e1_sum == row.dim_hc);
            if (!row.stable)
                row.verdict = "inconclusive";
            else if (torsion_free != sums_match)
                row.verdict = "inconclusive";
            else
                row.verdict = torsion_free ? "degenerate-in-window" : "non-degenerate";
        }
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace

HCWindowReport hc_minus_window(const AInfCategory& C, int dmin, int dmax, int L, int N) {
    return window_report(C, dmin, dmax, L, N, false);
}

HCWindowReport check_degeneration(const AInfCategory& C, int dmin, int dmax,
                                  int L, int N) {
    return window_report(C, dmin, dmax, L, N, true);
}

} // namespace nchodge
