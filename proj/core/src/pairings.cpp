#include "nchodge/pairings.hpp"

#include <sstream>
#include <stdexcept>

namespace nchodge {

namespace {

// All rotations of a cyclic word: rots[i] has the original head at
// position i, with the rotation sign and head-inclusive parity prefixes.
struct Rot {
    Word w;
    int tpar;
    std::vector<int> eps;
};

std::vector<Rot> rotations(const AInfCategory& C, const Word& w) {
    std::vector<Rot> out;
    int s = (int)w.size() - 1;
    out.reserve(s + 1);
    for (int i = 0; i <= s; ++i) {
        auto [wr, tp] = rotate_word(C, w, i);
        Rot r;
        r.tpar = tp;
        r.eps = eps_prefix(C, wr);
        r.w = std::move(wr);
        out.push_back(std::move(r));
    }
    return out;
}

// Enumeration boundaries the homotopy displays leave open: whether the
// unbraced leading runs may be empty. Frozen empirically against the
// covariance identity: H3 needs its empty outer prefix (the pair
// (x[], e+[x]) on the unitalized one-generator family fires only there),
// and the inclusive choice for H1/H2 is the consistent reading.
constexpr int kResH1PrefixMin = 0;
constexpr int kResH2PlainBMin = 0;
constexpr int kResH3PrefixMin = 0;

// Frozen second-slot sign modes (see header for the mode encoding),
// determined empirically and pinned by the test suite. For the pairings
// the second slot enters plainly; sesquilinearity already carries the
// star, and no extra Koszul twist survives the probe fixtures.
constexpr int kMukaiBMode = 0;
constexpr int kResCovMode = 0;

int slot_sign(int mode, int palpha_deg) {
    // Returns 0/1 parity of the extra sign on the second slot.
    switch (mode) {
        case 0: return 0;
        case 1: return 1;
        case 2: return palpha_deg;
        case 3: return palpha_deg ^ 1;
        case 4: return palpha_deg ^ 1; // |alpha|' = |alpha| + 1
        case 5: return palpha_deg;     // -(-1)^{|alpha|'}
        default: throw std::runtime_error("slot_sign: unknown mode");
    }
}

bool mode_needs_parity(int mode) { return mode >= 2; }

Scalar mukai_words(const AInfCategory& C, const Word& wa, const Word& wb, int pbw) {
    Scalar total = Scalar::integer(C.field, 0);
    int s = (int)wa.size() - 1, t = (int)wb.size() - 1;
    auto rota = rotations(C, wa);
    auto rotb = rotations(C, wb);
    for (int ia = 0; ia <= s; ++ia) {
        const Rot& ra = rota[ia];
        for (int ib = 0; ib <= t; ++ib) {
            const Rot& rb = rotb[ib];
            const auto& homv = C.hom(C.src(ra.w[0]), C.src(rb.w[0]));
            if (homv.empty()) continue;
            for (int j = ia; j <= s; ++j) {
                for (int k = ib; k <= t; ++k) {
                    int inner_ar = (s - j) + 1 + (k + 1);
                    int outer_ar = (j + 1) + 1 + (t - k);
                    if (inner_ar > C.s_max || outer_ar > C.s_max) continue;
                    int base = (ra.eps[s + 1] ^ ra.eps[j + 1]) ^ ra.tpar ^ rb.tpar;
                    Word inner_w;
                    inner_w.reserve(inner_ar);
                    for (int q = j + 1; q <= s; ++q) inner_w.push_back(ra.w[q]);
                    int cpos = (int)inner_w.size();
                    inner_w.push_back(-1);
                    for (int q = 0; q <= k; ++q) inner_w.push_back(rb.w[q]);
                    for (int c : homv) {
                        inner_w[cpos] = c;
                        SpVec inner = eval_mu(C, inner_w);
                        if (inner.empty()) continue;
                        std::vector<Slot> slots;
                        slots.reserve(outer_ar);
                        for (int q = 0; q <= j; ++q) slots.emplace_back(ra.w[q]);
                        slots.emplace_back(&inner);
                        for (int q = k + 1; q <= t; ++q) slots.emplace_back(rb.w[q]);
                        SpVec outer = eval_mu_mixed(C, slots);
                        auto it = outer.find(c);
                        if (it == outer.end()) continue;
                        int par = base ^ (C.grading.parity(C.deg(c)) & pbw);
                        if (par) total -= it->second;
                        else total += it->second;
                    }
                }
            }
        }
    }
    return total;
}

using WordTraceFn = Scalar (*)(const AInfCategory&, const Cochain&, const Word&,
                               const Word&, int);

Scalar pair_chains(const AInfCategory& C, const Chain& alpha, const Chain& beta,
                   const Cochain* vmu, WordTraceFn fn) {
    Scalar total = Scalar::integer(C.field, 0);
    for (const auto& [wa, la] : alpha.terms) {
        for (const auto& [wb, lb] : beta.terms) {
            int pbw = C.grading.parity(word_degree(C, wb));
            Scalar v = fn ? fn(C, *vmu, wa, wb, pbw) : mukai_words(C, wa, wb, pbw);
            total += la * lb * v;
        }
    }
    return total;
}

Scalar res_h1_words(const AInfCategory& C, const Cochain& vmu, const Word& wa,
                    const Word& wb, int pbw) {
    Scalar total = Scalar::integer(C.field, 0);
    int s = (int)wa.size() - 1, t = (int)wb.size() - 1;
    auto rota = rotations(C, wa);
    auto rotb = rotations(C, wb);
    for (int ia = 0; ia <= s; ++ia) {
        const Rot& ra = rota[ia];
        for (int ib = 0; ib <= t; ++ib) {
            const Rot& rb = rotb[ib];
            const auto& homv = C.hom(C.src(ra.w[0]), C.src(rb.w[0]));
            if (homv.empty()) continue;
            for (int j = kResH1PrefixMin - 1; j <= ia - 2; ++j) {
                for (int k = j + 1; k <= ia - 1; ++k) {
                    SpVec blkval = vmu.eval(Word(ra.w.begin() + j + 1, ra.w.begin() + k + 1));
                    if (blkval.empty()) continue;
                    for (int l = ia; l <= s; ++l) {
                        for (int m = ib; m <= t; ++m) {
                            int inner_ar = (s - l) + 1 + (m + 1);
                            int outer_ar = (j + 1) + 1 + (l - k) + 1 + (t - m);
                            if (inner_ar > C.s_max || outer_ar > C.s_max) continue;
                            int base = 1 ^ ra.eps[j + 1] ^ (ra.eps[s + 1] ^ ra.eps[l + 1]) ^
                                       ra.tpar ^ rb.tpar;
                            Word inner_w;
                            inner_w.reserve(inner_ar);
                            for (int q = l + 1; q <= s; ++q) inner_w.push_back(ra.w[q]);
                            int cpos = (int)inner_w.size();
                            inner_w.push_back(-1);
                            for (int q = 0; q <= m; ++q) inner_w.push_back(rb.w[q]);
                            for (int c : homv) {
                                inner_w[cpos] = c;
                                SpVec inner = eval_mu(C, inner_w);
                                if (inner.empty()) continue;
                                std::vector<Slot> slots;
                                slots.reserve(outer_ar);
                                for (int q = 0; q <= j; ++q) slots.emplace_back(ra.w[q]);
                                slots.emplace_back(&blkval);
                                for (int q = k + 1; q <= l; ++q) slots.emplace_back(ra.w[q]);
                                slots.emplace_back(&inner);
                                for (int q = m + 1; q <= t; ++q) slots.emplace_back(rb.w[q]);
                                SpVec outer = eval_mu_mixed(C, slots);
                                auto it = outer.find(c);
                                if (it == outer.end()) continue;
                                int par = base ^ (C.grading.parity(C.deg(c)) & pbw);
                                if (par) total -= it->second;
                                else total += it->second;
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

Scalar res_h2_words(const AInfCategory& C, const Cochain& vmu, const Word& wa,
                    const Word& wb, int pbw) {
    Scalar total = Scalar::integer(C.field, 0);
    int s = (int)wa.size() - 1, t = (int)wb.size() - 1;
    auto rota = rotations(C, wa);
    auto rotb = rotations(C, wb);
    for (int ia = 0; ia <= s; ++ia) {
        const Rot& ra = rota[ia];
        for (int ib = 0; ib <= t; ++ib) {
            const Rot& rb = rotb[ib];
            const auto& homv = C.hom(C.src(ra.w[0]), C.src(rb.w[0]));
            if (homv.empty()) continue;
            for (int j = ia; j <= s; ++j) {
                for (int k = kResH2PlainBMin - 1; k <= ib - 2; ++k) {
                    for (int l = k + 1; l <= ib - 1; ++l) {
                        SpVec blkval =
                            vmu.eval(Word(rb.w.begin() + k + 1, rb.w.begin() + l + 1));
                        if (blkval.empty()) continue;
                        for (int m = ib; m <= t; ++m) {
                            int inner_ar = (s - j) + 1 + (k + 1) + 1 + (m - l);
                            int outer_ar = (j + 1) + 1 + (t - m);
                            if (inner_ar > C.s_max || outer_ar > C.s_max) continue;
                            int base = 1 ^ ra.eps[j + 1] ^ rb.eps[k + 1] ^ ra.tpar ^ rb.tpar;
                            std::vector<Slot> inner_slots;
                            inner_slots.reserve(inner_ar);
                            for (int q = j + 1; q <= s; ++q) inner_slots.emplace_back(ra.w[q]);
                            int cpos = (int)inner_slots.size();
                            inner_slots.emplace_back(-1);
                            for (int q = 0; q <= k; ++q) inner_slots.emplace_back(rb.w[q]);
                            inner_slots.emplace_back(&blkval);
                            for (int q = l + 1; q <= m; ++q) inner_slots.emplace_back(rb.w[q]);
                            for (int c : homv) {
                                inner_slots[cpos] = Slot(c);
                                SpVec inner = eval_mu_mixed(C, inner_slots);
                                if (inner.empty()) continue;
                                std::vector<Slot> slots;
                                slots.reserve(outer_ar);
                                for (int q = 0; q <= j; ++q) slots.emplace_back(ra.w[q]);
                                slots.emplace_back(&inner);
                                for (int q = m + 1; q <= t; ++q) slots.emplace_back(rb.w[q]);
                                SpVec outer = eval_mu_mixed(C, slots);
                                auto it = outer.find(c);
                                if (it == outer.end()) continue;
                                int par = base ^ (C.grading.parity(C.deg(c)) & pbw);
                                if (par) total -= it->second;
                                else total += it->second;
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

Scalar res_h3_words(const AInfCategory& C, const Cochain& vmu, const Word& wa,
                    const Word& wb, int pbw) {
    Scalar total = Scalar::integer(C.field, 0);
    int s = (int)wa.size() - 1, t = (int)wb.size() - 1;
    auto rota = rotations(C, wa);
    auto rotb = rotations(C, wb);
    int vmu_cap = vmu.max_arity();
    for (int ia = 0; ia <= s; ++ia) {
        const Rot& ra = rota[ia];
        for (int ib = 0; ib <= t; ++ib) {
            const Rot& rb = rotb[ib];
            const auto& homv = C.hom(C.src(ra.w[0]), C.src(rb.w[0]));
            if (homv.empty()) continue;
            for (int j = kResH3PrefixMin - 1; j <= ia - 1; ++j) {
                for (int k = ia; k <= s; ++k) {
                    for (int l = ib; l <= t; ++l) {
                        for (int m = l; m <= t; ++m) {
                            int innermost_ar = (s - k) + 1 + (l + 1);
                            int middle_ar = (k - j) + 1 + (m - l);
                            int outer_ar = (j + 1) + 1 + (t - m);
                            if (innermost_ar > C.s_max || middle_ar > C.s_max) continue;
                            if (outer_ar > vmu_cap) continue;
                            // math note: the dagger carries the same leading 1 as
                            // the other two homotopies; without it the covariance
                            // identity fails on the one-generator family fixture.
                            int base = 1 ^ ra.eps[j + 1] ^ (ra.eps[s + 1] ^ ra.eps[k + 1]) ^
                                       ra.tpar ^ rb.tpar;
                            Word inner_w;
                            inner_w.reserve(innermost_ar);
                            for (int q = k + 1; q <= s; ++q) inner_w.push_back(ra.w[q]);
                            int cpos = (int)inner_w.size();
                            inner_w.push_back(-1);
                            for (int q = 0; q <= l; ++q) inner_w.push_back(rb.w[q]);
                            for (int c : homv) {
                                inner_w[cpos] = c;
                                SpVec inner = eval_mu(C, inner_w);
                                if (inner.empty()) continue;
                                std::vector<Slot> mid_slots;
                                mid_slots.reserve(middle_ar);
                                for (int q = j + 1; q <= k; ++q) mid_slots.emplace_back(ra.w[q]);
                                mid_slots.emplace_back(&inner);
                                for (int q = l + 1; q <= m; ++q) mid_slots.emplace_back(rb.w[q]);
                                SpVec middle = eval_mu_mixed(C, mid_slots);
                                if (middle.empty()) continue;
                                std::vector<Slot> slots;
                                slots.reserve(outer_ar);
                                for (int q = 0; q <= j; ++q) slots.emplace_back(ra.w[q]);
                                slots.emplace_back(&middle);
                                for (int q = m + 1; q <= t; ++q) slots.emplace_back(rb.w[q]);
                                SpVec outer = eval_cochain_mixed(vmu, slots);
                                auto it = outer.find(c);
                                if (it == outer.end()) continue;
                                int par = base ^ (C.grading.parity(C.deg(c)) & pbw);
                                if (par) total -= it->second;
                                else total += it->second;
                            }
                        }
                    }
                }
            }
        }
    }
    return total;
}

// Sesquilinear assembly of a word-pair trace over the u-truncated parts.
USeries sesqui(const AInfCategory& C, const NegCyclicChain& a, const NegCyclicChain& b,
               const Cochain* vmu, WordTraceFn fn) {
    if (a.order != b.order)
        throw std::runtime_error("pairing: truncation orders differ");
    USeries out = USeries::zero(C.field, a.order);
    for (int ap = 0; ap <= a.order; ++ap) {
        if (a.part[ap].is_zero()) continue;
        for (int bp = 0; ap + bp <= a.order; ++bp) {
            if (b.part[bp].is_zero()) continue;
            Scalar v = pair_chains(C, a.part[ap], b.part[bp], vmu, fn);
            if (v.is_zero()) continue;
            if (bp & 1) out.c[ap + bp] -= v;
            else out.c[ap + bp] += v;
        }
    }
    return out;
}

Scalar res_h_all_words(const AInfCategory& C, const Cochain& vmu, const Word& wa,
                       const Word& wb, int pbw) {
    return res_h1_words(C, vmu, wa, wb, pbw) + res_h2_words(C, vmu, wa, wb, pbw) +
           res_h3_words(C, vmu, wa, wb, pbw);
}

} // namespace

Chain chern(const AInfCategory& C, int object) {
    SpVec e;
    auto it = C.unit.find(object);
    if (it != C.unit.end()) {
        e = it->second;
    } else {
        auto su = C.strict_unit.find(object);
        if (su == C.strict_unit.end())
            throw std::runtime_error("chern: object has no designated unit");
        if (su->second.adjoined)
            throw std::runtime_error("chern: adjoined unit represents zero in homology");
        e.emplace(su->second.id, su->second.coeff);
    }
    Chain ch = Chain::zero(C.field);
    for (const auto& [id, c] : e) ch.add(Word{id}, c);
    if (C.has_strict_units()) ch = normalize_nu(C, ch);
    if (ch.is_zero()) throw std::runtime_error("chern: unit died under normalization");
    return ch;
}

Scalar mukai_pairing(const AInfCategory& C, const Chain& alpha, const Chain& beta) {
    return pair_chains(C, alpha, beta, nullptr, nullptr);
}

Scalar mukai_b_defect_mode(const AInfCategory& C, const Chain& alpha,
                           const Chain& beta, int mode) {
    int pal = 0;
    if (mode_needs_parity(mode)) {
        ChainInfo ia = check_chain(C, alpha);
        if (!ia.homogeneous)
            throw std::runtime_error("mukai_b_defect: alpha must be homogeneous");
        pal = C.grading.parity(ia.degree);
    }
    // math note: the trace formula is a chain map on the full Hochschild
    // complex, so the compatibility uses the unreduced differential; the
    // reduced one drops unit-slot words whose traces need not vanish.
    Scalar first = mukai_pairing(C, hochschild_b(C, alpha), beta);
    Scalar second = mukai_pairing(C, alpha, hochschild_b(C, beta));
    if (slot_sign(mode, pal)) return first - second;
    return first + second;
}

Scalar mukai_b_defect(const AInfCategory& C, const Chain& alpha, const Chain& beta) {
    return mukai_b_defect_mode(C, alpha, beta, kMukaiBMode);
}

USeries higher_residue(const AInfCategory& C, const NegCyclicChain& alpha,
                       const NegCyclicChain& beta) {
    return sesqui(C, alpha, beta, nullptr, nullptr);
}

Scalar res_h1(const AInfCategory& C, const Cochain& vmu, const Chain& alpha,
              const Chain& beta) {
    return pair_chains(C, alpha, beta, &vmu, &res_h1_words);
}

Scalar res_h2(const AInfCategory& C, const Cochain& vmu, const Chain& alpha,
              const Chain& beta) {
    return pair_chains(C, alpha, beta, &vmu, &res_h2_words);
}

Scalar res_h3(const AInfCategory& C, const Cochain& vmu, const Chain& alpha,
              const Chain& beta) {
    return pair_chains(C, alpha, beta, &vmu, &res_h3_words);
}

USeries res_homotopy(const AInfCategory& C, const Cochain& vmu,
                     const NegCyclicChain& alpha, const NegCyclicChain& beta) {
    return sesqui(C, alpha, beta, &vmu, &res_h_all_words);
}

USeries res_covariance_defect_mode(const AInfCategory& C, const NegCyclicChain& alpha,
                                   const NegCyclicChain& beta, int mode) {
    int pal = 0;
    if (mode_needs_parity(mode)) {
        ChainInfo ia = check_cyclic_chain(C, alpha);
        if (!ia.homogeneous)
            throw std::runtime_error("res_covariance_defect: alpha must be homogeneous");
        pal = C.grading.parity(ia.degree);
    }
    Cochain vmu = ks_cochain(C);
    // math note: the second connection slot enters with a minus because the
    // u in u*nabla crosses the star of the sesquilinear pairing:
    // u<a, nabla b> = -<a, (u nabla) b>.
    USeries lhs = higher_residue(C, u_nabla(C, vmu, alpha), beta) -
                  higher_residue(C, alpha, u_nabla(C, vmu, beta)) -
                  higher_residue(C, alpha, beta).derive().shift(1);
    NegCyclicChain da = cyclic_d(C, alpha);
    NegCyclicChain db = cyclic_d(C, beta);
    USeries h = res_homotopy(C, vmu, da, beta);
    USeries h2 = res_homotopy(C, vmu, alpha, db);
    if (slot_sign(mode, pal)) h = h - h2;
    else h = h + h2;
    return lhs - h;
}

USeries res_covariance_defect(const AInfCategory& C, const NegCyclicChain& alpha,
                              const NegCyclicChain& beta) {
    return res_covariance_defect_mode(C, alpha, beta, kResCovMode);
}

SymmetryReport check_symmetry(const AInfCategory& C, int n_par, int dmin, int dmax,
                              int L, int N, int npairs, Rng& rng) {
    SymmetryReport rep;
    std::vector<std::pair<int, Chain>> hh;
    std::vector<std::pair<int, NegCyclicChain>> hc;
    for (int d = dmin; d <= dmax; ++d) {
        HHAtDegree h = hh_at_degree(C, d, L);
        for (const auto& r : h.reps) hh.emplace_back(d, combo_to_chain(h.basis, r, C.field));
        HCAtDegree hcd = hc_at_degree(C, d, L, N);
        for (const auto& r : hcd.reps)
            hc.emplace_back(d, combo_to_cyclic(C, hcd.basis, r, N));
    }
    auto note = [&](const std::string& what, int da, int db) {
        if (!rep.witness.empty()) return;
        std::ostringstream os;
        os << what << " fails on cycle pair at degrees (" << da << "," << db << ")";
        rep.witness = os.str();
    };
    for (int p = 0; p < npairs; ++p) {
        if (!hh.empty()) {
            const auto& [da, a] = hh[rng.below(hh.size())];
            const auto& [db, b] = hh[rng.below(hh.size())];
            int sg = (n_par ^ (C.grading.parity(da) & C.grading.parity(db))) & 1;
            Scalar lhs = mukai_pairing(C, a, b);
            Scalar rhs = mukai_pairing(C, b, a);
            if (sg) rhs = Scalar::integer(C.field, 0) - rhs;
            if (!(lhs == rhs)) {
                rep.mukai_ok = false;
                note("mukai symmetry", da, db);
            }
        }
        if (!hc.empty()) {
            const auto& [da, a] = hc[rng.below(hc.size())];
            const auto& [db, b] = hc[rng.below(hc.size())];
            int sg = (n_par ^ (C.grading.parity(da) & C.grading.parity(db))) & 1;
            USeries lhs = higher_residue(C, a, b);
            USeries flip = higher_residue(C, b, a);
            USeries starred = flip.star();
            USeries rhs_star = sg ? USeries::zero(C.field, lhs.order) - starred : starred;
            USeries rhs_plain = sg ? USeries::zero(C.field, lhs.order) - flip : flip;
            if (!(lhs - rhs_star).is_zero()) {
                rep.residue_starred_ok = false;
                note("starred residue symmetry", da, db);
            }
            if (!(lhs - rhs_plain).is_zero()) rep.residue_unstarred_ok = false;
        }
        ++rep.pairs;
    }
    return rep;
}

PolarizationReport check_polarization(const AInfCategory& C, int n_par, int dmin,
                                      int dmax, int L, int N, int npairs, Rng& rng) {
    PolarizationReport rep;
    std::vector<std::pair<int, NegCyclicChain>> hc;
    for (int d = dmin; d <= dmax; ++d) {
        HCAtDegree hcd = hc_at_degree(C, d, L, N);
        for (const auto& r : hcd.reps)
            hc.emplace_back(d, combo_to_cyclic(C, hcd.basis, r, N));
    }
    auto note = [&](const std::string& what, int da, int db) {
        if (!rep.witness.empty()) return;
        std::ostringstream os;
        os << what << " fails on cycle pair at degrees (" << da << "," << db << ")";
        rep.witness = os.str();
    };
    if (hc.empty()) return rep;
    for (int p = 0; p < npairs; ++p) {
        const auto& [da, a] = hc[rng.below(hc.size())];
        const auto& [db, b] = hc[rng.below(hc.size())];
        USeries P = higher_residue(C, a, b);
        USeries us = higher_residue(C, a.shifted(1), b) - P.shift(1);
        USeries us2 = higher_residue(C, a, b.shifted(1)) + P.shift(1);
        if (!us.is_zero() || !us2.is_zero()) {
            rep.sesquilinear_ok = false;
            note("sesquilinearity", da, db);
        }
        if (C.family) {
            rep.covariant_tested = true;
            USeries cov = higher_residue(C, u_nabla_ks(C, a), b) +
                          higher_residue(C, a, u_nabla_ks(C, b)) -
                          P.derive().shift(1);
            if (!cov.is_zero()) {
                rep.covariant_ok = false;
                note("covariant constancy", da, db);
            }
        }
        int sg = (n_par ^ (C.grading.parity(da) & C.grading.parity(db))) & 1;
        USeries starred = higher_residue(C, b, a).star();
        USeries rhs = sg ? USeries::zero(C.field, P.order) - starred : starred;
        if (!(P - rhs).is_zero()) {
            rep.antisymmetric_ok = false;
            note("starred antisymmetry", da, db);
        }
        ++rep.cycles;
    }
    return rep;
}

} // namespace nchodge
