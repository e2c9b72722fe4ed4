#include "nchodge/connection.hpp"

#include <functional>
#include <stdexcept>

namespace nchodge {

Chain derive_chain(const Chain& a) {
    Chain out = Chain::zero(a.tag);
    for (const auto& [w, c] : a.terms) out.add(w, c.derive());
    return out;
}

NegCyclicChain derive_cyclic(const NegCyclicChain& xi) {
    NegCyclicChain out = NegCyclicChain::zero(xi.tag, xi.order);
    for (int k = 0; k <= xi.order; ++k) out.part[k] = derive_chain(xi.part[k]);
    return out;
}

NegCyclicChain u_nabla(const AInfCategory& C, const Cochain& vmu,
                       const NegCyclicChain& xi) {
    NegCyclicChain out = NegCyclicChain::zero(xi.tag, xi.order);
    for (int k = 0; k <= xi.order; ++k) {
        out.part[k] = Chain::zero(xi.tag) -
                      normalize_nu(C, brace_b(C, {&vmu}, xi.part[k]));
        if (k >= 1) {
            out.part[k] = out.part[k] + derive_chain(xi.part[k - 1]) -
                          brace_B(C, {&vmu}, xi.part[k - 1]);
        }
    }
    return out;
}

NegCyclicChain u_nabla_ks(const AInfCategory& C, const NegCyclicChain& xi) {
    Cochain vmu = ks_cochain(C);
    return u_nabla(C, vmu, xi);
}

NegCyclicChain connection_commutator_defect(const AInfCategory& C, const Cochain& vmu,
                                            const NegCyclicChain& xi) {
    return u_nabla(C, vmu, cyclic_d(C, xi)) - cyclic_d(C, u_nabla(C, vmu, xi));
}

NegCyclicChain leibniz_defect(const AInfCategory& C, const Cochain& vmu,
                              const Scalar& f, const NegCyclicChain& xi) {
    return u_nabla(C, vmu, xi.scaled(f)) - u_nabla(C, vmu, xi).scaled(f) -
           xi.scaled(f.derive()).shifted(1);
}

namespace {

// Cartesian expansion of slot values into whole words; the first part
// supplies the head letter.
void expand_word(Chain& out, const Scalar& coeff,
                 const std::vector<const SpVec*>& parts, size_t idx, Word& acc) {
    if (idx == parts.size()) {
        out.add(acc, coeff);
        return;
    }
    for (const auto& [id, c] : *parts[idx]) {
        acc.push_back(id);
        expand_word(out, coeff * c, parts, idx + 1, acc);
        acc.pop_back();
    }
}

// Enumerates the partitions of wr[from..s] into nonempty consecutive
// F-blocks and hands (headv, blocks...) to the expansion.
void tail_blocks(Chain& out, const AInfCategory& D, const AInfFunctor& Fn,
                 const Word& wr, int from, const Scalar& coeff,
                 std::vector<SpVec>& vals, const SpVec& headv) {
    (void)D;
    int s = (int)wr.size() - 1;
    if (from > s) {
        std::vector<const SpVec*> parts;
        parts.push_back(&headv);
        for (const auto& v : vals) parts.push_back(&v);
        Word acc;
        expand_word(out, coeff, parts, 0, acc);
        return;
    }
    for (int end = from; end <= s; ++end) {
        if (end - from + 1 > Fn.s_max) break;
        SpVec v = Fn.eval(Word(wr.begin() + from, wr.begin() + end + 1));
        if (v.empty()) continue;
        vals.push_back(std::move(v));
        tail_blocks(out, D, Fn, wr, end + 1, coeff, vals, headv);
        vals.pop_back();
    }
}

// Enumerates partitions of wr[0..m] into nonempty blocks with one block
// marked (taken through vF). The block holding position ipos must come
// strictly after the marked block. Calls sink(values).
void marked_partitions(const AInfFunctor& Fn, const AInfFunctor& vF,
                       const Word& wr, int m, int ipos,
                       const std::function<void(std::vector<SpVec>&)>& sink) {
    std::vector<SpVec> vals;
    // state: next position to cover, index of marked block so far (-1 if none),
    // index of block holding ipos so far (-1 if not yet covered)
    std::function<void(int, int, int)> go = [&](int from, int marked, int iblk) {
        if (from > m) {
            if (marked >= 0 && iblk > marked) sink(vals);
            return;
        }
        for (int end = from; end <= m; ++end) {
            bool holds_i = (from <= ipos && ipos <= end);
            int nxt_iblk = holds_i ? (int)vals.size() : iblk;
            Word blk(wr.begin() + from, wr.begin() + end + 1);
            if ((int)blk.size() <= Fn.s_max) {
                SpVec v = Fn.eval(blk);
                if (!v.empty()) {
                    vals.push_back(std::move(v));
                    go(end + 1, marked, nxt_iblk);
                    vals.pop_back();
                }
            }
            if (marked < 0 && !holds_i && (int)blk.size() <= vF.s_max) {
                SpVec v = vF.eval(blk);
                if (!v.empty()) {
                    int mk = (int)vals.size();
                    vals.push_back(std::move(v));
                    go(end + 1, mk, iblk);
                    vals.pop_back();
                }
            }
        }
    };
    go(0, -1, -1);
}

} // namespace

Chain gm_h1(const AInfCategory& C, const AInfCategory& D, const AInfFunctor& Fn,
            const Cochain& vmuC, const Chain& a) {
    Chain raw = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 1; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            auto eps = eps_prefix(C, wr);
            for (int j = -1; j <= i - 2; ++j) {
                for (int m = j + 1; m <= i - 1; ++m) {
                    Word blk(wr.begin() + j + 1, wr.begin() + m + 1);
                    SpVec val = vmuC.eval(blk);
                    if (val.empty()) continue;
                    int spar = tpar ^ (vmuC.parity() & eps[j + 1]);
                    Scalar base = spar ? lam * minus1 : lam;
                    for (int k = i; k <= s; ++k) {
                        int nslots = (j + 1) + 1 + (k - m);
                        if (nslots > Fn.s_max) break;
                        std::vector<Slot> slots;
                        for (int t = 0; t <= j; ++t) slots.emplace_back(wr[t]);
                        slots.emplace_back(&val);
                        for (int t = m + 1; t <= k; ++t) slots.emplace_back(wr[t]);
                        SpVec headv = eval_F_mixed(Fn, slots);
                        if (headv.empty()) continue;
                        std::vector<SpVec> vals;
                        tail_blocks(raw, D, Fn, wr, k + 1, base, vals, headv);
                    }
                }
            }
        }
    }
    return raw;
}

Chain gm_h2(const AInfCategory& C, const AInfCategory& D, const AInfFunctor& Fn,
            const AInfFunctor& vF, const Chain& a) {
    Chain raw = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            Scalar base = tpar ? lam * minus1 : lam;
            for (int m = i; m <= s; ++m) {
                marked_partitions(Fn, vF, wr, m, i, [&](std::vector<SpVec>& vals) {
                    if ((int)vals.size() > D.s_max) return;
                    std::vector<Slot> slots;
                    for (const auto& v : vals) slots.emplace_back(&v);
                    SpVec headv = eval_mu_mixed(D, slots);
                    if (headv.empty()) return;
                    std::vector<SpVec> tails;
                    tail_blocks(raw, D, Fn, wr, m + 1, base, tails, headv);
                });
            }
        }
    }
    return raw;
}

Chain gm_h3(const AInfCategory& C, const AInfCategory& D, const AInfFunctor& Fn,
            const AInfFunctor& vF, const Chain& a) {
    Chain raw = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            const StrictUnit& su = D.strict_unit_for(Fn.obj_map.at(C.src(wr[0])));
            Scalar base = (tpar ? lam * minus1 : lam) * su.coeff;
            SpVec head{{su.id, Scalar::one(a.tag)}};
            marked_partitions(Fn, vF, wr, s, i, [&](std::vector<SpVec>& vals) {
                std::vector<const SpVec*> parts;
                parts.push_back(&head);
                for (const auto& v : vals) parts.push_back(&v);
                Word acc;
                expand_word(raw, base, parts, 0, acc);
            });
        }
    }
    return raw;
}

Chain gm_defmod_defect(const AInfCategory& C, const AInfCategory& D,
                       const AInfFunctor& Fn, const Chain& a) {
    Cochain vmuC = ks_cochain(C);
    Cochain vmuD = ks_cochain(D);
    AInfFunctor vF = derive_functor(Fn);
    auto H = [&](const Chain& x) {
        return normalize_nu(D, gm_h1(C, D, Fn, vmuC, x) - gm_h2(C, D, Fn, vF, x));
    };
    Chain lhs = normalize_nu(D, pushforward(C, D, Fn,
                                            normalize_nu(C, brace_b(C, {&vmuC}, a)))) -
                normalize_nu(D, brace_b(D, {&vmuD},
                                        normalize_nu(D, pushforward(C, D, Fn, a))));
    Chain rhs = b_nu(D, H(a)) + H(b_nu(C, a));
    return lhs - rhs;
}

NegCyclicChain gm_homotopy_u(const AInfCategory& C, const AInfCategory& D,
                             const AInfFunctor& Fn, const NegCyclicChain& xi) {
    Cochain vmuC = ks_cochain(C);
    AInfFunctor vF = derive_functor(Fn);
    NegCyclicChain out = NegCyclicChain::zero(xi.tag, xi.order);
    for (int k = 0; k <= xi.order; ++k) {
        out.part[k] = normalize_nu(D, gm_h2(C, D, Fn, vF, xi.part[k]) -
                                          gm_h1(C, D, Fn, vmuC, xi.part[k]));
        if (k >= 1)
            out.part[k] = out.part[k] +
                          normalize_nu(D, gm_h3(C, D, Fn, vF, xi.part[k - 1]));
    }
    return out;
}

NegCyclicChain gm_functoriality_defect(const AInfCategory& C, const AInfCategory& D,
                                       const AInfFunctor& Fn, const NegCyclicChain& xi) {
    NegCyclicChain lhs = pushforward_cyclic(C, D, Fn, u_nabla_ks(C, xi)) -
                         u_nabla_ks(D, pushforward_cyclic(C, D, Fn, xi));
    NegCyclicChain rhs = cyclic_d(D, gm_homotopy_u(C, D, Fn, xi)) +
                         gm_homotopy_u(C, D, Fn, cyclic_d(C, xi));
    return lhs - rhs;
}

} // namespace nchodge
