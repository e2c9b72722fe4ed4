#include "nchodge/cochain.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nchodge {

Cochain Cochain::zero(FieldTag tag, int rdeg) {
    Cochain phi;
    phi.tag = tag;
    phi.rdeg = rdeg;
    return phi;
}

void Cochain::add0(int object, int out, const Scalar& c) {
    if (c.is_zero()) return;
    SpVec& v = comp0[object];
    auto it = v.find(out);
    if (it == v.end()) {
        v.emplace(out, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) v.erase(it);
    }
    if (v.empty()) comp0.erase(object);
}

void Cochain::add(const Word& w, int out, const Scalar& c) {
    if (c.is_zero()) return;
    if (w.empty()) throw std::runtime_error("Cochain::add: empty word, use add0");
    SpVec& v = comps[w];
    auto it = v.find(out);
    if (it == v.end()) {
        v.emplace(out, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) v.erase(it);
    }
    if (v.empty()) comps.erase(w);
}

SpVec Cochain::eval(const Word& w) const {
    if (w.empty()) throw std::runtime_error("Cochain::eval: empty word, use eval0");
    auto it = comps.find(w);
    if (it == comps.end()) return {};
    return it->second;
}

SpVec Cochain::eval0(int object) const {
    auto it = comp0.find(object);
    if (it == comp0.end()) return {};
    return it->second;
}

bool Cochain::is_zero() const { return comp0.empty() && comps.empty(); }

int Cochain::max_arity() const {
    int m = comp0.empty() ? -1 : 0;
    for (const auto& [w, v] : comps) {
        (void)v;
        m = std::max(m, (int)w.size());
    }
    return m;
}

int Cochain::parity() const { return ((rdeg % 2) + 2) % 2; }

Cochain Cochain::operator+(const Cochain& o) const {
    if (rdeg != o.rdeg && !is_zero() && !o.is_zero())
        throw std::runtime_error("Cochain: adding cochains of different reduced degree");
    Cochain r = *this;
    if (r.is_zero()) r.rdeg = o.rdeg;
    for (const auto& [x, v] : o.comp0)
        for (const auto& [out, c] : v) r.add0(x, out, c);
    for (const auto& [w, v] : o.comps)
        for (const auto& [out, c] : v) r.add(w, out, c);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    return *this + o.scaled(Scalar::integer(tag, -1));
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain r = Cochain::zero(tag, rdeg);
    if (c.is_zero()) return r;
    for (const auto& [x, v] : comp0)
        for (const auto& [out, cv] : v) r.add0(x, out, cv * c);
    for (const auto& [w, v] : comps)
        for (const auto& [out, cv] : v) r.add(w, out, cv * c);
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    return (*this - o).is_zero();
}

void check_cochain(const AInfCategory& C, const Cochain& phi) {
    for (const auto& [x, v] : phi.comp0) {
        for (const auto& [out, c] : v) {
            (void)c;
            if (C.src(out) != x || C.dst(out) != x)
                throw std::runtime_error("check_cochain: comp0 entry not an endomorphism of its object");
            if (!C.grading.equal(C.deg(out), phi.rdeg + 1))
                throw std::runtime_error("check_cochain: comp0 entry has wrong degree");
        }
    }
    for (const auto& [w, v] : phi.comps) {
        if (!C.word_composable(w))
            throw std::runtime_error("check_cochain: non-composable input word");
        int want = phi.rdeg + 1;
        for (int id : w) want += C.deg(id) - 1;
        for (const auto& [out, c] : v) {
            (void)c;
            if (C.src(out) != C.src(w.front()) || C.dst(out) != C.dst(w.back()))
                throw std::runtime_error("check_cochain: output in wrong hom space");
            if (!C.grading.equal(C.deg(out), want))
                throw std::runtime_error("check_cochain: output has wrong degree");
        }
    }
}

SpVec eval_cochain_mixed(const Cochain& phi, const std::vector<Slot>& slots) {
    SpVec acc;
    Word scratch(slots.size(), -1);
    std::function<void(size_t, const Scalar&)> go = [&](size_t i, const Scalar& coeff) {
        if (i == slots.size()) {
            SpVec v = phi.eval(scratch);
            axpy(acc, coeff, v);
            return;
        }
        if (slots[i].vec) {
            for (const auto& [id, c] : *slots[i].vec) {
                scratch[i] = id;
                go(i + 1, coeff * c);
            }
        } else {
            scratch[i] = slots[i].id;
            go(i + 1, coeff);
        }
    };
    go(0, Scalar::one(phi.tag));
    return acc;
}

namespace {

// Reduced-parity sum of a word prefix w[0..q).
int prefix_rp(const AInfCategory& C, const Word& w, int q) {
    int s = 0;
    for (int i = 0; i < q; ++i) s += C.rp(w[i]);
    return s & 1;
}

Word splice(const Word& w, int q, const Word& block) {
    // Replace slot q of w by the letters of block (possibly none).
    Word r;
    r.reserve(w.size() - 1 + block.size());
    r.insert(r.end(), w.begin(), w.begin() + q);
    r.insert(r.end(), block.begin(), block.end());
    r.insert(r.end(), w.begin() + q + 1, w.end());
    return r;
}

} // namespace

Cochain gerstenhaber_product(const AInfCategory& C, const Cochain& phi,
                             const Cochain& psi) {
    Cochain out = Cochain::zero(C.field, phi.rdeg + psi.rdeg);
    Scalar minus1 = Scalar::integer(C.field, -1);
    for (const auto& [W, Vphi] : phi.comps) {
        int a = (int)W.size();
        for (int q = 0; q < a; ++q) {
            int y = W[q];
            // Koszul sign (-1)^{|psi|' eps_q}, eps over the input letters
            // strictly before the inserted block (the prefix W[0..q)).
            bool neg = (psi.parity() && prefix_rp(C, W, q));
            Scalar sgn = neg ? minus1 : Scalar::one(C.field);
            // arity >= 1 block
            for (const auto& [V, Vpsi] : psi.comps) {
                auto itc = Vpsi.find(y);
                if (itc == Vpsi.end()) continue;
                Word inw = splice(W, q, V);
                for (const auto& [outid, cphi] : Vphi) {
                    Scalar c = cphi * itc->second * sgn;
                    if (inw.empty())
                        out.add0(C.src(outid), outid, c);
                    else
                        out.add(inw, outid, c);
                }
            }
            // empty block: psi^0 at the object where the slot sits
            if (C.src(y) == C.dst(y)) {
                auto it0 = psi.comp0.find(C.src(y));
                if (it0 != psi.comp0.end()) {
                    auto itc = it0->second.find(y);
                    if (itc != it0->second.end()) {
                        Word inw = splice(W, q, Word{});
                        for (const auto& [outid, cphi] : Vphi) {
                            Scalar c = cphi * itc->second * sgn;
                            if (inw.empty())
                                out.add0(C.src(outid), outid, c);
                            else
                                out.add(inw, outid, c);
                        }
                    }
                }
            }
        }
    }
    return out;
}

Cochain gerstenhaber_bracket(const AInfCategory& C, const Cochain& phi,
                             const Cochain& psi) {
    Cochain a = gerstenhaber_product(C, phi, psi);
    Cochain b = gerstenhaber_product(C, psi, phi);
    Scalar s = Scalar::integer(C.field, (phi.parity() && psi.parity()) ? 1 : -1);
    return a + b.scaled(s);
}

Cochain mu_cochain(const AInfCategory& C) {
    Cochain m = Cochain::zero(C.field, 1);
    for (const auto& table : C.mu)
        for (const auto& [w, v] : table)
            for (const auto& [out, c] : v) m.add(w, out, c);
    return m;
}

Cochain cc_differential(const AInfCategory& C, const Cochain& phi) {
    return gerstenhaber_bracket(C, mu_cochain(C), phi);
}

Cochain m2(const AInfCategory& C, const Cochain& phi, const Cochain& psi) {
    // M2(phi,psi): plug phi then psi into two ordered slots of mu.
    Cochain out = Cochain::zero(C.field, phi.rdeg + psi.rdeg + 1);
    Scalar one = Scalar::one(C.field);
    Scalar minus1 = Scalar::integer(C.field, -1);

    // Candidate insertions at slot q of word W: pairs (block, coefficient of
    // W[q] in the cochain value on the block).
    auto slot_options = [&](const Cochain& ph, const Word& W, int q) {
        std::vector<std::pair<Word, Scalar>> opts;
        int y = W[q];
        for (const auto& [V, Vph] : ph.comps) {
            auto itc = Vph.find(y);
            if (itc != Vph.end()) opts.emplace_back(V, itc->second);
        }
        if (C.src(y) == C.dst(y)) {
            auto it0 = ph.comp0.find(C.src(y));
            if (it0 != ph.comp0.end()) {
                auto itc = it0->second.find(y);
                if (itc != it0->second.end()) opts.emplace_back(Word{}, itc->second);
            }
        }
        return opts;
    };

    for (const auto& table : C.mu) {
        for (const auto& [W, Vmu] : table) {
            int n = (int)W.size();
            for (int q1 = 0; q1 < n; ++q1) {
                auto opts1 = slot_options(phi, W, q1);
                if (opts1.empty()) continue;
                for (int q2 = q1 + 1; q2 < n; ++q2) {
                    auto opts2 = slot_options(psi, W, q2);
                    if (opts2.empty()) continue;
                    for (const auto& [V1, c1] : opts1) {
                        // eps before block 1: input letters W[0..q1)
                        int e1 = prefix_rp(C, W, q1);
                        // eps before block 2: those, plus block-1 letters,
                        // plus the input letters W(q1..q2)
                        int e2 = e1;
                        for (int id : V1) e2 ^= C.rp(id);
                        for (int i = q1 + 1; i < q2; ++i) e2 ^= C.rp(W[i]);
                        for (const auto& [V2, c2] : opts2) {
                            bool neg = (phi.parity() && e1) ^ (psi.parity() && e2);
                            Scalar sgn = neg ? minus1 : one;
                            Word inw;
                            inw.reserve(V1.size() + V2.size() + n - 2);
                            inw.insert(inw.end(), W.begin(), W.begin() + q1);
                            inw.insert(inw.end(), V1.begin(), V1.end());
                            inw.insert(inw.end(), W.begin() + q1 + 1, W.begin() + q2);
                            inw.insert(inw.end(), V2.begin(), V2.end());
                            inw.insert(inw.end(), W.begin() + q2 + 1, W.end());
                            for (const auto& [outid, cmu] : Vmu) {
                                Scalar c = cmu * c1 * c2 * sgn;
                                if (inw.empty())
                                    out.add0(C.src(outid), outid, c);
                                else
                                    out.add(inw, outid, c);
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

Cochain cup(const AInfCategory& C, const Cochain& phi, const Cochain& psi) {
    Cochain r = m2(C, phi, psi);
    if (phi.parity()) r = r.scaled(Scalar::integer(C.field, -1));
    return r;
}

Cochain unit_cocycle(const AInfCategory& C) {
    Cochain eta = Cochain::zero(C.field, -1);
    for (int oid = 0; oid < (int)C.objects.size(); ++oid) {
        auto it = C.unit.find(oid);
        if (it == C.unit.end())
            throw std::runtime_error("unit_cocycle: object without designated unit in " + C.name);
        for (const auto& [id, c] : it->second) eta.add0(oid, id, c);
    }
    return eta;
}

Cochain ks_cochain(const AInfCategory& C) {
    if (C.field.kind != FieldKind::RatFun)
        throw std::runtime_error("ks_cochain: category is not a family over rational functions");
    Cochain v = Cochain::zero(C.field, 1);
    for (const auto& table : C.mu)
        for (const auto& [w, vec] : table)
            for (const auto& [out, c] : vec) v.add(w, out, c.derive());
    return v;
}

} // namespace nchodge
