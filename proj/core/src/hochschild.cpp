#include "nchodge/hochschild.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nchodge {

Chain Chain::zero(FieldTag tag) {
    Chain c;
    c.tag = tag;
    return c;
}

void Chain::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, c);
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    Scalar m = Scalar::integer(tag, -1);
    for (const auto& [w, c] : o.terms) r.add(w, m * c);
    return r;
}

Chain Chain::scaled(const Scalar& c) const {
    Chain r = Chain::zero(tag);
    for (const auto& [w, v] : terms) r.add(w, v * c);
    return r;
}

bool Chain::is_zero() const { return terms.empty(); }

bool Chain::operator==(const Chain& o) const { return (*this - o).is_zero(); }

int Chain::max_bracket() const {
    int m = -1;
    for (const auto& [w, c] : terms) {
        (void)c;
        m = std::max(m, (int)w.size() - 1);
    }
    return m;
}

std::string Chain::str(const AInfCategory& C) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << C.basis[w[0]].name << "[";
        for (size_t i = 1; i < w.size(); ++i)
            os << (i > 1 ? "|" : "") << C.basis[w[i]].name;
        os << "]";
    }
    return os.str();
}

int word_degree(const AInfCategory& C, const Word& w) {
    int d = C.deg(w[0]);
    for (size_t i = 1; i < w.size(); ++i) d += C.deg(w[i]) - 1;
    return C.grading.normalize(d);
}

ChainInfo check_chain(const AInfCategory& C, const Chain& a) {
    ChainInfo info;
    bool have = false;
    for (const auto& [w, c] : a.terms) {
        (void)c;
        if (w.empty()) throw std::runtime_error("check_chain: empty word");
        if (!C.cyclic_composable(w))
            throw std::runtime_error("check_chain: word not cyclically composable");
        int d = word_degree(C, w);
        if (!have) {
            info.degree = d;
            have = true;
        } else if (d != info.degree) {
            info.homogeneous = false;
        }
    }
    return info;
}

std::vector<int> eps_prefix(const AInfCategory& C, const Word& w) {
    std::vector<int> e(w.size() + 1, 0);
    for (size_t j = 0; j < w.size(); ++j) e[j + 1] = (e[j] + C.rp(w[j])) & 1;
    return e;
}

std::pair<Word, int> rotate_word(const AInfCategory& C, const Word& w, int i) {
    int s = (int)w.size() - 1;
    if (i < 0 || i > s) throw std::runtime_error("rotate_word: rotation out of range");
    if (i == 0) return {w, 0};
    auto eps = eps_prefix(C, w);
    // moving the last i letters (total reduced parity eps_s - eps_{s-i})
    // past the first s+1-i letters (total reduced parity eps_{s-i})
    int par = ((eps[s + 1] ^ eps[s - i + 1]) & eps[s - i + 1]);
    Word r;
    r.reserve(w.size());
    r.insert(r.end(), w.end() - i, w.end());
    r.insert(r.end(), w.begin(), w.end() - i);
    return {r, par};
}

Chain cyclic_t(const AInfCategory& C, const Chain& a) {
    Chain out = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        auto [wr, par] = rotate_word(C, w, s == 0 ? 0 : 1);
        out.add(wr, par ? lam * minus1 : lam);
    }
    return out;
}

Chain hochschild_b(const AInfCategory& C, const Chain& a) {
    Chain out = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        // head terms: rotate a_0 to position i, contract a head that
        // contains it, keep the tail as the new bracket
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            Scalar base = tpar ? lam * minus1 : lam;
            for (int j = i; j <= s; ++j) {
                if (j + 1 > C.s_max) break;
                Word head(wr.begin(), wr.begin() + j + 1);
                SpVec mv = eval_mu(C, head);
                if (mv.empty()) continue;
                for (const auto& [outid, c] : mv) {
                    Word nw;
                    nw.reserve(s - j + 1);
                    nw.push_back(outid);
                    nw.insert(nw.end(), wr.begin() + j + 1, wr.end());
                    out.add(nw, base * c);
                }
            }
        }
        // internal terms: contract a block inside the bracket
        auto eps = eps_prefix(C, w);
        for (int j = 0; j <= s - 1; ++j) {
            Scalar base = eps[j + 1] ? lam * minus1 : lam;
            for (int k = j + 1; k <= s; ++k) {
                if (k - j > C.s_max) break;
                Word blk(w.begin() + j + 1, w.begin() + k + 1);
                SpVec mv = eval_mu(C, blk);
                if (mv.empty()) continue;
                for (const auto& [outid, c] : mv) {
                    Word nw;
                    nw.reserve(s - (k - j) + 2);
                    nw.insert(nw.end(), w.begin(), w.begin() + j + 1);
                    nw.push_back(outid);
                    nw.insert(nw.end(), w.begin() + k + 1, w.end());
                    out.add(nw, base * c);
                }
            }
        }
    }
    return out;
}

Chain brace_b(const AInfCategory& C, const std::vector<const Cochain*>& phis,
              const Chain& a) {
    if (phis.empty()) return hochschild_b(C, a);
    int p = (int)phis.size();
    Chain out = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            auto eps = eps_prefix(C, wr); // eps[j+1] = eps'_j, positional
            std::vector<std::pair<int, int>> blocks(p);
            std::vector<SpVec> vals(p);
            // block boundaries -1 <= j_1 <= k_1 <= ... <= j_p <= k_p < i,
            // every phi-block strictly before the rotated-in a_0
            std::function<void(int, int)> go = [&](int l, int lo) {
                if (l == p) {
                    int spar = tpar;
                    for (int q = 0; q < p; ++q)
                        spar ^= (phis[q]->parity() & eps[blocks[q].first + 1]);
                    Scalar base = spar ? lam * minus1 : lam;
                    for (int m = i; m <= s; ++m) {
                        std::vector<Slot> slots;
                        int pos = 0;
                        for (int q = 0; q < p; ++q) {
                            for (int t = pos; t <= blocks[q].first; ++t)
                                slots.push_back(Slot{wr[t]});
                            slots.push_back(Slot{&vals[q]});
                            pos = blocks[q].second + 1;
                        }
                        for (int t = pos; t <= m; ++t) slots.push_back(Slot{wr[t]});
                        if ((int)slots.size() > C.s_max) break;
                        SpVec mv = eval_mu_mixed(C, slots);
                        if (mv.empty()) continue;
                        for (const auto& [outid, c] : mv) {
                            Word nw;
                            nw.reserve(s - m + 1);
                            nw.push_back(outid);
                            nw.insert(nw.end(), wr.begin() + m + 1, wr.end());
                            out.add(nw, base * c);
                        }
                    }
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
    return out;
}

Chain cap(const AInfCategory& C, const Cochain& phi, const Chain& a) {
    Chain r = brace_b(C, {&phi}, a);
    // cap carries (-1)^{|phi|} relative to b^{1|1}; |phi| = rdeg + 1
    if (((phi.rdeg + 1) % 2 + 2) % 2 == 1) r = r.scaled(Scalar::integer(a.tag, -1));
    return r;
}

namespace {

// Cartesian expansion of a head vector and block-output vectors into words.
void expand_blocks(Chain& out, const Scalar& coeff,
                   const std::vector<SpVec>& parts, size_t idx, Word& acc) {
    if (idx == parts.size()) {
        out.add(acc, coeff);
        return;
    }
    for (const auto& [id, c] : parts[idx]) {
        acc.push_back(id);
        expand_blocks(out, coeff * c, parts, idx + 1, acc);
        acc.pop_back();
    }
}

} // namespace

Chain pushforward(const AInfCategory& C, const AInfCategory& D,
                  const AInfFunctor& Fn, const Chain& a) {
    (void)D;
    Chain out = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        for (int i = 0; i <= s; ++i) {
            auto [wr, tpar] = rotate_word(C, w, i);
            Scalar base = tpar ? lam * minus1 : lam;
            // head block wr[0..e0) must contain position i
            for (int e0 = i + 1; e0 <= s + 1; ++e0) {
                if (e0 > Fn.s_max) break;
                SpVec h = Fn.eval(Word(wr.begin(), wr.begin() + e0));
                if (h.empty()) continue;
                std::vector<SpVec> parts;
                parts.push_back(std::move(h));
                std::function<void(int)> go = [&](int start) {
                    if (start == s + 1) {
                        Word acc;
                        expand_blocks(out, base, parts, 0, acc);
                        return;
                    }
                    for (int end = start + 1; end <= s + 1; ++end) {
                        if (end - start > Fn.s_max) break;
                        SpVec fv = Fn.eval(Word(wr.begin() + start, wr.begin() + end));
                        if (fv.empty()) continue;
                        parts.push_back(std::move(fv));
                        go(end);
                        parts.pop_back();
                    }
                };
                go(e0);
            }
        }
    }
    return out;
}

Chain vee(const AInfCategory& C, const Chain& a) {
    Chain out = Chain::zero(a.tag);
    Scalar minus1 = Scalar::integer(a.tag, -1);
    for (const auto& [w, lam] : a.terms) {
        int s = (int)w.size() - 1;
        int odd = 0;
        for (int i = 1; i <= s; ++i) odd += C.rp(w[i]);
        // reversing the bracket letters costs one Koszul swap per pair
        int par = (odd * (odd - 1) / 2) & 1;
        Word nw;
        nw.reserve(w.size());
        nw.push_back(w[0]);
        for (int i = s; i >= 1; --i) nw.push_back(w[i]);
        out.add(nw, par ? lam * minus1 : lam);
    }
    return out;
}

bool word_degenerate(const AInfCategory& C, const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (C.is_unit_letter(w[i])) return true;
    if (w.size() == 1) {
        int obj = C.src(w[0]);
        auto it = C.strict_unit.find(obj);
        if (it != C.strict_unit.end() && it->second.id == w[0] && it->second.adjoined)
            return true;
    }
    return false;
}

Chain normalize_nu(const AInfCategory& C, const Chain& a) {
    Chain out = Chain::zero(a.tag);
    for (const auto& [w, c] : a.terms)
        if (!word_degenerate(C, w)) out.add(w, c);
    return out;
}

Chain b_nu(const AInfCategory& C, const Chain& a) {
    return normalize_nu(C, hochschild_b(C, a));
}

Word random_cyclic_word(const AInfCategory& C, Rng& rng, int s, bool nu) {
    int n = (int)C.basis.size();
    for (int tries = 0; tries < 2000; ++tries) {
        Word w;
        // head: any letter, except a bare adjoined unit when s = 0
        int head = rng.below((uint64_t)n);
        if (nu && s == 0) {
            Word cand{head};
            if (word_degenerate(C, cand)) continue;
        }
        w.push_back(head);
        bool ok = true;
        for (int b = 1; b <= s; ++b) {
            std::vector<int> cands;
            int from = C.dst(w.back());
            for (int id = 0; id < n; ++id) {
                if (C.src(id) != from) continue;
                if (nu && C.is_unit_letter(id)) continue;
                cands.push_back(id);
            }
            if (cands.empty()) {
                ok = false;
                break;
            }
            w.push_back(cands[rng.below(cands.size())]);
        }
        if (!ok) continue;
        if (C.dst(w.back()) != C.src(w[0])) continue;
        return w;
    }
    throw std::runtime_error("random_cyclic_word: no composable word found");
}

Chain random_chain(const AInfCategory& C, Rng& rng, int terms, int s_max, bool nu) {
    Chain c = Chain::zero(C.field);
    for (int k = 0; k < terms; ++k) {
        int s = (int)rng.below((uint64_t)(s_max + 1));
        Word w = random_cyclic_word(C, rng, s, nu);
        long v = (long)rng.range(1, 9);
        if (rng.coin()) v = -v;
        c.add(w, Scalar::integer(C.field, v));
    }
    return c;
}

std::vector<Word> nu_words_of_degree(const AInfCategory& C, int s, int degree) {
    std::vector<Word> out;
    for (const Word& w : composable_words(C, s + 1, true)) {
        if (word_degenerate(C, w)) continue;
        if (word_degree(C, w) == C.grading.normalize(degree)) out.push_back(w);
    }
    return out;
}

} // namespace nchodge
