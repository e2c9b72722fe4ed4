#include "nchodge/functor.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nchodge {

void AInfFunctor::add(const Word& w, int out, const Scalar& c) {
    if (w.empty()) throw std::runtime_error("AInfFunctor::add: empty word");
    int s = (int)w.size();
    if ((int)F.size() <= s) F.resize(s + 1);
    SpVec& v = F[s][w];
    auto it = v.find(out);
    if (it == v.end()) {
        if (!c.is_zero()) v.emplace(out, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) v.erase(it);
    }
    if (v.empty()) F[s].erase(w);
    s_max = std::max(s_max, s);
}

void AInfFunctor::add_by_name(const AInfCategory& C, const AInfCategory& D,
                              const std::vector<std::string>& in,
                              const std::string& out, const Scalar& c) {
    Word w;
    for (const auto& n : in) w.push_back(C.id_of(n));
    add(w, D.id_of(out), c);
}

SpVec AInfFunctor::eval(const Word& w) const {
    int s = (int)w.size();
    if (s == 0 || s >= (int)F.size()) return {};
    auto it = F[s].find(w);
    if (it == F[s].end()) return {};
    return it->second;
}

SpVec eval_F_mixed(const AInfFunctor& Fn, const std::vector<Slot>& slots) {
    // Expand the first vector slot distributively; pure words hit the table.
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].vec == nullptr) continue;
        SpVec acc;
        for (const auto& [id, c] : *slots[i].vec) {
            std::vector<Slot> sub = slots;
            sub[i] = Slot{id};
            SpVec part = eval_F_mixed(Fn, sub);
            axpy(acc, c, part);
        }
        return acc;
    }
    Word w;
    w.reserve(slots.size());
    for (const auto& s : slots) w.push_back(s.id);
    return Fn.eval(w);
}

void check_functor_degrees(const AInfCategory& C, const AInfCategory& D,
                           const AInfFunctor& Fn) {
    for (int s = 1; s < (int)Fn.F.size(); ++s) {
        for (const auto& [w, v] : Fn.F[s]) {
            if (!C.word_composable(w))
                throw std::runtime_error("check_functor_degrees: non-composable input word");
            int want = 1;
            for (int id : w) want += C.deg(id) - 1;
            int sx = Fn.obj_map.at(C.src(w.front()));
            int dx = Fn.obj_map.at(C.dst(w.back()));
            for (const auto& [out, c] : v) {
                (void)c;
                if (D.src(out) != sx || D.dst(out) != dx)
                    throw std::runtime_error("check_functor_degrees: output in wrong hom space");
                if (!D.grading.equal(D.deg(out), want))
                    throw std::runtime_error("check_functor_degrees: output has wrong degree");
            }
        }
    }
}

SpVec functor_lhs(const AInfCategory& D, const AInfFunctor& Fn, const Word& w) {
    // sum over partitions of w into nonempty consecutive blocks, each block
    // fed to F and the resulting slots fed to mu_D; no signs appear.
    int s = (int)w.size();
    SpVec acc;
    std::vector<SpVec> blocks;
    std::function<void(int)> go = [&](int start) {
        if (start == s) {
            if ((int)blocks.size() > D.s_max) return;
            std::vector<Slot> slots;
            slots.reserve(blocks.size());
            for (const auto& b : blocks) slots.push_back(Slot{&b});
            SpVec part = eval_mu_mixed(D, slots);
            axpy(acc, Scalar::one(D.field), part);
            return;
        }
        if ((int)blocks.size() >= D.s_max) return; // no room for more slots
        for (int end = start + 1; end <= s; ++end) {
            Word blk(w.begin() + start, w.begin() + end);
            SpVec fv = Fn.eval(blk);
            if (fv.empty()) continue;
            blocks.push_back(std::move(fv));
            go(end);
            blocks.pop_back();
        }
    };
    go(0);
    return acc;
}

AinfCheck check_functor(const AInfCategory& C, const AInfCategory& D,
                        const AInfFunctor& Fn, int cap) {
    try {
        check_functor_degrees(C, D, Fn);
    } catch (const std::exception& e) {
        AinfCheck r;
        r.ok = false;
        r.kind = AinfCheck::Kind::BadDegree;
        r.message = e.what();
        return r;
    }
    Scalar one = Scalar::one(D.field);
    Scalar minus1 = Scalar::integer(D.field, -1);
    for (int len = 1; len <= cap; ++len) {
        for (const Word& w : composable_words(C, len, false)) {
            int s = (int)w.size();
            SpVec lhs = functor_lhs(D, Fn, w);
            // rhs: insert mu_C on a block, then apply F to the shorter word
            SpVec rhs;
            int eps = 0;
            for (int j = 0; j <= s - 1; ++j) {
                if (j > 0) eps ^= C.rp(w[j - 1]);
                for (int k = j + 1; k <= s; ++k) {
                    if (k - j > C.s_max) break;
                    Word blk(w.begin() + j, w.begin() + k);
                    SpVec mv = eval_mu(C, blk);
                    if (mv.empty()) continue;
                    std::vector<Slot> slots;
                    for (int i = 0; i < j; ++i) slots.push_back(Slot{w[i]});
                    slots.push_back(Slot{&mv});
                    for (int i = k; i < s; ++i) slots.push_back(Slot{w[i]});
                    SpVec part = eval_F_mixed(Fn, slots);
                    axpy(rhs, eps ? minus1 : one, part);
                }
            }
            SpVec defect = lhs;
            axpy(defect, minus1, rhs);
            if (!defect.empty()) {
                AinfCheck r;
                r.ok = false;
                r.kind = AinfCheck::Kind::BadRelation;
                r.witness = w;
                r.defect = defect;
                std::ostringstream os;
                os << "functor relation fails at word (";
                for (size_t i = 0; i < w.size(); ++i)
                    os << (i ? "," : "") << C.basis[w[i]].name;
                os << ")";
                r.message = os.str();
                return r;
            }
        }
    }
    AinfCheck r;
    r.ok = true;
    r.kind = AinfCheck::Kind::Ok;
    return r;
}

AInfFunctor identity_functor(const AInfCategory& C) {
    AInfFunctor Fn;
    Fn.name = "id_" + C.name;
    for (int oid = 0; oid < (int)C.objects.size(); ++oid) Fn.obj_map[oid] = oid;
    for (int i = 0; i < (int)C.basis.size(); ++i)
        Fn.add(Word{i}, i, Scalar::one(C.field));
    return Fn;
}

AInfFunctor inclusion_functor(const AInfCategory& C, const AInfCategory& Cplus) {
    if (Cplus.basis.size() < C.basis.size())
        throw std::runtime_error("inclusion_functor: target has fewer letters than source");
    AInfFunctor Fn;
    Fn.name = C.name + "_into_" + Cplus.name;
    for (int oid = 0; oid < (int)C.objects.size(); ++oid) Fn.obj_map[oid] = oid;
    for (int i = 0; i < (int)C.basis.size(); ++i) {
        if (Cplus.basis[i].name != C.basis[i].name)
            throw std::runtime_error("inclusion_functor: basis mismatch at " + C.basis[i].name);
        Fn.add(Word{i}, i, Scalar::one(C.field));
    }
    return Fn;
}

AInfFunctor unitalize_functor(const AInfCategory& C, const AInfCategory& D,
                              const AInfCategory& Cplus, const AInfCategory& Dplus,
                              const AInfFunctor& Fn) {
    AInfFunctor Fp = Fn;
    Fp.name = Fn.name + "+";
    for (const auto& [oid, suC] : Cplus.strict_unit) {
        // only the adjoined letters are new; letters of C keep their ids
        if (suC.id < (int)C.basis.size()) continue;
        int tob = Fn.obj_map.at(oid);
        auto it = Dplus.strict_unit.find(tob);
        if (it == Dplus.strict_unit.end())
            throw std::runtime_error("unitalize_functor: target object lacks adjoined unit");
        // F(coeff_C * x_C) = coeff_D * x_D fixes the letter coefficient
        Scalar c = it->second.coeff / suC.coeff;
        Fp.add(Word{suC.id}, it->second.id, c);
    }
    (void)D;
    return Fp;
}

bool functor_unit_strict(const AInfCategory& C, const AInfCategory& D,
                         const AInfFunctor& Fn) {
    for (const auto& [oid, suC] : C.strict_unit) {
        auto it = D.strict_unit.find(Fn.obj_map.at(oid));
        if (it == D.strict_unit.end()) return false;
        SpVec want;
        want.emplace(it->second.id, it->second.coeff / suC.coeff);
        SpVec got = Fn.eval(Word{suC.id});
        SpVec diff = got;
        axpy(diff, Scalar::integer(D.field, -1), want);
        if (!diff.empty()) return false;
    }
    for (int s = 2; s < (int)Fn.F.size(); ++s)
        for (const auto& [w, v] : Fn.F[s]) {
            (void)v;
            for (int id : w)
                if (C.is_unit_letter(id)) return false;
        }
    return true;
}

AInfFunctor derive_functor(const AInfFunctor& Fn) {
    AInfFunctor d;
    d.name = "v(" + Fn.name + ")";
    d.obj_map = Fn.obj_map;
    for (int s = 1; s < (int)Fn.F.size(); ++s)
        for (const auto& [w, v] : Fn.F[s])
            for (const auto& [out, c] : v) {
                Scalar dc = c.derive();
                if (!dc.is_zero()) d.add(w, out, dc);
            }
    return d;
}

} // namespace nchodge
