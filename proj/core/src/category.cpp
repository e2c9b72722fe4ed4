#include "nchodge/category.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nchodge {

namespace {

std::string word_str(const AInfCategory& cat, const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += cat.basis[w[i]].name;
  }
  return out + ")";
}

std::string spvec_str(const AInfCategory& cat, const SpVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [id, coeff] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.str() + ")*" + cat.basis[id].name;
  }
  return out;
}

} // namespace

int AInfCategory::add_object(const std::string& label) {
  for (const auto& o : objects)
    if (o == label) throw std::invalid_argument("duplicate object: " + label);
  objects.push_back(label);
  return static_cast<int>(objects.size()) - 1;
}

int AInfCategory::add_basis(const std::string& mor_name, int src, int dst, int deg) {
  if (basis_index.count(mor_name))
    throw std::invalid_argument("duplicate morphism name: " + mor_name);
  if (src < 0 || dst < 0 || src >= static_cast<int>(objects.size()) ||
      dst >= static_cast<int>(objects.size()))
    throw std::out_of_range("morphism endpoints out of range: " + mor_name);
  const int id = static_cast<int>(basis.size());
  basis.push_back({mor_name, src, dst, grading.normalize(deg)});
  basis_index.emplace(mor_name, id);
  hom_basis[{src, dst}].push_back(id);
  return id;
}

void AInfCategory::add_mu(const Word& inputs, int out, const Scalar& coeff) {
  const int s = static_cast<int>(inputs.size());
  if (s < 1) throw std::invalid_argument("mu needs at least one input");
  if (coeff.is_zero()) return;
  if (!word_composable(inputs))
    throw std::invalid_argument("mu entry on non-composable word " + word_str(*this, inputs));
  if (src(inputs.front()) != src(out) || dst(inputs.back()) != dst(out))
    throw std::invalid_argument("mu entry lands in the wrong hom space at " +
                                word_str(*this, inputs));
  if (s > s_max) {
    s_max = s;
    mu.resize(s_max + 1);
  }
  if (mu.empty()) mu.resize(s_max + 1);
  auto& table = mu[s][inputs];
  auto it = table.find(out);
  if (it == table.end()) table.emplace(out, coeff);
  else {
    it->second += coeff;
    if (it->second.is_zero()) table.erase(it);
  }
  if (table.empty()) mu[s].erase(inputs);
}

void AInfCategory::add_mu_by_name(const std::vector<std::string>& inputs, const std::string& out,
                                  const Scalar& coeff) {
  Word w;
  w.reserve(inputs.size());
  for (const auto& n : inputs) w.push_back(id_of(n));
  add_mu(w, id_of(out), coeff);
}

int AInfCategory::id_of(const std::string& mor_name) const {
  auto it = basis_index.find(mor_name);
  if (it == basis_index.end()) throw std::invalid_argument("unknown morphism: " + mor_name);
  return it->second;
}

const std::vector<int>& AInfCategory::hom(int s, int d) const {
  static const std::vector<int> empty;
  auto it = hom_basis.find({s, d});
  return it == hom_basis.end() ? empty : it->second;
}

const SpVec* AInfCategory::mu_entry(const Word& inputs) const {
  const int s = static_cast<int>(inputs.size());
  if (s < 1 || s > s_max) return nullptr;
  auto it = mu[s].find(inputs);
  return it == mu[s].end() ? nullptr : &it->second;
}

bool AInfCategory::word_composable(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (dst(w[i]) != src(w[i + 1])) return false;
  return true;
}

bool AInfCategory::cyclic_composable(const Word& w) const {
  if (w.empty()) return false;
  return word_composable(w) && dst(w.back()) == src(w.front());
}

bool AInfCategory::has_strict_units() const {
  if (strict_unit.size() != objects.size()) return false;
  return true;
}

const StrictUnit& AInfCategory::strict_unit_for(int object) const {
  auto it = strict_unit.find(object);
  if (it == strict_unit.end())
    throw std::logic_error("no strict unit designated for object " + objects.at(object));
  return it->second;
}

bool AInfCategory::is_unit_letter(int id) const {
  for (const auto& [obj, su] : strict_unit) {
    (void)obj;
    if (su.id == id) return true;
  }
  return false;
}

SpVec eval_mu(const AInfCategory& cat, const Word& w) {
  const SpVec* entry = cat.mu_entry(w);
  return entry ? *entry : SpVec{};
}

namespace {

void expand_mixed(const AInfCategory& cat, std::vector<Slot>& slots, std::size_t from,
                  const Scalar& coeff, Word& scratch, SpVec& acc) {
  for (std::size_t i = from; i < slots.size(); ++i) {
    if (slots[i].vec) {
      const SpVec* vec = slots[i].vec;
      for (const auto& [id, c] : *vec) {
        slots[i] = Slot(id);
        expand_mixed(cat, slots, i + 1, coeff * c, scratch, acc);
      }
      slots[i] = Slot(vec);
      return;
    }
  }
  scratch.clear();
  for (const Slot& s : slots) scratch.push_back(s.id);
  const SpVec* entry = cat.mu_entry(scratch);
  if (entry) axpy(acc, coeff, *entry);
}

} // namespace

SpVec eval_mu_mixed(const AInfCategory& cat, const std::vector<Slot>& slots) {
  std::vector<Slot> work = slots;
  Word scratch;
  SpVec acc;
  expand_mixed(cat, work, 0, Scalar::one(cat.field), scratch, acc);
  return acc;
}

std::vector<Word> composable_words(const AInfCategory& cat, int length, bool cyclic) {
  std::vector<Word> out;
  if (length <= 0) return out;
  const int n = static_cast<int>(cat.basis.size());
  Word w;
  w.reserve(length);
  // Depth-first in id order yields lexicographic output order.
  std::function<void()> rec = [&]() {
    if (static_cast<int>(w.size()) == length) {
      if (!cyclic || cat.dst(w.back()) == cat.src(w.front())) out.push_back(w);
      return;
    }
    for (int id = 0; id < n; ++id) {
      if (!w.empty() && cat.dst(w.back()) != cat.src(id)) continue;
      w.push_back(id);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

AinfCheck AinfCheck::fail(Kind k, Word w, SpVec d, std::string msg) {
  AinfCheck out;
  out.kind = k;
  out.ok = false;
  out.witness = std::move(w);
  out.defect = std::move(d);
  out.message = std::move(msg);
  return out;
}

AinfCheck check_ainf(const AInfCategory& cat, int cap) {
  // Table well-formedness first: composability is enforced on insertion,
  // degree homogeneity is checked here.
  for (int s = 1; s <= cat.s_max; ++s) {
    for (const auto& [w, val] : cat.mu[s]) {
      int in_deg = 2 - s;
      for (int id : w) in_deg += cat.deg(id);
      for (const auto& [out, coeff] : val) {
        (void)coeff;
        if (!cat.grading.equal(cat.deg(out), in_deg)) {
          std::ostringstream msg;
          msg << "degree violation: mu" << s << word_str(cat, w) << " hits "
              << cat.basis[out].name << " of degree " << cat.deg(out) << ", expected "
              << cat.grading.normalize(in_deg);
          return AinfCheck::fail(AinfCheck::Kind::BadDegree, w, val, msg.str());
        }
      }
    }
  }

  // Quadratic relations on composable words of length 1..cap, shortest and
  // lexicographically first witness reported.
  for (int n = 1; n <= cap; ++n) {
    for (const Word& w : composable_words(cat, n, false)) {
      SpVec square;
      for (int j = 0; j < n; ++j) {
        int eps = 0;
        for (int i = 0; i < j; ++i) eps += cat.rp(w[i]);
        for (int k = j + 1; k <= n && k - j <= cat.s_max; ++k) {
          Word block(w.begin() + j, w.begin() + k);
          const SpVec* inner = cat.mu_entry(block);
          if (!inner || inner->empty()) continue;
          std::vector<Slot> slots;
          slots.reserve(n - (k - j) + 1);
          for (int i = 0; i < j; ++i) slots.emplace_back(w[i]);
          slots.emplace_back(inner);
          for (int i = k; i < n; ++i) slots.emplace_back(w[i]);
          SpVec outer = eval_mu_mixed(cat, slots);
          if (outer.empty()) continue;
          const Scalar sign = eps % 2 == 0 ? Scalar::one(cat.field) : -Scalar::one(cat.field);
          axpy(square, sign, outer);
        }
      }
      if (!square.empty()) {
        std::ostringstream msg;
        msg << "quadratic relation fails at word " << word_str(cat, w) << " with defect "
            << spvec_str(cat, square);
        return AinfCheck::fail(AinfCheck::Kind::BadRelation, w, square, msg.str());
      }
    }
  }
  return AinfCheck::pass();
}

AinfCheck check_strict_units(const AInfCategory& cat) {
  if (!cat.has_strict_units())
    return AinfCheck::fail(AinfCheck::Kind::BadUnit, {}, {},
                           "strict units are not designated for every object");
  const Scalar one = Scalar::one(cat.field);
  for (const auto& [obj, su] : cat.strict_unit) {
    if (su.id < 0 || su.coeff.is_zero())
      return AinfCheck::fail(AinfCheck::Kind::BadUnit, {}, {},
                             "strict unit of " + cat.objects[obj] + " is not a nonzero letter");
    if (cat.src(su.id) != obj || cat.dst(su.id) != obj || cat.deg(su.id) != cat.grading.normalize(0))
      return AinfCheck::fail(AinfCheck::Kind::BadUnit, {su.id}, {},
                             "strict unit of " + cat.objects[obj] + " is not a degree-0 endomorphism");
    if (!eval_mu(cat, {su.id}).empty())
      return AinfCheck::fail(AinfCheck::Kind::BadUnit, {su.id}, eval_mu(cat, {su.id}),
                             "strict unit of " + cat.objects[obj] + " is not closed");
    // Left and right unit laws against every composable letter.
    for (int a = 0; a < static_cast<int>(cat.basis.size()); ++a) {
      if (cat.src(a) == obj) {
        SpVec got = spvec_scaled(eval_mu(cat, {su.id, a}), su.coeff);
        SpVec want{{a, one}};
        if (got != want)
          return AinfCheck::fail(AinfCheck::Kind::BadUnit, {su.id, a}, got,
                                 "left unit law fails against " + cat.basis[a].name);
      }
      if (cat.dst(a) == obj) {
        SpVec got = spvec_scaled(eval_mu(cat, {a, su.id}), su.coeff);
        const Scalar sign = cat.grading.parity(cat.deg(a)) == 0 ? one : -one;
        SpVec want{{a, sign}};
        if (got != want)
          return AinfCheck::fail(AinfCheck::Kind::BadUnit, {a, su.id}, got,
                                 "right unit law fails against " + cat.basis[a].name);
      }
    }
  }
  // No higher tensor may touch a unit letter.
  for (int s = 1; s <= cat.s_max; ++s) {
    for (const auto& [w, val] : cat.mu[s]) {
      bool has_unit = false;
      for (int id : w) has_unit = has_unit || cat.is_unit_letter(id);
      if (has_unit && s != 2)
        return AinfCheck::fail(AinfCheck::Kind::BadUnit, w, val,
                               "higher tensor involves a strict unit letter");
    }
  }
  return AinfCheck::pass();
}

int DgCategory::add_object(const std::string& label) {
  for (const auto& o : objects)
    if (o == label) throw std::invalid_argument("duplicate object: " + label);
  objects.push_back(label);
  return static_cast<int>(objects.size()) - 1;
}

int DgCategory::add_basis(const std::string& mor_name, int src, int dst, int deg) {
  for (const auto& b : basis)
    if (b.name == mor_name) throw std::invalid_argument("duplicate morphism name: " + mor_name);
  basis.push_back({mor_name, src, dst, grading.normalize(deg)});
  return static_cast<int>(basis.size()) - 1;
}

namespace {
int dg_id(const DgCategory& dg, const std::string& mor_name) {
  for (std::size_t i = 0; i < dg.basis.size(); ++i)
    if (dg.basis[i].name == mor_name) return static_cast<int>(i);
  throw std::invalid_argument("unknown morphism: " + mor_name);
}

void dg_accumulate(SpVec& acc, int id, const Scalar& coeff) {
  auto it = acc.find(id);
  if (it == acc.end()) {
    if (!coeff.is_zero()) acc.emplace(id, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) acc.erase(it);
  }
}
} // namespace

void DgCategory::set_d(const std::string& from, const std::string& to, const Scalar& coeff) {
  dg_accumulate(d[dg_id(*this, from)], dg_id(*this, to), coeff);
}

void DgCategory::set_product(const std::string& f, const std::string& g, const std::string& out,
                             const Scalar& coeff) {
  dg_accumulate(product[{dg_id(*this, f), dg_id(*this, g)}], dg_id(*this, out), coeff);
}

AInfCategory from_dg(const DgCategory& dg) {
  const Scalar one = Scalar::one(dg.field);
  auto prod = [&](int f, int g) -> SpVec {
    auto it = dg.product.find({f, g});
    return it == dg.product.end() ? SpVec{} : it->second;
  };
  auto dvec = [&](const SpVec& v) -> SpVec {
    SpVec out;
    for (const auto& [id, c] : v) {
      auto it = dg.d.find(id);
      if (it != dg.d.end()) axpy(out, c, it->second);
    }
    return out;
  };
  auto prod_vec = [&](const SpVec& u, const SpVec& v) -> SpVec {
    SpVec out;
    for (const auto& [f, cf] : u)
      for (const auto& [g, cg] : v) axpy(out, cf * cg, prod(f, g));
    return out;
  };

  const int n = static_cast<int>(dg.basis.size());
  // d^2 = 0 and the graded Leibniz rule d(fg) = df g + (-1)^{|f|} f dg.
  for (int f = 0; f < n; ++f) {
    auto it = dg.d.find(f);
    SpVec df = it == dg.d.end() ? SpVec{} : it->second;
    if (!dvec(df).empty())
      throw std::invalid_argument("dg import: d^2 != 0 on " + dg.basis[f].name);
    for (const auto& [id, c] : df) {
      (void)c;
      if (!dg.grading.equal(dg.basis[id].deg, dg.basis[f].deg + 1))
        throw std::invalid_argument("dg import: d is not of degree +1 on " + dg.basis[f].name);
    }
  }
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) {
      if (dg.basis[f].dst != dg.basis[g].src) {
        if (dg.product.count({f, g}))
          throw std::invalid_argument("dg import: product on non-composable pair");
        continue;
      }
      SpVec lhs = dvec(prod(f, g));
      SpVec fdg = prod_vec(SpVec{{f, one}}, dg.d.count(g) ? dg.d.at(g) : SpVec{});
      SpVec dfg = prod_vec(dg.d.count(f) ? dg.d.at(f) : SpVec{}, SpVec{{g, one}});
      SpVec rhs = dfg;
      axpy(rhs, dg.grading.parity(dg.basis[f].deg) == 0 ? one : -one, fdg);
      if (lhs != rhs)
        throw std::invalid_argument("dg import: Leibniz rule fails on (" + dg.basis[f].name +
                                    "," + dg.basis[g].name + ")");
    }
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        if (dg.basis[f].dst != dg.basis[g].src || dg.basis[g].dst != dg.basis[h].src) continue;
        SpVec lhs = prod_vec(prod(f, g), SpVec{{h, one}});
        SpVec rhs = prod_vec(SpVec{{f, one}}, prod(g, h));
        if (lhs != rhs)
          throw std::invalid_argument("dg import: associativity fails at (" + dg.basis[f].name +
                                      "," + dg.basis[g].name + "," + dg.basis[h].name + ")");
      }

  AInfCategory cat;
  cat.name = dg.name;
  cat.grading = dg.grading;
  cat.field = dg.field;
  cat.objects = dg.objects;
  for (const auto& b : dg.basis) cat.add_basis(b.name, b.src, b.dst, b.deg);
  for (const auto& [id, v] : dg.d)
    for (const auto& [out, c] : v) cat.add_mu({id}, out, c);
  for (const auto& [fg, v] : dg.product) {
    const Scalar sign = dg.grading.parity(dg.basis[fg.first].deg) == 0 ? one : -one;
    for (const auto& [out, c] : v) cat.add_mu({fg.first, fg.second}, out, sign * c);
  }
  cat.unit = dg.unit;
  // A unit supported on one letter can serve as a designated strict unit if
  // it satisfies the strict laws; record it and let callers verify.
  for (const auto& [obj, v] : dg.unit)
    if (v.size() == 1) cat.strict_unit[obj] = {v.begin()->first, v.begin()->second};
  return cat;
}

AInfCategory opposite(const AInfCategory& cat) {
  AInfCategory op;
  op.name = cat.name + ".op";
  op.grading = cat.grading;
  op.field = cat.field;
  op.objects = cat.objects;
  op.family = cat.family;
  op.cy_dim = cat.cy_dim;
  for (const auto& b : cat.basis) op.add_basis(b.name, b.dst, b.src, b.deg);
  for (int s = 1; s <= cat.s_max; ++s) {
    for (const auto& [w, val] : cat.mu[s]) {
      Word rev(w.rbegin(), w.rend());
      int dagger = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) dagger += cat.rp(w[i]) * cat.rp(w[j]);
      const Scalar sign =
          dagger % 2 == 0 ? Scalar::one(cat.field) : -Scalar::one(cat.field);
      for (const auto& [out, c] : val) op.add_mu(rev, out, sign * c);
    }
  }
  for (const auto& [obj, v] : cat.unit) op.unit[obj] = v;
  // mu_op^2(e, a) = (-1)^{rp(e) rp(a)} mu^2(a, e) = -a for a strict unit e,
  // so the opposite designates -e.
  for (const auto& [obj, su] : cat.strict_unit)
    op.strict_unit[obj] = {su.id, -su.coeff, su.adjoined};
  return op;
}

AInfCategory unitalize(const AInfCategory& cat) {
  AInfCategory plus = cat;
  plus.name = cat.name + "+";
  // The cohomological units of cat (if any) keep representing the Chern
  // classes; only the strict-unit designation moves to the adjoined letters,
  // which are flagged so that normalization also kills the bare e+ words.
  plus.strict_unit.clear();
  const Scalar one = Scalar::one(cat.field);
  for (int obj = 0; obj < static_cast<int>(cat.objects.size()); ++obj) {
    // Pick a fresh label so iterated unitalization never collides.
    std::string label = "e+(" + cat.objects[obj] + ")";
    while (cat.basis_index.count(label)) label = "+" + label;
    const int e = plus.add_basis(label, obj, obj, 0);
    plus.strict_unit[obj] = {e, one, true};
  }
  // Unit multiplication rules; everything else involving e+ stays zero.
  for (int obj = 0; obj < static_cast<int>(cat.objects.size()); ++obj) {
    const int e = plus.strict_unit[obj].id;
    for (int a = 0; a < static_cast<int>(plus.basis.size()); ++a) {
      if (plus.src(a) == obj) plus.add_mu({e, a}, a, one);
      if (plus.dst(a) == obj && a != e) {
        const Scalar sign = plus.grading.parity(plus.deg(a)) == 0 ? one : -one;
        plus.add_mu({a, e}, a, sign);
      }
    }
  }
  return plus;
}

} // namespace nchodge
