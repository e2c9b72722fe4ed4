#include "nchodge/linalg.hpp"

#include <stdexcept>

namespace nchodge {

void axpy(SpVec& y, const Scalar& a, const SpVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      Scalar w = a * v;
      if (!w.is_zero()) y.emplace(i, std::move(w));
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SpVec spvec_scaled(const SpVec& x, const Scalar& a) {
  SpVec out;
  if (a.is_zero()) return out;
  for (const auto& [i, v] : x) {
    Scalar w = v * a;
    if (!w.is_zero()) out.emplace_hint(out.end(), i, std::move(w));
  }
  return out;
}

bool Echelon::reduce(SpVec& v, SpVec* combo) const {
  while (!v.empty()) {
    const int pivot = v.begin()->first;
    auto it = rows_.find(pivot);
    if (it == rows_.end()) return false;
    const Scalar coeff = -v.begin()->second;
    axpy(v, coeff, it->second);
    if (combo) axpy(*combo, coeff, combos_.at(pivot));
  }
  return true;
}

int Echelon::insert(SpVec v, SpVec combo) {
  if (reduce(v, &combo)) return -1;
  const int pivot = v.begin()->first;
  const Scalar inv = v.begin()->second.inv();
  rows_.emplace(pivot, spvec_scaled(v, inv));
  combos_.emplace(pivot, spvec_scaled(combo, inv));
  return pivot;
}

SpVec SparseMatrix::apply(const SpVec& x) const {
  SpVec out;
  for (const auto& [j, coeff] : x) {
    if (j < 0 || j >= ncols()) throw std::out_of_range("column index out of range");
    axpy(out, coeff, cols[j]);
  }
  return out;
}

int sparse_rank(const SparseMatrix& m) {
  Echelon ech;
  for (const SpVec& col : m.cols) ech.insert(col);
  return ech.rank();
}

std::vector<SpVec> sparse_kernel(const SparseMatrix& m) {
  Echelon ech;
  std::vector<SpVec> kernel;
  for (int j = 0; j < m.ncols(); ++j) {
    SpVec v = m.cols[j];
    SpVec combo{{j, Scalar::one(m.tag)}};
    if (ech.reduce(v, &combo)) {
      // Column j holds coefficient 1 in combo and cannot appear in earlier
      // kernel vectors, so the collected set is independent as it stands.
      kernel.push_back(std::move(combo));
    } else {
      ech.insert(std::move(v), std::move(combo));
    }
  }
  return kernel;
}

HomologySummary homology_core(const SparseMatrix& into, const SparseMatrix& outof,
                              bool check_composite) {
  if (check_composite) {
    for (const SpVec& col : into.cols) {
      if (!outof.apply(col).empty())
        throw std::logic_error("homology_core: maps do not compose to zero");
    }
  }
  Echelon image;
  for (const SpVec& col : into.cols) image.insert(col);

  HomologySummary out;
  for (SpVec k : sparse_kernel(outof)) {
    if (!image.reduce(k)) {
      out.reps.push_back(k);
      image.insert(std::move(k));
    }
  }
  out.dim = static_cast<int>(out.reps.size());
  return out;
}

int homology_dim_ranks(const SparseMatrix& into, const SparseMatrix& outof) {
  if (into.nrows != outof.ncols())
    throw std::invalid_argument("homology_dim_ranks: middle dimensions disagree");
  return outof.ncols() - sparse_rank(outof) - sparse_rank(into);
}

int induced_homology_rank(const SparseMatrix& f, const SparseMatrix& outof,
                          const SparseMatrix& into_prime) {
  if (f.ncols() != outof.ncols())
    throw std::invalid_argument("induced_homology_rank: f and outof domains disagree");
  if (f.nrows != into_prime.nrows)
    throw std::invalid_argument("induced_homology_rank: f and into' codomains disagree");
  // stacked matrix [[f, into'], [outof, 0]]: x-columns carry f(x) on top of
  // outof(x), y-columns carry into'(y) in the top block only
  SparseMatrix big;
  big.tag = f.tag;
  big.nrows = f.nrows + outof.nrows;
  big.cols.reserve(f.cols.size() + into_prime.cols.size());
  for (int j = 0; j < f.ncols(); ++j) {
    SpVec col = f.cols[j];
    for (const auto& [i, c] : outof.cols[j]) col.emplace(f.nrows + i, c);
    big.cols.push_back(std::move(col));
  }
  for (const SpVec& col : into_prime.cols) big.cols.push_back(col);
  return sparse_rank(big) - sparse_rank(outof) - sparse_rank(into_prime);
}

int GradedSpace::add(const std::string& label, int degree) {
  if (index.count(label)) throw std::invalid_argument("duplicate basis label: " + label);
  const int id = dim();
  labels.push_back(label);
  degrees.push_back(degree);
  index.emplace(label, id);
  return id;
}

int GradedSpace::find(const std::string& label) const {
  auto it = index.find(label);
  return it == index.end() ? -1 : it->second;
}

void SparseMap::add_entry(const std::string& to, const std::string& from, const Scalar& coeff) {
  const int r = cod.find(to);
  const int c = dom.find(from);
  if (r < 0) throw std::invalid_argument("unknown codomain label: " + to);
  if (c < 0) throw std::invalid_argument("unknown domain label: " + from);
  if (coeff.is_zero()) return;
  auto key = std::make_pair(r, c);
  auto it = entries.find(key);
  if (it == entries.end()) entries.emplace(key, coeff);
  else {
    it->second += coeff;
    if (it->second.is_zero()) entries.erase(it);
  }
}

SparseMatrix SparseMap::matrix() const {
  SparseMatrix m;
  m.tag = tag;
  m.nrows = cod.dim();
  m.cols.assign(dom.dim(), SpVec{});
  for (const auto& [key, coeff] : entries) m.cols[key.second].emplace(key.first, coeff);
  return m;
}

SpVec SparseMap::apply(const SpVec& x) const { return matrix().apply(x); }

void SparseMap::check_degrees() const {
  for (const auto& [key, coeff] : entries) {
    (void)coeff;
    if (cod.degrees[key.first] != dom.degrees[key.second] + degree)
      throw std::logic_error("SparseMap entry violates its degree shift: " +
                             dom.labels[key.second] + " -> " + cod.labels[key.first]);
  }
}

int rank(const SparseMap& f) { return sparse_rank(f.matrix()); }

std::vector<SpVec> kernel_basis(const SparseMap& f) { return sparse_kernel(f.matrix()); }

HomologySummary homology_at(const SparseMap& into, const SparseMap& outof) {
  if (into.cod.labels != outof.dom.labels || into.cod.degrees != outof.dom.degrees)
    throw std::invalid_argument("homology_at: middle spaces disagree");
  return homology_core(into.matrix(), outof.matrix(), true);
}

Scalar supertrace(const SparseMap& endo) {
  if (endo.degree != 0) throw std::invalid_argument("supertrace needs a degree-0 map");
  if (endo.dom.labels != endo.cod.labels || endo.dom.degrees != endo.cod.degrees)
    throw std::invalid_argument("supertrace needs equal domain and codomain");
  Scalar out = Scalar::zero(endo.tag);
  for (const auto& [key, coeff] : endo.entries) {
    if (key.first != key.second) continue;
    const int deg = endo.dom.degrees[key.first];
    const int par = ((deg % 2) + 2) % 2;
    out += par == 0 ? coeff : -coeff;
  }
  return out;
}

} // namespace nchodge
