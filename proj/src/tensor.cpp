#include "crsym/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crsym {

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void MixedTensor::check_key(const Index& key) const {
  if (static_cast<int>(key.size()) != upper_ + lower_) throw std::invalid_argument("tensor arity mismatch");
  for (int x : key)
    if (x < 0 || x >= dim_) throw std::out_of_range("tensor index out of range");
}

GaussianRational MixedTensor::get(const Index& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? GaussianRational() : it->second;
}

void MixedTensor::set(const Index& key, const GaussianRational& v) {
  check_key(key);
  if (v.is_zero()) {
    entries_.erase(key);
  } else {
    entries_[key] = v;
  }
}

void MixedTensor::add(const Index& key, const GaussianRational& v) {
  if (v.is_zero()) return;
  check_key(key);
  auto [it, inserted] = entries_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

MixedTensor& MixedTensor::operator+=(const MixedTensor& o) {
  if (o.upper_ != upper_ || o.lower_ != lower_ || o.dim_ != dim_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, v] : o.entries_) add(k, v);
  return *this;
}

MixedTensor& MixedTensor::operator-=(const MixedTensor& o) {
  if (o.upper_ != upper_ || o.lower_ != lower_ || o.dim_ != dim_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, v] : o.entries_) add(k, -v);
  return *this;
}

MixedTensor& MixedTensor::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

bool operator==(const MixedTensor& a, const MixedTensor& b) {
  return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

MixedTensor MixedTensor::contract(int u, int l) const {
  if (u < 0 || u >= upper_ || l < 0 || l >= lower_) throw std::out_of_range("contraction slot");
  MixedTensor out(upper_ - 1, lower_ - 1, dim_);
  std::size_t lu = static_cast<std::size_t>(u);
  std::size_t ll = static_cast<std::size_t>(upper_ + l);
  for (const auto& [k, v] : entries_) {
    if (k[lu] != k[ll]) continue;
    Index r;
    r.reserve(k.size() - 2);
    for (std::size_t i = 0; i < k.size(); ++i)
      if (i != lu && i != ll) r.push_back(k[i]);
    out.add(r, v);
  }
  return out;
}

bool MixedTensor::is_trace_free() const {
  for (int u = 0; u < upper_; ++u)
    for (int l = 0; l < lower_; ++l)
      if (!contract(u, l).is_zero()) return false;
  return true;
}

MixedTensor MixedTensor::permute_columns(const std::vector<int>& perm) const {
  if (upper_ != lower_ || static_cast<int>(perm.size()) != upper_) throw std::invalid_argument("column permutation");
  MixedTensor out(upper_, lower_, dim_);
  std::size_t d = perm.size();
  for (const auto& [k, v] : entries_) {
    Index r(k.size());
    // result column m carries source column perm[m]
    for (std::size_t m = 0; m < d; ++m) {
      r[m] = k[static_cast<std::size_t>(perm[m])];
      r[d + m] = k[d + static_cast<std::size_t>(perm[m])];
    }
    out.set(r, v);
  }
  return out;
}

bool MixedTensor::is_column_symmetric() const {
  for (const auto& p : all_permutations(upper_)) {
    if (!(permute_columns(p) == *this)) return false;
  }
  return true;
}

MixedTensor MixedTensor::column_symmetrized() const {
  auto perms = all_permutations(upper_);
  MixedTensor out(upper_, lower_, dim_);
  for (const auto& p : perms) out += permute_columns(p);
  out *= GaussianRational(make_rational(1, static_cast<long>(perms.size())));
  return out;
}

nlohmann::json MixedTensor::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, v] : entries_) arr.push_back({{"index", k}, {"value", v.to_string()}});
  return {{"upper", upper_}, {"lower", lower_}, {"dim", dim_}, {"entries", arr}};
}

}  // namespace crsym
