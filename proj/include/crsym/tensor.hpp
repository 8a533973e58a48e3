#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "crsym/scalar.hpp"

namespace crsym {

using Index = std::vector<int>;

// Sparse mixed tensor. Keys list the upper indices followed by the lower ones.
// With upper == lower == d the pairs (upper_i, lower_i) are called columns.
class MixedTensor {
 public:
  MixedTensor() = default;
  MixedTensor(int upper, int lower, int dim) : upper_(upper), lower_(lower), dim_(dim) {}

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  int dim() const { return dim_; }
  const std::map<Index, GaussianRational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  GaussianRational get(const Index& key) const;
  void set(const Index& key, const GaussianRational& v);
  void add(const Index& key, const GaussianRational& v);

  MixedTensor& operator+=(const MixedTensor& o);
  MixedTensor& operator-=(const MixedTensor& o);
  MixedTensor& operator*=(const GaussianRational& c);
  friend MixedTensor operator+(MixedTensor a, const MixedTensor& b) { return a += b; }
  friend MixedTensor operator-(MixedTensor a, const MixedTensor& b) { return a -= b; }
  friend MixedTensor operator*(MixedTensor a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const MixedTensor& a, const MixedTensor& b);

  // Contract upper slot u with lower slot l.
  MixedTensor contract(int u, int l) const;
  bool is_trace_free() const;
  // Simultaneous permutation of columns: column m of the result is column perm[m] of this.
  MixedTensor permute_columns(const std::vector<int>& perm) const;
  bool is_column_symmetric() const;
  MixedTensor column_symmetrized() const;

  nlohmann::json to_json() const;

 private:
  void check_key(const Index& key) const;
  int upper_ = 0;
  int lower_ = 0;
  int dim_ = 0;
  std::map<Index, GaussianRational> entries_;
};

std::vector<std::vector<int>> all_permutations(int k);

}  // namespace crsym
