#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crsym/report.hpp"
#include "crsym/scalar.hpp"

namespace crsym {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
// One-line notation over {0..k-1}; compose(a, b)[i] = a[b[i]].
using Perm = std::vector<int>;
// Coefficients on averaged class sums, keyed by cycle type.
using ClassElement = std::map<Partition, Rational>;
using GroupAlgebraElement = std::map<Perm, GaussianRational>;
// Rows of a tableau; entries 0..k-1.
using Tableau = std::vector<std::vector<int>>;

// All partitions of k in increasing lexicographic order: (1^k) first, (k) last.
std::vector<Partition> partitions(int k);
std::string partition_to_string(const Partition& p);
long factorial_l(int k);

Perm identity_perm(int k);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
int perm_sign(const Perm& p);
Partition cycle_type(const Perm& p);
std::vector<Perm> all_perms(int k);

long class_size(const Partition& mu);
std::vector<std::pair<Partition, long>> conjugacy_classes(int k);

ClassElement class_basis(const Partition& mu);
// Exact product-probability structure constants; enumeration for k <= 7, characters above.
ClassElement class_multiply(const ClassElement& u, const ClassElement& v, int k);
ClassElement class_multiply_characters(const ClassElement& u, const ClassElement& v, int k);
// Product of averaged class sums in the group algebra.
ClassElement center_convolution(const ClassElement& u, const ClassElement& v, int k);
std::string class_element_to_string(const ClassElement& e, const std::map<Partition, std::string>& names = {});

long mn_character(const Partition& lambda, const Partition& mu);
long hook_dimension(const Partition& lambda);
std::vector<Tableau> standard_tableaux(const Partition& lambda);

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scaled(const GroupAlgebraElement& a, const GaussianRational& c);
GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_identity(int k);
GroupAlgebraElement averaged_class_sum(const Partition& mu);
GroupAlgebraElement central_idempotent(const Partition& lambda);
// Column antisymmetrizer times row symmetrizer, unnormalized.
GroupAlgebraElement young_symmetrizer(const Tableau& t);
// (dim/k!) sum over standard tableaux of the Young symmetrizers.
GroupAlgebraElement young_projector_sum(const Partition& lambda);

// Cells "(tau):p/q" joined by spaces; rows sigma', columns sigma.
std::string structure_constants_csv(int k);
nlohmann::json class_table_json(int k);

VerificationReport verify_classalg(int k);
VerificationReport oracle_equivalence(int k_max);

}  // namespace crsym
