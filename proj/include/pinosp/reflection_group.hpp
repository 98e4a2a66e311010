#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pinosp/geometry.hpp"

namespace pinosp {

/// A reflection s in G with root alpha_s (a -1 eigenvector in V*) and
/// coroot alpha_s^vee = 2 beta(alpha_s) / B(alpha_s, alpha_s).
struct Reflection {
  int element = 0;  // group element index
  Covector root;
  Vector coroot;
  BaseNumber root_norm;  // B(alpha_s, alpha_s)
  int cls = 0;           // conjugacy class, 0-based
};

/// Finite reflection group G inside O(V, B), stored as an indexed element
/// list. Element 0 is the identity; matrices act on covector coordinates.
class ReflectionGroup {
 public:
  /// Closes the generators under multiplication. Throws if a generator does
  /// not preserve B or the order exceeds `max_order`.
  ReflectionGroup(QuadraticSpace space, const std::vector<Matrix>& generators, std::size_t max_order = 10000,
                  std::string name = "custom");

  const QuadraticSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  int order() const { return static_cast<int>(cov_.size()); }
  const std::string& name() const { return name_; }

  /// Matrix of g on covector coordinates: g(u) = M u.
  const Matrix& covector_matrix(int g) const { return cov_[g]; }
  /// Contragredient matrix on vector coordinates.
  const Matrix& vector_matrix(int g) const { return vec_[g]; }

  int multiply(int g, int h) const;
  int inverse(int g) const { return inverse_[g]; }
  int index_of(const Matrix& m) const;  // -1 if not an element

  const std::vector<Reflection>& reflections() const { return reflections_; }
  int class_count() const { return class_count_; }
  /// Position in reflections() of the reflection with this element index, or -1.
  int reflection_of(int g) const { return reflection_index_[g]; }

  CoordVector act(int g, const CoordVector& u) const;

  /// "1", "s<k>" for reflections (1-based in reflections()), "g<index>" otherwise.
  std::string label(int g) const;

 private:
  int lookup_or_add(const Matrix& m);

  QuadraticSpace space_;
  std::string name_;
  std::vector<Matrix> cov_, vec_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> table_;  // only for small groups
  std::vector<int> inverse_;
  std::vector<Reflection> reflections_;
  std::vector<int> reflection_index_;
  int class_count_ = 0;
};

enum class RootType { A, B, D };

/// Type A_n (rank n, natural dimension n+1), B_n or D_n (natural dimension
/// n), embedded in `ambient_dim` coordinates; extra coordinates are fixed.
ReflectionGroup build_group(RootType type, int rank, int ambient_dim);
ReflectionGroup build_group(RootType type, int rank, int ambient_dim, const Matrix& gram);

/// Parses "A1@2", "B2@2", ... (type, rank, ambient dimension).
ReflectionGroup parse_group_spec(const std::string& spec);

/// Custom group from JSON text: {"generators": [[[..]..]..], "gram": [[..]..] (optional),
/// "kappa_labels": [..] (optional)}; entries are integers or "p/q" strings.
struct CustomGroup {
  std::shared_ptr<ReflectionGroup> group;
  std::vector<std::string> kappa_labels;
};
CustomGroup parse_custom_group(const std::string& json_text);

}  // namespace pinosp
