#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "scharc/matrix.hpp"

namespace scharc {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Conjugacy classes of an enumerated group. Classes are sorted by their
/// least element, so class 0 is {identity}.
struct ConjClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  int count() const { return static_cast<int>(classes.size()); }
  int rep(int c) const { return classes[c].front(); }
  std::uint64_t size(int c) const { return classes[c].size(); }
};

/// A finite group whose elements are the integers 0 .. order-1, with 0 the
/// identity. Derived data (multiplication table, classes, generators) is
/// computed on first use and shared.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  virtual ~FiniteGroup() = default;

  std::uint64_t order() const { return order_; }
  int size() const { return static_cast<int>(order_); }

  int mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return mul_impl(a, b);
  }
  int inv(int a) const { return inverses_.empty() ? inv_impl(a) : inverses_[a]; }
  /// g x g^{-1}.
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int a, std::uint64_t e) const;
  int element_order(int a) const;

  /// Stable human-readable element code.
  virtual std::string code(int a) const = 0;
  /// Description of the group, used for identity checks and provenance.
  virtual std::string describe() const = 0;
  /// Matrix form, when the group is a matrix group.
  virtual std::optional<SqMat> matrix(int) const { return std::nullopt; }
  /// Element with the given matrix, when the group is a matrix group.
  virtual std::optional<int> find_matrix(const SqMat&) const { return std::nullopt; }

  const ConjClasses& classes() const;
  const std::vector<int>& generators() const;
  int exponent() const;
  bool is_abelian() const;

  /// Builds the multiplication and inverse tables when the order is at most
  /// `limit`. Called automatically by operations that sweep the group.
  void ensure_tables(std::uint64_t limit = 2048) const;

  bool same_as(const FiniteGroup& o) const { return this == &o || describe() == o.describe(); }

 protected:
  explicit FiniteGroup(std::uint64_t order) : order_(order) {}
  virtual int mul_impl(int a, int b) const = 0;
  virtual int inv_impl(int a) const = 0;
  /// Natural generating set, if known; default is a greedy search.
  virtual std::vector<int> natural_generators() const;

 private:
  std::uint64_t order_;
  mutable std::once_flag table_once_;
  mutable std::vector<int> table_;
  mutable std::vector<int> inverses_;
  mutable std::once_flag classes_once_;
  mutable ConjClasses classes_;
  mutable std::once_flag gens_once_;
  mutable std::vector<int> gens_;
};

enum class SpringerKind { Algebra, Cayley };

/// The group f^{-1}(space), where f(g) = g - 1 (algebra groups) or the Cayley
/// map f(g) = 2(g - 1)(g + 1)^{-1}. Element ids are the base-p encodings of
/// the coordinates of f(g) in the space.
class MatrixGroup : public FiniteGroup {
 public:
  static std::shared_ptr<const MatrixGroup> create(LieSpace space, SpringerKind kind, std::string name);

  const LieSpace& space() const { return space_; }
  SpringerKind kind() const { return kind_; }
  const FieldPtr& field() const { return space_.field(); }
  int n() const { return space_.n(); }

  /// f(g) as a matrix of the Lie space.
  SqMat lie(int a) const { return space_.element(static_cast<std::uint64_t>(a)); }
  FpVec lie_coords(int a) const { return decode_coords(static_cast<std::uint64_t>(a), space_.p(), space_.dim()); }
  int id_of_coords(const FpVec& c) const { return static_cast<int>(encode_coords(c, space_.p())); }
  /// Element whose image under f is x; x must lie in the space.
  int id_of_lie(const SqMat& x) const { return id_of_coords(space_.coords(x)); }

  SqMat to_group_matrix(const SqMat& x) const;
  SqMat to_lie_matrix(const SqMat& g) const;

  std::string code(int a) const override;
  std::string describe() const override { return name_; }
  std::optional<SqMat> matrix(int a) const override;
  std::optional<int> find_matrix(const SqMat& g) const override;

 protected:
  int mul_impl(int a, int b) const override;
  int inv_impl(int a) const override;
  std::vector<int> natural_generators() const override;

 private:
  MatrixGroup(LieSpace space, SpringerKind kind, std::string name);

  LieSpace space_;
  SpringerKind kind_;
  std::string name_;
  // Sparse structure constants of the space as an algebra (algebra kind only):
  // (a, b, t, c) means basis_a * basis_b contributes c * basis_t.
  struct Term {
    int a, b, t, c;
  };
  std::vector<Term> structure_;
  bool closed_ = false;
};

using MatrixGroupPtr = std::shared_ptr<const MatrixGroup>;

/// A subgroup given by its elements inside a parent group.
class SubGroup : public FiniteGroup {
 public:
  /// `elements` must be closed under multiplication; they are sorted and the
  /// closure is verified (throws NotSubgroup).
  static std::shared_ptr<const SubGroup> create(GroupPtr parent, std::vector<int> elements, std::string name);
  /// Subgroup generated by the given parent elements.
  static std::shared_ptr<const SubGroup> generated(GroupPtr parent, const std::vector<int>& gens, std::string name);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int to_parent(int a) const { return elements_[a]; }
  /// Subgroup index of a parent element, or -1.
  int from_parent(int g) const {
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
  }

  std::string code(int a) const override { return parent_->code(elements_[a]); }
  std::string describe() const override { return name_; }
  std::optional<SqMat> matrix(int a) const override { return parent_->matrix(elements_[a]); }
  std::optional<int> find_matrix(const SqMat& g) const override;

 protected:
  int mul_impl(int a, int b) const override { return from_parent(parent_->mul(elements_[a], elements_[b])); }
  int inv_impl(int a) const override { return from_parent(parent_->inv(elements_[a])); }

 private:
  SubGroup(GroupPtr parent, std::vector<int> elements, std::string name);
  GroupPtr parent_;
  std::vector<int> elements_;
  std::unordered_map<int, int> index_;
  std::string name_;
};

using SubGroupPtr = std::shared_ptr<const SubGroup>;

/// External direct product A x B, element (a, b) has id a * |B| + b.
class ProductGroup : public FiniteGroup {
 public:
  static std::shared_ptr<const ProductGroup> create(GroupPtr a, GroupPtr b);
  const GroupPtr& left() const { return a_; }
  const GroupPtr& right() const { return b_; }
  int pair(int a, int b) const { return a * b_->size() + b; }
  int left_of(int g) const { return g / b_->size(); }
  int right_of(int g) const { return g % b_->size(); }

  std::string code(int g) const override { return a_->code(left_of(g)) + "|" + b_->code(right_of(g)); }
  std::string describe() const override { return a_->describe() + " x " + b_->describe(); }

 protected:
  int mul_impl(int x, int y) const override {
    return pair(a_->mul(left_of(x), left_of(y)), b_->mul(right_of(x), right_of(y)));
  }
  int inv_impl(int x) const override { return pair(a_->inv(left_of(x)), b_->inv(right_of(x))); }

 private:
  ProductGroup(GroupPtr a, GroupPtr b);
  GroupPtr a_;
  GroupPtr b_;
};

/// Ids in B of the elements of A, for A a subgroup of B (same matrices or a
/// SubGroup chain). Throws NotSubgroup otherwise.
std::vector<int> embedding(const FiniteGroup& A, const FiniteGroup& B);

/// Closure of a set of generators inside G, as sorted ids.
std::vector<int> generate(const FiniteGroup& G, const std::vector<int>& gens);

}  // namespace scharc
