#pragma once

#include <vector>

#include "scharc/cyclotomic.hpp"
#include "scharc/group.hpp"

namespace scharc {

/// A class function stored by its values on the conjugacy classes of its
/// group (in the group's class order).
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr G, std::vector<Cyclotomic> values);

  /// The constant function c.
  static ClassFunction constant(GroupPtr G, const Cyclotomic& c);
  /// Regular character.
  static ClassFunction regular(GroupPtr G);
  /// Builds values by evaluating fn at each class representative.
  template <class Fn>
  static ClassFunction from_elements(GroupPtr G, Fn&& fn) {
    const auto& cc = G->classes();
    std::vector<Cyclotomic> v;
    v.reserve(cc.count());
    for (int c = 0; c < cc.count(); ++c) v.push_back(fn(cc.rep(c)));
    return ClassFunction(std::move(G), std::move(v));
  }

  const GroupPtr& group() const { return G_; }
  const std::vector<Cyclotomic>& values() const { return v_; }
  const Cyclotomic& on_class(int c) const { return v_[c]; }
  const Cyclotomic& operator()(int element) const { return v_[G_->classes().class_of[element]]; }
  const Cyclotomic& degree() const { return v_[0]; }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const Cyclotomic& c) const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }
  bool is_zero() const;
  /// Complex conjugate.
  ClassFunction conj() const;
  /// c with *this == c * o, if any (o nonzero).
  std::optional<Cyclotomic> ratio_to(const ClassFunction& o) const;

 private:
  GroupPtr G_;
  std::vector<Cyclotomic> v_;
};

/// Pointwise product.
ClassFunction cf_pointwise(const ClassFunction& f, const ClassFunction& g);
/// (f * g)(x) = 1/|G| sum_y f(y) g(y^{-1} x).
ClassFunction cf_convolve(const ClassFunction& f, const ClassFunction& g);
/// 1/|G| sum_x f(x) conj(g(x)).
Cyclotomic cf_inner(const ClassFunction& f, const ClassFunction& g);

/// Ind_A^B f, with A embedded in B (see embedding()).
ClassFunction induce(const ClassFunction& f, const GroupPtr& B);
/// Res_A^B f.
ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& A);
/// Inf along a surjective homomorphism pi: G -> H given elementwise; f is a
/// class function of H. Throws NotQuotient when pi is not a homomorphism.
ClassFunction inflate(const ClassFunction& f, const GroupPtr& G, const std::vector<int>& pi);
/// x -> f(g^{-1} x g), a class function of g A g^{-1} inside `ambient`
/// (f lives on A, a subgroup of ambient, and g is an element of ambient).
ClassFunction conjugate_cf(const ClassFunction& f, const GroupPtr& ambient, int g);
/// Same values as f, moved to a group with the same elements (via embedding).
ClassFunction transfer(const ClassFunction& f, const GroupPtr& B);

/// True when f is constant on every block (blocks are element-id lists).
bool is_superclass_function(const ClassFunction& f, const std::vector<std::vector<int>>& blocks);

}  // namespace scharc
