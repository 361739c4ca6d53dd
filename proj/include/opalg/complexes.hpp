#pragma once

#include <optional>
#include <vector>

#include "opalg/linalg.hpp"

namespace opalg {

// Cochain complex: finite graded space with a degree +1 differential.
class Complex {
 public:
  Complex() = default;
  Complex(SpacePtr space, GradedMap d);
  static Complex with_zero_differential(SpacePtr space);
  static Complex unit();

  const SpacePtr& space() const { return space_; }
  const GradedMap& d() const { return d_; }
  int dim() const { return space_->dim(); }

 private:
  SpacePtr space_;
  GradedMap d_;
};

// [∂,h] = ∂ h − (−1)^{|h|} h ∂ for h : X → Y.
GradedMap commutator(const Complex& Y, const GradedMap& h, const Complex& X);
bool is_chain_map(const GradedMap& f, const Complex& X, const Complex& Y);

// A map satisfying ∂f − (−1)^{|f|} f∂ = 0; validated on construction.
struct ChainMap {
  ChainMap(GradedMap f, Complex source, Complex target);
  GradedMap map;
  Complex source, target;
};

// A homogeneous map with no compatibility requirement.
struct FreeMap {
  FreeMap(GradedMap f, Complex source, Complex target);
  GradedMap map;
  Complex source, target;
};

Complex tensor(const Complex& X, const Complex& Y, const DegreeWindow& w = DegreeWindow::unbounded());
Complex tensor(const std::vector<Complex>& factors, const DegreeWindow& w = DegreeWindow::unbounded());
// Koszul-signed tensor of maps: (f⊗g)(x⊗y) = (−1)^{|g||x|} f x ⊗ g y.
GradedMap tensor_maps_signed(const std::vector<GradedMap>& maps);
ChainMap braiding(const Complex& X, const Complex& Y);

// Basis of inner_hom(Y,Z) is the elementary map E(z,y) at index z*dim(Y)+y.
Complex inner_hom(const Complex& Y, const Complex& Z, const DegreeWindow& w = DegreeWindow::unbounded());
// Coordinates of a map Y -> Z of degree n as an element of inner_hom(Y,Z).
SparseVec hom_element(const GradedMap& f);
GradedMap hom_map(const Complex& Y, const Complex& Z, const SparseVec& v, int degree);

Complex shift(const Complex& X, int k);
Complex direct_sum(const Complex& X, const Complex& Y);

SpacePtr cohomology(const Complex& X);
bool is_quasi_iso(const ChainMap& f);

struct Cone {
  Complex complex;
  ChainMap inclusion;   // E -> cone
  FreeMap projection;   // cone -> E, not compatible with differentials
  ChainMap to_shift;    // cone -> E'[1]
};
Cone cone(const ChainMap& f);

// h of degree |f|-1 with [∂,h] = f, or nullopt.
std::optional<FreeMap> null_homotopy(const GradedMap& f, const Complex& X, const Complex& Y);

struct ShortExact {
  ChainMap i;  // E' -> E
  ChainMap p;  // E -> E''
};
void check_exact(const ShortExact& s);
// Chain map E'' -> E'[1] given by p∘s^{-1} through the cone, i.e.
// i^{-1}(s∂ − ∂s). The result is returned as a degree +1 map E'' -> E'.
GradedMap extension_class(const ShortExact& s, const std::optional<GradedMap>& section = std::nullopt);

}  // namespace opalg
