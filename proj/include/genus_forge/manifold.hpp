#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "genus_forge/char_class_poly.hpp"
#include "genus_forge/rational.hpp"

namespace genus {

enum class GenusKind { Todd, Ahat, Lhat, Signature };

std::string_view to_string(GenusKind kind);
/// "todd", "ahat", "lhat", "signature"
GenusKind parse_genus_kind(std::string_view name);

using CharNumbers = std::map<Partition, long long>;

/// A manifold described by its characteristic numbers.
struct ManifoldData {
  std::string name;
  int real_dim = 0;
  std::optional<int> complex_dim;
  CharNumbers pontryagin_numbers;
  CharNumbers chern_numbers;
  bool spin = false;
  bool string = false;
  std::map<GenusKind, Rational> asserted_genera;

  /// Top Pontryagin weight real_dim/4, or nullopt when 4 does not divide real_dim.
  std::optional<int> pontryagin_weight() const;
  /// Every Pontryagin number is known (vacuously so when 4 does not divide real_dim).
  bool has_full_pontryagin() const;
  bool has_full_chern() const;

  friend bool operator==(const ManifoldData&, const ManifoldData&) = default;
};

/// Checks the structural invariants; throws InconsistentData naming the rule.
void validate(const ManifoldData& m);

struct GenusValue {
  Rational value;
  bool asserted = false;
};

GenusValue genus_value(const ManifoldData& m, GenusKind kind);

/// Fills Pontryagin numbers from Chern numbers via
/// 1 - p1 + p2 - ... = (1 - c1 + c2 - ...)(1 + c1 + c2 + ...).
ManifoldData chern_to_pontryagin(const ManifoldData& m);
/// m itself when its Pontryagin data is full, else its Chern conversion.
ManifoldData with_pontryagin(const ManifoldData& m);

ManifoldData product(const ManifoldData& a, const ManifoldData& b);
ManifoldData connected_sum(const ManifoldData& a, const ManifoldData& b);

ManifoldData complex_projective(int n);
ManifoldData sphere(int n);
ManifoldData torus(int k);
ManifoldData k3_surface();
ManifoldData quaternionic_projective_plane();
/// "CP<n>", "S<n>", "T<k>", "K3", "HP2"; throws UnknownManifold otherwise.
ManifoldData builtin(std::string_view name);
/// True when `name` has builtin syntax (even if the parameter is out of range).
bool is_builtin_name(std::string_view name);

/// The multiplicative class whose top weight gives the genus (includes the
/// 2^{2m} normalisation of L-hat).
CharClassPoly<Rational> genus_class(GenusKind kind, int weight_cap, int real_dim);

}  // namespace genus
