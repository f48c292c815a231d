#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqconic {

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Composition applies the right factor first: (p * q)(x) == p(q(x)).
/// Cycle notation is 1-based and only used for input and output.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Accepts "()", "(12)(34)", "(1 2)(3 4)" and "(1,2)(3,4)".
  /// The compact form is only accepted when degree <= 9.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const { return images_; }

  Permutation operator*(const Permutation& right) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Multiplicative order.
  int order() const;

  /// "()" for the identity, "(12)(34)" when degree <= 9, "(1 2)(3 4)" otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Parses a comma separated list of cycle-notation permutations, optionally
/// wrapped in angle brackets: "<(12),(34)>" or "(1234),(13)".
std::vector<Permutation> parse_generator_list(std::string_view text, int degree);

}  // namespace eqconic
