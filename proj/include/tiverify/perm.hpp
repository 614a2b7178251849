#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tiv {

/// A permutation of the points {0, ..., degree-1}, stored as the image of
/// each point. Composition acts on the right: (p * q)(x) = q(p(x)), i.e.
/// apply p first. This matches the right-conjugation convention x^g used
/// throughout the library.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parses a product of cycles over 0-based points, e.g. "(0 1 2)(3 4)".
  /// Points may be separated by spaces or commas. The degree is one more
  /// than the largest point mentioned, or `min_degree` if that is larger.
  /// Throws Error on malformed input.
  static Permutation from_cycles(const std::string& text, int min_degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Same permutation acting on a larger point set (new points fixed).
  Permutation extended_to(int degree) const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&,
                                          const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace tiv
