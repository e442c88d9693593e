#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fimod {

/// A morphism [m] -> [n] of the skeleton of FI, stored as its image list.
/// Elements of [n] are 1-based: images()[i - 1] is the image of i.
class Injection {
public:
  Injection() = default;
  /// Throws FimodError unless the images are distinct values in 1..n.
  Injection(std::size_t target_size, std::vector<int> images);

  static Injection identity(std::size_t n);
  /// [m] -> [n], i -> i.
  static Injection standard_inclusion(std::size_t m, std::size_t n);
  /// The adjacent transposition s_i of [n] swapping i and i + 1.
  static Injection transposition(std::size_t n, std::size_t i);

  std::size_t source_size() const { return images_.size(); }
  std::size_t target_size() const { return target_; }
  const std::vector<int>& images() const { return images_; }
  /// Image of the 1-based element i.
  int operator()(std::size_t i) const { return images_[i - 1]; }

  bool in_image(int y) const;
  bool is_bijection() const { return images_.size() == target_; }

  /// "m->n:[i1,...,im]"
  std::string to_string() const;
  static Injection parse(std::string_view text);

  friend bool operator==(const Injection&, const Injection&) = default;
  friend auto operator<=>(const Injection&, const Injection&) = default;

private:
  std::size_t target_ = 0;
  std::vector<int> images_;
};

/// g o f (f first). Throws FimodError unless f.target_size() == g.source_size().
Injection compose(const Injection& g, const Injection& f);

/// All injections [m] -> [n] in lexicographic order of image lists.
std::vector<Injection> enumerate_injections(std::size_t m, std::size_t n);

/// Number of injections [m] -> [n], n! / (n - m)!, zero when m > n.
std::size_t count_injections(std::size_t m, std::size_t n);

/// Position of f in enumerate_injections(f.source_size(), f.target_size()).
std::size_t injection_rank(const Injection& f);

/// f |_| id_star: [m+1] -> [n+1], with the new point being the largest element.
Injection sigma_extend(const Injection& f);

/// f |_| (w -> z): [m+1] -> [n+1] that agrees with f on [m] after renaming
/// [n+1] \ {z} to [n] order-preservingly and sends m+1 to z.
/// Throws FimodError if z is out of range.
Injection join_map(const Injection& f, int target_slot);

/// As join_map but with the new source point inserted at position source_slot
/// of [m+1] (the other source points renamed order-preservingly).
Injection join_map(const Injection& f, int source_slot, int target_slot);

/// d_y f: [m] -> [n-1], f followed by the order-preserving bijection
/// [n] \ {y} -> [n-1]. Throws FimodError if y is in the image of f.
Injection boundary_removal(const Injection& f, int y);

/// f restricted to [m] \ {x} -> [n] \ {f(x)}, both renamed order-preservingly.
Injection restrict_removing(const Injection& f, int x);

/// A factorization of an injection into standard inclusions followed by
/// adjacent transpositions of the target.
struct GeneratorWord {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  /// Transposition indices in the order they are applied as maps: the
  /// injection is s_{w[k-1]} o ... o s_{w[0]} o (standard inclusion).
  std::vector<std::size_t> transpositions;

  std::size_t inclusion_count() const { return target_size - source_size; }
};

/// Uses the minimal-length permutation sending the standard inclusion to f
/// and, for that permutation, the lexicographically minimal reduced word.
GeneratorWord canonical_factorization(const Injection& f);

/// Re-evaluates a word as an injection.
Injection evaluate_word(const GeneratorWord& w);

}  // namespace fimod
