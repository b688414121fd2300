#pragma once

#include <map>
#include <string>
#include <vector>

#include "permclass/paths_words.hpp"
#include "permclass/permutation.hpp"

namespace permclass {

// --- X-words and the X-class -------------------------------------------------

/// Reads the word left to right, placing a dot in the lower-left (L),
/// lower-right (R), upper-left (W) or upper-right (E) corner of the unshaded
/// region; the last dot goes in the single remaining square.
Permutation word_to_xperm(const XWord& word);

/// Inverse of word_to_xperm. Repeatedly peels the corner dot (upper corner on
/// ties). Throws kNotInClass when some intermediate array has no corner dot.
XWord xperm_to_word(const Permutation& p);

// --- 1-almost-increasing permutations and X-words ---------------------------

/// Throws kNotInClass unless p is in A^(1)_n.
XWord aip_to_word(const Permutation& p);

/// Inverse of aip_to_word, built block by block from the front of the word.
Permutation word_to_aip(const XWord& word);

// --- X-words and bounded paths -----------------------------------------------

BoundedPath word_to_path(const XWord& word);

/// Inverse of word_to_path. Throws kMalformedSegment if a piece between two
/// returns has no block shape (impossible for a validated path).
XWord path_to_word(const BoundedPath& path);

// --- Cycle diagram, Motzkin paths, colored Motzkin paths ---------------------

DiagonalSequence diagonal_sequence(const Permutation& p);

/// Uncolored Motzkin path: U for OPEN, D for CLOSE, L otherwise.
MotzkinPath theta(const Permutation& p);

/// Bijection from S_n onto all colored Motzkin paths of length n. The
/// underlying path is theta(p), and p is in A^(k)_n iff the path has height at
/// most k.
ColoredMotzkinPath psi(const Permutation& p);

Permutation psi_inverse(const ColoredMotzkinPath& path);

/// Open rays while a permutation is rebuilt from left to right along its
/// diagonal. Each open vertical ray is a column whose dot is still to be
/// placed above; each open horizontal ray is a row whose dot is still to be
/// placed to the right. Rays on the same incomplete cycle are linked.
class RayState {
 public:
  explicit RayState(int n);

  int height() const noexcept { return static_cast<int>(open_vertical_.size()); }
  const std::vector<int>& open_vertical() const noexcept { return open_vertical_; }
  const std::vector<int>& open_horizontal() const noexcept { return open_horizontal_; }

  /// Row of the open horizontal ray on the same incomplete cycle as column `col`.
  int linked_row(int col) const { return vertical_to_row_.at(col); }

  /// True if closing the vertical ray with 1-based rank `vertical_rank` and the
  /// horizontal ray with rank `horizontal_rank` completes a cycle.
  bool closes_cycle(int vertical_rank, int horizontal_rank) const;

  void fix();
  void open();
  void upper_bounce(int vertical_rank);
  void lower_bounce(int horizontal_rank);
  /// Returns true when the closing bracket completed a cycle.
  bool close(int vertical_rank, int horizontal_rank);

  int position() const noexcept { return position_; }
  int completed_cycles() const noexcept { return completed_cycles_; }

  /// Valid once every position has been consumed.
  Permutation result() const;

 private:
  int take_vertical(int rank);
  int take_horizontal(int rank);

  int position_ = 0;
  int completed_cycles_ = 0;
  std::vector<int> values_;
  std::vector<int> open_vertical_;
  std::vector<int> open_horizontal_;
  std::map<int, int> vertical_to_row_;
  std::map<int, int> row_to_vertical_;
};

/// Optional debug aid: the n x n array with dots ('o') and the diagonal
/// symbols, top row first.
std::string render_array(const Permutation& p);

}  // namespace permclass
