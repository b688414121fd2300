#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/// A word over {W,E,L,R} with no factor LE or RW, ending in W or E when
/// nonempty. A word of length n-1 encodes a permutation of size n.
class XWord {
 public:
  XWord() = default;

  const std::string& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  int permutation_size() const noexcept { return static_cast<int>(letters_.size()) + 1; }

  friend bool operator==(const XWord&, const XWord&) = default;
  friend auto operator<=>(const XWord&, const XWord&) = default;

 private:
  explicit XWord(std::string letters) : letters_(std::move(letters)) {}
  friend XWord validate_word(std::string_view letters);

  std::string letters_;
};

/// Throws Error with kBadLetter, kForbiddenFactor or kBadTerminator.
XWord validate_word(std::string_view letters);

/// A path of U=(1,1) and D=(1,-1) steps of length 2n-2, ending at height 0,
/// with every height in [-3, 3].
class BoundedPath {
 public:
  BoundedPath() = default;

  const std::string& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  int word_size() const noexcept { return static_cast<int>(steps_.size() / 2) + 1; }

  friend bool operator==(const BoundedPath&, const BoundedPath&) = default;
  friend auto operator<=>(const BoundedPath&, const BoundedPath&) = default;

 private:
  explicit BoundedPath(std::string steps) : steps_(std::move(steps)) {}
  friend BoundedPath validate_bounded_path(std::string_view steps);

  std::string steps_;
};

inline constexpr int kBoundedPathLimit = 3;

/// Throws Error with kBadLetter, kHeightViolation or kBadEndpoint.
BoundedPath validate_bounded_path(std::string_view steps);

enum class ReturnTag { kNone, kReturnFromAbove, kReturnFromBelow };

/// Per-step tags: a step is a return when its right endpoint lies on the axis.
std::vector<ReturnTag> returns_classification(const BoundedPath& path);

enum class StepKind : char { kUp = 'U', kDown = 'D', kLevel = 'L' };

/// An uncolored Motzkin path over {U, D, L}.
struct MotzkinPath {
  std::string steps;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
};

/// Throws kBadLetter, kHeightViolation (below the axis) or kBadEndpoint.
MotzkinPath validate_motzkin(std::string_view steps);

/// One step of a colored Motzkin path.
///
/// Colors carry a fixed meaning. For a level step at height h, 0 is a fixed
/// point, c in 1..h an upper bounce closing the c-th open vertical ray from the
/// left, and c in h+1..2h a lower bounce closing the (c-h)-th open horizontal
/// ray from the bottom. An up step into height h takes a color in 1..h and a
/// down step out of height h takes a color in 1..h; at the down step, the color
/// of the matching up step picks the vertical ray and the down step's own color
/// picks the horizontal ray.
struct ColoredStep {
  StepKind kind = StepKind::kLevel;
  int color = 0;

  friend bool operator==(const ColoredStep&, const ColoredStep&) = default;
  friend auto operator<=>(const ColoredStep& a, const ColoredStep& b) {
    if (auto c = static_cast<char>(a.kind) <=> static_cast<char>(b.kind); c != 0) return c;
    return a.color <=> b.color;
  }
};

class ColoredMotzkinPath {
 public:
  ColoredMotzkinPath() = default;

  const std::vector<ColoredStep>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }

  friend bool operator==(const ColoredMotzkinPath&, const ColoredMotzkinPath&) = default;
  friend auto operator<=>(const ColoredMotzkinPath&, const ColoredMotzkinPath&) = default;

 private:
  explicit ColoredMotzkinPath(std::vector<ColoredStep> steps) : steps_(std::move(steps)) {}
  friend ColoredMotzkinPath validate_colored_motzkin(std::vector<ColoredStep> steps);

  std::vector<ColoredStep> steps_;
};

/// Throws kHeightViolation, kBadEndpoint or kBadColor with the step index.
ColoredMotzkinPath validate_colored_motzkin(std::vector<ColoredStep> steps);

/// Parses space-separated tokens such as "U1 L0 D1".
ColoredMotzkinPath parse_colored_motzkin(std::string_view text);
std::string to_string(const ColoredMotzkinPath& path);

MotzkinPath underlying_path(const ColoredMotzkinPath& path);

int path_height(const MotzkinPath& path);
int path_height(const ColoredMotzkinPath& path);

/// Height of the path after each step (the height of a step is the height of
/// its right endpoint).
std::vector<int> step_heights(const MotzkinPath& path);

enum class DiagonalSymbol { kFix, kOpen, kClose, kUpperBounce, kLowerBounce };

struct DiagonalSequence {
  std::vector<DiagonalSymbol> symbols;

  friend bool operator==(const DiagonalSequence&, const DiagonalSequence&) = default;
};

/// Checks the bracket structure: OPEN/CLOSE prefix balance never negative and
/// zero at the end, bounces only at positive height. Throws kHeightViolation or
/// kBadEndpoint.
void validate_diagonal_sequence(const DiagonalSequence& seq);

std::string_view symbol_name(DiagonalSymbol s);
std::string to_string(const DiagonalSequence& seq);

}  // namespace permclass
