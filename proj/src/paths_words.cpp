#include "permclass/paths_words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "permclass/error.hpp"

namespace permclass {

XWord validate_word(std::string_view letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (c != 'W' && c != 'E' && c != 'L' && c != 'R') {
      throw Error(ErrorCode::kBadLetter, std::string("unexpected letter '") + c + "'", i);
    }
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    const char a = letters[i];
    const char b = letters[i + 1];
    if ((a == 'L' && b == 'E') || (a == 'R' && b == 'W')) {
      throw Error(ErrorCode::kForbiddenFactor,
                  std::string("forbidden factor ") + a + b, i);
    }
  }
  if (!letters.empty() && letters.back() != 'W' && letters.back() != 'E') {
    throw Error(ErrorCode::kBadTerminator, "word must end in W or E", letters.size() - 1);
  }
  return XWord(std::string(letters));
}

BoundedPath validate_bounded_path(std::string_view steps) {
  int y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 'U') {
      ++y;
    } else if (steps[i] == 'D') {
      --y;
    } else {
      throw Error(ErrorCode::kBadLetter, std::string("unexpected step '") + steps[i] + "'", i);
    }
    if (std::abs(y) > kBoundedPathLimit) {
      throw Error(ErrorCode::kHeightViolation, "height " + std::to_string(y) + " exceeds 3", i);
    }
  }
  if (y != 0) {
    throw Error(ErrorCode::kBadEndpoint, "path ends at height " + std::to_string(y),
                steps.empty() ? 0 : steps.size() - 1);
  }
  return BoundedPath(std::string(steps));
}

std::vector<ReturnTag> returns_classification(const BoundedPath& path) {
  std::vector<ReturnTag> tags;
  tags.reserve(path.length());
  int y = 0;
  for (const char c : path.steps()) {
    const int before = y;
    y += c == 'U' ? 1 : -1;
    if (y != 0) {
      tags.push_back(ReturnTag::kNone);
    } else {
      tags.push_back(before > 0 ? ReturnTag::kReturnFromAbove : ReturnTag::kReturnFromBelow);
    }
  }
  return tags;
}

MotzkinPath validate_motzkin(std::string_view steps) {
  int y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case 'U': ++y; break;
      case 'D': --y; break;
      case 'L': break;
      default:
        throw Error(ErrorCode::kBadLetter, std::string("unexpected step '") + steps[i] + "'", i);
    }
    if (y < 0) throw Error(ErrorCode::kHeightViolation, "path goes below the axis", i);
  }
  if (y != 0) {
    throw Error(ErrorCode::kBadEndpoint, "path ends at height " + std::to_string(y),
                steps.empty() ? 0 : steps.size() - 1);
  }
  return MotzkinPath{std::string(steps)};
}

ColoredMotzkinPath validate_colored_motzkin(std::vector<ColoredStep> steps) {
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto [kind, color] = steps[i];
    int lo = 0;
    int hi = 0;
    switch (kind) {
      case StepKind::kUp:
        ++h;
        lo = 1;
        hi = h;
        break;
      case StepKind::kDown:
        if (h == 0) throw Error(ErrorCode::kHeightViolation, "path goes below the axis", i);
        lo = 1;
        hi = h;
        --h;
        break;
      case StepKind::kLevel:
        lo = 0;
        hi = 2 * h;
        break;
      default:
        throw Error(ErrorCode::kBadLetter, "unknown step kind", i);
    }
    if (color < lo || color > hi) {
      throw Error(ErrorCode::kBadColor,
                  "color " + std::to_string(color) + " outside " + std::to_string(lo) + ".." +
                      std::to_string(hi),
                  i);
    }
  }
  if (h != 0) {
    throw Error(ErrorCode::kBadEndpoint, "path ends at height " + std::to_string(h),
                steps.empty() ? 0 : steps.size() - 1);
  }
  return ColoredMotzkinPath(std::move(steps));
}

ColoredMotzkinPath parse_colored_motzkin(std::string_view text) {
  std::vector<ColoredStep> steps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r') {
      ++pos;
      continue;
    }
    const auto end = std::min(text.find_first_of(" \t\r\n", pos), text.size());
    const auto token = text.substr(pos, end - pos);
    const auto index = steps.size();
    StepKind kind;
    switch (token.front()) {
      case 'U': kind = StepKind::kUp; break;
      case 'D': kind = StepKind::kDown; break;
      case 'L': kind = StepKind::kLevel; break;
      default:
        throw Error(ErrorCode::kBadLetter, "bad step token '" + std::string(token) + "'", index);
    }
    int color = 0;
    const auto* first = token.data() + 1;
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, color);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw Error(ErrorCode::kParse, "bad step token '" + std::string(token) + "'", index);
    }
    steps.push_back({kind, color});
    pos = end;
  }
  return validate_colored_motzkin(std::move(steps));
}

std::string to_string(const ColoredMotzkinPath& path) {
  std::string out;
  for (const auto& step : path.steps()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(step.kind);
    out += std::to_string(step.color);
  }
  return out;
}

MotzkinPath underlying_path(const ColoredMotzkinPath& path) {
  MotzkinPath out;
  out.steps.reserve(path.length());
  for (const auto& step : path.steps()) out.steps += static_cast<char>(step.kind);
  return out;
}

std::vector<int> step_heights(const MotzkinPath& path) {
  std::vector<int> heights;
  heights.reserve(path.steps.size());
  int y = 0;
  for (const char c : path.steps) {
    if (c == 'U') ++y;
    if (c == 'D') --y;
    heights.push_back(y);
  }
  return heights;
}

int path_height(const MotzkinPath& path) {
  const auto heights = step_heights(path);
  return heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
}

int path_height(const ColoredMotzkinPath& path) { return path_height(underlying_path(path)); }

void validate_diagonal_sequence(const DiagonalSequence& seq) {
  int h = 0;
  for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
    switch (seq.symbols[i]) {
      case DiagonalSymbol::kOpen: ++h; break;
      case DiagonalSymbol::kClose:
        if (--h < 0) throw Error(ErrorCode::kHeightViolation, "unmatched closing bracket", i);
        break;
      case DiagonalSymbol::kUpperBounce:
      case DiagonalSymbol::kLowerBounce:
        if (h < 1) throw Error(ErrorCode::kHeightViolation, "bounce at height 0", i);
        break;
      case DiagonalSymbol::kFix: break;
    }
  }
  if (h != 0) {
    throw Error(ErrorCode::kBadEndpoint, "unclosed opening brackets",
                seq.symbols.empty() ? 0 : seq.symbols.size() - 1);
  }
}

std::string_view symbol_name(DiagonalSymbol s) {
  switch (s) {
    case DiagonalSymbol::kFix: return "FIX";
    case DiagonalSymbol::kOpen: return "OPEN";
    case DiagonalSymbol::kClose: return "CLOSE";
    case DiagonalSymbol::kUpperBounce: return "UBOUNCE";
    case DiagonalSymbol::kLowerBounce: return "LBOUNCE";
  }
  return "?";
}

std::string to_string(const DiagonalSequence& seq) {
  std::string out;
  for (const auto s : seq.symbols) {
    if (!out.empty()) out += ' ';
    out += symbol_name(s);
  }
  return out;
}

}  // namespace permclass
