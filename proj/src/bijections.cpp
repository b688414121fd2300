#include "permclass/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "permclass/error.hpp"
#include "permclass/pattern_classes.hpp"

namespace permclass {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

}  // namespace

// The unshaded region is always a contiguous block of columns and rows, since
// every dot is taken from one of its corners.
Permutation word_to_xperm(const XWord& word) {
  const int n = word.permutation_size();
  std::vector<int> values(static_cast<std::size_t>(n));
  int lo_col = 1, hi_col = n, lo_row = 1, hi_row = n;
  for (const char c : word.letters()) {
    switch (c) {
      case 'L': values[idx(lo_col++)] = lo_row++; break;
      case 'R': values[idx(hi_col--)] = lo_row++; break;
      case 'W': values[idx(lo_col++)] = hi_row--; break;
      case 'E': values[idx(hi_col--)] = hi_row--; break;
    }
  }
  values[idx(lo_col)] = lo_row;
  return from_trusted_values(std::move(values));
}

XWord xperm_to_word(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "the empty permutation has no word");
  std::string letters;
  letters.reserve(static_cast<std::size_t>(n - 1));
  int lo_col = 1, hi_col = n, lo_row = 1, hi_row = n;
  while (lo_col < hi_col) {
    if (p(hi_col) == hi_row) {
      letters += 'E';
      --hi_col, --hi_row;
    } else if (p(lo_col) == hi_row) {
      letters += 'W';
      ++lo_col, --hi_row;
    } else if (p(hi_col) == lo_row) {
      letters += 'R';
      --hi_col, ++lo_row;
    } else if (p(lo_col) == lo_row) {
      letters += 'L';
      ++lo_col, ++lo_row;
    } else {
      throw Error(ErrorCode::kNotInClass,
                  "no corner dot after " + std::to_string(letters.size()) +
                      " letters; permutation is not in the X-class",
                  letters.size());
    }
  }
  return validate_word(letters);
}

XWord aip_to_word(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "the empty permutation has no word");
  if (!is_almost_increasing(p, 1)) {
    throw Error(ErrorCode::kNotInClass, "permutation is not 1-almost-increasing");
  }
  std::string letters;
  int i = 1;
  while (i <= n - 1) {
    int m = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (p(j) < p(i)) ++m;
    }
    if (m == 0) {
      letters += 'W';
      ++i;
    } else if (m == 1) {
      letters += 'E';
      ++i;
    } else {
      char last = 'R';
      for (int j = i + 1; j <= i + m - 1; ++j) {
        last = p(j) == j ? 'R' : 'L';
        letters += last;
      }
      letters += last == 'R' ? 'E' : 'W';
      i += m;
    }
  }
  return validate_word(letters);
}

Permutation word_to_aip(const XWord& word) {
  const int n = word.permutation_size();
  const std::string& w = word.letters();
  std::vector<int> values(static_cast<std::size_t>(n));
  std::vector<int> available(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) available[idx(v)] = v;

  std::size_t pos = 0;
  int i = 1;
  while (pos < w.size()) {
    if (w[pos] == 'W' || w[pos] == 'E') {
      const std::size_t rank = w[pos] == 'W' ? 0 : 1;
      values[idx(i)] = available[rank];
      available.erase(available.begin() + static_cast<std::ptrdiff_t>(rank));
      ++pos;
      ++i;
      continue;
    }
    // A run of m-1 letters in {R, L} and its forced terminator.
    std::size_t run_end = pos;
    while (run_end < w.size() && (w[run_end] == 'R' || w[run_end] == 'L')) ++run_end;
    const int m = static_cast<int>(run_end - pos) + 1;
    const char expected = w[run_end - 1] == 'R' ? 'E' : 'W';
    if (run_end >= w.size() || w[run_end] != expected) {
      throw std::logic_error("word_to_aip: block terminator does not match a validated word");
    }
    // Ranks are relative to `available`: the first entry takes rank m+1 and
    // entry j takes rank j (R) or the single leftover rank below j (L).
    values[idx(i)] = available[static_cast<std::size_t>(m)];
    int leftover = 1;
    for (int j = 2; j <= m; ++j) {
      const char c = w[pos + static_cast<std::size_t>(j - 2)];
      if (c == 'R') {
        values[idx(i + j - 1)] = available[idx(j)];
      } else {
        values[idx(i + j - 1)] = available[idx(leftover)];
        leftover = j;
      }
    }
    const int keep = available[idx(leftover)];
    available.erase(available.begin(), available.begin() + m + 1);
    available.insert(available.begin(), keep);
    pos = run_end + 1;
    i += m;
  }
  values[idx(i)] = available.front();
  return from_trusted_values(std::move(values));
}

BoundedPath word_to_path(const XWord& word) {
  const std::string& w = word.letters();
  std::string path;
  path.reserve(2 * w.size());
  std::size_t start = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] != 'E' && w[pos] != 'W') continue;
    const std::size_t len = pos - start + 1;
    if (len == 1) {
      path += w[pos] == 'E' ? "UD" : "DU";
    } else if (w[pos] == 'E') {
      path += "UU";
      for (std::size_t j = start; j + 1 < pos; ++j) path += w[j] == 'R' ? "UD" : "DU";
      path += "DD";
    } else {
      path += "DD";
      for (std::size_t j = start; j + 1 < pos; ++j) path += w[j] == 'R' ? "DU" : "UD";
      path += "UU";
    }
    start = pos + 1;
  }
  return validate_bounded_path(path);
}

XWord path_to_word(const BoundedPath& path) {
  const std::string& s = path.steps();
  std::string word;
  std::size_t start = 0;
  int y = 0;
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    y += s[pos] == 'U' ? 1 : -1;
    if (y != 0) continue;
    const std::string_view segment(s.data() + start, pos - start + 1);
    const auto malformed = [&] {
      return Error(ErrorCode::kMalformedSegment,
                   "segment '" + std::string(segment) + "' matches no block", start);
    };
    if (segment == "UD") {
      word += 'E';
    } else if (segment == "DU") {
      word += 'W';
    } else {
      const bool above = segment.substr(0, 2) == "UU";
      const bool below = segment.substr(0, 2) == "DD";
      const std::string_view closing = above ? "DD" : "UU";
      if ((!above && !below) || segment.size() < 4 || segment.size() % 2 != 0 ||
          segment.substr(segment.size() - 2) != closing) {
        throw malformed();
      }
      for (std::size_t j = 2; j + 2 < segment.size(); j += 2) {
        const auto pair = segment.substr(j, 2);
        if (pair == "UD") {
          word += above ? 'R' : 'L';
        } else if (pair == "DU") {
          word += above ? 'L' : 'R';
        } else {
          throw malformed();
        }
      }
      word += above ? "RE" : "LW";
    }
    start = pos + 1;
  }
  return validate_word(word);
}

DiagonalSequence diagonal_sequence(const Permutation& p) {
  const Permutation pinv = inverse(p);
  DiagonalSequence seq;
  seq.symbols.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    const bool up = p(i) > i;       // vertical segment in column i goes up
    const bool right = pinv(i) > i;  // horizontal segment in row i goes right
    if (p(i) == i) {
      seq.symbols.push_back(DiagonalSymbol::kFix);
    } else if (up && right) {
      seq.symbols.push_back(DiagonalSymbol::kOpen);
    } else if (!up && !right) {
      seq.symbols.push_back(DiagonalSymbol::kClose);
    } else if (up) {
      seq.symbols.push_back(DiagonalSymbol::kUpperBounce);
    } else {
      seq.symbols.push_back(DiagonalSymbol::kLowerBounce);
    }
  }
  return seq;
}

MotzkinPath theta(const Permutation& p) {
  MotzkinPath path;
  for (const auto s : diagonal_sequence(p).symbols) {
    path.steps += s == DiagonalSymbol::kOpen ? 'U' : s == DiagonalSymbol::kClose ? 'D' : 'L';
  }
  return path;
}

// --- RayState ------------------------------------------------------------------

RayState::RayState(int n) : values_(static_cast<std::size_t>(n), 0) {}

int RayState::take_vertical(int rank) {
  if (rank < 1 || rank > height()) throw std::out_of_range("vertical ray rank");
  const auto it = open_vertical_.begin() + (rank - 1);
  const int col = *it;
  open_vertical_.erase(it);
  return col;
}

int RayState::take_horizontal(int rank) {
  if (rank < 1 || rank > static_cast<int>(open_horizontal_.size())) throw std::out_of_range("horizontal ray rank");
  const auto it = open_horizontal_.begin() + (rank - 1);
  const int row = *it;
  open_horizontal_.erase(it);
  return row;
}

bool RayState::closes_cycle(int vertical_rank, int horizontal_rank) const {
  const int col = open_vertical_.at(static_cast<std::size_t>(vertical_rank - 1));
  const int row = open_horizontal_.at(static_cast<std::size_t>(horizontal_rank - 1));
  return vertical_to_row_.at(col) == row;
}

void RayState::fix() {
  const int i = ++position_;
  values_[idx(i)] = i;
  ++completed_cycles_;
}

void RayState::open() {
  const int i = ++position_;
  open_vertical_.push_back(i);
  open_horizontal_.push_back(i);
  vertical_to_row_[i] = i;
  row_to_vertical_[i] = i;
}

void RayState::upper_bounce(int vertical_rank) {
  const int col = take_vertical(vertical_rank);
  const int i = ++position_;
  values_[idx(col)] = i;
  const int row = vertical_to_row_.at(col);
  vertical_to_row_.erase(col);
  open_vertical_.push_back(i);
  vertical_to_row_[i] = row;
  row_to_vertical_[row] = i;
}

void RayState::lower_bounce(int horizontal_rank) {
  const int row = take_horizontal(horizontal_rank);
  const int i = ++position_;
  values_[idx(i)] = row;
  const int col = row_to_vertical_.at(row);
  row_to_vertical_.erase(row);
  open_horizontal_.push_back(i);
  row_to_vertical_[i] = col;
  vertical_to_row_[col] = i;
}

bool RayState::close(int vertical_rank, int horizontal_rank) {
  const bool completes = closes_cycle(vertical_rank, horizontal_rank);
  const int col = take_vertical(vertical_rank);
  const int row = take_horizontal(horizontal_rank);
  const int i = ++position_;
  values_[idx(col)] = i;
  values_[idx(i)] = row;
  if (completes) {
    ++completed_cycles_;
    vertical_to_row_.erase(col);
    row_to_vertical_.erase(row);
  } else {
    // Joining the chain ending at `col` to the chain starting at `row`.
    const int head_row = vertical_to_row_.at(col);
    const int tail_col = row_to_vertical_.at(row);
    vertical_to_row_.erase(col);
    row_to_vertical_.erase(row);
    vertical_to_row_[tail_col] = head_row;
    row_to_vertical_[head_row] = tail_col;
  }
  return completes;
}

Permutation RayState::result() const {
  if (position_ != static_cast<int>(values_.size()) || height() != 0) {
    throw std::logic_error("RayState::result called before every position was placed");
  }
  return Permutation(values_);
}

// --- psi ---------------------------------------------------------------------

namespace {

int rank_of(const std::vector<int>& sorted, int value) {
  const auto it = std::find(sorted.begin(), sorted.end(), value);
  return static_cast<int>(it - sorted.begin()) + 1;
}

}  // namespace

ColoredMotzkinPath psi(const Permutation& p) {
  const Permutation pinv = inverse(p);
  const auto seq = diagonal_sequence(p);
  RayState state(p.size());
  std::vector<ColoredStep> steps(seq.symbols.size());
  std::vector<std::size_t> pending_up;
  for (int i = 1; i <= p.size(); ++i) {
    auto& step = steps[idx(i)];
    switch (seq.symbols[idx(i)]) {
      case DiagonalSymbol::kFix:
        step = {StepKind::kLevel, 0};
        state.fix();
        break;
      case DiagonalSymbol::kOpen:
        step = {StepKind::kUp, 0};  // colored by the matching down step
        pending_up.push_back(idx(i));
        state.open();
        break;
      case DiagonalSymbol::kUpperBounce: {
        const int rank = rank_of(state.open_vertical(), pinv(i));
        step = {StepKind::kLevel, rank};
        state.upper_bounce(rank);
        break;
      }
      case DiagonalSymbol::kLowerBounce: {
        const int rank = rank_of(state.open_horizontal(), p(i));
        step = {StepKind::kLevel, state.height() + rank};
        state.lower_bounce(rank);
        break;
      }
      case DiagonalSymbol::kClose: {
        const int vrank = rank_of(state.open_vertical(), pinv(i));
        const int hrank = rank_of(state.open_horizontal(), p(i));
        steps[pending_up.back()].color = vrank;
        pending_up.pop_back();
        step = {StepKind::kDown, hrank};
        state.close(vrank, hrank);
        break;
      }
    }
  }
  return validate_colored_motzkin(std::move(steps));
}

Permutation psi_inverse(const ColoredMotzkinPath& path) {
  RayState state(static_cast<int>(path.length()));
  std::vector<int> pending_up_colors;
  for (const auto& step : path.steps()) {
    switch (step.kind) {
      case StepKind::kUp:
        pending_up_colors.push_back(step.color);
        state.open();
        break;
      case StepKind::kDown:
        state.close(pending_up_colors.back(), step.color);
        pending_up_colors.pop_back();
        break;
      case StepKind::kLevel: {
        const int h = state.height();
        if (step.color == 0) {
          state.fix();
        } else if (step.color <= h) {
          state.upper_bounce(step.color);
        } else {
          state.lower_bounce(step.color - h);
        }
        break;
      }
    }
  }
  return state.result();
}

std::string render_array(const Permutation& p) {
  const int n = p.size();
  const auto seq = diagonal_sequence(p);
  std::string out;
  for (int row = n; row >= 1; --row) {
    for (int col = 1; col <= n; ++col) {
      char c = '.';
      if (p(col) == row) {
        c = 'o';
      } else if (col == row) {
        switch (seq.symbols[idx(col)]) {
          case DiagonalSymbol::kOpen: c = '['; break;
          case DiagonalSymbol::kClose: c = ']'; break;
          case DiagonalSymbol::kUpperBounce: c = '^'; break;
          case DiagonalSymbol::kLowerBounce: c = 'v'; break;
          case DiagonalSymbol::kFix: break;
        }
      }
      out += c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace permclass
