#pragma once

// Test-side reference implementations. Each one follows a definition directly
// and shares no code with the library beyond plain vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Values = std::vector<int>;

inline std::vector<Values> all_perms(int n) {
  Values v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Values> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline int inversions(const Values& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

inline int fixed_points(const Values& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) count += p[i] == static_cast<int>(i) + 1;
  return count;
}

inline int excedances(const Values& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) count += p[i] > static_cast<int>(i) + 1;
  return count;
}

inline int cycles(const Values& p) {
  std::vector<bool> seen(p.size() + 1, false);
  int count = 0;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j - 1)])
      seen[static_cast<std::size_t>(j)] = true;
  }
  return count;
}

// h_i by counting, O(n^2).
inline Values heights(const Values& p) {
  Values h;
  const int n = static_cast<int>(p.size());
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int j = 1; j <= i; ++j) c += p[static_cast<std::size_t>(j - 1)] > i;
    h.push_back(c);
  }
  return h;
}

inline bool almost_increasing(const Values& p, int k) {
  const auto h = heights(p);
  return std::all_of(h.begin(), h.end(), [k](int x) { return x <= k; });
}

inline bool is_involution(const Values& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[static_cast<std::size_t>(p[i] - 1)] != static_cast<int>(i) + 1) return false;
  return true;
}

// Pattern containment by trying every index subset of the right size.
inline bool contains(const Values& p, const Values& sigma) {
  const std::size_t n = p.size();
  const std::size_t m = sigma.size();
  if (m > n) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    Values sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(p[i]);
    bool same = true;
    for (std::size_t a = 0; a < m && same; ++a)
      for (std::size_t b = 0; b < m && same; ++b)
        same = (sub[a] < sub[b]) == (sigma[a] < sigma[b]);
    if (same) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool x_class(const Values& p) {
  for (const Values& s : {Values{2, 1, 4, 3}, Values{2, 4, 1, 3}, Values{3, 1, 4, 2}, Values{3, 4, 1, 2}})
    if (contains(p, s)) return false;
  return true;
}

inline std::int64_t count_if_perm(int n, const std::function<bool(const Values&)>& pred) {
  std::int64_t c = 0;
  for (const auto& p : all_perms(n)) c += pred(p);
  return c;
}

// numer/denom by long division over 64-bit integers; denom[0] must be 1.
inline std::vector<std::int64_t> divide(const std::vector<std::int64_t>& numer,
                                        const std::vector<std::int64_t>& denom, int order) {
  std::vector<std::int64_t> out;
  for (int n = 0; n <= order; ++n) {
    std::int64_t c = n < static_cast<int>(numer.size()) ? numer[static_cast<std::size_t>(n)] : 0;
    for (int j = 1; j <= n && j < static_cast<int>(denom.size()); ++j)
      c -= denom[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
    out.push_back(c);
  }
  return out;
}

// Strings over {E,L,R,W} of length n-1, filtered by the word rules.
inline std::int64_t count_words(int n) {
  const int len = n - 1;
  std::int64_t total = 0;
  std::int64_t limit = 1;
  for (int i = 0; i < len; ++i) limit *= 4;
  for (std::int64_t code = 0; code < limit; ++code) {
    std::string w;
    std::int64_t c = code;
    for (int i = 0; i < len; ++i, c /= 4) w += "ELRW"[c % 4];
    bool ok = len == 0 || w.back() == 'E' || w.back() == 'W';
    for (std::size_t i = 1; ok && i < w.size(); ++i)
      ok = !((w[i - 1] == 'L' && w[i] == 'E') || (w[i - 1] == 'R' && w[i] == 'W'));
    total += ok;
  }
  return total;
}

// +-1 paths of length 2n-2 from 0 to 0 with |y| <= 3, over all 2^(2n-2) strings.
inline std::int64_t count_bounded_paths(int n) {
  const int len = 2 * n - 2;
  std::int64_t total = 0;
  for (std::int64_t code = 0; code < (std::int64_t{1} << len); ++code) {
    int y = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      y += (code >> i) & 1 ? 1 : -1;
      ok = y >= -3 && y <= 3;
    }
    total += ok && y == 0;
  }
  return total;
}

}  // namespace oracle
