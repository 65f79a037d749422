#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace docarl {

namespace detail {

/// Decodes UTF-8 into code points; invalid bytes map to themselves so every
/// input still compares deterministically.
inline std::u32string utf8_to_u32(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    int len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      len = 1, cp = c;
    } else if ((c >> 5) == 0x6) {
      len = 2, cp = c & 0x1F;
    } else if ((c >> 4) == 0xE) {
      len = 3, cp = c & 0x0F;
    } else if ((c >> 3) == 0x1E) {
      len = 4, cp = c & 0x07;
    }
    bool ok = len > 0 && i + static_cast<std::size_t>(len) <= s.size();
    for (int k = 1; ok && k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      ok = (cc >> 6) == 0x2;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(0xDC00 + c);  // lone surrogate range, never produced by valid UTF-8
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

struct Match {
  std::size_t a = 0, b = 0, size = 0;
};

// Longest common substring of a[alo,ahi) and b[blo,bhi); ties go to the
// earliest start in a, then the earliest start in b.
template <class Seq>
Match longest_match(const Seq& a, std::size_t alo, std::size_t ahi, const Seq& b, std::size_t blo,
                    std::size_t bhi, std::vector<std::size_t>& prev, std::vector<std::size_t>& cur) {
  Match best{alo, blo, 0};
  const std::size_t nb = bhi - blo;
  prev.assign(nb + 1, 0);
  cur.assign(nb + 1, 0);
  for (std::size_t i = alo; i < ahi; ++i) {
    for (std::size_t j = blo; j < bhi; ++j) {
      const std::size_t k = j - blo + 1;
      if (a[i] == b[j]) {
        cur[k] = prev[k - 1] + 1;
        const std::size_t len = cur[k];
        const std::size_t sa = i + 1 - len, sb = j + 1 - len;
        if (len > best.size || (len == best.size && (sa < best.a || (sa == best.a && sb < best.b)))) {
          best = {sa, sb, len};
        }
      } else {
        cur[k] = 0;
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

template <class Seq>
std::size_t matched_count(const Seq& a, const Seq& b) {
  std::size_t total = 0;
  std::vector<std::size_t> prev, cur;
  struct Range {
    std::size_t alo, ahi, blo, bhi;
  };
  std::vector<Range> stack{{0, a.size(), 0, b.size()}};
  while (!stack.empty()) {
    const Range r = stack.back();
    stack.pop_back();
    if (r.alo >= r.ahi || r.blo >= r.bhi) continue;
    const Match m = longest_match(a, r.alo, r.ahi, b, r.blo, r.bhi, prev, cur);
    if (m.size == 0) continue;
    total += m.size;
    stack.push_back({r.alo, m.a, r.blo, m.b});
    stack.push_back({m.a + m.size, r.ahi, m.b + m.size, r.bhi});
  }
  return total;
}

}  // namespace detail

/// Characters matched by the recursive longest-block decomposition.
inline std::size_t gestalt_matches(std::string_view a, std::string_view b) {
  return detail::matched_count(detail::utf8_to_u32(a), detail::utf8_to_u32(b));
}

/// Ratcliff/Obershelp ratio 2M/(|a|+|b|) over code points, no junk heuristics.
inline double similarity(std::string_view a, std::string_view b) {
  const auto ua = detail::utf8_to_u32(a);
  const auto ub = detail::utf8_to_u32(b);
  const std::size_t n = ua.size() + ub.size();
  if (n == 0) return 1.0;
  return 2.0 * static_cast<double>(detail::matched_count(ua, ub)) / static_cast<double>(n);
}

inline bool check_similarity(std::string_view a, std::string_view b, double threshold) {
  return similarity(a, b) >= threshold;
}

}  // namespace docarl
