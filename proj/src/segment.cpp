#include "sspo/segment.hpp"

#include <stdexcept>
#include <string>

namespace sspo {

Segmentation segment(std::span<const int> tokens, const SeparatorSpec& spec) {
  if (tokens.empty()) {
    throw std::invalid_argument("segment: token sequence is empty");
  }
  const std::size_t n = tokens.size();
  Segmentation seg;

  switch (spec.mode) {
    case SeparatorMode::token_level:
      seg.spans.reserve(n);
      for (std::size_t t = 0; t < n; ++t) seg.spans.push_back({t, t + 1});
      return seg;
    case SeparatorMode::response_level:
      seg.spans.push_back({0, n});
      return seg;
    default:
      break;
  }

  const auto is_sep = [&](std::size_t t) {
    return spec.separator_token_ids.count(tokens[t]) > 0;
  };

  std::size_t start = 0;
  if (spec.mode == SeparatorMode::single_break) {
    for (std::size_t t = 0; t < n; ++t) {
      if (is_sep(t)) {
        seg.spans.push_back({start, t + 1});
        start = t + 1;
      }
    }
  } else {  // double_break: non-overlapping separator pairs close spans
    for (std::size_t t = 0; t + 1 < n; ++t) {
      if (is_sep(t) && is_sep(t + 1)) {
        seg.spans.push_back({start, t + 2});
        start = t + 2;
        ++t;  // the pair is consumed
      }
    }
  }
  if (start < n) seg.spans.push_back({start, n});
  return seg;
}

std::vector<std::size_t> span_lengths(const Segmentation& seg) {
  std::vector<std::size_t> lengths;
  lengths.reserve(seg.spans.size());
  for (const Span& s : seg.spans) lengths.push_back(s.length());
  return lengths;
}

bool is_valid_partition(const Segmentation& seg, std::size_t token_count) {
  if (seg.spans.empty()) return token_count == 0;
  if (seg.spans.front().begin != 0) return false;
  if (seg.spans.back().end != token_count) return false;
  for (std::size_t i = 0; i < seg.spans.size(); ++i) {
    const Span& s = seg.spans[i];
    if (s.end <= s.begin) return false;
    if (i > 0 && s.begin != seg.spans[i - 1].end) return false;
  }
  return true;
}

const char* to_string(SeparatorMode mode) {
  switch (mode) {
    case SeparatorMode::single_break: return "single_break";
    case SeparatorMode::double_break: return "double_break";
    case SeparatorMode::token_level: return "token_level";
    case SeparatorMode::response_level: return "response_level";
  }
  return "?";
}

SeparatorMode separator_mode_from_string(const std::string& name) {
  if (name == "single_break") return SeparatorMode::single_break;
  if (name == "double_break") return SeparatorMode::double_break;
  if (name == "token_level") return SeparatorMode::token_level;
  if (name == "response_level") return SeparatorMode::response_level;
  throw std::invalid_argument("unknown segmentation mode: " + name);
}

}  // namespace sspo
