#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace sspo {

/// Half-open token span [begin, end) within one response.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

/// Ordered, contiguous spans covering exactly [0, response length).
struct Segmentation {
  std::vector<Span> spans;

  std::size_t token_count() const {
    return spans.empty() ? 0 : spans.back().end;
  }
  bool operator==(const Segmentation&) const = default;
};

enum class SeparatorMode {
  single_break,    // any separator token closes the span after itself
  double_break,    // two consecutive separator tokens close the span
  token_level,     // one span per token (reduces the objective to GRPO)
  response_level,  // one span per response (reduces the objective to GSPO)
};

struct SeparatorSpec {
  std::set<int> separator_token_ids;
  SeparatorMode mode = SeparatorMode::single_break;
};

/// Split a token sequence at separator boundaries. The separator belongs to
/// the span it terminates; a trailing span with no separator is kept; empty
/// spans are never emitted. Throws std::invalid_argument on empty input.
Segmentation segment(std::span<const int> tokens, const SeparatorSpec& spec);

/// Per-span lengths; they always sum to the response length.
std::vector<std::size_t> span_lengths(const Segmentation& seg);

/// True iff the spans form a valid partition of [0, token_count).
bool is_valid_partition(const Segmentation& seg, std::size_t token_count);

const char* to_string(SeparatorMode mode);
SeparatorMode separator_mode_from_string(const std::string& name);

}  // namespace sspo
